//! Exit gate: the ten acceptance criteria, each reported on its own line.
//!
//! Lines are written straight to stderr so they show up in a plain
//! `cargo test` run without `--nocapture`.

use std::io::Write;
use std::time::{Duration, Instant};

use grover_cli::search::{search_hamming, search_johnson, SearchOptions};
use grover_core::drg::{alpha_coefficients, coefficient_filter, phi, quotient_periodicity, srg_array, IntersectionArray, SrgParams};
use grover_core::graphs::{
    complete, complete_multipartite, cycle, diameter, hamming, johnson, petersen, transition_matrix, Graph, Limits,
};
use grover_core::periodicity::{is_periodic_spectral, is_periodic_unitary, rational_spectrum_check};
use grover_core::spectra::minimal_polynomial;
use grover_core::{zhukovskij, RatPoly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

const SAMPLES: usize = 500;

type Criterion<'a> = (u8, &'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn mandatory_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", complete(2).unwrap()),
        ("K3", complete(3).unwrap()),
        ("K4", complete(4).unwrap()),
        ("K5", complete(5).unwrap()),
        ("C3", cycle(3).unwrap()),
        ("C4", cycle(4).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("C6", cycle(6).unwrap()),
        ("C7", cycle(7).unwrap()),
        ("C8", cycle(8).unwrap()),
        ("K2,2", complete_multipartite(&[2, 2]).unwrap()),
        ("K3,3", complete_multipartite(&[3, 3]).unwrap()),
        ("K2,2,2", complete_multipartite(&[2, 2, 2]).unwrap()),
        ("H(2,2)", hamming(2, 2).unwrap()),
        ("H(2,3)", hamming(2, 3).unwrap()),
        ("J(4,2)", johnson(4, 2).unwrap()),
        ("Petersen", petersen().unwrap()),
    ]
}

/// Diameter 1..=6, valency 1..=10, `b` nonincreasing, `c` nondecreasing.
fn sample_arrays() -> Vec<IntersectionArray> {
    let mut rng = ChaCha20Rng::seed_from_u64(20_240_601);
    let mut out = Vec::with_capacity(SAMPLES);
    while out.len() < SAMPLES {
        let k: u64 = rng.gen_range(1..=10);
        let d: usize = rng.gen_range(1..=6);
        let mut b = vec![k];
        let mut c = vec![1u64];
        for _ in 1..d {
            c.push(rng.gen_range(*c.last().unwrap()..=k));
            b.push(rng.gen_range(0..=*b.last().unwrap()));
        }
        // rejection keeps the sampler independent of the constructor's rules
        if b.iter().zip(&c).skip(1).all(|(&bj, &cj)| bj >= 1 && bj + cj <= k) {
            out.push(IntersectionArray::new(b, c).expect("sampled array is valid"));
        }
    }
    out
}

fn periods() -> Outcome {
    let mut cases: Vec<(String, Graph, u64)> = vec![("C5".into(), cycle(5).unwrap(), 5)];
    for k in [2, 3, 4] {
        cases.push((format!("K{k},{k}"), complete_multipartite(&[k, k]).unwrap(), 4));
    }
    for m in [2, 3] {
        cases.push((format!("K{m},{m},{m}"), complete_multipartite(&[m, m, m]).unwrap(), 12));
    }
    let got: Vec<String> = cases
        .iter()
        .map(|(n, g, _)| format!("{n}:{:?}", is_periodic_unitary(g, &Limits::default()).unwrap().period))
        .collect();
    let ok = cases
        .iter()
        .all(|(_, g, p)| is_periodic_unitary(g, &Limits::default()).unwrap().period == Some(*p));
    outcome(ok, got.join(" "))
}

fn hamming_scan() -> Outcome {
    let r = search_hamming(1..=6, 2..=12, &SearchOptions::default()).unwrap();
    let want: Vec<Vec<u64>> = vec![vec![1, 2], vec![1, 3], vec![2, 2], vec![3, 3], vec![4, 2]];
    outcome(r.periodic_set() == want && r.confirmations_agree(), format!("{:?}", r.periodic_set()))
}

fn johnson_scan() -> Outcome {
    let r = search_johnson(2..=12, 1..=6, &SearchOptions::default()).unwrap();
    let want: Vec<Vec<u64>> = vec![vec![2, 1], vec![3, 1], vec![4, 2]];
    outcome(r.periodic_set() == want && r.confirmations_agree(), format!("{:?}", r.periodic_set()))
}

fn factorizations() -> Outcome {
    let bip = RatPoly::new([1, 0, -1, 0, -1, 0, 1].map(int).to_vec());
    let tri = RatPoly::new([1, -1, 1, -2, 1, -1, 1].map(int).to_vec());
    // z^12 - 1 in ascending order
    let mut twelve = vec![int(0); 13];
    twelve[0] = int(-1);
    twelve[12] = int(1);
    let twelve = RatPoly::new(twelve);
    let mut details = Vec::new();
    let mut ok = true;
    for k in 2..=6u64 {
        let v = quotient_periodicity(&srg_array(SrgParams { n: 2 * k, k, lambda: 0, mu: k }).unwrap());
        let product = v.certificate.as_ref().map(|c| c.product().to_rational());
        ok &= v.tested_polynomial == bip && product.as_ref() == Some(&bip);
    }
    details.push(format!("(2k,k,0,k): {}", bip.display_with("z")));
    for m in 2..=5u64 {
        let v = quotient_periodicity(&srg_array(SrgParams { n: 3 * m, k: 2 * m, lambda: m, mu: 2 * m }).unwrap());
        let product = v.certificate.as_ref().map(|c| c.product().to_rational());
        ok &= v.tested_polynomial == tri && product.as_ref() == Some(&tri);
        ok &= v.tested_polynomial.squarefree_part().divides(&twelve);
    }
    details.push(format!("(3m,2m,m,2m): {}", tri.display_with("z")));
    outcome(ok, details.join("; "))
}

fn alpha_values() -> Outcome {
    let a = alpha_coefficients(phi(&srg_array(SrgParams { n: 4, k: 2, lambda: 0, mu: 2 }).unwrap()).coeffs());
    let b = alpha_coefficients(phi(&srg_array(SrgParams { n: 6, k: 4, lambda: 2, mu: 4 }).unwrap()).coeffs());
    // listed from α₆ down to α₀
    let want_a: Vec<Rational> = [1, 0, -1, 0, -1, 0, 1].map(int).into_iter().rev().collect();
    let want_b: Vec<Rational> = [1, -1, 1, -2, 1, -1, 1].map(int).into_iter().rev().collect();
    outcome(a == want_a && b == want_b, "bit-exact")
}

fn necessity(arrays: &[IntersectionArray]) -> Outcome {
    let rejected: Vec<_> = arrays.iter().filter(|a| !coefficient_filter(a).passed).collect();
    let bad = rejected.iter().filter(|a| quotient_periodicity(a).periodic).count();
    outcome(bad == 0, format!("{} samples, {} rejected, {bad} counterexamples", arrays.len(), rejected.len()))
}

/// Substitutes `x = (z + 1/z)/2` term by term and clears `(2z)^D`.
fn zhukovskij_by_expansion(f: &RatPoly) -> RatPoly {
    let big_d = f.degree().unwrap();
    let half_sum = RatPoly::new(vec![int(1), int(0), int(1)]); // z^2 + 1 = 2z * x
    let mut acc = RatPoly::zero();
    for (i, rho) in f.coeffs().iter().enumerate() {
        let two_z = RatPoly::monomial(int(2), 1);
        let term = &half_sum.pow(i as u32) * &two_z.pow((big_d - i) as u32);
        acc = &acc + &term.scale(rho);
    }
    acc
}

fn alpha_identity(arrays: &[IntersectionArray]) -> Outcome {
    let bad = arrays
        .iter()
        .filter(|a| {
            let f = phi(a);
            let alpha = alpha_coefficients(f.coeffs());
            let n = alpha.len() - 1;
            alpha != zhukovskij(&f).coeffs()
                || alpha != zhukovskij_by_expansion(&f).coeffs()
                || (0..=n).any(|j| alpha[j] != alpha[n - j])
        })
        .count();
    outcome(bad == 0, format!("{} samples, {bad} failures", arrays.len()))
}

fn route_agreement(corpus: &[(&str, Graph)]) -> Outcome {
    let bad: Vec<&str> = corpus
        .iter()
        .filter(|(_, g)| is_periodic_unitary(g, &Limits::default()).unwrap().periodic != is_periodic_spectral(g).periodic)
        .map(|(n, _)| *n)
        .collect();
    outcome(bad.is_empty(), format!("{} graphs, disagreements {bad:?}", corpus.len()))
}

fn spectrum_bounds(corpus: &[(&str, Graph)]) -> Outcome {
    let allowed = [int(-1), Rational::new((-1).into(), 2.into()), int(0), Rational::new(1.into(), 2.into()), int(1)];
    let mut applicable = 0;
    let mut bad = Vec::new();
    for (name, g) in corpus {
        let r = rational_spectrum_check(g);
        if !(r.spectrum.complete && is_periodic_unitary(g, &Limits::default()).unwrap().periodic) {
            continue;
        }
        applicable += 1;
        let distinct = r.spectrum.distinct();
        if !distinct.iter().all(|x| allowed.contains(x)) || distinct.len() > 5 || diameter(g) >= 5 {
            bad.push(*name);
        }
    }
    outcome(bad.is_empty(), format!("{applicable} applicable, violations {bad:?}"))
}

fn diameter_bound(corpus: &[(&str, Graph)]) -> Outcome {
    let bad: Vec<&str> = corpus
        .iter()
        .filter(|(_, g)| diameter(g) >= minimal_polynomial(&transition_matrix(g)).distinct_eigenvalue_count)
        .map(|(n, _)| *n)
        .collect();
    outcome(bad.is_empty(), format!("{} graphs, violations {bad:?}", corpus.len()))
}

#[test]
fn acceptance_criteria() {
    let arrays = sample_arrays();
    let corpus = mandatory_corpus();
    let criteria: Vec<Criterion> = vec![
        (1, "known family periods", Duration::from_secs(30), Box::new(periods)),
        (2, "Hamming scan d 1-6, q 2-12", Duration::from_secs(60), Box::new(hamming_scan)),
        (3, "Johnson scan n 2-12, k 1-6", Duration::from_secs(60), Box::new(johnson_scan)),
        (4, "quotient factorizations", Duration::from_secs(30), Box::new(factorizations)),
        (5, "quotient alpha values", Duration::from_secs(30), Box::new(alpha_values)),
        (6, "filter necessity on random arrays", Duration::from_secs(120), Box::new(|| necessity(&arrays))),
        (7, "alpha identity on random arrays", Duration::from_secs(120), Box::new(|| alpha_identity(&arrays))),
        (8, "unitary and spectral routes agree", Duration::from_secs(120), Box::new(|| route_agreement(&corpus))),
        (9, "rational spectrum bounds", Duration::from_secs(120), Box::new(|| spectrum_bounds(&corpus))),
        (10, "diameter below distinct eigenvalues", Duration::from_secs(120), Box::new(|| diameter_bound(&corpus))),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr().lock();
    for (id, name, budget, run) in &criteria {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let passed = o.passed && elapsed <= *budget;
        writeln!(
            err,
            "acceptance {id:>2} {} {name} ({:.2}s, budget {}s): {}",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs(),
            o.detail
        )
        .unwrap();
        if !passed {
            failed.push(*id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn sampler_covers_the_declared_range() {
    let arrays = sample_arrays();
    assert_eq!(arrays.len(), SAMPLES);
    assert!(arrays.iter().all(|a| a.diameter() <= 6 && a.valency() <= 10));
    assert!(arrays.iter().any(|a| a.diameter() == 6));
    assert!(arrays.iter().any(|a| a.valency() == 10));
}
