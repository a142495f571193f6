//! The verification suite behind `grover verify`.
//!
//! `fast` samples fewer random intersection arrays and leaves H(3,3) out of
//! the graph corpus; everything else is identical to `all`.

use std::time::Instant;

use grover_core::drg::{alpha_coefficients, coefficient_filter, phi, quotient_periodicity, srg_array, IntersectionArray, SrgParams};
use grover_core::graphs::{
    complete, complete_multipartite, cycle, diameter, hamming, johnson, petersen, transition_matrix, Graph, Limits,
};
use grover_core::periodicity::{is_periodic_spectral, is_periodic_unitary, rational_spectrum_check};
use grover_core::spectra::minimal_polynomial;
use grover_core::{zhukovskij, IntPoly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::search::{search_hamming, search_johnson, SearchOptions, DEFAULT_D, DEFAULT_K, DEFAULT_N, DEFAULT_Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Fast,
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

/// Named graphs every property is checked on.
pub fn corpus(include_large: bool) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push((format!("K{n}"), complete(n).unwrap()));
    }
    for n in 3..=8 {
        out.push((format!("C{n}"), cycle(n).unwrap()));
    }
    for k in 2..=3 {
        out.push((format!("K{k},{k}"), complete_multipartite(&[k, k]).unwrap()));
    }
    out.push(("K2,2,2".into(), complete_multipartite(&[2, 2, 2]).unwrap()));
    out.push(("H(2,2)".into(), hamming(2, 2).unwrap()));
    out.push(("H(2,3)".into(), hamming(2, 3).unwrap()));
    if include_large {
        out.push(("H(3,3)".into(), hamming(3, 3).unwrap()));
    }
    out.push(("J(4,2)".into(), johnson(4, 2).unwrap()));
    out.push(("Petersen".into(), petersen().unwrap()));
    out
}

/// Intersection arrays with diameter at most `max_d` and valency at most
/// `max_k`, `b` nonincreasing and `c` nondecreasing.
pub fn random_arrays(count: usize, max_d: usize, max_k: u64, seed: u64) -> Vec<IntersectionArray> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=max_k);
            let d = if k == 1 { 1 } else { rng.gen_range(1..=max_d) };
            let (mut b, mut c) = (vec![k], vec![1u64]);
            for j in 1..d {
                let cj = rng.gen_range(c[j - 1]..=k - 1);
                let bj = rng.gen_range(1..=b[j - 1].min(k - cj));
                c.push(cj);
                b.push(bj);
            }
            IntersectionArray::new(b, c).expect("generator respects the array constraints")
        })
        .collect()
}

fn criterion(id: u8, name: &'static str, f: impl FnOnce() -> (bool, String)) -> CriterionResult {
    let start = Instant::now();
    let (passed, detail) = f();
    CriterionResult { id, name, passed, detail, seconds: start.elapsed().as_secs_f64() }
}

fn unitary_period(g: &Graph) -> Option<u64> {
    is_periodic_unitary(g, &Limits::default()).ok()?.period
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn run(suite: Suite) -> Vec<CriterionResult> {
    let full = suite == Suite::All;
    let samples = if full { 500 } else { 150 };
    let arrays = random_arrays(samples, 6, 10, 0x5eed);
    let graphs = corpus(full);
    let mut out = Vec::new();

    out.push(criterion(1, "known periods", || {
        let mut cases = vec![("C5".to_string(), cycle(5).unwrap(), 5)];
        for k in 2..=4 {
            cases.push((format!("K{k},{k}"), complete_multipartite(&[k, k]).unwrap(), 4));
        }
        for m in 2..=3 {
            cases.push((format!("K{m},{m},{m}"), complete_multipartite(&[m, m, m]).unwrap(), 12));
        }
        let bad: Vec<String> = cases
            .iter()
            .filter_map(|(name, g, p)| {
                let got = unitary_period(g);
                (got != Some(*p)).then(|| format!("{name}: expected {p}, got {got:?}"))
            })
            .collect();
        (bad.is_empty(), if bad.is_empty() { format!("{} graphs", cases.len()) } else { bad.join("; ") })
    }));

    let opts = SearchOptions::default();
    out.push(criterion(2, "Hamming scan", || match search_hamming(DEFAULT_D, DEFAULT_Q, &opts) {
        Ok(r) => (
            r.matches_expected() && r.confirmations_agree(),
            format!("periodic {:?}, {}", r.periodic_set(), crate::search::SCOPE),
        ),
        Err(e) => (false, e.to_string()),
    }));
    out.push(criterion(3, "Johnson scan", || match search_johnson(DEFAULT_N, DEFAULT_K, &opts) {
        Ok(r) => (
            r.matches_expected() && r.confirmations_agree(),
            format!("periodic {:?}, {}", r.periodic_set(), crate::search::SCOPE),
        ),
        Err(e) => (false, e.to_string()),
    }));

    out.push(criterion(4, "quotient factorizations", || {
        let bip = IntPoly::from_ints(&[1, 0, -1, 0, -1, 0, 1]);
        let tri = IntPoly::from_ints(&[1, -1, 1, -2, 1, -1, 1]);
        let mut bad = Vec::new();
        for k in 2..=6 {
            let v = quotient_periodicity(&srg_array(SrgParams { n: 2 * k, k, lambda: 0, mu: k }).unwrap());
            let ok = v.tested_polynomial == bip.to_rational() && v.certificate.as_ref().map(|c| c.product()) == Some(bip.clone());
            if !ok {
                bad.push(format!("(2k,k,0,k) k={k}"));
            }
        }
        for m in 2..=5 {
            let v = quotient_periodicity(&srg_array(SrgParams { n: 3 * m, k: 2 * m, lambda: m, mu: 2 * m }).unwrap());
            let ok = v.tested_polynomial == tri.to_rational()
                && v.certificate.as_ref().is_some_and(|c| c.product() == tri && c.orders().iter().all(|o| 12 % o == 0));
            if !ok {
                bad.push(format!("(3m,2m,m,2m) m={m}"));
            }
        }
        (bad.is_empty(), if bad.is_empty() { "exact".into() } else { bad.join("; ") })
    }));

    out.push(criterion(5, "quotient alpha values", || {
        let a1 = alpha_coefficients(phi(&srg_array(SrgParams { n: 6, k: 3, lambda: 0, mu: 3 }).unwrap()).coeffs());
        let a2 = alpha_coefficients(phi(&srg_array(SrgParams { n: 6, k: 4, lambda: 2, mu: 4 }).unwrap()).coeffs());
        let want1: Vec<Rational> = [1, 0, -1, 0, -1, 0, 1].iter().map(|&x| q(x, 1)).collect();
        let want2: Vec<Rational> = [1, -1, 1, -2, 1, -1, 1].iter().map(|&x| q(x, 1)).collect();
        (a1 == want1 && a2 == want2, "exact".into())
    }));

    out.push(criterion(6, "coefficient filter necessity", || {
        let bad = arrays
            .iter()
            .filter(|a| !coefficient_filter(a).passed && quotient_periodicity(a).periodic)
            .count();
        let rejected = arrays.iter().filter(|a| !coefficient_filter(a).passed).count();
        (bad == 0, format!("{} arrays, {rejected} rejected by the filter, {bad} counterexamples", arrays.len()))
    }));

    out.push(criterion(7, "alpha identity", || {
        let bad = arrays
            .iter()
            .filter(|a| {
                let f = phi(a);
                let alpha = alpha_coefficients(f.coeffs());
                let psi = zhukovskij(&f);
                let n = alpha.len() - 1;
                alpha != psi.coeffs() || (0..=n).any(|j| alpha[j] != alpha[n - j])
            })
            .count();
        (bad == 0, format!("{} arrays, {bad} failures", arrays.len()))
    }));

    out.push(criterion(8, "route agreement", || {
        let mut bad = Vec::new();
        let mut period_mismatch = Vec::new();
        for (name, g) in &graphs {
            let s = is_periodic_spectral(g);
            match is_periodic_unitary(g, &Limits::default()) {
                Ok(u) if u.periodic == s.periodic => {
                    if u.period != s.period {
                        period_mismatch.push(name.clone());
                    }
                }
                _ => bad.push(name.clone()),
            }
        }
        (
            bad.is_empty(),
            format!("{} graphs, disagreements {:?}, period mismatches {:?}", graphs.len(), bad, period_mismatch),
        )
    }));

    out.push(criterion(9, "rational spectrum bounds", || {
        let mut applicable = 0;
        let bad: Vec<String> = graphs
            .iter()
            .filter_map(|(name, g)| {
                let r = rational_spectrum_check(g);
                applicable += r.applicable as usize;
                (!r.holds()).then(|| name.clone())
            })
            .collect();
        (bad.is_empty(), format!("{applicable} applicable graphs, violations {bad:?}"))
    }));

    out.push(criterion(10, "diameter below distinct eigenvalue count", || {
        let bad: Vec<String> = graphs
            .iter()
            .filter(|(_, g)| diameter(g) >= minimal_polynomial(&transition_matrix(g)).distinct_eigenvalue_count)
            .map(|(n, _)| n.clone())
            .collect();
        (bad.is_empty(), format!("{} graphs, violations {bad:?}", graphs.len()))
    }));

    out
}

pub fn render_table(results: &[CriterionResult]) -> String {
    let mut s = String::new();
    for r in results {
        s.push_str(&format!(
            "{:>2}  {}  {:<42} {:>7.2}s  {}\n",
            r.id,
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.seconds,
            r.detail
        ));
    }
    s
}
