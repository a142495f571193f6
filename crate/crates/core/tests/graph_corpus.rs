use std::collections::BTreeSet;

use grover_core::drg::phi;
use grover_core::graphs::{
    complete, complete_multipartite, cycle, diameter, grover_unitary, hamming, intersection_array_of, johnson,
    petersen, transition_matrix, Graph, Limits,
};
use grover_core::periodicity::{
    general_coefficient_filter, is_periodic_spectral, is_periodic_unitary, least_identity_power,
    rational_spectrum_check,
};
use grover_core::spectra::minimal_polynomial;
use grover_core::{Rational, RationalMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn named_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push((format!("K{n}"), complete(n).unwrap()));
    }
    for n in 3..=8 {
        out.push((format!("C{n}"), cycle(n).unwrap()));
    }
    for k in 1..=3 {
        out.push((format!("K{k},{k}"), complete_multipartite(&[k, k]).unwrap()));
    }
    out.push(("K2,2,2".into(), complete_multipartite(&[2, 2, 2]).unwrap()));
    out.push(("H(2,2)".into(), hamming(2, 2).unwrap()));
    out.push(("H(2,3)".into(), hamming(2, 3).unwrap()));
    out.push(("H(3,3)".into(), hamming(3, 3).unwrap()));
    out.push(("J(4,2)".into(), johnson(4, 2).unwrap()));
    out.push(("Petersen".into(), petersen().unwrap()));
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every connected graph on 2 to 5 vertices, one per isomorphism class.
fn small_connected_graphs() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=5 {
        let all = pairs(n);
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for mask in 1u32..(1 << all.len()) {
            let edges: Vec<_> = (0..all.len()).filter(|b| mask >> b & 1 == 1).map(|b| all[b]).collect();
            let Ok(g) = Graph::from_edges(n, &edges) else { continue };
            let canon = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<_> = edges.iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                    e.sort();
                    e
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                out.push(g);
            }
        }
    }
    out
}

fn random_connected_graphs(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(6..=7);
        let density = rng.gen_range(0.25..0.8);
        let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(density)).collect();
        if let Ok(g) = Graph::from_edges(n, &edges) {
            out.push(g);
        }
    }
    out
}

fn everything() -> Vec<(String, Graph)> {
    let mut all = named_corpus();
    all.extend(small_connected_graphs().into_iter().map(|g| (format!("{:?}", g.edges()), g)));
    all.extend(random_connected_graphs(60, 11).into_iter().map(|g| (format!("{:?}", g.edges()), g)));
    all
}

/// The transfer matrix straight from its entrywise definition.
fn unitary_by_definition(g: &Graph) -> RationalMatrix {
    let arcs: Vec<(usize, usize)> = g.edges().into_iter().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
    let mut sorted = arcs.clone();
    sorted.sort();
    RationalMatrix::from_fn(sorted.len(), sorted.len(), |i, j| {
        let (eo, et) = sorted[i];
        let (fo, ft) = sorted[j];
        if ft != eo {
            return Rational::from_integer(0.into());
        }
        let w = Rational::new(2.into(), (g.degree(ft) as i64).into());
        if (fo, ft) == (et, eo) {
            w - Rational::from_integer(1.into())
        } else {
            w
        }
    })
}

#[test]
fn small_graph_enumeration_counts() {
    let graphs = small_connected_graphs();
    let count = |n| graphs.iter().filter(|g| g.vertex_count() == n).count();
    assert_eq!((count(2), count(3), count(4), count(5)), (1, 2, 6, 21));
}

#[test]
fn unitary_matches_definition_and_is_orthogonal() {
    for (name, g) in named_corpus() {
        let u = grover_unitary(&g);
        assert_eq!(u, unitary_by_definition(&g), "{name}");
        assert!((&u.transpose() * &u).is_identity(), "{name}");
    }
}

#[test]
fn routes_agree_everywhere() {
    for (name, g) in everything() {
        let u = is_periodic_unitary(&g, &Limits::default()).unwrap();
        let s = is_periodic_spectral(&g);
        assert_eq!(u.periodic, s.periodic, "{name}");
        assert_eq!(u.period, s.period, "{name}");
        assert_eq!(u.periodic, u.certificate.is_some());
        assert_eq!(u.periodic, u.period.is_some());
        if let Some(c) = &u.certificate {
            assert_eq!(Some(c.period), u.period);
            assert!(c.is_squarefree());
        }
    }
}

#[test]
fn filter_failure_implies_aperiodic() {
    for (name, g) in everything() {
        if !general_coefficient_filter(&g).passed {
            assert!(!is_periodic_unitary(&g, &Limits::default()).unwrap().periodic, "{name}");
        }
    }
}

#[test]
fn rational_spectrum_bounds_hold() {
    for (name, g) in everything() {
        let r = rational_spectrum_check(&g);
        assert!(r.holds(), "{name}: {r:?}");
    }
}

#[test]
fn diameter_below_distinct_eigenvalues() {
    for (name, g) in everything() {
        let distinct = minimal_polynomial(&transition_matrix(&g)).distinct_eigenvalue_count;
        assert!(diameter(&g) < distinct, "{name}");
    }
}

#[test]
fn periods_are_least_identity_powers() {
    for (name, g) in everything() {
        let v = is_periodic_unitary(&g, &Limits::default()).unwrap();
        match v.period {
            Some(p) if p <= 12 => assert_eq!(least_identity_power(&g, p), Some(p), "{name}"),
            Some(_) => {}
            None => assert_eq!(least_identity_power(&g, 12), None, "{name}"),
        }
    }
}

#[test]
fn family_structure() {
    for d in 1..=4 {
        for q in 2..=4 {
            if q == 4 && d == 4 {
                continue;
            }
            let g = hamming(d, q).unwrap();
            assert_eq!(g.regular_degree(), Some(d * (q - 1)));
            assert_eq!(diameter(&g), d);
            let arr = intersection_array_of(&g).unwrap().unwrap();
            for j in 0..d {
                assert_eq!(arr.b_at(j), ((d - j) * (q - 1)) as u64);
                assert_eq!(arr.c_at(j + 1), (j + 1) as u64);
            }
        }
    }
    for n in 2..=8 {
        for k in 1..n {
            let g = johnson(n, k).unwrap();
            let e = k.min(n - k);
            assert_eq!(g.regular_degree(), Some(k * (n - k)));
            assert_eq!(diameter(&g), e);
            let arr = intersection_array_of(&g).unwrap().unwrap();
            for j in 0..e {
                assert_eq!(arr.b_at(j), ((k - j) * (n - k - j)) as u64);
                assert_eq!(arr.c_at(j + 1), ((j + 1) * (j + 1)) as u64);
            }
        }
    }
}

#[test]
fn quotient_polynomial_is_transition_minimal_polynomial() {
    for (name, g) in named_corpus() {
        if let Ok(Some(arr)) = intersection_array_of(&g) {
            assert_eq!(phi(&arr), minimal_polynomial(&transition_matrix(&g)).monic, "{name}");
        }
    }
}
