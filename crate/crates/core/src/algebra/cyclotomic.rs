//! Cyclotomic polynomials and recognition of cyclotomic products.

use std::collections::HashMap;

use num_integer::Integer as _;
use num_traits::{One, Signed};

use crate::IntPoly;

/// A factorization of a polynomial into cyclotomic polynomials.
///
/// `factors` lists each index `n` once per occurrence of `Φ_n`, in
/// nondecreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCertificate {
    pub factors: Vec<u64>,
    pub period: u64,
}

impl CyclotomicCertificate {
    pub fn new(mut factors: Vec<u64>) -> Self {
        factors.sort_unstable();
        let period = factors.iter().fold(1u64, |l, &n| l.lcm(&n));
        CyclotomicCertificate { factors, period }
    }

    /// Distinct indices, in increasing order.
    pub fn orders(&self) -> Vec<u64> {
        let mut v = self.factors.clone();
        v.dedup();
        v
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.windows(2).all(|w| w[0] != w[1])
    }

    /// Multiplies the certified factors back together.
    pub fn product(&self) -> IntPoly {
        let mut table = CyclotomicTable::default();
        self.factors
            .iter()
            .fold(IntPoly::one(), |acc, &n| &acc * &table.get(n))
    }
}

/// Euler's totient for `0..=limit` by sieve.
pub fn totients(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for p in 2..=limit {
        if phi[p] == p as u64 {
            for m in (p..=limit).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    phi
}

fn proper_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.retain(|&d| d != n);
    out.sort_unstable();
    out
}

/// Memo of cyclotomic polynomials; `Φ_n` is built from the `Φ_d` of its
/// proper divisors.
#[derive(Default)]
pub struct CyclotomicTable {
    cache: HashMap<u64, IntPoly>,
}

impl CyclotomicTable {
    pub fn get(&mut self, n: u64) -> IntPoly {
        assert!(n >= 1, "cyclotomic index must be positive");
        if let Some(p) = self.cache.get(&n) {
            return p.clone();
        }
        let mut acc = &IntPoly::monomial(1.into(), n as usize) - &IntPoly::one();
        for d in proper_divisors(n) {
            let phi_d = self.get(d);
            acc = acc
                .exact_div_monic(&phi_d)
                .expect("Φ_d divides x^n - 1 for d | n");
        }
        self.cache.insert(n, acc.clone());
        acc
    }
}

/// The `n`-th cyclotomic polynomial `Φ_n`.
pub fn cyclotomic(n: u64) -> IntPoly {
    CyclotomicTable::default().get(n)
}

/// Factors `p` into cyclotomic polynomials if possible.
///
/// Candidates `n` are tried in increasing order up to `2 deg^2` (from
/// `φ(n) >= sqrt(n/2)`), each divided out as many times as it divides.
/// Returns `None` unless the final quotient is exactly `1`.
pub fn is_cyclotomic_product(p: &IntPoly) -> Option<CyclotomicCertificate> {
    // Every Φ_n has constant term ±1.
    if !p.coeff(0).abs().is_one() {
        return None;
    }
    let (factors, rest) = cyclotomic_part(p)?;
    (rest == IntPoly::one()).then(|| CyclotomicCertificate::new(factors))
}

/// Divides every cyclotomic factor out of a monic `p`; returns the indices
/// found and the residual quotient. `None` if `p` is not monic.
pub fn cyclotomic_part(p: &IntPoly) -> Option<(Vec<u64>, IntPoly)> {
    if !p.is_monic() {
        return None;
    }
    let deg = p.degree().unwrap();
    if deg == 0 {
        return Some((Vec::new(), p.clone()));
    }
    let bound = 2 * deg * deg;
    let phi = totients(bound);
    let mut table = CyclotomicTable::default();
    let mut rest = p.clone();
    let mut factors = Vec::new();
    let mut remaining = deg as u64;
    for (n, &phi_n) in phi.iter().enumerate().skip(1) {
        if remaining == 0 {
            break;
        }
        if phi_n > remaining {
            continue;
        }
        let cyc = table.get(n as u64);
        while let Some(q) = rest.exact_div_monic(&cyc) {
            rest = q;
            factors.push(n as u64);
            remaining -= phi_n;
            if phi_n > remaining {
                break;
            }
        }
    }
    Some((factors, rest))
}
