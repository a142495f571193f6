//! Intersection arrays of distance-regular graphs and the periodicity
//! analysis that runs entirely on the tridiagonal quotient matrix.
//!
//! For an array with valency `k` and diameter `d`, write `D = d + 1`,
//! `φ(x) = det(xI - Q/k) = Σ ρ_i x^i` and `Ψ(z) = (2z)^D φ((z + 1/z)/2)
//! = Σ α_j z^j`. A periodic walk forces `Ψ` to be a product of cyclotomic
//! polynomials, which in turn forces `2^j ρ_{D-j} ∈ Z` for `1 <= j < D`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::periodicity::{minus_one_from_cycles, verdict_from_polynomial, PeriodicityVerdict, Route};
use crate::{zhukovskij, IntMatrix, Integer, RatPoly, Rational, RationalMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DrgError {
    #[error("invalid intersection array: {0}")]
    InvalidArray(String),
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
    #[error("cannot parse intersection array `{input}`: {message}")]
    Parse { input: String, message: String },
}

/// `{b_0, ..., b_{d-1}; c_1, ..., c_d}` with `a_j = k - b_j - c_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
    a: Vec<u64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self, DrgError> {
        let bad = |m: String| Err(DrgError::InvalidArray(m));
        let d = b.len();
        if d == 0 || c.len() != d {
            return bad(format!("need d >= 1 values on each side, got {} and {}", b.len(), c.len()));
        }
        let k = b[0];
        if c[0] != 1 {
            return bad(format!("c_1 must be 1, got {}", c[0]));
        }
        if let Some(i) = b.iter().position(|&x| x == 0) {
            return bad(format!("b_{i} must be positive"));
        }
        if let Some(j) = c.iter().position(|&x| x == 0) {
            return bad(format!("c_{} must be positive", j + 1));
        }
        let mut a = Vec::with_capacity(d + 1);
        for j in 0..=d {
            let bj = if j < d { b[j] } else { 0 };
            let cj = if j > 0 { c[j - 1] } else { 0 };
            match k.checked_sub(bj + cj) {
                Some(aj) => a.push(aj),
                None => return bad(format!("b_{j} + c_{j} = {} exceeds k = {k}", bj + cj)),
            }
        }
        Ok(IntersectionArray { b, c, a })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> u64 {
        self.b[0]
    }

    /// `b_0 .. b_{d-1}`.
    pub fn b(&self) -> &[u64] {
        &self.b
    }

    /// `c_1 .. c_d`.
    pub fn c(&self) -> &[u64] {
        &self.c
    }

    /// `a_0 .. a_d`.
    pub fn a(&self) -> &[u64] {
        &self.a
    }

    /// `b_j` with `b_d = 0`.
    pub fn b_at(&self, j: usize) -> u64 {
        self.b.get(j).copied().unwrap_or(0)
    }

    /// `c_j` with `c_0 = 0`.
    pub fn c_at(&self, j: usize) -> u64 {
        if j == 0 { 0 } else { self.c[j - 1] }
    }

    pub fn is_bipartite(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// Sizes `k_j = |Γ_j(x)|`, if all are integral.
    pub fn sphere_sizes(&self) -> Option<Vec<u64>> {
        let mut sizes = vec![1u64];
        for j in 1..=self.diameter() {
            let num = sizes[j - 1].checked_mul(self.b[j - 1])?;
            if num % self.c[j - 1] != 0 {
                return None;
            }
            sizes.push(num / self.c[j - 1]);
        }
        Some(sizes)
    }

    pub fn vertex_count(&self) -> Option<u64> {
        self.sphere_sizes().map(|s| s.iter().sum())
    }

    pub fn quotient(&self) -> QuotientMatrices {
        let dim = self.diameter() + 1;
        let q = IntMatrix::from_fn(dim, dim, |i, j| {
            let v = if j == i {
                self.a[i]
            } else if j == i + 1 {
                self.b_at(i)
            } else if i == j + 1 {
                self.c_at(i)
            } else {
                0
            };
            Integer::from(v)
        });
        let k = Rational::from_integer(self.valency().into());
        let qtilde = q.map(|v| Rational::from_integer(v.clone()) / &k);
        QuotientMatrices { q, qtilde, dim }
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = DrgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |m: &str| DrgError::Parse { input: s.to_string(), message: m.to_string() };
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| err("expected `{b0,...;c1,...}`"))?;
        let (bs, cs) = inner.split_once(';').ok_or_else(|| err("missing `;`"))?;
        let list = |t: &str| {
            t.split(',')
                .map(|x| x.trim().parse::<u64>().map_err(|_| err(&format!("`{}` is not a nonnegative integer", x.trim()))))
                .collect::<Result<Vec<_>, _>>()
        };
        IntersectionArray::new(list(bs)?, list(cs)?)
    }
}

/// The tridiagonal quotient matrix `Q` and its normalization `Q/k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrices {
    pub q: IntMatrix,
    pub qtilde: RationalMatrix,
    pub dim: usize,
}

/// Strongly regular graph parameters `(n, k, λ, μ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// Diameter-two intersection array of an SRG.
pub fn srg_array(p: SrgParams) -> Result<IntersectionArray, DrgError> {
    let SrgParams { n, k, lambda, mu } = p;
    let bad = |m: String| Err(DrgError::InfeasibleParameters(m));
    if mu == 0 {
        return bad("mu = 0 gives a disconnected graph".into());
    }
    if k >= n {
        return bad(format!("k = {k} must be below n = {n}"));
    }
    if lambda + 1 >= k {
        return bad(format!("lambda = {lambda} must be at most k - 2 = {} for diameter two", k as i64 - 2));
    }
    if k * (k - lambda - 1) != (n - k - 1) * mu {
        return bad(format!(
            "k(k - lambda - 1) = {} differs from (n - k - 1) mu = {}",
            k * (k - lambda - 1),
            (n - k - 1) * mu
        ));
    }
    IntersectionArray::new(vec![k, k - 1 - lambda], vec![1, mu])
        .map_err(|e| DrgError::InfeasibleParameters(e.to_string()))
}

/// `det(xI - Q/k)` by the three-term recurrence of a tridiagonal determinant.
pub fn phi(arr: &IntersectionArray) -> RatPoly {
    let k = Rational::from_integer(arr.valency().into());
    let k2 = &k * &k;
    let x = RatPoly::monomial(Rational::one(), 1);
    let diag = |j: usize| &x - &RatPoly::constant(Rational::from_integer(arr.a()[j].into()) / &k);
    let mut prev = RatPoly::one();
    let mut cur = diag(0);
    for j in 1..=arr.diameter() {
        let off = Rational::from_integer((arr.b_at(j - 1) * arr.c_at(j)).into()) / &k2;
        let next = &(&diag(j) * &cur) - &prev.scale(&off);
        prev = cur;
        cur = next;
    }
    cur
}

fn binomial(n: usize, r: usize) -> Integer {
    if r > n {
        return Integer::zero();
    }
    (0..r).fold(Integer::one(), |acc, i| acc * Integer::from(n - i) / Integer::from(i + 1))
}

/// Coefficients `α_0 .. α_{2D}` of `Ψ` from the coefficients `ρ_0 .. ρ_D` of `φ`.
///
/// The upper half comes from
/// `α_{2D-j} = Σ_{t=0}^{⌊j/2⌋} 2^{j-2t} ρ_{D-(j-2t)} C(D-(j-2t), t)`,
/// the middle coefficient from `Ψ(1) = 0`, i.e. `α_D = -2 Σ_{j<D} α_{2D-j}`,
/// and the lower half from the palindromic symmetry `α_j = α_{2D-j}`.
/// The middle step is only valid when `φ(1) = 0`, which holds for every
/// intersection array because `Q/k` has unit row sums.
pub fn alpha_coefficients(rho: &[Rational]) -> Vec<Rational> {
    assert!(!rho.is_empty(), "rho must hold D + 1 coefficients");
    let big_d = rho.len() - 1;
    let mut alpha = vec![Rational::zero(); 2 * big_d + 1];
    let mut upper_sum = Rational::zero();
    for j in 0..big_d {
        let mut acc = Rational::zero();
        for t in 0..=j / 2 {
            let e = j - 2 * t;
            let term = &rho[big_d - e]
                * Rational::from_integer(Integer::one() << e)
                * Rational::from_integer(binomial(big_d - e, t));
            acc += term;
        }
        upper_sum += &acc;
        alpha[2 * big_d - j] = acc.clone();
        alpha[j] = acc;
    }
    alpha[big_d] = -(upper_sum * Rational::from_integer(2.into()));
    alpha
}

/// Outcome of the power-of-two integrality test on characteristic
/// polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientReport {
    /// `ρ_0 .. ρ_D`.
    pub rho: Vec<Rational>,
    /// `α_0 .. α_{2D}`.
    pub alpha: Vec<Rational>,
    pub passed: bool,
    /// Smallest `j` with `2^j ρ_{D-j}` not an integer.
    pub failing_j: Option<usize>,
}

/// Smallest `j` in `js` with `2^j ρ_{D-j}` non-integral.
pub(crate) fn first_non_integral(rho: &[Rational], js: impl IntoIterator<Item = usize>) -> Option<usize> {
    let big_d = rho.len() - 1;
    js.into_iter().find(|&j| {
        let v = &rho[big_d - j] * Rational::from_integer(Integer::one() << j);
        !v.is_integer()
    })
}

/// Necessary condition for periodicity: `2^j ρ_{D-j} ∈ Z` for `1 <= j <= D-1`.
pub fn coefficient_filter(arr: &IntersectionArray) -> CoefficientReport {
    let rho = phi(arr).into_coeffs();
    let big_d = rho.len() - 1;
    let alpha = alpha_coefficients(&rho);
    let failing_j = first_non_integral(&rho, 1..big_d);
    CoefficientReport { rho, alpha, passed: failing_j.is_none(), failing_j }
}

/// Periodicity decided on the quotient: `Ψ` must be an integer polynomial
/// that factors into cyclotomic polynomials.
///
/// The period adds order 2 when the cycle space of a realizing graph forces
/// `-1` into the spectrum of the transfer matrix (`b₁ - 1 + [bipartite] > 0`).
pub fn quotient_periodicity(arr: &IntersectionArray) -> PeriodicityVerdict {
    let psi = zhukovskij(&phi(arr));
    let k = arr.valency();
    let extra_minus_one = match arr.vertex_count() {
        Some(n) => minus_one_from_cycles(n as u128, n as u128 * k as u128 / 2, arr.is_bipartite()),
        // valency >= 3 always leaves b₁ >= 2
        None => k >= 3,
    };
    verdict_from_polynomial(Route::Quotient, psi, extra_minus_one, false)
}

fn is_square(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&s| s * s == n)
}

/// Eigenvalue multiplicities of an SRG are nonnegative integers.
pub fn srg_multiplicities_integral(p: SrgParams) -> bool {
    let SrgParams { n, k, lambda, mu } = p;
    let (n, k, l, m) = (n as i128, k as i128, lambda as i128, mu as i128);
    let disc = (l - m) * (l - m) + 4 * (k - m);
    if disc <= 0 {
        return false;
    }
    match is_square(disc as u64) {
        Some(s) => {
            let s = s as i128;
            let r = (l - m + s) / 2;
            let t = (l - m - s) / 2;
            let num = -k - (n - 1) * t;
            let den = r - t;
            num % den == 0 && num / den >= 0 && n - 1 - num / den >= 0
        }
        None => 2 * k + (n - 1) * (l - m) == 0 && (n - 1) % 2 == 0,
    }
}

/// All feasible SRG parameter sets with valency in `2..=k_max`, sorted.
///
/// Feasibility: the counting identity `k(k-λ-1) = (n-k-1)μ`, `μ >= 1`,
/// `λ <= k-2` (diameter exactly two) and integral eigenvalue multiplicities.
pub fn feasible_srg_parameters(k_max: u64) -> Vec<SrgParams> {
    let mut out = Vec::new();
    for k in 2..=k_max {
        for lambda in 0..=k - 2 {
            for mu in 1..=k {
                let num = k * (k - lambda - 1);
                if num % mu != 0 {
                    continue;
                }
                let p = SrgParams { n: k + 1 + num / mu, k, lambda, mu };
                if srg_multiplicities_integral(p) {
                    out.push(p);
                }
            }
        }
    }
    out.sort();
    out
}

/// One feasible parameter set with its filter report and quotient verdict.
#[derive(Clone, Debug)]
pub struct SrgEvaluation {
    pub params: SrgParams,
    pub array: IntersectionArray,
    pub filter: CoefficientReport,
    pub verdict: PeriodicityVerdict,
}

/// Evaluates every feasible parameter set with valency at most `k_max`,
/// in parameter order.
pub fn evaluate_srgs(k_max: u64) -> Vec<SrgEvaluation> {
    feasible_srg_parameters(k_max)
        .into_par_iter()
        .map(|params| {
            let array = srg_array(params).expect("feasible parameters form a valid array");
            let filter = coefficient_filter(&array);
            let verdict = quotient_periodicity(&array);
            SrgEvaluation { params, array, filter, verdict }
        })
        .collect()
}

/// Feasible SRG parameter sets with valency at most `k_max` whose walk is periodic.
pub fn classify_srg(k_max: u64) -> Vec<(SrgParams, PeriodicityVerdict)> {
    evaluate_srgs(k_max)
        .into_iter()
        .filter(|e| e.filter.passed && e.verdict.periodic)
        .map(|e| (e.params, e.verdict))
        .collect()
}
