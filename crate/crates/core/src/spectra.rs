//! Exact minimal and characteristic polynomials of rational matrices, and
//! rational eigenvalue extraction.
//!
//! Everything runs on the integer matrix `N = s·M` obtained by clearing
//! denominators, and is rescaled back at the end.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::matrix::{clear_denominators, clear_denominators_sparse};
use crate::{IntMatrix, IntPoly, Integer, Matrix, Poly, RatPoly, Rational, RationalMatrix, SparseMatrix};

/// Minimal polynomial of a matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPolynomialResult {
    /// Primitive integer multiple of the minimal polynomial, positive leading coefficient.
    pub primitive: IntPoly,
    /// Leading coefficient of `primitive`.
    pub leading_coefficient: Integer,
    pub monic: RatPoly,
    /// Number of distinct complex eigenvalues.
    pub distinct_eigenvalue_count: usize,
}

impl MinimalPolynomialResult {
    fn from_monic(monic: RatPoly) -> Self {
        let (primitive, _) = monic.primitive_integer_form();
        let leading_coefficient = primitive.leading().cloned().unwrap_or_else(Integer::one);
        let distinct_eigenvalue_count = monic.squarefree_part().degree().unwrap_or(0);
        MinimalPolynomialResult { primitive, leading_coefficient, monic, distinct_eigenvalue_count }
    }

    pub fn degree(&self) -> usize {
        self.monic.degree().unwrap_or(0)
    }
}

/// Rational roots of a polynomial with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSpectrum {
    /// Distinct rational roots in increasing order with their multiplicities.
    pub roots: Vec<(Rational, usize)>,
    /// True iff the polynomial splits into rational linear factors.
    pub complete: bool,
}

impl RationalSpectrum {
    /// Roots repeated according to multiplicity.
    pub fn values(&self) -> Vec<Rational> {
        self.roots
            .iter()
            .flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m))
            .collect()
    }

    pub fn distinct(&self) -> Vec<Rational> {
        self.roots.iter().map(|(r, _)| r.clone()).collect()
    }
}

pub fn minimal_polynomial(m: &RationalMatrix) -> MinimalPolynomialResult {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    minimal_polynomial_sparse(&m.to_sparse())
}

/// Minimal polynomial by Krylov iteration from each standard basis vector.
///
/// The local minimal polynomial of `e_i` (the first linear dependence among
/// `e_i, N e_i, N^2 e_i, ...`, found by fraction-free elimination) is merged
/// into a running lcm. A basis vector already annihilated by the running lcm
/// is skipped, and iteration stops once the lcm reaches full degree.
pub fn minimal_polynomial_sparse(m: &SparseMatrix<Rational>) -> MinimalPolynomialResult {
    assert_eq!(m.rows(), m.cols(), "minimal polynomial of a non-square matrix");
    let dim = m.rows();
    if dim == 0 {
        return MinimalPolynomialResult::from_monic(RatPoly::one());
    }
    let (n, scale) = clear_denominators_sparse(m);
    let mut lcm = RatPoly::one();
    let mut lcm_int = IntPoly::one();
    for i in 0..dim {
        if lcm.degree() == Some(dim) {
            break;
        }
        if annihilates(&n, &lcm_int, i) {
            continue;
        }
        let local = local_minimal_polynomial(&n, i);
        lcm = lcm.lcm(&local.to_rational());
        lcm_int = lcm.primitive_integer_form().0;
    }
    // lcm annihilates N = s·M; p_M(x) ∝ p_N(s x)
    let monic = lcm.substitute_scaled(&Rational::from_integer(scale)).monic();
    MinimalPolynomialResult::from_monic(monic)
}

fn unit(dim: usize, i: usize) -> Vec<Integer> {
    let mut v = vec![Integer::zero(); dim];
    v[i] = Integer::one();
    v
}

/// `p(N) e_i == 0`, by Horner's rule on the vector.
fn annihilates(n: &SparseMatrix<Integer>, p: &IntPoly, i: usize) -> bool {
    let e = unit(n.rows(), i);
    let mut acc = vec![Integer::zero(); n.rows()];
    for c in p.coeffs().iter().rev() {
        acc = n.mul_vec(&acc);
        for (a, b) in acc.iter_mut().zip(&e) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }
    acc.iter().all(Zero::is_zero)
}

struct Reduced {
    vec: Vec<Integer>,
    pivot: usize,
    comb: Vec<Integer>,
}

fn local_minimal_polynomial(n: &SparseMatrix<Integer>, start: usize) -> IntPoly {
    let dim = n.rows();
    let mut w = unit(dim, start);
    let mut basis: Vec<Reduced> = Vec::new();
    for t in 0..=dim {
        let mut r = w.clone();
        let mut comb = vec![Integer::zero(); t + 1];
        comb[t] = Integer::one();
        for b in &basis {
            if r[b.pivot].is_zero() {
                continue;
            }
            let g = r[b.pivot].gcd(&b.vec[b.pivot]);
            let alpha = &b.vec[b.pivot] / &g;
            let beta = &r[b.pivot] / &g;
            for (x, y) in r.iter_mut().zip(&b.vec) {
                *x = &alpha * &*x - &beta * y;
            }
            for (j, x) in comb.iter_mut().enumerate() {
                let y = b.comb.get(j).cloned().unwrap_or_default();
                *x = &alpha * &*x - &beta * y;
            }
        }
        let content = r.iter().chain(&comb).fold(Integer::zero(), |g, x| g.gcd(x));
        if !content.is_one() && !content.is_zero() {
            r.iter_mut().for_each(|x| *x /= &content);
            comb.iter_mut().for_each(|x| *x /= &content);
        }
        match r.iter().position(|x| !x.is_zero()) {
            None => return Poly::new(comb).primitive(),
            Some(pivot) => basis.push(Reduced { vec: r, pivot, comb }),
        }
        w = n.mul_vec(&w);
    }
    unreachable!("Krylov sequence of length dim+1 is always dependent")
}

/// Characteristic polynomial `det(xI - M)`, monic.
pub fn characteristic_polynomial(m: &RationalMatrix) -> RatPoly {
    charpoly_faddeev_leverrier(m)
}

fn rescale_charpoly(int_charpoly: &[Integer], scale: &Integer) -> RatPoly {
    // χ_M(x) = s^{-n} χ_N(s x)
    let n = int_charpoly.len() - 1;
    Poly::new(
        int_charpoly
            .iter()
            .enumerate()
            .map(|(i, c)| Rational::new(c.clone(), num_traits::pow(scale.clone(), n - i)))
            .collect(),
    )
}

/// Faddeev–LeVerrier recurrence on the integer matrix; every division is exact.
pub fn charpoly_faddeev_leverrier(m: &RationalMatrix) -> RatPoly {
    assert!(m.is_square());
    let n = m.rows();
    let (a, scale) = clear_denominators(m);
    let sparse = a.to_sparse();
    let mut coeffs = vec![Integer::zero(); n + 1];
    coeffs[n] = Integer::one();
    let mut acc = IntMatrix::identity(n);
    for k in 1..=n {
        let mut am = sparse.mul_dense(&acc);
        let c = -(am.trace() / Integer::from(k));
        for i in 0..n {
            am[(i, i)] += &c;
        }
        coeffs[n - k] = c;
        acc = am;
    }
    rescale_charpoly(&coeffs, &scale)
}

/// Bareiss fraction-free elimination on `xI - N` over `Z[x]`.
///
/// Every pivot is a leading principal minor of `xI - N`, hence monic and
/// nonzero, so no row exchanges are needed and each division is exact.
pub fn charpoly_bareiss(m: &RationalMatrix) -> RatPoly {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return RatPoly::one();
    }
    let (a, scale) = clear_denominators(m);
    let mut y: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = IntPoly::constant(-a[(i, j)].clone());
                    if i == j { &c + &IntPoly::monomial(Integer::one(), 1) } else { c }
                })
                .collect()
        })
        .collect();
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&y[k][k] * &y[i][j]) - &(&y[i][k] * &y[k][j]);
                y[i][j] = num.exact_div_monic(&prev).expect("Bareiss division is exact");
            }
        }
        prev = y[k][k].clone();
    }
    let det = y[n - 1][n - 1].clone();
    let coeffs: Vec<Integer> = (0..=n).map(|i| det.coeff(i)).collect();
    rescale_charpoly(&coeffs, &scale)
}

/// Builds `∏ (x - λ)` over the given roots.
pub fn poly_from_roots(roots: &[Rational]) -> RatPoly {
    roots
        .iter()
        .fold(RatPoly::one(), |acc, r| &acc * &RatPoly::linear(r.clone()))
}

/// All rational roots with multiplicity.
///
/// A rational root `r` of the primitive squarefree part with leading
/// coefficient `L` has `L·r ∈ Z`. Real roots are isolated with a Sturm
/// sequence and bisected until each isolating interval is narrower than
/// `1/L`, leaving at most one candidate per interval.
pub fn rational_roots(f: &RatPoly) -> RationalSpectrum {
    assert!(!f.is_zero(), "rational roots of the zero polynomial");
    let deg = f.degree().unwrap();
    let sqfree = f.squarefree_part();
    let (prim, _) = sqfree.primitive_integer_form();
    let lead = Rational::from_integer(prim.leading().unwrap().abs());
    let p = prim.to_rational();
    let sturm = sturm_sequence(&p);

    let bound = cauchy_bound(&p) + Rational::one();
    let mut found = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&sturm, &lo) - sign_changes(&sturm, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && (&hi - &lo) * &lead < Rational::one() {
            // integers m with L·lo < m <= L·hi
            let m = (&hi * &lead).floor();
            if m > &lo * &lead {
                let cand = m / &lead;
                if p.eval(&cand).is_zero() {
                    found.push(cand);
                }
            }
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        // push the right half first so roots pop in increasing order
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }

    let roots: Vec<(Rational, usize)> = found
        .into_iter()
        .map(|r| {
            let lin = RatPoly::linear(r.clone());
            let mut rest = f.clone();
            let mut mult = 0;
            while let Some(q) = rest.exact_div_monic(&lin) {
                rest = q;
                mult += 1;
            }
            (r, mult)
        })
        .collect();
    let total: usize = roots.iter().map(|(_, m)| m).sum();
    RationalSpectrum { roots, complete: total == deg }
}

fn cauchy_bound(p: &RatPoly) -> Rational {
    let lead = p.leading().unwrap().abs();
    let max = p
        .coeffs()
        .iter()
        .rev()
        .skip(1)
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + max
}

fn sturm_sequence(p: &RatPoly) -> Vec<RatPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        seq.push(-&r);
    }
    seq.pop();
    seq
}

fn sign_changes(seq: &[RatPoly], x: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Polynomial evaluation at a square matrix, exact.
pub fn evaluate_at_matrix(p: &RatPoly, m: &RationalMatrix) -> RationalMatrix {
    Matrix::eval_poly(m, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn rat_matrix(rows: &[&[(i64, i64)]]) -> RationalMatrix {
        RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&(n, d)| q(n, d)).collect()).collect())
    }

    #[test]
    fn identity_and_swap() {
        let id = RationalMatrix::identity(3);
        assert_eq!(minimal_polynomial(&id).monic, RatPoly::from_ints(&[-1, 1]));
        let swap = RationalMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let mp = minimal_polynomial(&swap);
        assert_eq!(mp.monic, RatPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(mp.distinct_eigenvalue_count, 2);
    }

    #[test]
    fn nilpotent_jordan_block() {
        let j = RationalMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let mp = minimal_polynomial(&j);
        assert_eq!(mp.monic, RatPoly::from_ints(&[0, 0, 0, 1]));
        assert_eq!(mp.distinct_eigenvalue_count, 1);
    }

    #[test]
    fn k3_transition_matrix() {
        let h = (1, 2);
        let z = (0, 1);
        let t = rat_matrix(&[&[z, h, h], &[h, z, h], &[h, h, z]]);
        let mp = minimal_polynomial(&t);
        assert_eq!(mp.monic, RatPoly::new(vec![q(-1, 2), q(-1, 2), q(1, 1)]));
        assert_eq!(mp.primitive, IntPoly::from_ints(&[-1, -1, 2]));
        assert_eq!(mp.leading_coefficient, Integer::from(2));
        assert_eq!(mp.distinct_eigenvalue_count, 2);
        let cp = characteristic_polynomial(&t);
        assert_eq!(cp, charpoly_bareiss(&t));
        assert!(mp.monic.divides(&cp));
    }

    #[test]
    fn one_by_one() {
        let m = rat_matrix(&[&[(3, 7)]]);
        assert_eq!(characteristic_polynomial(&m), RatPoly::linear(q(3, 7)));
        assert_eq!(charpoly_bareiss(&m), RatPoly::linear(q(3, 7)));
    }

    #[test]
    fn roots_of_simple_polys() {
        let s = rational_roots(&RatPoly::from_ints(&[0, -1, 0, 1]));
        assert_eq!(s.distinct(), vec![q(-1, 1), q(0, 1), q(1, 1)]);
        assert!(s.complete);

        let s = rational_roots(&RatPoly::new(vec![q(-1, 2), q(0, 1), q(1, 1)]));
        assert!(s.roots.is_empty());
        assert!(!s.complete);

        // (x - 1/2)^2 (x + 2/3) (x^2 + 1)
        let f = &poly_from_roots(&[q(1, 2), q(1, 2), q(-2, 3)]) * &RatPoly::from_ints(&[1, 0, 1]);
        let s = rational_roots(&f);
        assert_eq!(s.roots, vec![(q(-2, 3), 1), (q(1, 2), 2)]);
        assert!(!s.complete);
    }

    #[test]
    fn close_roots_are_separated() {
        let f = poly_from_roots(&[q(1, 1000), q(1, 1001), q(-7, 3), q(5, 1)]);
        let s = rational_roots(&f);
        assert_eq!(s.distinct(), vec![q(-7, 3), q(1, 1001), q(1, 1000), q(5, 1)]);
        assert!(s.complete);
    }
}
