//! Exact polynomial algebra: dense polynomials, cyclotomic polynomials and
//! the Zhukovskij substitution.

pub mod cyclotomic;
pub mod poly;

use num_traits::One;

use crate::scalar::Scalar;
use crate::{IntPoly, Poly, RatPoly};

/// `(2z)^i * f((z + 1/z) / 2)` for `f` of degree `i`, expanded exactly.
///
/// For monic `f` the result is monic of degree `2i` and palindromic. The
/// roots of `f` are real parts of roots of unity exactly when the result is
/// a product of cyclotomic polynomials.
pub fn zhukovskij<T: Scalar>(f: &Poly<T>) -> Poly<T> {
    let Some(deg) = f.degree() else {
        return Poly::zero();
    };
    let two = T::from_int(2);
    let mut out = vec![T::zero(); 2 * deg + 1];
    let mut pow2 = vec![T::one(); deg + 1];
    for e in 1..=deg {
        pow2[e] = pow2[e - 1].clone() * two.clone();
    }
    for (i, rho) in f.coeffs().iter().enumerate() {
        if rho.is_zero() {
            continue;
        }
        // rho_i 2^{deg-i} z^{deg-i} (1 + z^2)^i
        let base = rho.clone() * pow2[deg - i].clone();
        let mut binom = T::one();
        for r in 0..=i {
            let idx = deg - i + 2 * r;
            out[idx] = out[idx].clone() + base.clone() * binom.clone();
            binom = binom * T::from_int((i - r) as i64) / T::from_int((r + 1) as i64);
        }
    }
    Poly::new(out)
}

/// The same polynomial over the integers, if every coefficient is integral.
pub fn try_to_int_poly(f: &RatPoly) -> Option<IntPoly> {
    f.coeffs()
        .iter()
        .map(|c| c.denom().is_one().then(|| c.numer().clone()))
        .collect::<Option<Vec<_>>>()
        .map(Poly::new)
}
