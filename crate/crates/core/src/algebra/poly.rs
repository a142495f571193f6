//! Dense univariate polynomials over an exact scalar ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Field, Scalar};
use crate::{IntPoly, RatPoly, Rational};

/// A polynomial stored as `coeffs[i]` = coefficient of `x^i`.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// an empty coefficient vector and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^n`.
    pub fn monomial(c: T, n: usize) -> Self {
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = c;
        Poly::new(coeffs)
    }

    /// The linear polynomial `x - root`.
    pub fn linear(root: T) -> Self {
        Poly::new(vec![-root, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_int(i as i64))
                .collect(),
        )
    }

    /// Multiply by `x^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(x) = c_0 + c_1 x + ...`  becomes `c_0 + c_1 s x + c_2 s^2 x^2 + ...`.
    pub fn substitute_scaled(&self, s: &T) -> Self {
        let mut pw = T::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.clone() * pw.clone());
            pw = pw * s.clone();
        }
        Poly::new(out)
    }

    /// Applies `f` to every coefficient.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Division by a monic polynomial; returns `(quotient, remainder)`.
    ///
    /// Works over any ring because no coefficient inversion is needed.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd].clone();
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - q.clone() * d.clone();
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient by a monic polynomial, `None` if the remainder is nonzero.
    pub fn exact_div_monic(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_monic(divisor);
        r.is_zero().then_some(q)
    }

    /// Palindromic: coefficient of `x^(n-j)` equals coefficient of `x^j`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|j| self.coeffs[j] == self.coeffs[n - 1 - j])
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let needs_parens = mag.contains('/');
            let body = if i > 0 && mag == "1" {
                String::new()
            } else if i > 0 && needs_parens {
                format!("({mag})")
            } else {
                mag
            };
            out.push_str(&body);
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl<T: Field> Poly<T> {
    /// Scales to leading coefficient one. The zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => {
                let inv = T::one() / l.clone();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let monic = divisor.scale(&(T::one() / lead.clone()));
        let (q, r) = self.div_rem_monic(&monic);
        (q.scale(&(T::one() / lead)), r)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        let (q, _) = self.div_rem(&g);
        (&q * other).monic()
    }

    /// The monic squarefree part `f / gcd(f, f')`.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }
}

impl IntPoly {
    /// Greatest common divisor of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Content divided out, sign normalized so the leading coefficient is positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        Poly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| Rational::from_integer(c.clone()))
    }
}

impl RatPoly {
    /// The primitive integer polynomial with the same roots, and the positive
    /// rational factor `s` with `self = s * primitive`.
    pub fn primitive_integer_form(&self) -> (IntPoly, Rational) {
        if self.is_zero() {
            return (Poly::zero(), Rational::one());
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints = IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
                .collect(),
        );
        let prim = ints.primitive();
        let factor = self.leading().unwrap().clone()
            / Rational::from_integer(prim.leading().unwrap().clone());
        (prim, factor)
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn normalizes_trailing_zeros() {
        let p = IntPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPoly::from_ints(&[0, 0]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn monic_division_is_exact_on_products() {
        let a = IntPoly::from_ints(&[-1, 1]);
        let b = IntPoly::from_ints(&[1, 1, 1]);
        let prod = &a * &b;
        assert_eq!(prod, IntPoly::from_ints(&[-1, 0, 0, 1]));
        assert_eq!(prod.exact_div_monic(&b), Some(a.clone()));
        assert_eq!(IntPoly::from_ints(&[2, 0, 1]).exact_div_monic(&a), None);
    }

    #[test]
    fn gcd_and_lcm_over_rationals() {
        let x = RatPoly::from_ints(&[0, 1]);
        let xm1 = RatPoly::from_ints(&[-1, 1]);
        let a = &x * &xm1;
        let b = xm1.scale(&q(3, 2));
        assert_eq!(a.gcd(&b), xm1);
        assert_eq!(a.lcm(&b), a);
        let sq = &xm1 * &xm1;
        assert_eq!(sq.squarefree_part(), xm1);
        assert!(!sq.is_squarefree());
    }

    #[test]
    fn primitive_integer_form_keeps_roots() {
        let p = RatPoly::new(vec![q(-1, 4), q(1, 2), q(1, 1)]);
        let (prim, s) = p.primitive_integer_form();
        assert_eq!(prim, IntPoly::from_ints(&[-1, 2, 4]));
        assert_eq!(s, q(1, 4));
        assert_eq!(prim.to_rational().scale(&s), p);
    }

    #[test]
    fn generic_over_machine_rationals() {
        let p: Poly<Rational64> = Poly::from_ints(&[-1, 0, 1]);
        let r: Poly<Rational64> = Poly::from_ints(&[1, 1]);
        assert_eq!(p.div_rem(&r), (Poly::from_ints(&[-1, 1]), Poly::zero()));
        assert_eq!(p.eval(&Rational64::new(1, 2)), Rational64::new(-3, 4));
    }

    #[test]
    fn display_is_readable() {
        let p = RatPoly::new(vec![q(-1, 2), q(-1, 2), q(0, 1), q(1, 1)]);
        assert_eq!(p.display_with("x"), "x^3 - (1/2)x - 1/2");
        assert_eq!(IntPoly::from_ints(&[1, 0, -1, 0, -1, 0, 1]).display_with("z"), "z^6 - z^4 - z^2 + 1");
    }
}
