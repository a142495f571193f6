//! Dense and row-sparse matrices over an exact scalar ring.

use std::ops::{Index, IndexMut, Mul};

use num_integer::Integer as _;
use num_traits::One;

use crate::scalar::Scalar;
use crate::{IntMatrix, Integer, Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|v| v.clone() * c.clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.rows)
            .map(|i| self.row(i).iter().fold(T::zero(), |a, v| a + v.clone()))
            .collect()
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(T::zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc + a.clone() * b.clone()
                    }
                })
            })
            .collect()
    }

    /// Exponentiation by squaring.
    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
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

    /// Evaluates a polynomial at this (square) matrix by Horner's rule.
    pub fn eval_poly(&self, p: &crate::Poly<T>) -> Self {
        let n = self.rows;
        p.coeffs().iter().rev().fold(Matrix::zeros(n, n), |acc, c| {
            let mut next = &acc * self;
            for i in 0..n {
                next[(i, i)] = next[(i, i)].clone() + c.clone();
            }
            next
        })
    }

    pub fn to_sparse(&self) -> SparseMatrix<T> {
        SparseMatrix {
            cols: self.cols,
            rows: (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(j, v)| (j, v.clone()))
                        .collect()
                })
                .collect(),
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in rhs.row(k).iter().enumerate() {
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

/// Row-compressed matrix: each row holds its nonzero `(column, value)` pairs
/// in increasing column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    cols: usize,
    rows: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn from_rows(cols: usize, mut rows: Vec<Vec<(usize, T)>>) -> Self {
        for row in &mut rows {
            row.retain(|(j, v)| {
                assert!(*j < cols, "column out of range");
                !v.is_zero()
            });
            row.sort_by_key(|(j, _)| *j);
        }
        SparseMatrix { cols, rows }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.rows[i]
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        self.rows
            .iter()
            .map(|row| {
                row.iter().fold(T::zero(), |acc, (j, a)| {
                    if v[*j].is_zero() {
                        acc
                    } else {
                        acc + a.clone() * v[*j].clone()
                    }
                })
            })
            .collect()
    }

    /// `self * dense`.
    pub fn mul_dense(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows());
        let mut out: Matrix<T> = Matrix::zeros(self.rows.len(), rhs.cols());
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row {
                for (j, b) in rhs.row(*k).iter().enumerate() {
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.rows.len(), self.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                m[(i, *j)] = v.clone();
            }
        }
        m
    }
}

/// Writes a rational matrix as `N / scale` with `N` integral and `scale` the
/// least common denominator of the entries.
pub fn clear_denominators(m: &RationalMatrix) -> (IntMatrix, Integer) {
    let scale = m.data.iter().fold(Integer::one(), |l, v| l.lcm(v.denom()));
    let s = Rational::from_integer(scale.clone());
    (m.map(|v| (v * &s).to_integer()), scale)
}

/// Sparse variant of [`clear_denominators`].
pub fn clear_denominators_sparse(m: &SparseMatrix<Rational>) -> (SparseMatrix<Integer>, Integer) {
    let scale = m
        .rows
        .iter()
        .flatten()
        .fold(Integer::one(), |l, (_, v)| l.lcm(v.denom()));
    let s = Rational::from_integer(scale.clone());
    let rows = m
        .rows
        .iter()
        .map(|row| row.iter().map(|(j, v)| (*j, (v * &s).to_integer())).collect())
        .collect();
    (SparseMatrix { cols: m.cols, rows }, scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_power() {
        let swap = IntMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert!(swap.pow(2).is_identity());
        assert!(!swap.pow(3).is_identity());
        let a = IntMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(&a * &a, IntMatrix::from_int_rows(&[&[7, 10], &[15, 22]]));
        assert_eq!(a.trace(), 5.into());
        assert_eq!(a.to_sparse().mul_dense(&a), &a * &a);
        assert_eq!(a.to_sparse().to_dense(), a);
    }

    #[test]
    fn clears_denominators() {
        let m = RationalMatrix::from_rows(vec![
            vec![Rational::new(1.into(), 2.into()), Rational::new(1.into(), 3.into())],
            vec![Rational::from_integer(1.into()), Rational::from_integer(0.into())],
        ]);
        let (n, s) = clear_denominators(&m);
        assert_eq!(s, 6.into());
        assert_eq!(n, IntMatrix::from_int_rows(&[&[3, 2], &[6, 0]]));
        let (ns, s2) = clear_denominators_sparse(&m.to_sparse());
        assert_eq!(s2, s);
        assert_eq!(ns.to_dense(), n);
    }
}
