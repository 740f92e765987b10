//! Small dense matrices over a [`Scalar`] field.
//!
//! Convention: `m.get(k, i)` is component `k` of the image of `e_i`, so column
//! `i` holds `M(e_i)`.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{dot, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: alloc::vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds from row vectors. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged matrix rows");
        Self {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose `i`-th column is `cols[i]`.
    pub fn from_columns(cols: &[Vec<T>]) -> Self {
        let n = cols.first().map_or(0, Vec::len);
        Self::from_fn(n, cols.len(), |r, c| cols[c][r].clone())
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

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Frobenius inner product `tr(Aᵀ B)`.
    pub fn frobenius(&self, other: &Self) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        dot(&self.data, &other.data)
    }

    pub fn norm_sq(&self) -> T {
        self.frobenius(self)
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_near_zero)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.approx_eq(b))
    }

    pub fn symmetric_part(&self) -> Self {
        let half = T::ratio(1, 2);
        (self + &self.transpose()).scale(&half)
    }

    pub fn skew_part(&self) -> Self {
        let half = T::ratio(1, 2);
        (self - &self.transpose()).scale(&half)
    }

    pub fn is_symmetric(&self) -> bool {
        self.approx_eq(&self.transpose())
    }

    pub fn is_skew(&self) -> bool {
        self.approx_eq(&-&self.transpose())
    }

    /// Reduced row echelon form and the pivot columns.
    ///
    /// Floats pivot on the largest entry and treat magnitudes below
    /// `1e-12 · max|entry|` as zero.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let cutoff = if T::EXACT {
            0.0
        } else {
            1e-12
                * self
                    .data
                    .iter()
                    .map(|x| x.to_f64().abs())
                    .fold(0.0, f64::max)
        };
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let pivot = if T::EXACT {
                (r..m.rows).find(|&i| !m.get(i, c).is_zero())
            } else {
                (r..m.rows)
                    .filter(|&i| m.get(i, c).to_f64().abs() > cutoff)
                    .max_by(|&a, &b| {
                        m.get(a, c)
                            .to_f64()
                            .abs()
                            .total_cmp(&m.get(b, c).to_f64().abs())
                    })
            };
            let Some(p) = pivot else { continue };
            m.swap_rows(r, p);
            let inv = T::one() / m.get(r, c).clone();
            for k in 0..m.cols {
                let v = m.get(r, k).clone() * inv.clone();
                m.set(r, k, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for k in 0..m.cols {
                    let v = m.get(i, k).clone() - f.clone() * m.get(r, k).clone();
                    m.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{x : self · x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (red, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = alloc::vec![T::zero(); self.cols];
            v[free] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// `true` when `b` lies in the column span (exact, or up to tolerance for floats).
    pub fn spans(&self, b: &[T]) -> bool {
        let (x, _) = self.least_squares(b);
        self.apply(&x).iter().zip(b).all(|(f, y)| f.approx_eq(y))
    }

    /// Some solution of `self · x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = alloc::vec![T::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = red.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Least-squares solution via the normal equations, with its squared residual.
    pub fn least_squares(&self, b: &[T]) -> (Vec<T>, T) {
        let at = self.transpose();
        let gram = &at * self;
        let rhs = at.apply(b);
        let x = gram
            .solve(&rhs)
            .expect("normal equations are always consistent");
        let fitted = self.apply(&x);
        let res = fitted.iter().zip(b).fold(T::zero(), |acc, (f, y)| {
            acc + (y.clone() - f.clone()) * (y.clone() - f.clone())
        });
        (x, res)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Matrix::<T>::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = out.get(r, c).clone() + a.clone() * rhs.get(k, c).clone();
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};
    use proptest::prelude::*;

    fn small_matrix(n: usize, m: usize) -> impl Strategy<Value = Matrix<Rational>> {
        proptest::collection::vec(-4i64..=4, n * m)
            .prop_map(move |v| Matrix::from_fn(n, m, |r, c| rat(v[r * m + c], 1)))
    }

    #[test]
    fn rank_of_singular_matrix() {
        let m = Matrix::from_rows(alloc::vec![
            alloc::vec![rat(1, 1), rat(2, 1)],
            alloc::vec![rat(2, 1), rat(4, 1)],
        ]);
        assert_eq!(m.rank(), 1);
        assert!(m.solve(&[rat(1, 1), rat(3, 1)]).is_none());
        assert_eq!(
            m.solve(&[rat(1, 1), rat(2, 1)]).unwrap(),
            alloc::vec![rat(1, 1), rat(0, 1)]
        );
    }

    #[test]
    fn float_rank_ignores_roundoff() {
        let m = Matrix::from_rows(alloc::vec![
            alloc::vec![1.0, 1.0 / 3.0],
            alloc::vec![3.0, 1.0 + 1e-17],
        ]);
        assert_eq!(m.rank(), 1);
    }

    proptest! {
        #[test]
        fn solve_returns_true_solution(a in small_matrix(4, 3), x in proptest::collection::vec(-5i64..=5, 3)) {
            let x: Vec<Rational> = x.into_iter().map(|v| rat(v, 1)).collect();
            let b = a.apply(&x);
            let y = a.solve(&b).expect("consistent by construction");
            prop_assert_eq!(a.apply(&y), b);
        }

        #[test]
        fn symmetric_plus_skew_reconstructs(a in small_matrix(5, 5)) {
            let s = a.symmetric_part();
            let k = a.skew_part();
            prop_assert!(s.is_symmetric());
            prop_assert!(k.is_skew());
            prop_assert_eq!(&s + &k, a);
        }

        #[test]
        fn transpose_reverses_products(a in small_matrix(3, 4), b in small_matrix(4, 2)) {
            prop_assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
        }
    }
}
