//! Sparse alternating forms on ℝⁿ.
//!
//! Keys are strictly increasing 1-based index tuples. Zero coefficients are never
//! stored, so two forms are equal iff their maps are equal.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct AltForm<T> {
    degree: usize,
    dim: usize,
    coeffs: BTreeMap<Vec<usize>, T>,
}

/// Sorts `idx` in place and returns the permutation sign, or `None` on a repeat.
pub(crate) fn sort_with_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for a in 1..idx.len() {
        let mut b = a;
        while b > 0 && idx[b - 1] > idx[b] {
            idx.swap(b - 1, b);
            sign = -sign;
            b -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// All strictly increasing `k`-tuples from `0..n`.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Determinant of a small square matrix given by rows (Laplace expansion).
fn det<T: Scalar>(m: &[Vec<T>]) -> T {
    match m.len() {
        0 => T::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = T::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<T>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != c)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][c].clone() * det(&minor);
                acc = if c % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

impl<T: Scalar> AltForm<T> {
    pub fn zero(degree: usize, dim: usize) -> Self {
        Self {
            degree,
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, c: T) -> Self {
        let mut f = Self::zero(0, dim);
        f.add_term(&[], c).expect("empty tuple is valid");
        f
    }

    /// The basis form `e_{i₁…i_k}` for 1-based indices in any order (sign applied).
    pub fn basis(dim: usize, idx: &[usize]) -> Self {
        let mut f = Self::zero(idx.len(), dim);
        f.add_term(idx, T::one()).expect("valid basis tuple");
        f
    }

    /// Builds a form from its values on increasing 0-based tuples.
    pub fn from_fn(degree: usize, dim: usize, mut f: impl FnMut(&[usize]) -> T) -> Self {
        let mut out = Self::zero(degree, dim);
        for idx in combinations(dim, degree) {
            let v = f(&idx);
            if !v.is_zero() {
                out.coeffs.insert(idx.iter().map(|i| i + 1).collect(), v);
            }
        }
        out
    }

    /// Builds a form from a multilinear function on basis vectors, verifying full
    /// antisymmetry on every ordered tuple of 0-based indices.
    pub fn from_tensor_checked(
        degree: usize,
        dim: usize,
        mut f: impl FnMut(&[usize]) -> T,
    ) -> Result<Self> {
        let form = Self::from_fn(degree, dim, &mut f);
        let mut idx = alloc::vec![0usize; degree];
        let total = dim.pow(degree as u32);
        for mut code in 0..total {
            for slot in idx.iter_mut().rev() {
                *slot = code % dim;
                code /= dim;
            }
            if !f(&idx).approx_eq(&form.on_basis(&idx)) {
                return Err(Error::NotAntisymmetric);
            }
        }
        Ok(form)
    }

    /// Adds `c · e_idx` for 1-based indices in any order.
    pub fn add_term(&mut self, idx: &[usize], c: T) -> Result<()> {
        if idx.len() != self.degree {
            return Err(Error::Degree {
                expected: self.degree,
                found: idx.len(),
            });
        }
        if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > self.dim) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                dim: self.dim,
            });
        }
        let mut key = idx.to_vec();
        let Some(sign) = sort_with_sign(&mut key) else {
            return Ok(());
        };
        let c = if sign < 0 { -c } else { c };
        let v = self.coeffs.remove(&key).unwrap_or_else(T::zero) + c;
        if !v.is_zero() {
            self.coeffs.insert(key, v);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero terms keyed by increasing 1-based tuples.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &T)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of an increasing 1-based tuple.
    pub fn coeff(&self, idx: &[usize]) -> T {
        self.coeffs.get(idx).cloned().unwrap_or_else(T::zero)
    }

    /// Value on basis vectors given by 0-based indices in any order.
    pub fn on_basis(&self, idx: &[usize]) -> T {
        debug_assert_eq!(idx.len(), self.degree);
        let mut key: Vec<usize> = idx.iter().map(|i| i + 1).collect();
        match sort_with_sign(&mut key) {
            None => T::zero(),
            Some(s) => {
                let c = self.coeff(&key);
                if s < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// Value on arbitrary vectors, by multilinear expansion.
    pub fn eval(&self, vectors: &[&[T]]) -> T {
        assert_eq!(vectors.len(), self.degree, "wrong number of arguments");
        assert!(
            vectors.iter().all(|v| v.len() == self.dim),
            "vector dimension mismatch"
        );
        let mut acc = T::zero();
        for (idx, c) in &self.coeffs {
            let m: Vec<Vec<T>> = vectors
                .iter()
                .map(|v| idx.iter().map(|&i| v[i - 1].clone()).collect())
                .collect();
            acc = acc + c.clone() * det(&m);
        }
        acc
    }

    /// Interior product `X ⌟ α`.
    pub fn interior(&self, x: &[T]) -> Self {
        assert_eq!(x.len(), self.dim);
        assert!(self.degree > 0, "interior product of a 0-form");
        let mut out = Self::zero(self.degree - 1, self.dim);
        for (idx, c) in &self.coeffs {
            for (m, &i) in idx.iter().enumerate() {
                let xi = &x[i - 1];
                if xi.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != m)
                    .map(|(_, &v)| v)
                    .collect();
                let v = c.clone() * xi.clone();
                let v = if m % 2 == 0 { v } else { -v };
                out.add_term(&rest, v).expect("sub-tuple is valid");
            }
        }
        out
    }

    /// Interior product with the basis vector `e_i` (0-based).
    pub fn interior_basis(&self, i: usize) -> Self {
        let x: Vec<T> = (0..self.dim)
            .map(|k| if k == i { T::one() } else { T::zero() })
            .collect();
        self.interior(&x)
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut out = Self::zero(self.degree + other.degree, self.dim);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let idx: Vec<usize> = a.iter().chain(b).copied().collect();
                out.add_term(&idx, ca.clone() * cb.clone())?;
            }
        }
        Ok(out)
    }

    /// Hodge star with volume form `orientation · e₁∧…∧e_n`, so that
    /// `α ∧ *α = |α|² · orientation · e₁∧…∧e_n`.
    pub fn hodge(&self, orientation: i8) -> Self {
        assert!(orientation == 1 || orientation == -1);
        let mut out = Self::zero(self.dim - self.degree, self.dim);
        for (idx, c) in &self.coeffs {
            let comp: Vec<usize> = (1..=self.dim).filter(|i| !idx.contains(i)).collect();
            let mut all: Vec<usize> = idx.iter().chain(&comp).copied().collect();
            let s = sort_with_sign(&mut all).expect("disjoint tuples") * orientation as i64;
            let v = if s < 0 { -c.clone() } else { c.clone() };
            out.add_term(&comp, v).expect("complement is valid");
        }
        out
    }

    /// Same coefficients viewed on a larger ambient space.
    pub fn extend_dim(&self, dim: usize) -> Self {
        assert!(dim >= self.dim);
        Self {
            degree: self.degree,
            dim,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero(self.degree, self.dim);
        }
        Self {
            degree: self.degree,
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> AltForm<U> {
        let mut out = AltForm::zero(self.degree, self.dim);
        for (k, v) in &self.coeffs {
            let u = f(v);
            if !u.is_zero() {
                out.coeffs.insert(k.clone(), u);
            }
        }
        out
    }

    /// Inner product with orthonormal basis `{e_I}` over increasing tuples.
    pub fn inner(&self, other: &Self) -> T {
        self.coeffs
            .iter()
            .filter_map(|(k, v)| other.coeffs.get(k).map(|w| v.clone() * w.clone()))
            .fold(T::zero(), |a, b| a + b)
    }

    pub fn norm_sq(&self) -> T {
        self.inner(self)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(Scalar::is_near_zero)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.dim == other.dim && (self - other).is_zero()
    }

    fn combine(&self, other: &Self, sign: T) -> Self {
        assert_eq!(
            (self.degree, self.dim),
            (other.degree, other.dim),
            "form shape mismatch"
        );
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k, v.clone() * sign.clone())
                .expect("same shape");
        }
        out
    }
}

impl<T: Scalar> Add for &AltForm<T> {
    type Output = AltForm<T>;
    fn add(self, rhs: Self) -> AltForm<T> {
        self.combine(rhs, T::one())
    }
}

impl<T: Scalar> Sub for &AltForm<T> {
    type Output = AltForm<T>;
    fn sub(self, rhs: Self) -> AltForm<T> {
        self.combine(rhs, -T::one())
    }
}

impl<T: Scalar> Neg for &AltForm<T> {
    type Output = AltForm<T>;
    fn neg(self) -> AltForm<T> {
        self.scale(&-T::one())
    }
}
