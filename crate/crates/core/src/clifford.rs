//! Real Clifford algebras Cl(6) and Cl(7) acting on Δ = ℝ⁸.
//!
//! The generators are fixed signed permutation matrices built from
//! `E_ij : e_i ↦ e_j, e_j ↦ −e_i`. The six-dimensional algebra uses the first
//! six generators of the seven-dimensional list.

use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::forms::AltForm;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub const SPINOR_DIM: usize = 8;

/// `(i, j, sign)` terms of each generator, 1-based.
const GENERATOR_TERMS: [[(usize, usize, i8); 4]; 7] = [
    [(1, 8, 1), (2, 7, 1), (3, 6, -1), (4, 5, -1)],
    [(1, 7, -1), (2, 8, 1), (3, 5, 1), (4, 6, -1)],
    [(1, 6, -1), (2, 5, 1), (3, 8, -1), (4, 7, 1)],
    [(1, 5, -1), (2, 6, -1), (3, 7, -1), (4, 8, -1)],
    [(1, 3, -1), (2, 4, -1), (5, 7, 1), (6, 8, 1)],
    [(1, 4, 1), (2, 3, -1), (5, 8, -1), (6, 7, 1)],
    [(1, 2, 1), (3, 4, -1), (5, 6, -1), (7, 8, 1)],
];

/// An element of Δ in the basis `u₁..u₈`.
#[derive(Clone, Debug, PartialEq)]
pub struct Spinor<T>(pub [T; SPINOR_DIM]);

impl<T: Scalar> Spinor<T> {
    pub fn zero() -> Self {
        Self(core::array::from_fn(|_| T::zero()))
    }

    /// The basis spinor `u_k`, 1-based.
    pub fn basis(k: usize) -> Self {
        assert!(
            (1..=SPINOR_DIM).contains(&k),
            "spinor basis index out of range"
        );
        Self(core::array::from_fn(|i| {
            if i + 1 == k {
                T::one()
            } else {
                T::zero()
            }
        }))
    }

    pub fn from_i64(v: [i64; SPINOR_DIM]) -> Self {
        Self(v.map(T::from_i64))
    }

    pub fn from_slice(v: &[T]) -> Result<Self> {
        if v.len() != SPINOR_DIM {
            return Err(Error::Dimension {
                expected: SPINOR_DIM,
                found: v.len(),
            });
        }
        Ok(Self(core::array::from_fn(|i| v[i].clone())))
    }

    pub fn coeffs(&self) -> &[T; SPINOR_DIM] {
        &self.0
    }

    pub fn dot(&self, other: &Self) -> T {
        crate::scalar::dot(&self.0, &other.0)
    }

    pub fn norm_sq(&self) -> T {
        self.dot(self)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self(core::array::from_fn(|i| self.0[i].clone() * s.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_near_zero)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a.approx_eq(b))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Spinor<U> {
        Spinor(core::array::from_fn(|i| f(&self.0[i])))
    }
}

impl<T: Scalar> Add for &Spinor<T> {
    type Output = Spinor<T>;
    fn add(self, rhs: Self) -> Spinor<T> {
        Spinor(core::array::from_fn(|i| {
            self.0[i].clone() + rhs.0[i].clone()
        }))
    }
}

impl<T: Scalar> Sub for &Spinor<T> {
    type Output = Spinor<T>;
    fn sub(self, rhs: Self) -> Spinor<T> {
        Spinor(core::array::from_fn(|i| {
            self.0[i].clone() - rhs.0[i].clone()
        }))
    }
}

impl<T: Scalar> Neg for &Spinor<T> {
    type Output = Spinor<T>;
    fn neg(self) -> Spinor<T> {
        Spinor(core::array::from_fn(|i| -self.0[i].clone()))
    }
}

/// A signed permutation: `(P u)[r] = sign[r] · u[src[r]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct SignedPerm {
    src: [u8; SPINOR_DIM],
    sign: [i8; SPINOR_DIM],
}

impl SignedPerm {
    fn generator(k: usize) -> Self {
        let mut src = [0u8; SPINOR_DIM];
        let mut sign = [0i8; SPINOR_DIM];
        for &(i, j, c) in &GENERATOR_TERMS[k] {
            // column i carries +c at row j; column j carries −c at row i
            src[j - 1] = (i - 1) as u8;
            sign[j - 1] = c;
            src[i - 1] = (j - 1) as u8;
            sign[i - 1] = -c;
        }
        debug_assert!(sign.iter().all(|&s| s != 0));
        Self { src, sign }
    }

    fn apply<T: Scalar>(&self, u: &Spinor<T>) -> Spinor<T> {
        Spinor(core::array::from_fn(|r| {
            let v = u.0[self.src[r] as usize].clone();
            if self.sign[r] > 0 {
                v
            } else {
                -v
            }
        }))
    }

    fn to_matrix<T: Scalar>(self) -> Matrix<T> {
        Matrix::from_fn(SPINOR_DIM, SPINOR_DIM, |r, c| {
            if self.src[r] as usize == c {
                T::from_i64(self.sign[r] as i64)
            } else {
                T::zero()
            }
        })
    }
}

/// The generators `e₁..e_dim` of Cl(dim) acting on Δ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaBasis {
    dim: usize,
    gens: [SignedPerm; 7],
}

impl GammaBasis {
    pub fn new(dim: usize) -> Result<Self> {
        if dim != 6 && dim != 7 {
            return Err(Error::UnsupportedDimension(dim));
        }
        Ok(Self {
            dim,
            gens: core::array::from_fn(SignedPerm::generator),
        })
    }

    pub fn six() -> Self {
        Self::new(6).expect("dimension 6 is supported")
    }

    pub fn seven() -> Self {
        Self::new(7).expect("dimension 7 is supported")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.dim).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                dim: self.dim,
            })
        }
    }

    /// The matrix of `e_i`, 1-based.
    pub fn matrix<T: Scalar>(&self, i: usize) -> Result<Matrix<T>> {
        self.check_index(i)?;
        Ok(self.gens[i - 1].to_matrix())
    }

    /// `e_i · φ`, 1-based.
    pub fn basis_apply<T: Scalar>(&self, i: usize, phi: &Spinor<T>) -> Result<Spinor<T>> {
        self.check_index(i)?;
        Ok(self.gens[i - 1].apply(phi))
    }

    /// `e_i · φ` for a 0-based index known to be in range.
    pub(crate) fn e<T: Scalar>(&self, i: usize, phi: &Spinor<T>) -> Spinor<T> {
        debug_assert!(i < self.dim);
        self.gens[i].apply(phi)
    }

    /// Ordered product `e_{i₁} ⋯ e_{i_k} · φ` for 1-based indices.
    pub fn product_apply<T: Scalar>(&self, idx: &[usize], phi: &Spinor<T>) -> Result<Spinor<T>> {
        for &i in idx {
            self.check_index(i)?;
        }
        Ok(idx
            .iter()
            .rev()
            .fold(phi.clone(), |acc, &i| self.gens[i - 1].apply(&acc)))
    }

    /// Clifford action of a vector given in the frame `e₁..e_dim`.
    pub fn vector_apply<T: Scalar>(&self, x: &[T], phi: &Spinor<T>) -> Result<Spinor<T>> {
        if x.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: x.len(),
            });
        }
        let mut out = Spinor::zero();
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.gens[i].apply(phi).scale(c);
            }
        }
        Ok(out)
    }

    /// Clifford action of a form: each index tuple acts as the ordered gamma product.
    pub fn form_apply<T: Scalar>(&self, form: &AltForm<T>, phi: &Spinor<T>) -> Result<Spinor<T>> {
        if form.dim() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: form.dim(),
            });
        }
        let mut out = Spinor::zero();
        for (idx, c) in form.terms() {
            let v = idx
                .iter()
                .rev()
                .fold(phi.clone(), |acc, &i| self.gens[i - 1].apply(&acc));
            out = &out + &v.scale(c);
        }
        Ok(out)
    }

    /// Clifford volume element `e₁ ⋯ e_dim · φ`.
    pub fn volume_apply<T: Scalar>(&self, phi: &Spinor<T>) -> Spinor<T> {
        (0..self.dim)
            .rev()
            .fold(phi.clone(), |acc, i| self.gens[i].apply(&acc))
    }

    /// The spinors `e₁φ, …, e_dim φ`.
    pub fn frame_images<T: Scalar>(&self, phi: &Spinor<T>) -> Vec<Spinor<T>> {
        (0..self.dim).map(|i| self.e(i, phi)).collect()
    }
}

/// The complex structure `j = e₁e₂e₃e₄e₅e₆` on Δ.
pub fn j<T: Scalar>(phi: &Spinor<T>) -> Spinor<T> {
    GammaBasis::six().volume_apply(phi)
}

/// Orthogonal projectors of the splitting of Δ induced by a unit spinor.
///
/// Dimension 6: `ℝφ ⊕ ℝjφ ⊕ {Xφ}`. Dimension 7: `ℝφ ⊕ {Xφ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorSplit<T> {
    pub line: Matrix<T>,
    pub j_line: Option<Matrix<T>>,
    pub vectors: Matrix<T>,
}

impl<T: Scalar> SpinorSplit<T> {
    pub fn projectors(&self) -> Vec<&Matrix<T>> {
        let mut v = alloc::vec![&self.line];
        v.extend(self.j_line.as_ref());
        v.push(&self.vectors);
        v
    }

    /// Images of `v` under each projector, in the order of [`Self::projectors`].
    pub fn project(&self, v: &Spinor<T>) -> Vec<Spinor<T>> {
        self.projectors()
            .into_iter()
            .map(|p| Spinor::from_slice(&p.apply(&v.0)).expect("projector is 8×8"))
            .collect()
    }
}

fn outer<T: Scalar>(a: &Spinor<T>, b: &Spinor<T>) -> Matrix<T> {
    Matrix::from_fn(SPINOR_DIM, SPINOR_DIM, |r, c| {
        a.0[r].clone() * b.0[c].clone()
    })
}

/// Projectors of the splitting of Δ for a unit `φ`.
pub fn spinor_basis_split<T: Scalar>(phi: &Spinor<T>, dim: usize) -> Result<SpinorSplit<T>> {
    if !phi.norm_sq().approx_eq(&T::one()) {
        return Err(Error::NonUnitSpinor);
    }
    let basis = GammaBasis::new(dim)?;
    let line = outer(phi, phi);
    let j_line = (dim == 6).then(|| {
        let jp = j(phi);
        outer(&jp, &jp)
    });
    let mut vectors = Matrix::zeros(SPINOR_DIM, SPINOR_DIM);
    for x in basis.frame_images(phi) {
        vectors = &vectors + &outer(&x, &x);
    }
    Ok(SpinorSplit {
        line,
        j_line,
        vectors,
    })
}
