//! Left-invariant orthonormal frames on Lie groups: structure equations,
//! the Levi-Civita connection by the Koszul formula, and its spin lift.

use alloc::vec::Vec;

use crate::clifford::{GammaBasis, Spinor};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::structure::SpinorDirection;
use crate::torsion::SpinorJet;

/// How `de^k` is read off the bracket.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BracketConvention {
    /// `dβ(e_i,e_j) = β([e_j,e_i])`.
    #[default]
    Reversed,
    /// `dβ(e_i,e_j) = β([e_i,e_j])`.
    Direct,
}

/// Structure constants `[e_i,e_j] = Σ c_{ij}^k e_k` of an orthonormal frame.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebraSpec<T> {
    dim: usize,
    c: Vec<T>,
}

impl<T: Scalar> LieAlgebraSpec<T> {
    pub fn abelian(dim: usize) -> Result<Self> {
        GammaBasis::new(dim)?;
        Ok(Self {
            dim,
            c: alloc::vec![T::zero(); dim * dim * dim],
        })
    }

    /// From `(k, a, b, v)` entries meaning `de^k ∋ v·e^{ab}`, all indices 1-based.
    /// Validates antisymmetry of the input and the Jacobi identity.
    pub fn from_differentials(
        dim: usize,
        terms: impl IntoIterator<Item = (usize, usize, usize, T)>,
        convention: BracketConvention,
    ) -> Result<Self> {
        let mut spec = Self::abelian(dim)?;
        for (k, a, b, v) in terms {
            for idx in [k, a, b] {
                if idx == 0 || idx > dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if a == b {
                return Err(Error::Invalid(alloc::format!(
                    "de{k} has a repeated index e{a}{a}"
                )));
            }
            // Reversed: de^k(e_a,e_b) = v is the e_k-coefficient of [e_b,e_a]
            let (i, j) = match convention {
                BracketConvention::Reversed => (b - 1, a - 1),
                BracketConvention::Direct => (a - 1, b - 1),
            };
            let k = k - 1;
            let idx = spec.index(i, j, k);
            spec.c[idx] = spec.c[idx].clone() + v.clone();
            let idx = spec.index(j, i, k);
            spec.c[idx] = spec.c[idx].clone() - v;
        }
        spec.check_jacobi()?;
        Ok(spec)
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c_{ij}^k`, 0-based.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &T {
        &self.c[self.index(i, j, k)]
    }

    pub fn bracket(&self, i: usize, j: usize) -> Vec<T> {
        (0..self.dim)
            .map(|k| self.constant(i, j, k).clone())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(|v| v.is_zero())
    }

    /// `[[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] = 0`, equivalent to `d² = 0`.
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        let nested = |i: usize, j: usize, l: usize, m: usize| {
            (0..n).fold(T::zero(), |acc, p| {
                acc + self.constant(i, j, p).clone() * self.constant(p, l, m).clone()
            })
        };
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    for m in 0..n {
                        let s = nested(i, j, l, m) + nested(j, l, i, m) + nested(l, i, j, m);
                        if !s.is_near_zero() {
                            return Err(Error::Jacobi);
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// `Γ_{ijk} = g(∇_{e_i}e_j, e_k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionCoefficients<T> {
    dim: usize,
    gamma: Vec<T>,
}

impl<T: Scalar> ConnectionCoefficients<T> {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.gamma[(i * self.dim + j) * self.dim + k]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(|v| v.is_zero())
    }
}

/// Levi-Civita connection of the left-invariant metric making the frame
/// orthonormal: `Γ_{ijk} = ½(c_{ijk} − c_{jki} + c_{kij})`.
///
/// Metric compatibility and vanishing torsion are both asserted.
pub fn koszul<T: Scalar>(spec: &LieAlgebraSpec<T>) -> Result<ConnectionCoefficients<T>> {
    let n = spec.dim();
    let half = T::ratio(1, 2);
    let c = |i, j, k| spec.constant(i, j, k).clone();
    let mut gamma = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                gamma.push(half.clone() * (c(i, j, k) - c(j, k, i) + c(k, i, j)));
            }
        }
    }
    let out = ConnectionCoefficients { dim: n, gamma };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !(out.get(i, j, k).clone() + out.get(i, k, j).clone()).is_near_zero() {
                    return Err(Error::Consistency("Koszul connection is not metric".into()));
                }
                if !(out.get(i, j, k).clone() - out.get(j, i, k).clone() - c(i, j, k))
                    .is_near_zero()
                {
                    return Err(Error::Consistency("Koszul connection has torsion".into()));
                }
            }
        }
    }
    Ok(out)
}

/// The jet of a frame-constant spinor: `∇_{e_i}φ = ½ Σ_{j<k} Γ_{ijk} e_j e_k φ`.
pub fn spin_lift_jet<T: Scalar>(
    spec: &LieAlgebraSpec<T>,
    phi: SpinorDirection<T>,
) -> Result<SpinorJet<T>> {
    let coefficients = koszul(spec)?;
    let n = spec.dim();
    let gamma = GammaBasis::new(n)?;
    let half = T::ratio(1, 2);
    let p = phi.spinor().clone();
    let dphi = (0..n)
        .map(|i| {
            let mut acc = Spinor::zero();
            for j in 0..n {
                for k in j + 1..n {
                    let g = coefficients.get(i, j, k);
                    if !g.is_zero() {
                        acc = &acc
                            + &gamma
                                .e(j, &gamma.e(k, &p))
                                .scale(&(half.clone() * g.clone()));
                    }
                }
            }
            acc
        })
        .collect();
    SpinorJet::from_direction(n, phi, dphi)
}
