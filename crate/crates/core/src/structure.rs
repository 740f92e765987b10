//! SU(3)- and G₂-structures induced by a spinor.
//!
//! All pairings with the defining spinor are divided by `|φ|²`, so a nonzero
//! rational direction defines the same structure as its unit normalization.

use alloc::vec::Vec;

use crate::clifford::{j, GammaBasis, Spinor};
use crate::error::{Error, Result};
use crate::forms::AltForm;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A nonzero spinor used up to positive scale.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorDirection<T> {
    phi: Spinor<T>,
    norm_sq: T,
}

impl<T: Scalar> SpinorDirection<T> {
    /// Accepts only spinors with `⟨φ,φ⟩ = 1`.
    pub fn unit(phi: Spinor<T>) -> Result<Self> {
        let norm_sq = phi.norm_sq();
        if !norm_sq.approx_eq(&T::one()) {
            return Err(Error::NonUnitSpinor);
        }
        Ok(Self { phi, norm_sq })
    }

    /// Accepts any nonzero spinor; it stands for `φ/|φ|`.
    pub fn new(phi: Spinor<T>) -> Result<Self> {
        let norm_sq = phi.norm_sq();
        if norm_sq.is_near_zero() {
            return Err(Error::ZeroSpinor);
        }
        Ok(Self { phi, norm_sq })
    }

    pub fn spinor(&self) -> &Spinor<T> {
        &self.phi
    }

    pub fn norm_sq(&self) -> &T {
        &self.norm_sq
    }

    /// `⟨a, b⟩ / |φ|²`: the pairing of the normalized spinor when `a`, `b` are
    /// linear in `φ`.
    pub fn pair(&self, a: &Spinor<T>, b: &Spinor<T>) -> T {
        a.dot(b) / self.norm_sq.clone()
    }
}

/// Circle action of the unit complex number `a + b·i` (acting as `a + b·j`).
pub fn circle_action<T: Scalar>(a: &T, b: &T, phi: &Spinor<T>) -> Spinor<T> {
    &phi.scale(a) + &j(phi).scale(b)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Su3Structure<T> {
    spinor: SpinorDirection<T>,
    j_matrix: Matrix<T>,
    omega: AltForm<T>,
    psi_plus: AltForm<T>,
    psi_minus: AltForm<T>,
}

/// Induces the SU(3)-structure of a unit spinor.
pub fn induce_su3<T: Scalar>(phi: &Spinor<T>) -> Result<Su3Structure<T>> {
    Su3Structure::from_direction(SpinorDirection::unit(phi.clone())?)
}

impl<T: Scalar> Su3Structure<T> {
    pub fn from_direction(spinor: SpinorDirection<T>) -> Result<Self> {
        let gamma = GammaBasis::six();
        let phi = spinor.spinor();
        let images = gamma.frame_images(phi);
        // J(e_i)_k = ⟨j(e_i φ), e_k φ⟩
        let j_images: Vec<_> = images.iter().map(j).collect();
        let j_matrix = Matrix::from_fn(6, 6, |k, i| spinor.pair(&j_images[i], &images[k]));
        let omega = AltForm::from_fn(2, 6, |ix| j_matrix.get(ix[0], ix[1]).clone());
        let psi_plus = AltForm::from_fn(3, 6, |ix| {
            let v = gamma.e(ix[0], &gamma.e(ix[1], &images[ix[2]]));
            -spinor.pair(&v, phi)
        });
        // ψ⁻(X,Y,Z) = −ψ⁺(JX,Y,Z); antisymmetry of the result is checked
        let psi_minus = AltForm::from_tensor_checked(3, 6, |ix| {
            let mut acc = T::zero();
            for m in 0..6 {
                let jm = j_matrix.get(m, ix[0]);
                if !jm.is_zero() {
                    acc = acc - jm.clone() * psi_plus.on_basis(&[m, ix[1], ix[2]]);
                }
            }
            acc
        })?;
        Ok(Self {
            spinor,
            j_matrix,
            omega,
            psi_plus,
            psi_minus,
        })
    }

    pub fn spinor(&self) -> &SpinorDirection<T> {
        &self.spinor
    }

    /// `J` with column `i` equal to `J e_i`.
    pub fn j(&self) -> &Matrix<T> {
        &self.j_matrix
    }

    /// `ω(X,Y) = g(X, JY)`.
    pub fn omega(&self) -> &AltForm<T> {
        &self.omega
    }

    /// `ψ⁺(X,Y,Z) = −⟨XYZφ, φ⟩`.
    pub fn psi_plus(&self) -> &AltForm<T> {
        &self.psi_plus
    }

    pub fn psi_minus(&self) -> &AltForm<T> {
        &self.psi_minus
    }

    /// The 4-form `*ω` for the volume form `e₁∧…∧e₆`.
    pub fn star_omega(&self) -> AltForm<T> {
        self.omega.hodge(1)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct G2Structure<T> {
    spinor: SpinorDirection<T>,
    psi: AltForm<T>,
    star_psi: AltForm<T>,
}

/// Induces the G₂-structure of a unit spinor.
pub fn induce_g2<T: Scalar>(phi: &Spinor<T>) -> Result<G2Structure<T>> {
    G2Structure::from_direction(SpinorDirection::unit(phi.clone())?)
}

impl<T: Scalar> G2Structure<T> {
    pub fn from_direction(spinor: SpinorDirection<T>) -> Result<Self> {
        let gamma = GammaBasis::seven();
        let phi = spinor.spinor();
        let psi = AltForm::from_fn(3, 7, |ix| {
            let v = gamma.e(ix[0], &gamma.e(ix[1], &gamma.e(ix[2], phi)));
            spinor.pair(&v, phi)
        });
        let star_psi = star_psi(&psi)?;
        Ok(Self {
            spinor,
            psi,
            star_psi,
        })
    }

    pub fn spinor(&self) -> &SpinorDirection<T> {
        &self.spinor
    }

    /// `Ψ(X,Y,Z) = ⟨XYZφ, φ⟩`.
    pub fn psi(&self) -> &AltForm<T> {
        &self.psi
    }

    pub fn star_psi(&self) -> &AltForm<T> {
        &self.star_psi
    }

    pub fn cross(&self, x: &[T], y: &[T]) -> Vec<T> {
        cross(&self.psi, x, y)
    }

    /// `V⌟Ψ` as an endomorphism: `g((V⌟Ψ)X, Y) = Ψ(V,X,Y)`.
    pub fn contraction_endomorphism(&self, v: &[T]) -> Matrix<T> {
        let form = self.psi.interior(v);
        Matrix::from_fn(7, 7, |y, x| form.on_basis(&[x, y]))
    }
}

/// The cross product `g(X×Y, Z) = Ψ(X,Y,Z)`.
pub fn cross<T: Scalar>(psi: &AltForm<T>, x: &[T], y: &[T]) -> Vec<T> {
    let xy = psi.interior(x).interior(y);
    (0..psi.dim()).map(|k| xy.on_basis(&[k])).collect()
}

/// `*Ψ(V,W,X,Y) = Ψ(V,W,X×Y) − g(V,X)g(W,Y) + g(V,Y)g(W,X)`.
///
/// Fails when the right-hand side is not totally antisymmetric, which happens
/// exactly when `Ψ` is not induced by a spinor.
pub fn star_psi<T: Scalar>(psi: &AltForm<T>) -> Result<AltForm<T>> {
    let n = psi.dim();
    let delta = |a: usize, b: usize| if a == b { T::one() } else { T::zero() };
    AltForm::from_tensor_checked(4, n, |ix| {
        let (v, w, x, y) = (ix[0], ix[1], ix[2], ix[3]);
        let mut acc = T::zero();
        for k in 0..n {
            let c = psi.on_basis(&[x, y, k]);
            if !c.is_zero() {
                acc = acc + c * psi.on_basis(&[v, w, k]);
            }
        }
        acc - delta(v, x) * delta(w, y) + delta(v, y) * delta(w, x)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};
    use proptest::prelude::*;

    type Q = Rational;

    fn u8s() -> Spinor<Q> {
        Spinor::basis(8)
    }

    fn e(n: usize, i: usize) -> Vec<Q> {
        (0..n)
            .map(|k| if k + 1 == i { rat(1, 1) } else { rat(0, 1) })
            .collect()
    }

    fn spinor_strategy() -> impl Strategy<Value = Spinor<Q>> {
        proptest::array::uniform8(-5i64..=5)
            .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
            .prop_map(Spinor::<Q>::from_i64)
    }

    #[test]
    fn u8_complex_structure() {
        let s = induce_su3(&u8s()).unwrap();
        let jm = s.j();
        assert_eq!(
            jm.column(0),
            e(6, 2).iter().map(|x| -x.clone()).collect::<Vec<_>>()
        );
        assert_eq!(jm.column(2), e(6, 4));
        assert_eq!(jm.column(4), e(6, 6));
    }

    #[test]
    fn u8_forms() {
        let s = induce_su3(&u8s()).unwrap();
        let mut psi = AltForm::<Q>::zero(3, 6);
        for (idx, c) in [
            ([1, 3, 5], 1),
            ([1, 4, 6], -1),
            ([2, 3, 6], 1),
            ([2, 4, 5], 1),
        ] {
            psi.add_term(&idx, rat(c, 1)).unwrap();
        }
        assert_eq!(s.psi_plus(), &psi);
        let mut omega = AltForm::<Q>::zero(2, 6);
        for (idx, c) in [([1, 2], 1), ([3, 4], -1), ([5, 6], -1)] {
            omega.add_term(&idx, rat(c, 1)).unwrap();
        }
        assert_eq!(s.omega(), &omega);
    }

    #[test]
    fn non_unit_spinor_rejected() {
        let phi = Spinor::<Q>::from_i64([1, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(induce_su3(&phi).unwrap_err(), Error::NonUnitSpinor);
        assert_eq!(induce_g2(&phi).unwrap_err(), Error::NonUnitSpinor);
        assert!(SpinorDirection::new(Spinor::<Q>::zero()).is_err());
    }

    #[test]
    fn star_psi_matches_hodge_for_reversed_orientation() {
        let g = induce_g2(&u8s()).unwrap();
        assert_eq!(g.star_psi(), &g.psi().hodge(-1));
        assert_eq!(g.star_psi(), &-&g.psi().hodge(1));
    }

    #[test]
    fn star_psi_rejects_non_induced_forms() {
        let bogus = AltForm::<Q>::basis(7, &[1, 2, 3]);
        assert_eq!(star_psi(&bogus).unwrap_err(), Error::NotAntisymmetric);
    }

    #[test]
    fn cross_product_clifford_identity() {
        let g = induce_g2(&u8s()).unwrap();
        let gamma = GammaBasis::seven();
        let phi = u8s();
        for a in 1..=7 {
            assert!(g.cross(&e(7, a), &e(7, a)).iter().all(|x| x == &rat(0, 1)));
            for b in 1..=7 {
                let x = e(7, a);
                let y = e(7, b);
                let xy = g.cross(&x, &y);
                // (X×Y)φ = −XYφ − g(X,Y)φ
                let lhs = gamma.vector_apply(&xy, &phi).unwrap();
                let xyphi = gamma.product_apply(&[a, b], &phi).unwrap();
                let gxy = crate::scalar::dot(&x, &y);
                let rhs = &(-&xyphi) - &phi.scale(&gxy);
                assert_eq!(lhs, rhs);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn su3_invariants_on_random_directions(phi in spinor_strategy()) {
            let s = Su3Structure::from_direction(SpinorDirection::new(phi).unwrap()).unwrap();
            let jm = s.j();
            prop_assert_eq!(jm * jm, Matrix::identity(6).scale(&rat(-1, 1)));
            prop_assert_eq!(&jm.transpose() * jm, Matrix::identity(6));
        }

        #[test]
        fn j_is_invariant_under_circle_action(phi in spinor_strategy(), a in -4i64..=4, b in -4i64..=4) {
            prop_assume!(a != 0 || b != 0);
            let rotated = circle_action(&rat(a, 1), &rat(b, 1), &phi);
            let s0 = Su3Structure::from_direction(SpinorDirection::new(phi).unwrap()).unwrap();
            let s1 = Su3Structure::from_direction(SpinorDirection::new(rotated).unwrap()).unwrap();
            prop_assert_eq!(s0.j(), s1.j());
            prop_assert_eq!(s0.omega(), s1.omega());
        }

        #[test]
        fn g2_star_psi_is_always_antisymmetric(phi in spinor_strategy()) {
            let g = G2Structure::from_direction(SpinorDirection::new(phi).unwrap()).unwrap();
            prop_assert_eq!(g.star_psi(), &g.psi().hodge(-1));
            prop_assert_eq!(g.psi().norm_sq(), rat(7, 1));
        }
    }
}
