//! The algebraic Clifford identities satisfied by an SU(3)- or G₂-spinor.
//!
//! Each check runs on the spinor as given; all of them are invariant under
//! rescaling `φ`, so unnormalized rational spinors are tested exactly.

use alloc::vec::Vec;

use crate::clifford::{j, GammaBasis, Spinor};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::structure::{G2Structure, SpinorDirection, Su3Structure};

/// Outcome of one named identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
}

fn check(name: &'static str, passed: bool) -> IdentityCheck {
    IdentityCheck { name, passed }
}

/// `ωφ = −3jφ`, the sign realized by the explicit gamma matrices. The 2-form
/// `g(J·,·) = −ω` therefore acts as `+3j`.
pub const OMEGA_PHI_FACTOR: i64 = -3;

/// The six dimension-6 identities:
/// `ψ⁺φ = −4φ`, `ψ⁺jφ = 4jφ`, `ψ⁺φ* = 0` for `φ* ⊥ φ, jφ`,
/// `(X⌟ψ⁺)φ = 2Xφ`, `ωφ = −3jφ` and `ω(jφ) = 3φ`.
pub fn su3_identities<T: Scalar>(phi: &Spinor<T>) -> Result<Vec<IdentityCheck>> {
    let su3 = Su3Structure::from_direction(SpinorDirection::new(phi.clone())?)?;
    let gamma = GammaBasis::six();
    let psi = su3.psi_plus();
    let jp = j(phi);
    let images = gamma.frame_images(phi);
    let c = T::from_i64(OMEGA_PHI_FACTOR);

    let mut out = Vec::with_capacity(6);
    out.push(check(
        "psi-phi",
        gamma
            .form_apply(psi, phi)?
            .approx_eq(&phi.scale(&T::from_i64(-4))),
    ));
    out.push(check(
        "psi-jphi",
        gamma
            .form_apply(psi, &jp)?
            .approx_eq(&jp.scale(&T::from_i64(4))),
    ));
    let mut perp = true;
    for image in &images {
        perp &= gamma.form_apply(psi, image)?.approx_eq(&Spinor::zero());
    }
    out.push(check("psi-perp", perp));
    let mut contraction = true;
    for (x, image) in images.iter().enumerate() {
        contraction &= gamma
            .form_apply(&psi.interior_basis(x), phi)?
            .approx_eq(&image.scale(&T::from_i64(2)));
    }
    out.push(check("contraction-psi", contraction));
    out.push(check(
        "omega-phi",
        gamma.form_apply(su3.omega(), phi)?.approx_eq(&jp.scale(&c)),
    ));
    out.push(check(
        "omega-jphi",
        gamma
            .form_apply(su3.omega(), &jp)?
            .approx_eq(&phi.scale(&-c)),
    ));
    Ok(out)
}

/// The three dimension-7 identities:
/// `Ψφ = 7φ`, `Ψφ* = −φ*` for `φ* ⊥ φ`, and `(X⌟Ψ)φ = −3Xφ`.
pub fn g2_identities<T: Scalar>(phi: &Spinor<T>) -> Result<Vec<IdentityCheck>> {
    let g2 = G2Structure::from_direction(SpinorDirection::new(phi.clone())?)?;
    let gamma = GammaBasis::seven();
    let psi = g2.psi();
    let images = gamma.frame_images(phi);

    let mut perp = true;
    let mut contraction = true;
    for (x, image) in images.iter().enumerate() {
        perp &= gamma.form_apply(psi, image)?.approx_eq(&-image);
        contraction &= gamma
            .form_apply(&psi.interior_basis(x), phi)?
            .approx_eq(&image.scale(&T::from_i64(-3)));
    }
    Ok(alloc::vec![
        check(
            "psi-phi",
            gamma
                .form_apply(psi, phi)?
                .approx_eq(&phi.scale(&T::from_i64(7)))
        ),
        check("psi-perp", perp),
        check("contraction-psi", contraction),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn identities_hold_for_u8() {
        let u8s = Spinor::<Rational>::basis(8);
        for c in su3_identities(&u8s)
            .unwrap()
            .into_iter()
            .chain(g2_identities(&u8s).unwrap())
        {
            assert!(c.passed, "{}", c.name);
        }
    }
}
