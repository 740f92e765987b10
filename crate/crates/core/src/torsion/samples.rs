//! Intrinsic pairs with prescribed torsion components, for property tests and
//! verification suites. Randomness comes from a caller-supplied source of small
//! integers so this module stays independent of any RNG crate.

use alloc::vec::Vec;

use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::structure::G2Structure;

use super::classes::{ClassSet, Component};
use super::decompose::{decompose_g2, decompose_su3};
use super::jet::IntrinsicPair;

fn random_matrix<T: Scalar>(n: usize, draw: &mut dyn FnMut() -> i64) -> Matrix<T> {
    Matrix::from_fn(n, n, |_, _| T::from_i64(draw()))
}

fn nonzero<T: Scalar>(draw: &mut dyn FnMut() -> i64) -> T {
    loop {
        let v = draw();
        if v != 0 {
            return T::from_i64(v);
        }
    }
}

/// A single nonzero element of one SU(3) component.
pub fn su3_component<T: Scalar>(
    c: Component,
    j: &Matrix<T>,
    draw: &mut dyn FnMut() -> i64,
) -> Result<IntrinsicPair<T>> {
    loop {
        let m = random_matrix::<T>(6, draw);
        let d = decompose_su3(&IntrinsicPair::su3(m, alloc::vec![T::zero(); 6]), j)?;
        let zero = Matrix::zeros(6, 6);
        let (s, eta) = match c {
            Component::Chi1 => (j.scale(&nonzero(draw)), None),
            Component::Chi1Bar => (Matrix::identity(6).scale(&nonzero(draw)), None),
            Component::Chi2 => (d.s2, None),
            Component::Chi2Bar => (d.s2_bar, None),
            Component::Chi3 => (d.s3, None),
            Component::Chi4 => (d.s4, None),
            Component::Chi5 => (
                zero,
                Some((0..6).map(|_| T::from_i64(draw())).collect::<Vec<T>>()),
            ),
            _ => {
                return Err(crate::error::Error::Invalid(
                    "not an SU(3) component".into(),
                ))
            }
        };
        let eta = eta.unwrap_or_else(|| alloc::vec![T::zero(); 6]);
        if !s.is_zero() || eta.iter().any(|x| !x.is_zero()) {
            return Ok(IntrinsicPair::su3(s, eta));
        }
    }
}

/// A pair whose class is exactly `class` (every listed component nonzero).
pub fn su3_pair<T: Scalar>(
    class: ClassSet,
    j: &Matrix<T>,
    draw: &mut dyn FnMut() -> i64,
) -> Result<IntrinsicPair<T>> {
    let mut s = Matrix::zeros(6, 6);
    let mut eta = alloc::vec![T::zero(); 6];
    for c in class.components() {
        let p = su3_component(c, j, draw)?;
        s = &s + &p.s;
        for (a, b) in eta.iter_mut().zip(p.eta.expect("dimension 6")) {
            *a = a.clone() + b;
        }
    }
    Ok(IntrinsicPair::su3(s, eta))
}

/// A single nonzero element of one G₂ component.
pub fn g2_component<T: Scalar>(
    c: Component,
    g2: &G2Structure<T>,
    draw: &mut dyn FnMut() -> i64,
) -> Result<Matrix<T>> {
    loop {
        let d = decompose_g2(&random_matrix::<T>(7, draw), g2)?;
        let s = match c {
            Component::W1 => Matrix::identity(7).scale(&nonzero(draw)),
            Component::W2 => d.s2,
            Component::W3 => d.s3,
            Component::W4 => d.s4,
            _ => return Err(crate::error::Error::Invalid("not a G₂ component".into())),
        };
        if !s.is_zero() {
            return Ok(s);
        }
    }
}

pub fn g2_pair<T: Scalar>(
    class: ClassSet,
    g2: &G2Structure<T>,
    draw: &mut dyn FnMut() -> i64,
) -> Result<IntrinsicPair<T>> {
    let mut s = Matrix::zeros(7, 7);
    for c in class.components() {
        s = &s + &g2_component(c, g2, draw)?;
    }
    Ok(IntrinsicPair::g2(s))
}

/// Every subset of the given components.
pub fn all_subsets(components: &[Component]) -> Vec<ClassSet> {
    (0u32..1 << components.len())
        .map(|mask| {
            components
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &c)| c)
                .collect()
        })
        .collect()
}
