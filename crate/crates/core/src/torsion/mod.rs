//! Intrinsic torsion: extraction from jets, irreducible splitting, classes.

mod classes;
mod decompose;
mod jet;
pub mod samples;
pub mod tables;

pub use classes::{ClassSet, Component};
pub use decompose::{
    decompose_g2, decompose_su3, g2_projectors, intrinsic_torsion_form_g2,
    intrinsic_torsion_form_su3, lambda27_basis, stabilizer_algebra, su3_projectors, su3_rotation,
    G2Decomposition, Su3Decomposition,
};
pub use jet::{extract_intrinsic, IntrinsicPair, SpinorJet};

use crate::error::Result;
use crate::structure::{G2Structure, Su3Structure};

/// Either decomposition, tagged by dimension.
#[derive(Clone, Debug, PartialEq)]
pub enum Decomposition<T> {
    Su3(Su3Decomposition<T>),
    G2(G2Decomposition<T>),
}

impl<T: crate::scalar::Scalar> Decomposition<T> {
    pub fn classify(&self, eps: f64) -> ClassSet {
        match self {
            Decomposition::Su3(d) => d.classify(eps),
            Decomposition::G2(d) => d.classify(eps),
        }
    }
}

/// Extracts and decomposes the intrinsic torsion of a jet.
pub fn decompose_jet<T: crate::scalar::Scalar>(jet: &SpinorJet<T>) -> Result<Decomposition<T>> {
    let pair = extract_intrinsic(jet)?;
    if jet.dim() == 6 {
        let su3 = Su3Structure::from_direction(jet.direction().clone())?;
        Ok(Decomposition::Su3(decompose_su3(&pair, su3.j())?))
    } else {
        let g2 = G2Structure::from_direction(jet.direction().clone())?;
        Ok(Decomposition::G2(decompose_g2(&pair.s, &g2)?))
    }
}

/// Class of a jet; `eps = 0` demands exact vanishing.
pub fn classify_jet<T: crate::scalar::Scalar>(jet: &SpinorJet<T>, eps: f64) -> Result<ClassSet> {
    Ok(decompose_jet(jet)?.classify(eps))
}
