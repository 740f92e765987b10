//! Spinorial calculus for SU(3)-structures in dimension 6 and G₂-structures in
//! dimension 7.
//!
//! A structure is encoded by a single spinor `φ ∈ Δ = ℝ⁸`. Its covariant
//! derivative in an orthonormal frame (a [`torsion::SpinorJet`]) determines the
//! intrinsic endomorphism `S` and, in dimension 6, the intrinsic 1-form `η`.
//! Everything else in this crate is computed from those tensors algebraically,
//! exactly over [`scalar::Rational`] unless a cone sweep forces `f64`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod clifford;
pub mod connections;
pub mod error;
pub mod forms;
pub mod frame;
pub mod hypersurface;
pub mod identities;
pub mod invariants;
pub mod linalg;
pub mod scalar;
pub mod structure;
pub mod torsion;

pub use clifford::{j, GammaBasis, Spinor};
pub use error::{Error, Result};
pub use forms::AltForm;
pub use linalg::Matrix;
pub use scalar::{rat, Rational, Scalar};
