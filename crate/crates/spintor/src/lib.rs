//! File formats, reports and verification suites behind the `spintor` binary.

pub mod classify;
pub mod cli;
pub mod cone;
pub mod error;
pub mod input;
pub mod tables;
pub mod value;
pub mod verify;
