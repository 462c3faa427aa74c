//! Exact verification of the curvature algebra behind the rigidity of
//! minimal hypersurfaces in the unit 5-sphere with constant scalar curvature
//! and vanishing Gauss-Kronecker curvature.
//!
//! Everything here is pure computation over [`ExactScalar`]s; the `mhs-verify`
//! crate adds the command line and report formats.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod scalar;

pub use scalar::{ExactOrdering, ExactScalar, ScalarError};
pub mod curvature;
pub mod forms;
pub mod spectrum;

pub use spectrum::Spectrum;
pub mod certificate;
pub mod isoparametric;
pub mod extremal;
pub mod jet;
pub mod linalg;
pub mod proof;
