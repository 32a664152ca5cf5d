//! Exact-arithmetic toolkit for X-rank computations with respect to Veronese
//! surfaces and rational curves, together with machine-checkable verification
//! of high-rank-locus claims.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals,
//! eliminations are fraction-free, and every verdict is backed by a
//! certificate that re-validates by direct evaluation. No floating point.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod apolar;
pub mod binary;
pub mod cubic;
pub mod curve;
pub mod quartic;
pub mod dpoly;
pub mod error;
pub mod ext;
pub mod loci;
pub mod mpoly;
pub mod qmatrix;
pub mod rat;
pub mod rng;
pub mod sing;
pub mod solve;
pub mod upoly;

pub use error::{Error, Result};
pub use rat::Rational;

/// Library version embedded into verification reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
