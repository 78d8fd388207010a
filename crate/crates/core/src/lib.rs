//! Exact computer algebra for the relative Kauffman bracket skein algebra
//! of the once-punctured torus and its realizations inside a quantized
//! K-theoretic Coulomb branch.
//!
//! The library builds three layers of exact arithmetic:
//!
//! - [`scalar`]: the coefficient field Q(s, u) with s = q^(1/2), u = t^(1/2);
//! - [`qdiff`]: rational functions in X over that field and q-difference
//!   operators acting on them;
//! - [`coulomb`]: the half-graded quantum torus on w1^(1/2), w2^(1/2), D1, D2
//!   with its dressed minuscule monopole operators.
//!
//! On top of these, [`skein`] realizes the skein algebra generators as
//! q-difference operators, [`mcg`] implements the SL(2,Z) mapping class group
//! action and the three sign involutions, and [`coulomb`] carries the maps
//! identifying skein elements with monopole expressions. The `check_*`
//! functions verify the defining identities of all of these structures by
//! exact computation and return structured [`report::CheckReport`]s.

pub mod coulomb;
pub mod error;
mod intpoly;
pub mod mcg;
pub mod props;
pub mod qdiff;
pub mod report;
pub mod scalar;
pub mod skein;

pub use error::Error;
pub use report::{CheckReport, CheckStatus};
pub use scalar::{Param, Scalar};
