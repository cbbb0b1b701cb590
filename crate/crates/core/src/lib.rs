//! Exact-arithmetic toolkit for Leonard pairs.
//!
//! A Leonard pair is an ordered pair of operators `(A, A*)` on a finite
//! dimensional space such that each is diagonal in some basis where the
//! other is irreducible tridiagonal. This crate recognizes such pairs over
//! the rationals, computes their standard decompositions and flags, decides
//! split and adjacency relations, and builds the three mutually adjacent
//! pairs that arise from `sl₂` representations.
//!
//! All arithmetic is exact; every structural claim is decided, not
//! approximated.

pub mod adjacency;
mod error;
pub mod flags;
pub mod json;
pub mod linalg;
pub mod pair;
pub mod sequences;
pub mod sl2;
pub mod split;

pub use error::{Error, Result};
pub use linalg::{ExactMatrix, Rational, Subspace, Vector};
pub use pair::{verify_leonard, Decomposition, Kind, LeonardPair};
