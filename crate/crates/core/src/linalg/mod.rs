//! Exact dense linear algebra over the rationals.
//!
//! Everything here is computed without rounding: matrices hold
//! [`Rational`] entries, subspaces are kept in reduced row-echelon form so
//! that equality is structural, and eigen-decomposition only succeeds when
//! the spectrum is simple and rational.

mod eigen;
mod matrix;
mod rational;
mod subspace;

pub use eigen::{
    characteristic_polynomial, rational_roots, simple_rational_eigen, EigenPair,
};
pub use matrix::{ExactMatrix, Vector};
pub use rational::{format_rational, frac, int, parse_rational, Rational};
pub use subspace::{null_space, rank, rref, Subspace};

/// Returns `S⁻¹ m S`, where `S` has the given vectors as its columns.
pub fn represent_in_basis(m: &ExactMatrix, basis: &[Vector]) -> crate::Result<ExactMatrix> {
    if !m.is_square() {
        return Err(crate::Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let s = ExactMatrix::from_columns(m.rows(), basis)?;
    let s_inv = s.inverse().ok_or(crate::Error::SingularBasis)?;
    Ok(&(&s_inv * m) * &s)
}
