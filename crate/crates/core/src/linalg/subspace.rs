use num_traits::{One, Zero};

use super::matrix::{ExactMatrix, Vector};
use super::rational::Rational;
use crate::{Error, Result};

/// Row-reduces `rows` in place to reduced row-echelon form and returns the
/// pivot column of each nonzero row. Zero rows end up at the bottom.
fn rref_rows(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for j in col..cols {
                if rows[r][j].is_zero() {
                    continue;
                }
                let t = &factor * &rows[r][j];
                rows[i][j] -= t;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Reduced row-echelon form of `m` (same shape; zero rows last).
pub fn rref(m: &ExactMatrix) -> ExactMatrix {
    let mut rows = m.to_rows();
    rref_rows(&mut rows, m.cols());
    if rows.is_empty() {
        return m.clone();
    }
    ExactMatrix::from_rows(rows).expect("row lengths preserved")
}

pub fn rank(m: &ExactMatrix) -> usize {
    let mut rows = m.to_rows();
    rref_rows(&mut rows, m.cols()).len()
}

/// Basis of `{x : m x = 0}`, one vector per free column.
pub fn null_space(m: &ExactMatrix) -> Vec<Vector> {
    let n = m.cols();
    let mut rows = m.to_rows();
    let pivots = rref_rows(&mut rows, n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][free].clone();
            }
            v
        })
        .collect()
}

/// A subspace of `Q^n`, stored by its canonical (RREF) basis.
///
/// Two subspaces are equal exactly when their canonical bases are
/// identical, so the derived `Eq`, `Ord` and `Hash` are mathematical.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::AmbientMismatch(ambient_dim, v.len()));
        }
        let mut rows = vectors.to_vec();
        let r = rref_rows(&mut rows, ambient_dim).len();
        rows.truncate(r);
        Ok(Self {
            ambient_dim,
            basis: rows,
        })
    }

    pub fn line(v: &[Rational]) -> Result<Self> {
        Self::span(v.len(), &[v.to_vec()])
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![Rational::zero(); ambient_dim];
                v[i] = Rational::one();
                v
            })
            .collect();
        Self { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical basis rows (RREF, pivots left to right).
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let stacked: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::span(self.ambient_dim, &stacked)
    }

    /// Intersection via the kernel of `[Uᵀ | −Wᵀ]`: each kernel vector
    /// `(a, b)` gives the common vector `Σ aᵢuᵢ`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient_dim));
        }
        let n = self.ambient_dim;
        let k = self.dim();
        let m = other.dim();
        let mut system = ExactMatrix::zeros(n, k + m);
        for (j, u) in self.basis.iter().enumerate() {
            for i in 0..n {
                system.set(i, j, u[i].clone());
            }
        }
        for (j, w) in other.basis.iter().enumerate() {
            for i in 0..n {
                system.set(i, k + j, -w[i].clone());
            }
        }
        let common: Vec<Vector> = null_space(&system)
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![Rational::zero(); n];
                for (a, u) in coeffs[..k].iter().zip(&self.basis) {
                    if a.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(u) {
                        *x += a * y;
                    }
                }
                v
            })
            .collect();
        Self::span(n, &common)
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, v.len()));
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Ok(rref_rows(&mut rows, self.ambient_dim).len() == self.dim())
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.sum(other)?.dim() == self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let m = ExactMatrix::from_i64(&[&[2, 4], &[1, 2]]);
        assert_eq!(rref(&m), ExactMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(rref(&ExactMatrix::identity(3)), ExactMatrix::identity(3));
        let swap = ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(rref(&swap), ExactMatrix::identity(2));
    }

    #[test]
    fn sum_examples() {
        let e1 = Subspace::line(&v(&[1, 0])).unwrap();
        let e2 = Subspace::line(&v(&[0, 1])).unwrap();
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(2));
        assert_eq!(e1.sum(&e1).unwrap(), e1);

        let a = Subspace::line(&v(&[1, 0, 0])).unwrap();
        let b = Subspace::line(&v(&[1, 1, 0])).unwrap();
        let expected = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        assert_eq!(a.sum(&b).unwrap(), expected);
    }

    #[test]
    fn intersection_examples() {
        let e1 = Subspace::line(&v(&[1, 0])).unwrap();
        let e2 = Subspace::line(&v(&[0, 1])).unwrap();
        assert!(e1.intersection(&e2).unwrap().is_zero());
        assert_eq!(e1.intersection(&e1).unwrap(), e1);

        let u = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let w = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(u.intersection(&w).unwrap(), Subspace::line(&v(&[0, 1, 0])).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert_eq!(a.sum(&b).unwrap_err(), Error::AmbientMismatch(2, 3));
        assert_eq!(a.intersection(&b).unwrap_err(), Error::AmbientMismatch(2, 3));
    }

    #[test]
    fn canonical_form_ignores_spanning_set() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 2, 2])]).unwrap();
        let b = Subspace::span(3, &[v(&[1, 3, 2]), v(&[2, 0, -2]), v(&[1, 1, 0])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.basis(), &[v(&[1, 0, -1]), v(&[0, 1, 1])]);
    }

    #[test]
    fn null_space_is_annihilated() {
        let m = ExactMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = null_space(&m);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            assert!(m.mul_vec(x).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn containment() {
        let plane = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        assert!(plane.contains_vector(&v(&[3, -2, 0])).unwrap());
        assert!(!plane.contains_vector(&v(&[0, 0, 1])).unwrap());
        assert!(plane.contains(&Subspace::line(&v(&[1, 1, 0])).unwrap()).unwrap());
    }
}
