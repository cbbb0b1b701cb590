//! LU/UL-split status of a decomposition, decided both from matrix shapes
//! and from the standard flags.

use num_traits::Zero;
use serde::Serialize;

use crate::flags::{standard_flag_set, Flag};
use crate::linalg::{represent_in_basis, ExactMatrix};
use crate::pair::{Decomposition, Kind, LeonardPair};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BidiagonalShape {
    Lower,
    Upper,
    Both,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SplitType {
    #[serde(rename = "LU")]
    Lu,
    #[serde(rename = "UL")]
    Ul,
    #[serde(rename = "both")]
    Both,
    #[serde(rename = "none")]
    None,
}

impl SplitType {
    pub fn is_split(self) -> bool {
        self != SplitType::None
    }

    fn from_flags(lu: bool, ul: bool) -> Self {
        match (lu, ul) {
            (true, true) => SplitType::Both,
            (true, false) => SplitType::Lu,
            (false, true) => SplitType::Ul,
            (false, false) => SplitType::None,
        }
    }
}

/// Classifies a square matrix by its zero pattern.
pub fn bidiagonal_shape(m: &ExactMatrix) -> BidiagonalShape {
    let mut lower = true;
    let mut upper = true;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.get(i, j).is_zero() || i == j {
                continue;
            }
            if i != j + 1 {
                lower = false;
            }
            if j != i + 1 {
                upper = false;
            }
        }
    }
    match (lower, upper) {
        (true, true) => BidiagonalShape::Both,
        (true, false) => BidiagonalShape::Lower,
        (false, true) => BidiagonalShape::Upper,
        (false, false) => BidiagonalShape::Neither,
    }
}

fn check_ambient(dec: &Decomposition, p: &LeonardPair) -> Result<()> {
    if dec.ambient_dim() != p.dim() {
        return Err(Error::NotADecomposition(format!(
            "decomposition of a {}-dimensional space tested against a pair on dimension {}",
            dec.ambient_dim(),
            p.dim()
        )));
    }
    Ok(())
}

fn lower(s: BidiagonalShape) -> bool {
    matches!(s, BidiagonalShape::Lower | BidiagonalShape::Both)
}

fn upper(s: BidiagonalShape) -> bool {
    matches!(s, BidiagonalShape::Upper | BidiagonalShape::Both)
}

/// Shape route: represent both operators in the canonical representatives
/// of `dec` and read off the bidiagonal shapes.
pub fn split_type(dec: &Decomposition, p: &LeonardPair) -> Result<SplitType> {
    check_ambient(dec, p)?;
    let basis = dec.representatives();
    let a = bidiagonal_shape(&represent_in_basis(p.a(), &basis)?);
    let a_star = bidiagonal_shape(&represent_in_basis(p.a_star(), &basis)?);
    let result = SplitType::from_flags(lower(a) && upper(a_star), upper(a) && lower(a_star));
    if result == SplitType::Both && p.diameter() > 0 {
        return Err(Error::TheoremViolation(
            "decomposition is both LU- and UL-split in positive diameter".into(),
        ));
    }
    Ok(result)
}

/// Flag route: LU iff `dec = [xy]` for an A*-standard `x` and an
/// A-standard `y`; UL iff the same with roles exchanged.
///
/// Since `[xy]` induces `x` and its inversion induces `y`, the only
/// candidates are the two flags induced by `dec` itself.
pub fn split_type_via_flags(dec: &Decomposition, p: &LeonardPair) -> Result<SplitType> {
    check_ambient(dec, p)?;
    let set = standard_flag_set(p);
    let x = Flag::induced_by(dec);
    let y = Flag::induced_by(&dec.inversion());
    let realizes = |first: Kind, second: Kind| set.flags(first).contains(&x) && set.flags(second).contains(&y);
    Ok(SplitType::from_flags(
        realizes(Kind::AStar, Kind::A),
        realizes(Kind::A, Kind::AStar),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::decomposition_from_flags;
    use crate::linalg::{int, Vector};
    use crate::pair::verify_leonard;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn pair_d2() -> LeonardPair {
        verify_leonard(
            &ExactMatrix::diagonal(&[int(2), int(0), int(-2)]),
            &ExactMatrix::from_i64(&[&[0, 2, 0], &[1, 0, 1], &[0, 2, 0]]),
        )
        .unwrap()
    }

    #[test]
    fn shapes() {
        assert_eq!(
            bidiagonal_shape(&ExactMatrix::diagonal(&[int(1), int(2), int(3)])),
            BidiagonalShape::Both
        );
        assert_eq!(bidiagonal_shape(&ExactMatrix::from_i64(&[&[1, 0], &[5, 2]])), BidiagonalShape::Lower);
        assert_eq!(bidiagonal_shape(&ExactMatrix::from_i64(&[&[1, 5], &[0, 2]])), BidiagonalShape::Upper);
        let tri = ExactMatrix::from_i64(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]]);
        assert_eq!(bidiagonal_shape(&tri), BidiagonalShape::Neither);
        let far = ExactMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1]]);
        assert_eq!(bidiagonal_shape(&far), BidiagonalShape::Neither);
    }

    #[test]
    fn own_standard_decompositions_are_not_split() {
        let p = pair_d2();
        for (_, dec) in p.all_standard_decompositions() {
            assert_eq!(split_type(dec, &p).unwrap(), SplitType::None);
            assert_eq!(split_type_via_flags(dec, &p).unwrap(), SplitType::None);
        }
    }

    #[test]
    fn d0_is_both() {
        let p = verify_leonard(&ExactMatrix::from_i64(&[&[3]]), &ExactMatrix::from_i64(&[&[4]])).unwrap();
        let dec = Decomposition::from_basis(&[v(&[1])]).unwrap();
        assert_eq!(split_type(&dec, &p).unwrap(), SplitType::Both);
        assert_eq!(split_type_via_flags(&dec, &p).unwrap(), SplitType::Both);
    }

    #[test]
    fn bracket_of_dual_then_primary_is_lu() {
        let p = pair_d2();
        let set = standard_flag_set(&p);
        for x in set.flags(Kind::AStar) {
            for y in set.flags(Kind::A) {
                let dec = decomposition_from_flags(x, y).unwrap();
                assert_eq!(split_type(&dec, &p).unwrap(), SplitType::Lu);
                assert_eq!(split_type_via_flags(&dec, &p).unwrap(), SplitType::Lu);
                assert_eq!(split_type(&dec.inversion(), &p).unwrap(), SplitType::Ul);
                assert_eq!(split_type_via_flags(&dec.inversion(), &p).unwrap(), SplitType::Ul);
            }
        }
    }

    #[test]
    fn generic_decomposition_is_not_split() {
        let p = pair_d2();
        let dec = Decomposition::from_basis(&[v(&[1, 2, 3]), v(&[0, 1, -1]), v(&[2, 0, 1])]).unwrap();
        assert_eq!(split_type(&dec, &p).unwrap(), SplitType::None);
        assert_eq!(split_type_via_flags(&dec, &p).unwrap(), SplitType::None);
    }

    #[test]
    fn scaling_representatives_does_not_matter() {
        let p = pair_d2();
        let set = standard_flag_set(&p);
        let dec = decomposition_from_flags(&set.flags(Kind::AStar)[0], &set.flags(Kind::A)[1]).unwrap();
        let scaled: Vec<Vector> = dec
            .representatives()
            .into_iter()
            .zip([3, -2, 7])
            .map(|(r, s)| r.into_iter().map(|x| x * int(s)).collect())
            .collect();
        let a = bidiagonal_shape(&represent_in_basis(p.a(), &scaled).unwrap());
        let a_star = bidiagonal_shape(&represent_in_basis(p.a_star(), &scaled).unwrap());
        assert_eq!((a, a_star), (BidiagonalShape::Lower, BidiagonalShape::Upper));
        assert_eq!(Decomposition::from_basis(&scaled).unwrap(), dec);
        // flags induced are untouched by scaling too
        assert_eq!(Flag::induced_by(&Decomposition::from_basis(&scaled).unwrap()), Flag::induced_by(&dec));
    }

    #[test]
    fn ambient_mismatch() {
        let p = pair_d2();
        let dec = Decomposition::from_basis(&[v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert!(matches!(split_type(&dec, &p), Err(Error::NotADecomposition(_))));
        assert!(matches!(split_type_via_flags(&dec, &p), Err(Error::NotADecomposition(_))));
    }
}
