//! Adjacency of Leonard pairs, the four-flag labeling of an adjacent
//! couple, the transition identity it satisfies and the resulting
//! arithmetic / q-classical dichotomy.

use num_traits::One;
use serde::Serialize;

use crate::flags::{decomposition_from_flags, principal_relation, standard_flag_set, Flag};
use crate::linalg::Rational;
use crate::pair::{Kind, LeonardPair};
use crate::sequences::{classify_sequence, SequenceClass};
use crate::split::split_type;
use crate::{Error, Result};

fn check_dims(p1: &LeonardPair, p2: &LeonardPair) -> Result<()> {
    if p1.dim() != p2.dim() {
        return Err(Error::DimensionMismatch(p1.dim(), p2.dim()));
    }
    Ok(())
}

/// Every standard decomposition of `p1` is split for `p2`.
fn one_sided(p1: &LeonardPair, p2: &LeonardPair) -> Result<bool> {
    for (_, dec) in p1.all_standard_decompositions() {
        if !split_type(dec, p2)?.is_split() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Definition route. At `d = 0` this is vacuously true.
pub fn are_adjacent(p1: &LeonardPair, p2: &LeonardPair) -> Result<bool> {
    check_dims(p1, p2)?;
    let forward = one_sided(p1, p2)?;
    let backward = one_sided(p2, p1)?;
    if forward != backward {
        return Err(Error::TheoremViolation(format!(
            "split condition is not symmetric ({forward} one way, {backward} the other)"
        )));
    }
    Ok(forward)
}

/// Flag route: equal standard flag sets, different principal relations.
pub fn are_adjacent_via_flags(p1: &LeonardPair, p2: &LeonardPair) -> Result<bool> {
    check_dims(p1, p2)?;
    if p1.diameter() == 0 {
        return Err(Error::DegenerateDimension);
    }
    if !standard_flag_set(p1).same_flags(&standard_flag_set(p2)) {
        return Ok(false);
    }
    Ok(principal_relation(p1)? != principal_relation(p2)?)
}

/// The four common flags of an adjacent couple `(A, A*)`, `(B, B*)` and
/// the sequences read off the four decompositions they determine.
///
/// `w` is A- and B-standard, `x` is A- and B*-standard, `y` is A*- and
/// B*-standard, `z` is A*- and B-standard.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyLabeling {
    pub w: Flag,
    pub x: Flag,
    pub y: Flag,
    pub z: Flag,
    /// Eigenvalue sequence of `A` on `[wx]`.
    pub theta: Vec<Rational>,
    /// Dual eigenvalue sequence of `A*` on `[yz]`.
    pub theta_star: Vec<Rational>,
    /// Eigenvalue sequence of `B` on `[zw]`.
    pub eta: Vec<Rational>,
    /// Dual eigenvalue sequence of `B*` on `[xy]`.
    pub eta_star: Vec<Rational>,
}

impl AdjacencyLabeling {
    pub fn flags(&self) -> [&Flag; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn diameter(&self) -> usize {
        self.w.diameter()
    }
}

fn common<'a>(xs: &'a [Flag], ys: &[Flag]) -> Result<&'a Flag> {
    let mut hits = xs.iter().filter(|f| ys.contains(f));
    match (hits.next(), hits.next()) {
        (Some(f), None) => Ok(f),
        _ => Err(Error::TheoremViolation(
            "role classes of adjacent pairs do not meet in exactly one flag".into(),
        )),
    }
}

pub fn build_labeling(p1: &LeonardPair, p2: &LeonardPair) -> Result<AdjacencyLabeling> {
    if !are_adjacent_via_flags(p1, p2)? {
        return Err(Error::NotAdjacent);
    }
    let s1 = standard_flag_set(p1);
    let s2 = standard_flag_set(p2);
    let w = common(s1.flags(Kind::A), s2.flags(Kind::A))?.clone();
    let x = common(s1.flags(Kind::A), s2.flags(Kind::AStar))?.clone();
    let y = common(s1.flags(Kind::AStar), s2.flags(Kind::AStar))?.clone();
    let z = common(s1.flags(Kind::AStar), s2.flags(Kind::A))?.clone();
    let seq = |p: &LeonardPair, f: &Flag, g: &Flag, kind| p.eigenvalue_sequence(&decomposition_from_flags(f, g)?, kind);
    let theta = seq(p1, &w, &x, Kind::A)?;
    let theta_star = seq(p1, &y, &z, Kind::AStar)?;
    let eta = seq(p2, &z, &w, Kind::A)?;
    let eta_star = seq(p2, &x, &y, Kind::AStar)?;
    Ok(AdjacencyLabeling {
        w,
        x,
        y,
        z,
        theta,
        theta_star,
        eta,
        eta_star,
    })
}

/// Result of checking the transition identity cell by cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitionCheck {
    pub holds: bool,
    pub cells_checked: usize,
    /// First `(i, j)` at which the two sides differ.
    pub first_failure: Option<(usize, usize)>,
}

fn product(range: impl Iterator<Item = usize>, term: impl Fn(usize) -> Rational) -> Rational {
    range.fold(Rational::one(), |acc, k| acc * term(k))
}

/// Checks, for all `0 ≤ j ≤ i ≤ d`,
///
/// ```text
/// ∏_{k<j} (θ_{d−i} − θ_{d−k}) / ∏_{k<j} (θ_{d−j} − θ_{d−k})
///     = ∏_{j<k≤i} (η_0 − η_k) / ∏_{j<k≤i} (η_j − η_k)
/// ```
///
/// Cells are visited with `i` outer, `j` inner; checking stops at the
/// first mismatch.
pub fn verify_transition_identity(lab: &AdjacencyLabeling) -> TransitionCheck {
    let (th, eta) = (&lab.theta, &lab.eta);
    let d = th.len() - 1;
    let mut cells = 0;
    for i in 0..=d {
        for j in 0..=i {
            cells += 1;
            let lhs = product(0..j, |k| &th[d - i] - &th[d - k]) / product(0..j, |k| &th[d - j] - &th[d - k]);
            let rhs = product(j + 1..=i, |k| &eta[0] - &eta[k]) / product(j + 1..=i, |k| &eta[j] - &eta[k]);
            if lhs != rhs {
                return TransitionCheck {
                    holds: false,
                    cells_checked: cells,
                    first_failure: Some((i, j)),
                };
            }
        }
    }
    TransitionCheck {
        holds: true,
        cells_checked: cells,
        first_failure: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dichotomy {
    Arithmetic,
    /// `q` as seen on `θ` in the labeling's orientation.
    QClassical { q: Rational },
}

/// All four sequences must be arithmetic, or all q-classical with the
/// same `q` up to inversion (reorienting a sequence inverts its `q`).
pub fn classify_dichotomy(lab: &AdjacencyLabeling) -> Result<Dichotomy> {
    let classes = [&lab.theta, &lab.theta_star, &lab.eta, &lab.eta_star]
        .map(|s| classify_sequence(s))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    if classes.iter().all(|c| matches!(c, SequenceClass::Arithmetic { .. })) {
        return Ok(Dichotomy::Arithmetic);
    }
    let qs: Vec<&Rational> = classes
        .iter()
        .filter_map(|c| match c {
            SequenceClass::QClassical { q, .. } => Some(q),
            _ => None,
        })
        .collect();
    if qs.len() == classes.len() {
        let q = qs[0].clone();
        let inv = q.recip();
        if qs.iter().all(|r| **r == q || **r == inv) {
            return Ok(Dichotomy::QClassical { q });
        }
    }
    let tags: Vec<&str> = classes.iter().map(SequenceClass::tag).collect();
    Err(Error::DichotomyViolation(format!(
        "theta, theta*, eta, eta* classify as {}",
        tags.join(", ")
    )))
}

/// One entry of a mutual-adjacency check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairwiseAdjacency {
    pub i: usize,
    pub j: usize,
    pub definition_route: bool,
    pub flag_route: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MutualAdjacency {
    pub pairwise: Vec<PairwiseAdjacency>,
    pub mutually_adjacent: bool,
}

/// Checks every couple by both routes. Disagreement between the routes, or
/// more than three mutually adjacent pairs, is reported as an error.
pub fn mutual_adjacency(pairs: &[LeonardPair]) -> Result<MutualAdjacency> {
    let mut pairwise = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let definition_route = are_adjacent(&pairs[i], &pairs[j])?;
            let flag_route = are_adjacent_via_flags(&pairs[i], &pairs[j])?;
            if definition_route != flag_route {
                return Err(Error::TheoremViolation(format!(
                    "pairs {i} and {j}: definition route says {definition_route}, flag route says {flag_route}"
                )));
            }
            pairwise.push(PairwiseAdjacency { i, j, definition_route, flag_route });
        }
    }
    let mutually_adjacent = pairwise.iter().all(|r| r.definition_route);
    if mutually_adjacent && pairs.len() > 3 {
        return Err(Error::TheoremViolation(format!(
            "{} pairwise adjacent Leonard pairs",
            pairs.len()
        )));
    }
    Ok(MutualAdjacency { pairwise, mutually_adjacent })
}

pub fn check_mutually_adjacent(pairs: &[LeonardPair]) -> Result<bool> {
    Ok(mutual_adjacency(pairs)?.mutually_adjacent)
}
