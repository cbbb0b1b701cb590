//! Recognition of Leonard pairs and their standard decompositions.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::flags::Flag;
use crate::linalg::{represent_in_basis, simple_rational_eigen, ExactMatrix, Rational, Subspace, Vector};
use crate::{Error, Result};

/// Which operator of a pair is meant: `A` or `A*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A,
    AStar,
}

impl Kind {
    pub fn dual(self) -> Self {
        match self {
            Kind::A => Kind::AStar,
            Kind::AStar => Kind::A,
        }
    }
}

/// An ordered direct-sum decomposition of the ambient space into lines.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    components: Vec<Subspace>,
}

impl Decomposition {
    pub fn new(components: Vec<Subspace>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::NotADecomposition("no components".into()));
        };
        let n = first.ambient_dim();
        if components.len() != n {
            return Err(Error::NotADecomposition(format!(
                "{} components in a space of dimension {n}",
                components.len()
            )));
        }
        let mut total = Subspace::zero(n);
        for (i, c) in components.iter().enumerate() {
            if c.ambient_dim() != n {
                return Err(Error::AmbientMismatch(n, c.ambient_dim()));
            }
            if c.dim() != 1 {
                return Err(Error::NotADecomposition(format!(
                    "component {i} has dimension {}",
                    c.dim()
                )));
            }
            total = total.sum(c)?;
        }
        if total.dim() != n {
            return Err(Error::NotADecomposition("components do not span the space".into()));
        }
        Ok(Self { components })
    }

    /// Decomposition induced by a basis: `Vᵢ = span(vᵢ)`.
    pub fn from_basis(vectors: &[Vector]) -> Result<Self> {
        let n = vectors.len();
        let lines = vectors
            .iter()
            .map(|v| {
                if v.len() != n {
                    return Err(Error::AmbientMismatch(n, v.len()));
                }
                Subspace::line(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(lines)
    }

    pub fn components(&self) -> &[Subspace] {
        &self.components
    }

    pub fn ambient_dim(&self) -> usize {
        self.components.len()
    }

    pub fn diameter(&self) -> usize {
        self.components.len() - 1
    }

    pub fn inversion(&self) -> Self {
        let mut components = self.components.clone();
        components.reverse();
        Self { components }
    }

    /// The canonical spanning vector of each component.
    pub fn representatives(&self) -> Vec<Vector> {
        self.components.iter().map(|c| c.basis()[0].clone()).collect()
    }
}

/// Standard decompositions (two orientations, or one when `d = 0`) for one
/// operator, with the matching eigenvalue sequences.
#[derive(Clone, Debug)]
struct StandardData {
    decompositions: Vec<Decomposition>,
    sequences: Vec<Vec<Rational>>,
    flags: Vec<Flag>,
}

/// A verified Leonard pair together with its cached standard data.
#[derive(Clone, Debug)]
pub struct LeonardPair {
    a: ExactMatrix,
    a_star: ExactMatrix,
    a_side: StandardData,
    a_star_side: StandardData,
}

impl PartialEq for LeonardPair {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.a_star == other.a_star
    }
}

impl Eq for LeonardPair {}

impl LeonardPair {
    pub fn a(&self) -> &ExactMatrix {
        &self.a
    }

    pub fn a_star(&self) -> &ExactMatrix {
        &self.a_star
    }

    pub fn operator(&self, kind: Kind) -> &ExactMatrix {
        match kind {
            Kind::A => &self.a,
            Kind::AStar => &self.a_star,
        }
    }

    /// Dimension of the ambient space.
    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    /// `d = dim − 1`.
    pub fn diameter(&self) -> usize {
        self.dim() - 1
    }

    fn side(&self, kind: Kind) -> &StandardData {
        match kind {
            Kind::A => &self.a_side,
            Kind::AStar => &self.a_star_side,
        }
    }

    /// Standard decompositions for `kind`, lexicographically larger leading
    /// eigenvalue first.
    pub fn standard_decompositions(&self, kind: Kind) -> &[Decomposition] {
        &self.side(kind).decompositions
    }

    /// Every standard decomposition of either kind.
    pub fn all_standard_decompositions(&self) -> impl Iterator<Item = (Kind, &Decomposition)> {
        [Kind::A, Kind::AStar]
            .into_iter()
            .flat_map(move |k| self.standard_decompositions(k).iter().map(move |d| (k, d)))
    }

    /// The eigenvalue sequences (`Kind::A`) or dual eigenvalue sequences
    /// (`Kind::AStar`), in the same order as the decompositions.
    pub fn eigenvalue_sequences(&self, kind: Kind) -> &[Vec<Rational>] {
        &self.side(kind).sequences
    }

    /// Flags induced by [`Self::standard_decompositions`], in the same order.
    pub fn standard_flags(&self, kind: Kind) -> &[Flag] {
        &self.side(kind).flags
    }

    /// The eigenvalue sequence attached to a particular standard
    /// decomposition of the given kind.
    pub fn eigenvalue_sequence(&self, dec: &Decomposition, kind: Kind) -> Result<Vec<Rational>> {
        let side = self.side(kind);
        side.decompositions
            .iter()
            .position(|d| d == dec)
            .map(|i| side.sequences[i].clone())
            .ok_or(Error::DecompositionNotStandard)
    }

    /// The pair `(A*, A)`.
    pub fn swapped(&self) -> Self {
        Self {
            a: self.a_star.clone(),
            a_star: self.a.clone(),
            a_side: self.a_star_side.clone(),
            a_star_side: self.a_side.clone(),
        }
    }
}

/// Verifies that `(a, a_star)` is a Leonard pair over the rationals.
///
/// For each operator in turn: diagonalize it exactly, express the other
/// operator in the eigenbasis, and require the off-diagonal support graph
/// to be a Hamiltonian path whose edges are nonzero in both directions.
/// The path order is the standard order.
pub fn verify_leonard(a: &ExactMatrix, a_star: &ExactMatrix) -> Result<LeonardPair> {
    for m in [a, a_star] {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
    }
    if a.rows() != a_star.rows() {
        return Err(Error::DimensionMismatch(a.rows(), a_star.rows()));
    }
    if a.rows() == 0 {
        return Err(Error::NotADecomposition("zero-dimensional space".into()));
    }
    let a_side = standard_side(a, a_star)?;
    let a_star_side = standard_side(a_star, a)?;
    Ok(LeonardPair {
        a: a.clone(),
        a_star: a_star.clone(),
        a_side,
        a_star_side,
    })
}

fn standard_side(diag: &ExactMatrix, other: &ExactMatrix) -> Result<StandardData> {
    let eig = simple_rational_eigen(diag)?;
    let reps: Vec<Vector> = eig.iter().map(|p| p.space.basis()[0].clone()).collect();
    let t = represent_in_basis(other, &reps)?;
    let order = path_order(&t)?;
    let build = |order: &[usize]| -> Result<(Decomposition, Vec<Rational>)> {
        let dec = Decomposition::new(order.iter().map(|&i| eig[i].space.clone()).collect())?;
        let seq = order.iter().map(|&i| eig[i].value.clone()).collect();
        Ok((dec, seq))
    };
    let (dec, seq) = build(&order)?;
    if order.len() == 1 {
        return Ok(StandardData {
            flags: vec![Flag::induced_by(&dec)],
            decompositions: vec![dec],
            sequences: vec![seq],
        });
    }
    let reversed: Vec<usize> = order.iter().rev().copied().collect();
    let (rdec, rseq) = build(&reversed)?;
    let mut both = vec![(dec, seq), (rdec, rseq)];
    both.sort_by(|x, y| y.1.cmp(&x.1));
    let (decompositions, sequences): (Vec<Decomposition>, _) = both.into_iter().unzip();
    Ok(StandardData {
        flags: decompositions.iter().map(Flag::induced_by).collect(),
        decompositions,
        sequences,
    })
}

/// Orders the indices of `t` so that it becomes irreducible tridiagonal.
fn path_order(t: &ExactMatrix) -> Result<Vec<usize>> {
    let n = t.rows();
    if n == 1 {
        return Ok(vec![0]);
    }
    let mut neighbours = vec![BTreeSet::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && !t.get(i, j).is_zero() {
                neighbours[i].insert(j);
                neighbours[j].insert(i);
            }
        }
    }
    if let Some(v) = neighbours.iter().position(|s| s.is_empty() || s.len() > 2) {
        return Err(Error::NotTridiagonalizable(format!(
            "vertex {v} of the support graph has degree {}",
            neighbours[v].len()
        )));
    }
    let ends: Vec<usize> = (0..n).filter(|&v| neighbours[v].len() == 1).collect();
    if ends.len() != 2 {
        return Err(Error::NotTridiagonalizable(
            "support graph is not a simple path".into(),
        ));
    }
    let mut order = vec![ends[0]];
    let mut prev = usize::MAX;
    let mut cur = ends[0];
    while let Some(&next) = neighbours[cur].iter().find(|&&x| x != prev) {
        order.push(next);
        prev = cur;
        cur = next;
        if order.len() > n {
            break;
        }
    }
    if order.len() != n {
        return Err(Error::NotTridiagonalizable("support graph is disconnected".into()));
    }
    for w in order.windows(2) {
        if t.get(w[0], w[1]).is_zero() || t.get(w[1], w[0]).is_zero() {
            return Err(Error::NotTridiagonalizable(format!(
                "entry between eigenvectors {} and {} vanishes in one direction",
                w[0], w[1]
            )));
        }
    }
    Ok(order)
}
