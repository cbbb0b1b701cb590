//! Flags, opposition, the decomposition ↔ opposite-flag-pair bijection,
//! standard flag sets and principal relations.

use crate::linalg::Subspace;
use crate::pair::{Decomposition, Kind, LeonardPair};
use crate::{Error, Result};

/// A full flag `F₀ ⊂ F₁ ⊂ … ⊂ F_d = V` with `dim Fᵢ = i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    components: Vec<Subspace>,
}

impl Flag {
    pub fn new(components: Vec<Subspace>) -> Result<Self> {
        let n = components.len();
        if n == 0 {
            return Err(Error::NotAFlag("no components".into()));
        }
        for (i, c) in components.iter().enumerate() {
            if c.ambient_dim() != n {
                return Err(Error::AmbientMismatch(n, c.ambient_dim()));
            }
            if c.dim() != i + 1 {
                return Err(Error::NotAFlag(format!("component {i} has dimension {}", c.dim())));
            }
            if i > 0 && !c.contains(&components[i - 1])? {
                return Err(Error::NotAFlag(format!("component {} is not contained in component {i}", i - 1)));
            }
        }
        Ok(Self { components })
    }

    /// `Fᵢ = V₀ + V₁ + ⋯ + Vᵢ`.
    pub fn induced_by(dec: &Decomposition) -> Self {
        let parts = dec.components();
        let mut components = Vec::with_capacity(parts.len());
        let mut acc = Subspace::zero(dec.ambient_dim());
        for v in parts {
            acc = acc.sum(v).expect("components share the ambient space");
            components.push(acc.clone());
        }
        Self { components }
    }

    pub fn components(&self) -> &[Subspace] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Subspace {
        &self.components[i]
    }

    pub fn diameter(&self) -> usize {
        self.components.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.components.len()
    }
}

/// Same as [`Flag::induced_by`].
pub fn induced_flag(dec: &Decomposition) -> Flag {
    Flag::induced_by(dec)
}

fn check_shapes(f: &Flag, g: &Flag) -> Result<()> {
    if f.ambient_dim() != g.ambient_dim() {
        return Err(Error::AmbientMismatch(f.ambient_dim(), g.ambient_dim()));
    }
    Ok(())
}

/// `Fᵢ ∩ Gⱼ = 0` whenever `i + j < d`.
pub fn are_opposite(f: &Flag, g: &Flag) -> Result<bool> {
    check_shapes(f, g)?;
    let d = f.diameter();
    for i in 0..d {
        // the largest j with i + j < d is the binding constraint
        let j = d - 1 - i;
        if !f.component(i).intersection(g.component(j))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The decomposition `[fg]`: `Vᵢ = Fᵢ ∩ G_{d−i}`.
pub fn decomposition_from_flags(f: &Flag, g: &Flag) -> Result<Decomposition> {
    if !are_opposite(f, g)? {
        return Err(Error::NotOpposite);
    }
    let d = f.diameter();
    let parts = (0..=d)
        .map(|i| f.component(i).intersection(g.component(d - i)))
        .collect::<Result<Vec<_>>>()?;
    Decomposition::new(parts)
}

/// The standard flags of one pair, tagged by role.
#[derive(Clone, Debug)]
pub struct StandardFlagSet {
    a_flags: Vec<Flag>,
    a_star_flags: Vec<Flag>,
}

impl StandardFlagSet {
    /// Flags induced by standard decompositions of `kind`, in the order of
    /// [`LeonardPair::standard_decompositions`].
    pub fn flags(&self, kind: Kind) -> &[Flag] {
        match kind {
            Kind::A => &self.a_flags,
            Kind::AStar => &self.a_star_flags,
        }
    }

    /// All distinct flags, sorted.
    pub fn distinct(&self) -> Vec<Flag> {
        let mut all: Vec<Flag> = self.a_flags.iter().chain(&self.a_star_flags).cloned().collect();
        all.sort();
        all.dedup();
        all
    }

    pub fn len(&self) -> usize {
        self.distinct().len()
    }

    pub fn is_empty(&self) -> bool {
        self.a_flags.is_empty() && self.a_star_flags.is_empty()
    }

    pub fn role_of(&self, flag: &Flag) -> Option<Kind> {
        if self.a_flags.contains(flag) {
            Some(Kind::A)
        } else if self.a_star_flags.contains(flag) {
            Some(Kind::AStar)
        } else {
            None
        }
    }

    /// Equality of the underlying sets, ignoring roles.
    pub fn same_flags(&self, other: &Self) -> bool {
        self.distinct() == other.distinct()
    }
}

pub fn standard_flag_set(p: &LeonardPair) -> StandardFlagSet {
    StandardFlagSet {
        a_flags: p.standard_flags(Kind::A).to_vec(),
        a_star_flags: p.standard_flags(Kind::AStar).to_vec(),
    }
}

/// A partition of four flags into two unordered pairs. Stored normalized
/// (each class sorted, classes sorted) so that `==` compares partitions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrincipalRelation {
    classes: [[Flag; 2]; 2],
}

impl PrincipalRelation {
    pub fn new(first: [Flag; 2], second: [Flag; 2]) -> Self {
        let norm = |[x, y]: [Flag; 2]| if x <= y { [x, y] } else { [y, x] };
        let (p, q) = (norm(first), norm(second));
        let classes = if p <= q { [p, q] } else { [q, p] };
        Self { classes }
    }

    pub fn classes(&self) -> &[[Flag; 2]; 2] {
        &self.classes
    }

    pub fn related(&self, x: &Flag, y: &Flag) -> bool {
        self.classes
            .iter()
            .any(|c| (c[0] == *x && c[1] == *y) || (c[0] == *y && c[1] == *x))
    }

    /// The three ways of splitting four flags into two pairs.
    pub fn all_partitions(flags: &[Flag; 4]) -> [Self; 3] {
        let [a, b, c, d] = flags.clone();
        [
            Self::new([a.clone(), b.clone()], [c.clone(), d.clone()]),
            Self::new([a.clone(), c.clone()], [b.clone(), d.clone()]),
            Self::new([a, d], [b, c]),
        ]
    }
}

/// `{A-standard flags} | {A*-standard flags}`.
pub fn principal_relation(p: &LeonardPair) -> Result<PrincipalRelation> {
    if p.diameter() == 0 {
        return Err(Error::DegenerateDimension);
    }
    let set = standard_flag_set(p);
    let pair = |kind| -> [Flag; 2] {
        let f = set.flags(kind);
        [f[0].clone(), f[1].clone()]
    };
    Ok(PrincipalRelation::new(pair(Kind::A), pair(Kind::AStar)))
}
