//! JSON input and report formats. Rationals are always strings (`"4/3"`,
//! `"-1"`), so every document round-trips exactly.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::adjacency::{
    are_adjacent, are_adjacent_via_flags, build_labeling, classify_dichotomy, verify_transition_identity,
    Dichotomy, MutualAdjacency,
};
use crate::flags::{are_opposite, principal_relation, standard_flag_set, Flag};
use crate::linalg::{format_rational, parse_rational, ExactMatrix, Rational, Subspace, Vector};
use crate::pair::{Decomposition, Kind, LeonardPair};
use crate::sequences::SequenceClass;
use crate::sl2::{AffineParameters, Companions, NormalForm};
use crate::{Error, Result};

/// `{"a": <matrix>, "a_star": <matrix>}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub a: ExactMatrix,
    pub a_star: ExactMatrix,
}

impl PairJson {
    pub fn of(p: &LeonardPair) -> Self {
        Self {
            a: p.a().clone(),
            a_star: p.a_star().clone(),
        }
    }
}

pub fn parse_pair(text: &str) -> Result<PairJson> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("pair JSON: {e}")))
}

/// A rational given as a string, or as a JSON integer for convenience.
#[derive(Deserialize)]
#[serde(untagged)]
enum RationalInput {
    Text(String),
    Integer(i64),
}

impl RationalInput {
    fn value(&self) -> Result<Rational> {
        match self {
            RationalInput::Text(s) => parse_rational(s),
            RationalInput::Integer(n) => Ok(Rational::from_integer((*n).into())),
        }
    }
}

fn values(xs: &[RationalInput]) -> Result<Vector> {
    xs.iter().map(RationalInput::value).collect()
}

#[derive(Deserialize)]
struct VectorsInput {
    v0: Vec<RationalInput>,
    v1: Vec<RationalInput>,
    w0: Vec<RationalInput>,
    w1: Vec<RationalInput>,
}

/// `{"v0": [..], "v1": [..], "w0": [..], "w1": [..]}`.
pub fn parse_vectors(text: &str) -> Result<[Vector; 4]> {
    let raw: VectorsInput = serde_json::from_str(text).map_err(|e| Error::Parse(format!("vectors JSON: {e}")))?;
    Ok([values(&raw.v0)?, values(&raw.v1)?, values(&raw.w0)?, values(&raw.w1)?])
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SequenceInput {
    Bare(Vec<RationalInput>),
    Wrapped { sequence: Vec<RationalInput> },
}

/// A bare array of rationals, or `{"sequence": [...]}`.
pub fn parse_sequence(text: &str) -> Result<Vector> {
    let raw: SequenceInput =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("sequence JSON: {e}")))?;
    match raw {
        SequenceInput::Bare(xs) | SequenceInput::Wrapped { sequence: xs } => values(&xs),
    }
}

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn subspace(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|b| vector(b)).collect())
}

/// A flag as the list of its components' RREF bases.
pub fn flag(f: &Flag) -> Value {
    Value::Array(f.components().iter().map(subspace).collect())
}

/// A decomposition as the list of its components' RREF bases.
pub fn decomposition(d: &Decomposition) -> Value {
    Value::Array(d.components().iter().map(subspace).collect())
}

pub fn parse_rational_vector(v: &Value) -> Result<Vector> {
    let xs = v.as_array().ok_or_else(|| Error::Parse("expected an array".into()))?;
    xs.iter()
        .map(|x| x.as_str().ok_or_else(|| Error::Parse("expected a rational string".into())).and_then(parse_rational))
        .collect()
}

/// Inverse of [`flag`].
pub fn parse_flag(v: &Value) -> Result<Flag> {
    let comps = v.as_array().ok_or_else(|| Error::Parse("flag must be an array".into()))?;
    let n = comps.len();
    let parsed = comps
        .iter()
        .map(|c| {
            let basis = c
                .as_array()
                .ok_or_else(|| Error::Parse("component must be an array".into()))?
                .iter()
                .map(parse_rational_vector)
                .collect::<Result<Vec<_>>>()?;
            Subspace::span(n, &basis)
        })
        .collect::<Result<Vec<_>>>()?;
    Flag::new(parsed)
}

pub fn pair(p: &LeonardPair) -> Value {
    serde_json::to_value(PairJson::of(p)).expect("matrices serialize")
}

pub fn verification_report(p: &LeonardPair) -> Value {
    let side = |kind: Kind| {
        json!({
            "sequences": p.eigenvalue_sequences(kind).iter().map(|s| vector(s)).collect::<Vec<_>>(),
            "standard_decompositions": p.standard_decompositions(kind).iter().map(decomposition).collect::<Vec<_>>(),
        })
    };
    json!({
        "leonard_pair": true,
        "d": p.diameter(),
        "a": side(Kind::A),
        "a_star": side(Kind::AStar),
    })
}

pub fn rejection_report(err: &Error) -> Value {
    json!({ "leonard_pair": false, "reason": err.to_string() })
}

fn role(kind: Kind) -> &'static str {
    match kind {
        Kind::A => "A",
        Kind::AStar => "A*",
    }
}

pub fn flags_report(p: &LeonardPair) -> Result<Value> {
    let set = standard_flag_set(p);
    let distinct = set.distinct();
    let flags: Vec<Value> = distinct
        .iter()
        .map(|f| json!({ "role": set.role_of(f).map(role), "components": flag(f) }))
        .collect();
    let mut opposite = true;
    for i in 0..distinct.len() {
        for j in i + 1..distinct.len() {
            opposite &= are_opposite(&distinct[i], &distinct[j])?;
        }
    }
    let relation = if p.diameter() == 0 {
        Value::Null
    } else {
        let rel = principal_relation(p)?;
        let index = |f: &Flag| distinct.iter().position(|g| g == f).expect("relation uses the flag set");
        Value::Array(
            rel.classes()
                .iter()
                .map(|c| json!([index(&c[0]), index(&c[1])]))
                .collect(),
        )
    };
    Ok(json!({
        "d": p.diameter(),
        "count": distinct.len(),
        "flags": flags,
        "pairwise_opposite": opposite,
        "principal_relation": relation,
    }))
}

pub fn dichotomy(d: &Dichotomy) -> Value {
    match d {
        Dichotomy::Arithmetic => json!({ "branch": "arithmetic" }),
        Dichotomy::QClassical { q } => json!({ "branch": "q-classical", "q": rational(q) }),
    }
}

/// Verdict, and for an adjacent couple with `d ≥ 1` the labeling, the four
/// sequences, the dichotomy branch and the identity check.
pub fn adjacency_report(p1: &LeonardPair, p2: &LeonardPair) -> Result<Value> {
    let definition = are_adjacent(p1, p2)?;
    if p1.diameter() == 0 {
        return Ok(json!({
            "adjacent": definition,
            "d": 0,
            "warning": "degenerate dimension: adjacency holds vacuously when d = 0",
        }));
    }
    let flags_route = are_adjacent_via_flags(p1, p2)?;
    if definition != flags_route {
        return Err(Error::TheoremViolation(format!(
            "definition route says {definition}, flag route says {flags_route}"
        )));
    }
    if !definition {
        return Ok(json!({ "adjacent": false, "d": p1.diameter() }));
    }
    let lab = build_labeling(p1, p2)?;
    let check = verify_transition_identity(&lab);
    Ok(json!({
        "adjacent": true,
        "d": p1.diameter(),
        "labeling": { "w": flag(&lab.w), "x": flag(&lab.x), "y": flag(&lab.y), "z": flag(&lab.z) },
        "sequences": {
            "theta": vector(&lab.theta),
            "theta_star": vector(&lab.theta_star),
            "eta": vector(&lab.eta),
            "eta_star": vector(&lab.eta_star),
        },
        "dichotomy": dichotomy(&classify_dichotomy(&lab)?),
        "identity_check": {
            "holds": check.holds,
            "cells_checked": check.cells_checked,
            "first_failure": check.first_failure,
        },
    }))
}

pub fn affine(a: &AffineParameters) -> Value {
    json!({
        "alpha": rational(&a.alpha),
        "beta": rational(&a.beta),
        "alpha_star": rational(&a.alpha_star),
        "beta_star": rational(&a.beta_star),
    })
}

pub fn normal_form(nf: &NormalForm) -> Value {
    json!({
        "p": rational(&nf.p),
        "s": nf.s,
        "affine": affine(&nf.affine),
        "degenerate": nf.degenerate,
    })
}

/// Three pairs plus whatever is needed to rebuild them.
pub fn triple_report(pairs: &[LeonardPair; 3], d: usize, p: Option<&Rational>, vectors: &[Vector; 4]) -> Value {
    json!({
        "d": d,
        "pairs": pairs.iter().map(pair).collect::<Vec<_>>(),
        "construction": {
            "p": p.map(rational),
            "s": ExactMatrix::identity(d + 1),
            "vectors": {
                "v0": vector(&vectors[0]),
                "v1": vector(&vectors[1]),
                "w0": vector(&vectors[2]),
                "w1": vector(&vectors[3]),
            },
        },
    })
}

#[derive(Deserialize)]
struct TripleInput {
    pairs: Vec<PairJson>,
}

/// The `"pairs"` of a triple document.
pub fn parse_triple_pairs(text: &str) -> Result<Vec<PairJson>> {
    let raw: TripleInput = serde_json::from_str(text).map_err(|e| Error::Parse(format!("triple JSON: {e}")))?;
    Ok(raw.pairs)
}

pub fn mutual(m: &MutualAdjacency) -> Value {
    serde_json::to_value(m).expect("plain data serializes")
}

pub fn companions_report(c: &Companions, m: &MutualAdjacency) -> Value {
    json!({
        "b": c.b.a(),
        "b_star": c.b.a_star(),
        "c": c.c.a(),
        "c_star": c.c.a_star(),
        "normal_form": normal_form(&c.normal_form),
        "mutually_adjacent": m.mutually_adjacent,
        "pairwise": mutual(m)["pairwise"],
    })
}

pub fn sequence_class(c: &SequenceClass) -> Value {
    match c {
        SequenceClass::Arithmetic { alpha, beta } => {
            json!({ "class": "arithmetic", "alpha": rational(alpha), "beta": rational(beta) })
        }
        SequenceClass::QClassical { q, alpha, beta } => json!({
            "class": "q-classical",
            "q": rational(q),
            "alpha": rational(alpha),
            "beta": rational(beta),
        }),
        SequenceClass::Neither => json!({ "class": "neither" }),
    }
}
