//! `sl₂` constructions: Chevalley bases, the irreducible modules `V^d`,
//! the six operators built from four lines in `V¹`, Krawtchouk pairs and
//! their normal form, and adjacent companions of arithmetic pairs.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::adjacency::mutual_adjacency;
use crate::linalg::{rank, represent_in_basis, ExactMatrix, Rational, Vector};
use crate::pair::{verify_leonard, Kind, LeonardPair};
use crate::sequences::{classify_sequence, SequenceClass};
use crate::{Error, Result};

fn r(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// `e, f, h` with `[e,f] = h`, `[e,h] = −2e`, `[f,h] = 2f`, acting on `V¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChevalleyBasis {
    pub e: ExactMatrix,
    pub f: ExactMatrix,
    pub h: ExactMatrix,
}

impl ChevalleyBasis {
    pub fn standard() -> Self {
        let (e, f, h) = standard_generators(1);
        Self { e, f, h }
    }

    /// The basis with `e v₁ = v₀`, `f v₀ = v₁`, `h v₀ = v₀`, `h v₁ = −v₁`.
    pub fn from_basis(v0: &[Rational], v1: &[Rational]) -> Result<Self> {
        let s = pair_matrix(v0, v1)?;
        let std = Self::standard();
        let inv = s.inverse().expect("pair_matrix checks independence");
        let conj = |m: &ExactMatrix| &(&s * m) * &inv;
        Ok(Self {
            e: conj(&std.e),
            f: conj(&std.f),
            h: conj(&std.h),
        })
    }

    pub fn check_relations(&self) -> bool {
        self.e.commutator(&self.f) == self.h
            && self.e.commutator(&self.h) == self.e.scale(&Rational::from_integer((-2).into()))
            && self.f.commutator(&self.h) == self.f.scale(&r(2))
            && [&self.e, &self.f, &self.h].iter().all(|m| m.trace().is_zero())
    }
}

pub fn chevalley_from_basis(v0: &[Rational], v1: &[Rational]) -> Result<ChevalleyBasis> {
    ChevalleyBasis::from_basis(v0, v1)
}

/// `alpha·h + beta·e + gamma·f` relative to some Chevalley basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Element {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl Sl2Element {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        Self { alpha, beta, gamma }
    }

    pub fn to_matrix(&self, basis: &ChevalleyBasis) -> ExactMatrix {
        let h = basis.h.scale(&self.alpha);
        let e = basis.e.scale(&self.beta);
        let f = basis.f.scale(&self.gamma);
        &(&h + &e) + &f
    }

    /// The Lie bracket, from `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
    pub fn bracket(&self, other: &Self) -> Self {
        let two = r(2);
        Self {
            alpha: &self.beta * &other.gamma - &self.gamma * &other.beta,
            beta: &two * (&self.alpha * &other.beta - &self.beta * &other.alpha),
            gamma: -&two * (&self.alpha * &other.gamma - &self.gamma * &other.alpha),
        }
    }
}

/// `E`, `F`, `H` on `V^d` in the basis where `E` has superdiagonal
/// `(d, d−1, …, 1)`, `F` has subdiagonal `(1, …, d)` and
/// `H = diag(d, d−2, …, −d)`.
pub fn standard_generators(d: usize) -> (ExactMatrix, ExactMatrix, ExactMatrix) {
    let n = d + 1;
    let mut e = ExactMatrix::zeros(n, n);
    let mut f = ExactMatrix::zeros(n, n);
    for i in 0..d {
        e.set(i, i + 1, r(d - i));
        f.set(i + 1, i, r(i + 1));
    }
    let h = ExactMatrix::diagonal(&(0..n).map(|i| r(d) - r(2 * i)).collect::<Vec<_>>());
    (e, f, h)
}

/// Columns `u`, `v`, checked independent.
fn pair_matrix(u: &[Rational], v: &[Rational]) -> Result<ExactMatrix> {
    if u.len() != 2 || v.len() != 2 {
        return Err(Error::ShapeMismatch {
            expected: "vectors of length 2".into(),
            found: format!("lengths {} and {}", u.len(), v.len()),
        });
    }
    let s = ExactMatrix::from_columns(2, &[u.to_vec(), v.to_vec()])?;
    if s.determinant()?.is_zero() {
        return Err(Error::DependentVectors(format!("[{}, {}] and [{}, {}]", u[0], u[1], v[0], v[1])));
    }
    Ok(s)
}

/// The 2×2 matrix fixing `u_plus` and negating `u_minus`.
pub fn matrix_with_eigenpairs(u_plus: &[Rational], u_minus: &[Rational]) -> Result<ExactMatrix> {
    let s = pair_matrix(u_plus, u_minus)?;
    let inv = s.inverse().expect("independent columns");
    let d = ExactMatrix::diagonal(&[Rational::one(), -Rational::one()]);
    Ok(&(&s * &d) * &inv)
}

fn check_2x2(m: &ExactMatrix) -> Result<()> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::ShapeMismatch {
            expected: "2x2".into(),
            found: format!("{}x{}", m.rows(), m.cols()),
        });
    }
    Ok(())
}

/// Coordinates of a traceless 2×2 matrix in `basis`.
pub fn decompose_sl2(m: &ExactMatrix, basis: &ChevalleyBasis) -> Result<Sl2Element> {
    check_2x2(m)?;
    if !m.trace().is_zero() {
        return Err(Error::NotTraceless);
    }
    // columns h, e, f, m flattened to length-4 vectors
    let cols: Vec<Vector> = [&basis.h, &basis.e, &basis.f, m]
        .iter()
        .map(|x| x.entries().to_vec())
        .collect();
    let aug = ExactMatrix::from_columns(4, &cols)?;
    let reduced = crate::linalg::rref(&aug);
    for i in 0..3 {
        let pivot = reduced.row(i);
        if !pivot[i].is_one() || (0..3).any(|j| j != i && !pivot[j].is_zero()) {
            return Err(Error::TheoremViolation("h, e, f do not span sl2".into()));
        }
    }
    if !reduced.get(3, 3).is_zero() {
        return Err(Error::TheoremViolation("traceless matrix outside the span of h, e, f".into()));
    }
    Ok(Sl2Element::new(
        reduced.get(0, 3).clone(),
        reduced.get(1, 3).clone(),
        reduced.get(2, 3).clone(),
    ))
}

/// The action of `elem` on `V^d`.
pub fn lift(elem: &Sl2Element, d: usize) -> ExactMatrix {
    let (e, f, h) = standard_generators(d);
    &(&h.scale(&elem.alpha) + &e.scale(&elem.beta)) + &f.scale(&elem.gamma)
}

/// Verdicts on the three equivalent conditions for a pair of 2×2 matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PtlReport {
    /// Pairwise independent `±1` eigenvectors `v₀, v₁` of `a` and
    /// `w₀, w₁` of `a*`.
    pub eigenvectors: bool,
    /// `a, a*, [a,a*]` span `sl₂` and `det a = det a* = −1`.
    pub generation: bool,
    /// `a = h`, `a* = αh + βe + γf` in some Chevalley basis with
    /// `βγ = 1 − α² ≠ 0`.
    pub chevalley_form: bool,
}

impl PtlReport {
    pub fn all_hold(&self) -> bool {
        self.eigenvectors && self.generation && self.chevalley_form
    }

    pub fn consistent(&self) -> bool {
        self.eigenvectors == self.generation && self.generation == self.chevalley_form
    }
}

/// Eigenvectors of `m` for `+1` and `−1` if `m` has exactly that spectrum.
fn pm_eigenvectors(m: &ExactMatrix) -> Option<(Vector, Vector)> {
    let one = Rational::one();
    let kernel = |s: &Rational| {
        let shifted = m - &ExactMatrix::identity(2).scale(s);
        let ns = crate::linalg::null_space(&shifted);
        (ns.len() == 1).then(|| ns[0].clone())
    };
    Some((kernel(&one)?, kernel(&-one)?))
}

fn independent(u: &[Rational], v: &[Rational]) -> bool {
    !(&u[0] * &v[1] - &u[1] * &v[0]).is_zero()
}

pub fn check_ptl(a: &ExactMatrix, a_star: &ExactMatrix) -> Result<PtlReport> {
    check_2x2(a)?;
    check_2x2(a_star)?;
    let eigenvectors = match (pm_eigenvectors(a), pm_eigenvectors(a_star)) {
        (Some((v0, v1)), Some((w0, w1))) => {
            let all = [&v0, &v1, &w0, &w1];
            (0..4).all(|i| (i + 1..4).all(|j| independent(all[i], all[j])))
        }
        _ => false,
    };

    let traceless = a.trace().is_zero() && a_star.trace().is_zero();
    let comm = a.commutator(a_star);
    let span = ExactMatrix::from_columns(4, &[a.entries().to_vec(), a_star.entries().to_vec(), comm.entries().to_vec()])?;
    let minus_one = -Rational::one();
    let generation =
        traceless && rank(&span) == 3 && a.determinant()? == minus_one && a_star.determinant()? == minus_one;

    let chevalley_form = match pm_eigenvectors(a) {
        Some((v0, v1)) if a_star.trace().is_zero() => {
            let basis = ChevalleyBasis::from_basis(&v0, &v1)?;
            let x = decompose_sl2(a_star, &basis)?;
            let bg = &x.beta * &x.gamma;
            bg == Rational::one() - &x.alpha * &x.alpha && !bg.is_zero()
        }
        _ => false,
    };
    Ok(PtlReport {
        eigenvectors,
        generation,
        chevalley_form,
    })
}

/// The six 2×2 operators built from four pairwise independent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SixOperators {
    pub a: ExactMatrix,
    pub a_star: ExactMatrix,
    pub b: ExactMatrix,
    pub b_star: ExactMatrix,
    pub c: ExactMatrix,
    pub c_star: ExactMatrix,
}

impl SixOperators {
    pub fn pairs(&self) -> [(&ExactMatrix, &ExactMatrix); 3] {
        [(&self.a, &self.a_star), (&self.b, &self.b_star), (&self.c, &self.c_star)]
    }
}

pub fn construct_six(v0: &[Rational], v1: &[Rational], w0: &[Rational], w1: &[Rational]) -> Result<SixOperators> {
    Ok(SixOperators {
        a: matrix_with_eigenpairs(v0, v1)?,
        a_star: matrix_with_eigenpairs(w0, w1)?,
        b: matrix_with_eigenpairs(v0, w0)?,
        b_star: matrix_with_eigenpairs(w1, v1)?,
        c: matrix_with_eigenpairs(v0, w1)?,
        c_star: matrix_with_eigenpairs(w0, v1)?,
    })
}

fn lift_six(six: &SixOperators, basis: &ChevalleyBasis, d: usize) -> Result<[(ExactMatrix, ExactMatrix); 3]> {
    let up = |m: &ExactMatrix| decompose_sl2(m, basis).map(|x| lift(&x, d));
    Ok([
        (up(&six.a)?, up(&six.a_star)?),
        (up(&six.b)?, up(&six.b_star)?),
        (up(&six.c)?, up(&six.c_star)?),
    ])
}

fn assert_mutual(pairs: &[LeonardPair]) -> Result<()> {
    if pairs[0].diameter() == 0 {
        return Ok(());
    }
    if !mutual_adjacency(pairs)?.mutually_adjacent {
        return Err(Error::TheoremViolation("constructed pairs are not mutually adjacent".into()));
    }
    Ok(())
}

/// `(a, a*)`, `(b, b*)`, `(c, c*)` acting on `V^d`, written in the basis
/// attached to the Chevalley basis of `(v0, v1)`. Each is verified as a
/// Leonard pair and, for `d ≥ 1`, the three are checked to be mutually
/// adjacent.
pub fn three_mutually_adjacent(
    d: usize,
    v0: &[Rational],
    v1: &[Rational],
    w0: &[Rational],
    w1: &[Rational],
) -> Result<[LeonardPair; 3]> {
    let six = construct_six(v0, v1, w0, w1)?;
    let basis = ChevalleyBasis::from_basis(v0, v1)?;
    let [a, b, c] = lift_six(&six, &basis, d)?;
    let pairs = [
        verify_leonard(&a.0, &a.1)?,
        verify_leonard(&b.0, &b.1)?,
        verify_leonard(&c.0, &c.1)?,
    ];
    assert_mutual(&pairs)?;
    Ok(pairs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrawtchoukParameters {
    d: usize,
    p: Rational,
}

impl KrawtchoukParameters {
    pub fn new(d: usize, p: Rational) -> Result<Self> {
        if p.is_zero() || p.is_one() {
            return Err(Error::InvalidP(p.to_string()));
        }
        Ok(Self { d, p })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    /// `a* = (1−2p)h + 2pe + 2(1−p)f` on `V¹`.
    pub fn dual_element(&self) -> Sl2Element {
        let one = Rational::one();
        let two = r(2);
        Sl2Element::new(&one - &two * &self.p, &two * &self.p, &two * (&one - &self.p))
    }

    /// `A = diag(d − 2i)` and `A*` tridiagonal with diagonal
    /// `(1−2p)(d−2i)`, superdiagonal `2p(d−i)`, subdiagonal `2(1−p)i`.
    pub fn matrices(&self) -> (ExactMatrix, ExactMatrix) {
        let (_, _, h) = standard_generators(self.d);
        (h, lift(&self.dual_element(), self.d))
    }
}

pub fn krawtchouk_pair(params: &KrawtchoukParameters) -> Result<LeonardPair> {
    let (a, a_star) = params.matrices();
    verify_leonard(&a, &a_star)
}

/// `(αA + βI, α*A* + β*I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineParameters {
    pub alpha: Rational,
    pub beta: Rational,
    pub alpha_star: Rational,
    pub beta_star: Rational,
}

impl AffineParameters {
    pub fn identity() -> Self {
        Self {
            alpha: Rational::one(),
            beta: Rational::zero(),
            alpha_star: Rational::one(),
            beta_star: Rational::zero(),
        }
    }

    pub fn apply(&self, a: &ExactMatrix, a_star: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
        if self.alpha.is_zero() || self.alpha_star.is_zero() {
            return Err(Error::ZeroScale);
        }
        let shift = |m: &ExactMatrix, s: &Rational, t: &Rational| &m.scale(s) + &ExactMatrix::identity(m.rows()).scale(t);
        Ok((shift(a, &self.alpha, &self.beta), shift(a_star, &self.alpha_star, &self.beta_star)))
    }
}

pub fn affine_transform(
    pair: &LeonardPair,
    alpha: Rational,
    beta: Rational,
    alpha_star: Rational,
    beta_star: Rational,
) -> Result<LeonardPair> {
    let params = AffineParameters { alpha, beta, alpha_star, beta_star };
    let (a, a_star) = params.apply(pair.a(), pair.a_star())?;
    verify_leonard(&a, &a_star)
}

/// A change of basis `S` and parameter `p` with
/// `S⁻¹(αA + βI)S = diag(d − 2i)` and `S⁻¹(α*A* + β*I)S` the Krawtchouk
/// matrix for `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub s: ExactMatrix,
    pub p: Rational,
    pub affine: AffineParameters,
    /// Set when `d = 0`, where `p` carries no information.
    pub degenerate: bool,
}

/// Maps `seq` onto `(d, d−2, …, −d)`; `seq` must be arithmetic.
fn normalizing_affine(seq: &[Rational]) -> (Rational, Rational) {
    let d = r(seq.len() - 1);
    let step = &seq[1] - &seq[0];
    let alpha = Rational::from_integer((-2).into()) / step;
    let beta = d - &alpha * &seq[0];
    (alpha, beta)
}

fn require_arithmetic(seq: &[Rational]) -> Result<()> {
    match classify_sequence(seq)? {
        SequenceClass::Arithmetic { .. } => Ok(()),
        _ => Err(Error::NotArithmetic),
    }
}

fn try_orientation(pair: &LeonardPair, ei: usize, di: usize) -> Result<Option<NormalForm>> {
    let d = pair.diameter();
    let theta = &pair.eigenvalue_sequences(Kind::A)[ei];
    let theta_star = &pair.eigenvalue_sequences(Kind::AStar)[di];
    let (alpha, beta) = normalizing_affine(theta);
    let (alpha_star, beta_star) = normalizing_affine(theta_star);
    let affine = AffineParameters { alpha, beta, alpha_star, beta_star };
    let (a, a_star) = affine.apply(pair.a(), pair.a_star())?;

    let u = pair.standard_decompositions(Kind::A)[ei].representatives();
    let t = represent_in_basis(&a_star, &u)?;
    let two = r(2);
    let p = (Rational::one() - t.get(0, 0) / r(d)) / &two;
    let Ok(params) = KrawtchoukParameters::new(d, p.clone()) else {
        return Ok(None);
    };
    let (target_a, target_a_star) = params.matrices();
    let mut s = vec![Rational::one()];
    for i in 0..d {
        let next = t.get(i + 1, i) * &s[i] / target_a_star.get(i + 1, i);
        s.push(next);
    }
    let columns: Vec<Vector> = u
        .iter()
        .zip(&s)
        .map(|(col, k)| col.iter().map(|x| x * k).collect())
        .collect();
    let big_s = ExactMatrix::from_columns(d + 1, &columns)?;
    let ok = represent_in_basis(&a_star, &columns)? == target_a_star
        && represent_in_basis(&a, &columns)? == target_a;
    Ok(ok.then_some(NormalForm { s: big_s, p, affine, degenerate: false }))
}

pub fn krawtchouk_normal_form(pair: &LeonardPair) -> Result<NormalForm> {
    require_arithmetic(&pair.eigenvalue_sequences(Kind::A)[0])?;
    require_arithmetic(&pair.eigenvalue_sequences(Kind::AStar)[0])?;
    if pair.diameter() == 0 {
        return Ok(NormalForm {
            s: ExactMatrix::identity(1),
            p: Rational::new(1.into(), 2.into()),
            affine: AffineParameters {
                alpha: Rational::one(),
                beta: -pair.a().get(0, 0).clone(),
                alpha_star: Rational::one(),
                beta_star: -pair.a_star().get(0, 0).clone(),
            },
            degenerate: true,
        });
    }
    for ei in 0..2 {
        for di in 0..2 {
            if let Some(nf) = try_orientation(pair, ei, di)? {
                return Ok(nf);
            }
        }
    }
    Err(Error::NotKrawtchouk(
        "no orientation of the spectra matches the tridiagonal normal form".into(),
    ))
}

/// Two Leonard pairs which, together with the input, are mutually adjacent.
#[derive(Clone, Debug)]
pub struct Companions {
    pub b: LeonardPair,
    pub c: LeonardPair,
    pub normal_form: NormalForm,
}

/// Builds `(B, B*)` and `(C, C*)` for a pair with arithmetic eigenvalue and
/// dual eigenvalue sequences.
///
/// In normal coordinates the input is `(h, (1−2p)h + 2pe + 2(1−p)f)` lifted
/// to `V^d`, whose `±1` eigenvectors on `V¹` are `(1,0)`, `(0,1)` and
/// `(1,1)`, `(p, p−1)`. The companions are the other two lifted pairs
/// from those four vectors, moved back by `S`.
pub fn companions(pair: &LeonardPair) -> Result<Companions> {
    let nf = krawtchouk_normal_form(pair)?;
    let d = pair.diameter();
    let one = Rational::one();
    let zero = Rational::zero();
    let v0 = vec![one.clone(), zero.clone()];
    let v1 = vec![zero, one.clone()];
    let w0 = vec![one.clone(), one.clone()];
    let w1 = vec![nf.p.clone(), &nf.p - &one];
    let six = construct_six(&v0, &v1, &w0, &w1)?;
    let [_, b, c] = lift_six(&six, &ChevalleyBasis::standard(), d)?;
    let back = |m: &ExactMatrix| m.conjugate_by(&nf.s).expect("normal form basis is invertible");
    let b = verify_leonard(&back(&b.0), &back(&b.1))?;
    let c = verify_leonard(&back(&c.0), &back(&c.1))?;
    assert_mutual(&[pair.clone(), b.clone(), c.clone()])?;
    Ok(Companions { b, c, normal_form: nf })
}
