//! Exact eigen-decomposition for matrices with a simple rational spectrum.
//!
//! The characteristic polynomial comes from the Faddeev–LeVerrier trace
//! recursion (valid in characteristic 0). Rational roots are found by
//! enumerating `±p/q` with `p | c₀` and `q | cₙ` on the integer-cleared
//! polynomial, using Pollard rho to factor large coefficients.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::ExactMatrix;
use super::rational::Rational;
use super::subspace::{null_space, Subspace};
use crate::{Error, Result};

/// An eigenvalue with its (one-dimensional) eigenspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenPair {
    pub value: Rational,
    pub space: Subspace,
}

/// Coefficients `c₀, …, cₙ` (lowest degree first) of `det(xI − m)`.
pub fn characteristic_polynomial(m: &ExactMatrix) -> Result<Vec<Rational>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut acc = ExactMatrix::zeros(n, n);
    let identity = ExactMatrix::identity(n);
    for k in 1..=n {
        acc = &(m * &acc) + &identity.scale(&coeffs[n - k + 1]);
        let t = (m * &acc).trace();
        coeffs[n - k] = -t / Rational::from_integer(BigInt::from(k));
    }
    Ok(coeffs)
}

/// Distinct rational roots of the polynomial `Σ coeffs[i] xⁱ`, descending.
pub fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    let mut ints = clear_denominators(coeffs);
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    if ints.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let zeros = ints.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(Rational::zero());
        ints.drain(..zeros);
    }
    let degree = ints.len() - 1;
    if degree > 0 {
        let low = ints[0].magnitude().clone();
        let high = ints[degree].magnitude().clone();
        let numerators = divisors(&low);
        let denominators = divisors(&high);
        'outer: for q in &denominators {
            for p in &numerators {
                if !p.gcd(q).is_one() {
                    continue;
                }
                for sign in [1, -1] {
                    let p = BigInt::from(p.clone()) * sign;
                    let q = BigInt::from(q.clone());
                    if homogeneous_eval(&ints, &p, &q).is_zero() {
                        roots.push(Rational::new(p, q));
                        if roots.len() == degree + usize::from(zeros > 0) {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    roots.sort_by(|a, b| b.cmp(a));
    roots
}

/// Full eigen-decomposition; every eigenspace is one-dimensional and the
/// eigenvalues are returned in descending order.
pub fn simple_rational_eigen(m: &ExactMatrix) -> Result<Vec<EigenPair>> {
    let poly = characteristic_polynomial(m)?;
    let n = m.rows();
    let roots = rational_roots(&poly);
    if roots.len() != n {
        return Err(Error::NotSimpleRationalSpectrum {
            found: roots.len(),
            needed: n,
        });
    }
    let identity = ExactMatrix::identity(n);
    roots
        .into_iter()
        .map(|value| {
            let shifted = m - &identity.scale(&value);
            let kernel = null_space(&shifted);
            if kernel.len() != 1 {
                return Err(Error::TheoremViolation(format!(
                    "eigenspace for simple eigenvalue {value} has dimension {}",
                    kernel.len()
                )));
            }
            Ok(EigenPair {
                space: Subspace::span(n, &kernel)?,
                value,
            })
        })
        .collect()
}

/// Scales rational coefficients to coprime integers.
fn clear_denominators(coeffs: &[Rational]) -> Vec<BigInt> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

/// `qⁿ · P(p/q)` evaluated in integers.
fn homogeneous_eval(coeffs: &[BigInt], p: &BigInt, q: &BigInt) -> BigInt {
    let n = coeffs.len() - 1;
    let mut q_pows = Vec::with_capacity(n + 1);
    q_pows.push(BigInt::one());
    for i in 1..=n {
        let next = &q_pows[i - 1] * q;
        q_pows.push(next);
    }
    let mut p_pow = BigInt::one();
    let mut total = BigInt::zero();
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            total += c * &p_pow * &q_pows[n - i];
        }
        p_pow *= p;
    }
    total
}

fn divisors(n: &BigUint) -> Vec<BigUint> {
    if n.is_zero() {
        return Vec::new();
    }
    let mut primes = BTreeMap::new();
    factor_into(n.clone(), &mut primes);
    let mut divs = vec![BigUint::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e + 1));
        for d in &divs {
            let mut x = d.clone();
            next.push(x.clone());
            for _ in 0..e {
                x *= &p;
                next.push(x.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

fn factor_into(mut n: BigUint, out: &mut BTreeMap<BigUint, usize>) {
    for small in 2u32..1000 {
        let p = BigUint::from(small);
        if &p * &p > n {
            break;
        }
        while (&n % &p).is_zero() {
            *out.entry(p.clone()).or_default() += 1;
            n /= &p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *out.entry(m).or_default() += 1;
            continue;
        }
        let f = pollard_rho(&m);
        stack.push(&m / &f);
        stack.push(f);
    }
}

fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    const BASES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
    for b in BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for b in BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n` (Floyd cycle detection).
fn pollard_rho(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    for c in 1u32.. {
        let step = |x: &BigUint| (x * x + c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        loop {
            x = step(&x);
            y = step(&step(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            let g = diff.gcd(n);
            if g.is_one() {
                continue;
            }
            if g != *n {
                return g;
            }
            break;
        }
    }
    unreachable!("pollard rho exhausted constants")
}
