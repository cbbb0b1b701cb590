//! Arithmetic and q-classical sequences.
//!
//! A sequence of distinct scalars `θ₀, …, θ_d` is *arithmetic* when
//! `θᵢ = αi + β` and *q-classical* when `θᵢ = αqⁱ + β` with `q ∉ {0, 1}`.
//! Both are detected from the difference ratios
//! `(θᵢ − θᵢ₊₁) / (θᵢ₋₁ − θᵢ)`, which are constantly 1, resp. `q`.

use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceClass {
    /// `θᵢ = alpha·i + beta`.
    Arithmetic { alpha: Rational, beta: Rational },
    /// `θᵢ = alpha·qⁱ + beta`.
    QClassical {
        q: Rational,
        alpha: Rational,
        beta: Rational,
    },
    Neither,
}

impl SequenceClass {
    /// The i-th term predicted by the recovered parameters.
    pub fn term(&self, i: usize) -> Option<Rational> {
        match self {
            SequenceClass::Arithmetic { alpha, beta } => {
                Some(alpha * Rational::from_integer(i.into()) + beta)
            }
            SequenceClass::QClassical { q, alpha, beta } => {
                Some(alpha * num_traits::pow(q.clone(), i) + beta)
            }
            SequenceClass::Neither => None,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            SequenceClass::Arithmetic { .. } => "arithmetic",
            SequenceClass::QClassical { .. } => "q-classical",
            SequenceClass::Neither => "neither",
        }
    }
}

impl fmt::Display for SequenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceClass::Arithmetic { alpha, beta } => write!(f, "arithmetic (alpha={alpha}, beta={beta})"),
            SequenceClass::QClassical { q, alpha, beta } => {
                write!(f, "q-classical (q={q}, alpha={alpha}, beta={beta})")
            }
            SequenceClass::Neither => write!(f, "neither"),
        }
    }
}

pub fn check_distinct(seq: &[Rational]) -> Result<()> {
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return Err(Error::RepeatedEntry(i, j));
            }
        }
    }
    Ok(())
}

/// `(θᵢ − θᵢ₊₁) / (θᵢ₋₁ − θᵢ)` for `1 ≤ i ≤ d − 1`. Entries must be distinct.
pub fn difference_ratios(seq: &[Rational]) -> Vec<Rational> {
    (1..seq.len().saturating_sub(1))
        .map(|i| (&seq[i] - &seq[i + 1]) / (&seq[i - 1] - &seq[i]))
        .collect()
}

pub fn classify_sequence(seq: &[Rational]) -> Result<SequenceClass> {
    if seq.is_empty() {
        return Err(Error::LengthMismatch(0, 1));
    }
    check_distinct(seq)?;
    if seq.len() == 1 {
        // no step to fit; any nonzero alpha reproduces the single term
        return Ok(SequenceClass::Arithmetic {
            alpha: Rational::one(),
            beta: seq[0].clone(),
        });
    }
    let step = &seq[1] - &seq[0];
    if seq.windows(2).all(|w| &w[1] - &w[0] == step) {
        return Ok(SequenceClass::Arithmetic {
            alpha: step,
            beta: seq[0].clone(),
        });
    }
    let ratios = difference_ratios(seq);
    let q = ratios[0].clone();
    if q.is_one() || q.is_zero() || ratios.iter().any(|r| *r != q) {
        return Ok(SequenceClass::Neither);
    }
    let alpha = &step / (&q - Rational::one());
    let beta = &seq[0] - &alpha;
    Ok(SequenceClass::QClassical { q, alpha, beta })
}

/// Outcome of the three-term ratio check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTermRatio {
    pub holds: bool,
    /// The shared value of every ratio, when `d ≥ 3` and the check holds.
    pub common_value: Option<Rational>,
}

/// Checks that `(θᵢ₋₂ − θᵢ₊₁)/(θᵢ₋₁ − θᵢ)` and its starred analogue are all
/// equal over `2 ≤ i ≤ d − 1`.
pub fn check_three_term_ratio(eigen: &[Rational], dual: &[Rational]) -> Result<ThreeTermRatio> {
    if eigen.len() != dual.len() {
        return Err(Error::LengthMismatch(eigen.len(), dual.len()));
    }
    check_distinct(eigen)?;
    check_distinct(dual)?;
    let d = eigen.len().saturating_sub(1);
    let ratio = |s: &[Rational], i: usize| (&s[i - 2] - &s[i + 1]) / (&s[i - 1] - &s[i]);
    let values: Vec<Rational> = (2..d)
        .flat_map(|i| [ratio(eigen, i), ratio(dual, i)])
        .collect();
    let Some(first) = values.first().cloned() else {
        return Ok(ThreeTermRatio {
            holds: true,
            common_value: None,
        });
    };
    if values.iter().all(|v| *v == first) {
        Ok(ThreeTermRatio {
            holds: true,
            common_value: Some(first),
        })
    } else {
        Ok(ThreeTermRatio {
            holds: false,
            common_value: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};

    fn seq(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn arithmetic_example() {
        assert_eq!(
            classify_sequence(&seq(&[3, 1, -1, -3])).unwrap(),
            SequenceClass::Arithmetic { alpha: int(-2), beta: int(3) }
        );
    }

    #[test]
    fn q_classical_example() {
        assert_eq!(
            classify_sequence(&seq(&[1, 2, 4, 8])).unwrap(),
            SequenceClass::QClassical { q: int(2), alpha: int(1), beta: int(0) }
        );
        assert_eq!(
            classify_sequence(&seq(&[8, 4, 2, 1])).unwrap(),
            SequenceClass::QClassical { q: frac(1, 2), alpha: int(8), beta: int(0) }
        );
    }

    #[test]
    fn neither_example() {
        assert_eq!(classify_sequence(&seq(&[0, 1, 3, 4])).unwrap(), SequenceClass::Neither);
        assert_eq!(difference_ratios(&seq(&[0, 1, 3, 4])), vec![int(2), frac(1, 2)]);
    }

    #[test]
    fn short_sequences_are_arithmetic() {
        assert_eq!(
            classify_sequence(&seq(&[5])).unwrap(),
            SequenceClass::Arithmetic { alpha: int(1), beta: int(5) }
        );
        assert_eq!(
            classify_sequence(&seq(&[5, 2])).unwrap(),
            SequenceClass::Arithmetic { alpha: int(-3), beta: int(5) }
        );
    }

    #[test]
    fn length_three_q_classical() {
        // differences 1, 3 → q = 3
        let c = classify_sequence(&seq(&[0, 1, 4])).unwrap();
        assert!(matches!(c, SequenceClass::QClassical { ref q, .. } if *q == int(3)));
    }

    #[test]
    fn q_minus_one_at_length_three() {
        // q = -1 is allowed only while q^i != 1 for i <= d; at d = 2 entries repeat
        assert_eq!(classify_sequence(&seq(&[0, 1, 0])).unwrap_err(), Error::RepeatedEntry(0, 2));
    }

    #[test]
    fn repeated_entries_rejected() {
        assert_eq!(classify_sequence(&seq(&[1, 2, 1])).unwrap_err(), Error::RepeatedEntry(0, 2));
        assert!(classify_sequence(&[]).is_err());
    }

    #[test]
    fn three_term_examples() {
        let r = check_three_term_ratio(&seq(&[0, 1, 2, 3]), &seq(&[0, 2, 4, 6])).unwrap();
        assert_eq!(r, ThreeTermRatio { holds: true, common_value: Some(int(3)) });
        let r = check_three_term_ratio(&seq(&[0, 1, 3, 4]), &seq(&[0, 1, 3, 4])).unwrap();
        assert!(r.holds);
        let r = check_three_term_ratio(&seq(&[0, 1, 3, 4, 5]), &seq(&[0, 1, 3, 4, 5])).unwrap();
        assert!(!r.holds);
        let r = check_three_term_ratio(&seq(&[0, 1, 2]), &seq(&[4, 1, 0])).unwrap();
        assert_eq!(r, ThreeTermRatio { holds: true, common_value: None });
    }

    #[test]
    fn three_term_errors() {
        assert_eq!(
            check_three_term_ratio(&seq(&[0, 1]), &seq(&[0, 1, 2])).unwrap_err(),
            Error::LengthMismatch(2, 3)
        );
        assert!(check_three_term_ratio(&seq(&[0, 0]), &seq(&[0, 1])).is_err());
    }

    #[test]
    fn recovered_parameters_reproduce() {
        let s: Vec<Rational> = (0..6).map(|i| frac(3, 2) * num_traits::pow(frac(-2, 3), i) + frac(1, 7)).collect();
        let c = classify_sequence(&s).unwrap();
        for (i, x) in s.iter().enumerate() {
            assert_eq!(c.term(i).unwrap(), *x);
        }
    }
}
