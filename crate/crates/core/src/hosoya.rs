//! The Hosoya (Wiener) polynomial `H(G, t) = Σ_{l>=1} d(G, l) t^l`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::distance::{self, DistanceDistribution};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Polynomial with non-negative integer coefficients and no constant term.
///
/// `coeffs[l - 1]` is the coefficient of `t^l`. Trailing zero coefficients
/// are trimmed on construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DistancePolynomial {
    coeffs: Vec<u64>,
}

impl DistancePolynomial {
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        DistancePolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Degree of the highest non-zero term; 0 for the empty polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        let inner = self
            .coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, &c| {
                acc * t + BigRational::from_integer(BigInt::from(c))
            });
        inner * t
    }

    /// `H'(1) = Σ l · coeffs[l - 1]`, which is the Wiener index when the
    /// polynomial comes from a graph.
    pub fn derivative_at_one(&self) -> Result<u64> {
        self.coeffs
            .iter()
            .zip(1u64..)
            .try_fold(0u64, |acc, (&c, l)| {
                c.checked_mul(l)
                    .and_then(|term| acc.checked_add(term))
                    .ok_or(Error::Overflow("H'(1)"))
            })
    }
}

impl From<DistanceDistribution> for DistancePolynomial {
    fn from(dist: DistanceDistribution) -> Self {
        DistancePolynomial::from_coeffs(dist.into_counts())
    }
}

impl fmt::Display for DistancePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i + 1 {
                1 => write!(f, "{c}t")?,
                l => write!(f, "{c}t^{l}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Hosoya polynomial of a connected graph.
pub fn hosoya_polynomial(g: &Graph) -> Result<DistancePolynomial> {
    Ok(distance::distance_distribution(g)?.into())
}

pub fn evaluate(p: &DistancePolynomial, t: &BigRational) -> BigRational {
    p.evaluate(t)
}

pub fn wiener_from_polynomial(p: &DistancePolynomial) -> Result<u64> {
    p.derivative_at_one()
}
