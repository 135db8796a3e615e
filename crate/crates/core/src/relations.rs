//! Evaluation of the Wiener/polarity/Zagreb relations on a concrete graph.
//!
//! Each relation is evaluated and reported with both sides, never assumed.
//! With `P = n(n-1)/2`:
//!
//! * `polarity_bound`: `W_p <= P - M1/2`, claimed tight when the diameter is 3.
//! * `corollary_wiener`: `W = 3P - M1/2 - m`, claimed for diameter at most 3.
//! * `proposition`: `W = n(n-1) + W_p - m`, claimed for diameter at most 3.
//! * `decomposition`: `W = Σ_d d·W_d`, unconditional.
//!
//! The first two fail on graphs with triangles, every k-sun included; they
//! do hold on trees of diameter 3. The last two hold on every graph in range.

use std::fmt;

use serde::Serialize;

use crate::distance;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    PolarityBound,
    CorollaryWiener,
    Proposition,
    Decomposition,
}

impl Relation {
    pub const ALL: [Relation; 4] = [
        Relation::PolarityBound,
        Relation::CorollaryWiener,
        Relation::Proposition,
        Relation::Decomposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::PolarityBound => "polarity_bound",
            Relation::CorollaryWiener => "corollary_wiener",
            Relation::Proposition => "proposition",
            Relation::Decomposition => "decomposition",
        }
    }

    /// Status from the two sides and the diameter of the graph.
    pub fn classify(self, lhs: i64, rhs: i64, diameter: usize) -> Status {
        let exact = if lhs == rhs {
            Status::EqualityHolds
        } else {
            Status::Violated
        };
        match self {
            Relation::PolarityBound => {
                if diameter == 3 {
                    exact
                } else if lhs < rhs {
                    Status::InequalityHolds
                } else {
                    exact
                }
            }
            Relation::CorollaryWiener | Relation::Proposition if diameter > 3 => {
                Status::NotApplicable
            }
            _ => exact,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    EqualityHolds,
    InequalityHolds,
    Violated,
    NotApplicable,
}

/// One relation evaluated on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    #[serde(serialize_with = "serialize_name")]
    pub name: Relation,
    pub lhs: i64,
    pub rhs: i64,
    pub status: Status,
    #[serde(skip)]
    pub n: usize,
    #[serde(skip)]
    pub m: usize,
    #[serde(skip)]
    pub diameter: usize,
}

fn serialize_name<S: serde::Serializer>(r: &Relation, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(r.name())
}

/// Graph quantities the relations are built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInputs {
    pub n: usize,
    pub m: usize,
    pub diameter: usize,
    pub wiener: u64,
    pub w_d: Vec<u64>,
    pub m1: u64,
}

impl RelationInputs {
    /// Two all-pairs passes: the Wiener index by direct pair summation and
    /// the distance distribution.
    pub fn compute(g: &Graph) -> Result<Self> {
        let wiener = indices::wiener_pairwise(g)?;
        let dist = distance::distance_distribution(g)?;
        let m1 = indices::zagreb_m1(g)?;
        // Σ deg² ≡ Σ deg = 2m (mod 2)
        assert_eq!(m1 % 2, 0, "first Zagreb index is even");
        Ok(RelationInputs {
            n: g.vertex_count(),
            m: g.edge_count(),
            diameter: dist.diameter(),
            wiener,
            w_d: dist.into_counts(),
            m1,
        })
    }

    fn polarity(&self) -> u64 {
        self.w_d.get(2).copied().unwrap_or(0)
    }

    pub fn evaluate(&self, relation: Relation) -> Result<RelationReport> {
        let (lhs, rhs) = match relation {
            Relation::PolarityBound => sides(|| {
                let pairs = i(self.n)?.checked_mul(i(self.n)? - 1)? / 2;
                Some((i(self.polarity())?, pairs.checked_sub(i(self.m1)? / 2)?))
            })?,
            Relation::CorollaryWiener => sides(|| {
                let pairs = i(self.n)?.checked_mul(i(self.n)? - 1)? / 2;
                let rhs = pairs
                    .checked_mul(3)?
                    .checked_sub(i(self.m1)? / 2)?
                    .checked_sub(i(self.m)?)?;
                Some((i(self.wiener)?, rhs))
            })?,
            Relation::Proposition => sides(|| {
                let rhs = i(self.n)?
                    .checked_mul(i(self.n)? - 1)?
                    .checked_add(i(self.polarity())?)?
                    .checked_sub(i(self.m)?)?;
                Some((i(self.wiener)?, rhs))
            })?,
            Relation::Decomposition => sides(|| {
                let rhs = self
                    .w_d
                    .iter()
                    .zip(1i64..)
                    .try_fold(0i64, |acc, (&c, d)| acc.checked_add(i(c)?.checked_mul(d)?))?;
                Some((i(self.wiener)?, rhs))
            })?,
        };
        Ok(RelationReport {
            name: relation,
            lhs,
            rhs,
            status: relation.classify(lhs, rhs, self.diameter),
            n: self.n,
            m: self.m,
            diameter: self.diameter,
        })
    }
}

fn i<T: TryInto<i64>>(x: T) -> Option<i64> {
    x.try_into().ok()
}

fn sides(f: impl FnOnce() -> Option<(i64, i64)>) -> Result<(i64, i64)> {
    f().ok_or(Error::Overflow("relation sides"))
}

/// `W_p <= n(n-1)/2 - M1/2`.
pub fn check_polarity_bound(g: &Graph) -> Result<RelationReport> {
    RelationInputs::compute(g)?.evaluate(Relation::PolarityBound)
}

/// `W = 3n(n-1)/2 - M1/2 - m`.
pub fn check_corollary_wiener(g: &Graph) -> Result<RelationReport> {
    RelationInputs::compute(g)?.evaluate(Relation::CorollaryWiener)
}

/// `W = n(n-1) + W_p - m`.
pub fn check_proposition(g: &Graph) -> Result<RelationReport> {
    RelationInputs::compute(g)?.evaluate(Relation::Proposition)
}

/// Every relation, in the order of [`Relation::ALL`].
pub fn check_all(g: &Graph) -> Result<Vec<RelationReport>> {
    let inputs = RelationInputs::compute(g)?;
    Relation::ALL.iter().map(|&r| inputs.evaluate(r)).collect()
}
