//! Constant-time closed forms for k-sun graphs.
//!
//! With `n = 2k` and `m = k(k+3)/2`:
//!
//! | quantity                          | value                            |
//! |-----------------------------------|----------------------------------|
//! | Wiener index                      | `k(4k-5)`                        |
//! | pairs at distance 3               | `k(k-3)/2`                       |
//! | Hosoya polynomial                 | `k(k+3)/2 t + k(k-1) t^2 + k(k-3)/2 t^3` |
//! | transmission of each `s_i`        | `5k-7`                           |
//! | transmission of each `c_i`        | `3k-3`                           |

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SunSpec;
use crate::hosoya::DistancePolynomial;

fn check_k(k: u64) -> Result<()> {
    if k < 3 {
        Err(Error::invalid("k must be >= 3"))
    } else {
        Ok(())
    }
}

fn overflow() -> Error {
    Error::Overflow("sun closed form")
}

/// `k * (a*k - b)` with every step checked.
fn k_times_linear(k: u64, a: u64, b: u64) -> Result<u64> {
    a.checked_mul(k)
        .and_then(|x| x.checked_sub(b))
        .and_then(|x| x.checked_mul(k))
        .ok_or_else(overflow)
}

/// Wiener index of the k-sun, `k(4k - 5)`.
pub fn wiener_sun(k: u64) -> Result<u64> {
    check_k(k)?;
    k_times_linear(k, 4, 5)
}

/// Wiener polarity index of the k-sun, `k(k - 3) / 2`.
pub fn wiener_polarity_sun(k: u64) -> Result<u64> {
    check_k(k)?;
    let twice = k_times_linear(k, 1, 3)?;
    // one of k, k-3 is even
    assert_eq!(twice % 2, 0, "k(k-3) is even");
    Ok(twice / 2)
}

/// Hosoya polynomial of the k-sun; the cubic term vanishes at `k = 3`.
pub fn hosoya_sun(k: u64) -> Result<DistancePolynomial> {
    check_k(k)?;
    let d1 = k
        .checked_add(3)
        .and_then(|x| x.checked_mul(k))
        .ok_or_else(overflow)?
        / 2;
    let d2 = k_times_linear(k, 1, 1)?;
    let d3 = wiener_polarity_sun(k)?;
    Ok(DistancePolynomial::from_coeffs(vec![d1, d2, d3]))
}

/// Total transmission of the independent vertices and of the clique vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TransmissionSplit {
    pub u_total: u64,
    pub c_total: u64,
}

/// `(k(5k - 7), k(3k - 3))`.
pub fn transmission_split_sun(k: u64) -> Result<TransmissionSplit> {
    check_k(k)?;
    Ok(TransmissionSplit {
        u_total: k_times_linear(k, 5, 7)?,
        c_total: k_times_linear(k, 3, 3)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SunVertexKind {
    Clique,
    Independent,
}

/// `c_i` or `s_i` with a 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SunVertex {
    pub kind: SunVertexKind,
    pub index: usize,
}

impl SunVertex {
    pub fn clique(index: usize) -> Self {
        SunVertex {
            kind: SunVertexKind::Clique,
            index,
        }
    }

    pub fn independent(index: usize) -> Self {
        SunVertex {
            kind: SunVertexKind::Independent,
            index,
        }
    }

    /// Inverse of [`SunVertex::id`].
    pub fn from_id(spec: SunSpec, id: usize) -> Result<Self> {
        let k = spec.k();
        match id {
            _ if id < k => Ok(SunVertex::clique(id + 1)),
            _ if id < 2 * k => Ok(SunVertex::independent(id - k + 1)),
            _ => Err(Error::VertexOutOfRange {
                vertex: id,
                n: 2 * k,
            }),
        }
    }

    /// Vertex identifier in [`crate::graph::sun`].
    pub fn id(self, spec: SunSpec) -> usize {
        match self.kind {
            SunVertexKind::Clique => spec.clique(self.index),
            SunVertexKind::Independent => spec.independent(self.index),
        }
    }
}

/// Distance between two vertices of the k-sun, by case analysis on the
/// vertex kinds and the cyclic offset of their indices.
pub fn sun_distance(k: usize, a: SunVertex, b: SunVertex) -> Result<u8> {
    check_k(k as u64)?;
    for v in [a, b] {
        if !(1..=k).contains(&v.index) {
            return Err(Error::invalid(format!(
                "sun vertex index {} outside 1..={k}",
                v.index
            )));
        }
    }
    if a == b {
        return Ok(0);
    }
    // (j - i) mod k
    let offset = |i: usize, j: usize| (j + k - i) % k;
    use SunVertexKind::*;
    let d = match (a.kind, b.kind) {
        (Clique, Clique) => 1,
        (Independent, Clique) | (Clique, Independent) => {
            let (s, c) = if a.kind == Independent {
                (a, b)
            } else {
                (b, a)
            };
            // s_i touches c_i and c_{i+1}
            match offset(s.index, c.index) {
                0 | 1 => 1,
                _ => 2,
            }
        }
        (Independent, Independent) => match offset(a.index, b.index) {
            1 => 2,
            o if o == k - 1 => 2,
            _ => 3,
        },
    };
    Ok(d)
}
