//! Distance-based and degree-based topological indices of simple undirected
//! graphs.
//!
//! The crate computes the Wiener index (pair-sum and transmission forms), the
//! Wiener polarity index, the generalized distance counts `W_d`, the first and
//! second Zagreb indices and the Hosoya polynomial of any connected graph, using
//! one breadth-first traversal per source vertex. For k-sun graphs it also
//! offers constant-time closed forms, and [`oracle`] holds a Floyd–Warshall
//! reference used to cross-check the traversal engine.
//!
//! ```
//! use topoindex::{graph::{sun, SunSpec}, indices, sun_forms};
//!
//! let g = sun(SunSpec::new(4).unwrap());
//! assert_eq!(indices::wiener_pairwise(&g).unwrap(), 44);
//! assert_eq!(sun_forms::wiener_sun(4).unwrap(), 44);
//! ```

pub mod cli;
pub mod distance;
pub mod error;
pub mod graph;
pub mod hosoya;
pub mod indices;
pub mod oracle;
pub mod relations;
pub mod sun_forms;

pub use error::{Error, Result};
pub use graph::Graph;
