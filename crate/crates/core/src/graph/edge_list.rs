//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! 3 2
//! 0 1
//! 1 2
//! ```
//!
//! The first data line is `n m`, followed by exactly `m` lines `u v` with
//! 0-based identifiers. Emission writes each edge once with `u < v`, sorted.

use std::io::{self, BufRead, Write};

use super::Graph;
use crate::error::{Error, Result};

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_ascii_whitespace();
    let fields: Vec<&str> = it.by_ref().take(3).collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line: lineno,
            message: format!("expected two integers, found {:?}", line),
        });
    }
    let num = |s: &str| {
        s.parse::<usize>().map_err(|e| Error::Parse {
            line: lineno,
            message: format!("invalid integer {s:?}: {e}"),
        })
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

/// Parses an edge list. Graphs with more than `max_vertices` vertices are
/// rejected before any adjacency is allocated.
pub fn parse_edge_list<R: BufRead>(reader: R, max_vertices: Option<usize>) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Io(e.to_string()))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let pair = parse_pair(trimmed, lineno)?;
        match header {
            None => {
                if let Some(cap) = max_vertices {
                    if pair.0 > cap {
                        return Err(Error::invalid(format!(
                            "graph has {} vertices, above the limit of {cap}",
                            pair.0
                        )));
                    }
                }
                header = Some(pair);
                edges.reserve(pair.1.min(1 << 24));
            }
            Some((_, m)) => {
                if edges.len() == m {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("more than the declared {m} edges"),
                    });
                }
                edges.push(pair);
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing \"n m\" header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge list is ASCII")
}
