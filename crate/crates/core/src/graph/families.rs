use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "star" => Ok(Family::Star),
            "complete" => Ok(Family::Complete),
            other => Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
        }
    }
}

/// Standard labeled family on `n` vertices.
///
/// Paths run `0 - 1 - ... - n-1`, cycles close that path, and the star's
/// vertex 0 is the center joined to `n - 1` leaves.
pub fn make_family(kind: Family, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily(format!("{kind} needs at least one vertex")));
    }
    let mut g = Graph::empty(n);
    match kind {
        Family::Path => (1..n).for_each(|v| g.insert_edge(v - 1, v)),
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidFamily(format!("cycle needs n >= 3, got {n}")));
            }
            (1..n).for_each(|v| g.insert_edge(v - 1, v));
            g.insert_edge(n - 1, 0);
        }
        Family::Star => (1..n).for_each(|v| g.insert_edge(0, v)),
        Family::Complete => {
            for u in 0..n {
                for v in u + 1..n {
                    g.insert_edge(u, v);
                }
            }
        }
    }
    Ok(g)
}

/// The tree `m(i)j`: a path on `path_len` vertices with a path of `length`
/// vertices hung at 1-based `position`.
///
/// The base path occupies indices `0..path_len`; the hung path follows in
/// order, so the returned "added vertex" (its far end) is the last index.
pub fn attach_pendant_path(path_len: usize, position: usize, length: usize) -> Result<(Graph, usize)> {
    if position == 0 || position > path_len {
        return Err(Error::InvalidFamily(format!(
            "position {position} outside 1..={path_len}"
        )));
    }
    if length == 0 {
        return Err(Error::InvalidFamily("hung path needs at least one vertex".into()));
    }
    let n = path_len + length;
    let mut g = make_family(Family::Path, path_len)?;
    g.neighbors.resize(n, Vec::new());
    g.insert_edge(position - 1, path_len);
    for v in path_len + 1..n {
        g.insert_edge(v - 1, v);
    }
    Ok((g, n - 1))
}
