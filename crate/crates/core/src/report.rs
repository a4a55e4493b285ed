//! Per-vertex energy tables from either or both computation paths.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::coulson::coulson_vertex_energy;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{decompose, graph_energy, vertex_energies};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Eigen,
    Coulson,
    #[default]
    Both,
}

impl Method {
    fn eigen(self) -> bool {
        self != Method::Coulson
    }

    fn coulson(self) -> bool {
        self != Method::Eigen
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Eigen => "eigen",
            Method::Coulson => "coulson",
            Method::Both => "both",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eigen" => Ok(Method::Eigen),
            "coulson" => Ok(Method::Coulson),
            "both" => Ok(Method::Both),
            other => Err(Error::Parse { line: 0, message: format!("unknown method {other:?}") }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct VertexEnergy {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigen: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coulson: Option<f64>,
    /// `|eigen - coulson|` when both are present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diff: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub method: Method,
    pub tolerance: f64,
    /// Keyed by vertex label, in vertex order.
    pub vertices: IndexMap<String, VertexEnergy>,
    pub total_energy: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_discrepancy: Option<f64>,
}

impl EnergyReport {
    /// True when the two paths disagree by more than `10 * tolerance`.
    pub fn discrepancy_exceeded(&self) -> bool {
        self.max_discrepancy.is_some_and(|d| d > 10.0 * self.tolerance)
    }
}

pub fn energy_report(g: &Graph, method: Method, tol: f64) -> Result<EnergyReport> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let n = g.n();
    let (eigen, eigen_total) = if method.eigen() {
        let s = decompose(g);
        (Some(vertex_energies(&s)), Some(graph_energy(&s)))
    } else {
        (None, None)
    };
    let coulson = if method.coulson() {
        Some((0..n).map(|v| coulson_vertex_energy(g, v, tol)).collect::<Result<Vec<_>>>()?)
    } else {
        None
    };
    let mut vertices = IndexMap::with_capacity(n);
    let mut max_discrepancy: Option<f64> = None;
    for v in 0..n {
        let e = eigen.as_ref().map(|x| x[v]);
        let c = coulson.as_ref().map(|x| x[v]);
        let diff = e.zip(c).map(|(a, b)| (a - b).abs());
        if let Some(d) = diff {
            max_discrepancy = Some(max_discrepancy.map_or(d, |m| m.max(d)));
        }
        let mut key = g.label(v);
        if vertices.contains_key(&key) {
            key = format!("{key}#{}", v + 1);
        }
        vertices.insert(key, VertexEnergy { eigen: e, coulson: c, diff });
    }
    let total_energy = eigen_total.unwrap_or_else(|| coulson.iter().flatten().sum());
    Ok(EnergyReport { method, tolerance: tol, vertices, total_energy, max_discrepancy })
}
