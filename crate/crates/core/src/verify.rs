//! Runs every identity that applies to a single graph and reports each one.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::charpoly::{bipartite_coeffs, charpoly, pendant_recursion_check, sachs_charpoly, walk_count};
use crate::coulson::{coulson_pendant_energy, coulson_vertex_energy, PendantForm};
use crate::covers::{
    check_cover_inequality, check_degree_bound, count_k_matchings, count_matchings_containing_edge,
    enumerate_minimal_covers, DEFAULT_COVER_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{BipartitionResult, Graph};
use crate::poly::{laurent_at_infinity, IntPolynomial};
use crate::spectral::{decompose, graph_energy, positive_part_identity, vertex_energies, Spectrum};

/// Largest graph the Sachs expansion is run on here; cycle enumeration
/// grows too fast on dense graphs beyond it.
pub const VERIFY_SACHS_CAP: usize = 10;
/// Number of walk-count coefficients compared.
pub const WALK_TERMS: usize = 8;

const FLOAT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "status", content = "reason")]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    #[serde(flatten)]
    pub status: CheckStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.status, CheckStatus::Fail(_)))
    }

    fn push(&mut self, name: &str, status: CheckStatus) {
        self.checks.push(CheckResult { name: name.to_string(), status });
    }

    fn record(&mut self, name: &str, outcome: Result<Option<String>>) {
        let status = match outcome {
            Ok(None) => CheckStatus::Pass,
            Ok(Some(why)) => CheckStatus::Fail(why),
            Err(e) => CheckStatus::Fail(e.to_string()),
        };
        self.push(name, status);
    }
}

fn fail_if(bad: bool, why: impl FnOnce() -> String) -> Result<Option<String>> {
    Ok(bad.then(why))
}

pub fn verify_graph(g: &Graph, tol: f64) -> Result<VerifyReport> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let mut report = VerifyReport::default();
    let n = g.n();
    let s = decompose(g);
    let eigen = vertex_energies(&s);
    let phi = charpoly(g);

    report.record("oracle agreement", oracle_agreement(g, &eigen, tol));
    report.record("energy sum", {
        let sum: f64 = eigen.iter().sum();
        let total = graph_energy(&s);
        fail_if((sum - total).abs() > FLOAT_TOL * n.max(1) as f64, || {
            format!("sum of vertex energies {sum} vs total {total}")
        })
    });
    report.record("doubly stochastic weights", doubly_stochastic(&s));
    report.record("reconstruction", reconstruction(g, &s));
    report.record("positive part split", {
        (0..n)
            .map(|v| positive_part_identity(&s, v).map(|pair| (v, pair)))
            .collect::<Result<Vec<_>>>()
            .map(|pairs| {
                pairs
                    .into_iter()
                    .find(|(v, (p, q))| (p - q).abs() > FLOAT_TOL || (p + q - eigen[*v]).abs() > FLOAT_TOL)
                    .map(|(v, (p, q))| format!("v{}: {p} vs {q}", v + 1))
            })
    });
    report.record("derivative identity", derivative_identity(g, &phi));
    if n > VERIFY_SACHS_CAP {
        report.push("sachs expansion", CheckStatus::Skipped(format!("n = {n} above cap {VERIFY_SACHS_CAP}")));
    } else {
        report.record(
            "sachs expansion",
            sachs_charpoly(g, VERIFY_SACHS_CAP).map(|p| (p != phi).then(|| format!("{p} vs {phi}"))),
        );
    }
    report.record("walk generating series", walk_series(g, &phi));
    report.record("spectral moments", spectral_moments(g, &s));

    let pendants: Vec<(usize, usize)> =
        (0..n).filter(|&v| g.degree(v) == 1).map(|v| (g.neighbors(v)[0], v)).collect();
    if pendants.is_empty() {
        report.push("pendant recursion", CheckStatus::Skipped("no pendant vertex".into()));
        report.push("pendant integral", CheckStatus::Skipped("no pendant vertex".into()));
    } else {
        report.record("pendant recursion", {
            pendants
                .iter()
                .map(|&(u, v)| pendant_recursion_check(g, u, v).map(|ok| (v, ok)))
                .collect::<Result<Vec<_>>>()
                .map(|r| r.into_iter().find(|(_, ok)| !ok).map(|(v, _)| format!("fails at v{}", v + 1)))
        });
        report.record("pendant integral", pendant_integral(g, &pendants, &eigen, tol));
    }

    let bipartite = matches!(g.bipartition(), BipartitionResult::Bipartite(_));
    if !bipartite {
        for name in ["sign pattern", "bipartition halves", "cover inequality", "degree bound", "matchings", "double count"] {
            report.push(name, CheckStatus::Skipped("non-bipartite".into()));
        }
        return Ok(report);
    }
    report.record("sign pattern", bipartite_coeffs(&phi).map(|_| None));
    report.record("bipartition halves", bipartition_halves(g));
    if n > DEFAULT_COVER_CAP {
        for name in ["cover inequality", "degree bound"] {
            report.push(name, CheckStatus::Skipped(format!("n = {n} above cap {DEFAULT_COVER_CAP}")));
        }
    } else {
        let covers = enumerate_minimal_covers(g, DEFAULT_COVER_CAP)?;
        report.record("cover inequality", {
            covers
                .iter()
                .map(|c| check_cover_inequality(g, c))
                .collect::<Result<Vec<_>>>()
                .map(|r| r.into_iter().find(|r| !r.holds).map(|r| format!("{:?} slack {}", r.subset, r.slack)))
        });
        report.record("degree bound", {
            covers
                .iter()
                .map(|c| check_degree_bound(g, c).map(|ok| (c, ok)))
                .collect::<Result<Vec<_>>>()
                .map(|r| r.into_iter().find(|(_, ok)| !ok).map(|(c, _)| format!("{c:?}")))
        });
    }
    if g.is_forest() {
        report.record("matchings", matchings_match_coefficients(g, &phi));
        report.record("double count", double_count(g, &phi));
    } else {
        for name in ["matchings", "double count"] {
            report.push(name, CheckStatus::Skipped("not a forest".into()));
        }
    }
    Ok(report)
}

fn oracle_agreement(g: &Graph, eigen: &[f64], tol: f64) -> Result<Option<String>> {
    let mut worst = (0.0f64, 0usize);
    for (v, e) in eigen.iter().enumerate() {
        let d = (coulson_vertex_energy(g, v, tol)? - e).abs();
        if d > worst.0 {
            worst = (d, v);
        }
    }
    fail_if(worst.0 > 10.0 * tol, || format!("v{}: |eigen - coulson| = {:e}", worst.1 + 1, worst.0))
}

fn pendant_integral(g: &Graph, pendants: &[(usize, usize)], eigen: &[f64], tol: f64) -> Result<Option<String>> {
    for &(u, v) in pendants {
        let e = coulson_pendant_energy(g, u, v, tol, PendantForm::Corrected)?;
        if (e - eigen[v]).abs() > 2.0 * tol {
            return Ok(Some(format!("v{}: {e} vs {}", v + 1, eigen[v])));
        }
    }
    Ok(None)
}

fn doubly_stochastic(s: &Spectrum) -> Result<Option<String>> {
    let n = s.n();
    for i in 0..n {
        let row: f64 = s.weights[i].iter().sum();
        let col: f64 = s.weights.iter().map(|r| r[i]).sum();
        if (row - 1.0).abs() > FLOAT_TOL || (col - 1.0).abs() > FLOAT_TOL {
            return Ok(Some(format!("row/column {i}: {row}, {col}")));
        }
    }
    Ok(None)
}

fn reconstruction(g: &Graph, s: &Spectrum) -> Result<Option<String>> {
    let a = g.adjacency_matrix();
    let r = s.reconstruct();
    let err = a
        .iter()
        .flatten()
        .zip(r.iter().flatten())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    fail_if(err > FLOAT_TOL, || format!("max entry error {err:e}"))
}

fn derivative_identity(g: &Graph, phi: &IntPolynomial) -> Result<Option<String>> {
    let mut sum = IntPolynomial::zero();
    for v in 0..g.n() {
        sum = &sum + &charpoly(&g.delete_vertex(v)?);
    }
    let d = phi.derivative();
    fail_if(sum != d, || format!("{sum} vs {d}"))
}

fn walk_series(g: &Graph, phi: &IntPolynomial) -> Result<Option<String>> {
    for v in 0..g.n() {
        let series = laurent_at_infinity(&charpoly(&g.delete_vertex(v)?), phi, WALK_TERMS)?;
        for (k, c) in series.iter().enumerate() {
            if *c != walk_count(g, v, k)? {
                return Ok(Some(format!("v{} term {k}", v + 1)));
            }
        }
    }
    Ok(None)
}

fn spectral_moments(g: &Graph, s: &Spectrum) -> Result<Option<String>> {
    let rho = s.eigenvalues.iter().map(|l| l.abs()).fold(1.0, f64::max);
    for v in 0..g.n() {
        for k in 0..WALK_TERMS {
            let walks = crate::poly::to_f64(&walk_count(g, v, k)?);
            let moment = s.spectral_moment(v, k as u32);
            if (walks - moment).abs() > 1e-6 * rho.powi(k as i32) {
                return Ok(Some(format!("v{} k = {k}: {moment} vs {walks}", v + 1)));
            }
        }
    }
    Ok(None)
}

fn bipartition_halves(g: &Graph) -> Result<Option<String>> {
    let parts = g.require_bipartite()?;
    for part in [&parts.part_one, &parts.part_two] {
        let r = check_cover_inequality(g, part)?;
        if r.slack.abs() > 1e-8 {
            return Ok(Some(format!("{:?} slack {}", r.subset, r.slack)));
        }
    }
    Ok(None)
}

fn matchings_match_coefficients(g: &Graph, phi: &IntPolynomial) -> Result<Option<String>> {
    let b = bipartite_coeffs(phi)?;
    for k in 0..=g.n() / 2 {
        if count_k_matchings(g, k) != b.get(k) {
            return Ok(Some(format!("k = {k}")));
        }
    }
    Ok(None)
}

fn double_count(g: &Graph, phi: &IntPolynomial) -> Result<Option<String>> {
    let b = bipartite_coeffs(phi)?;
    let deleted = (0..g.n())
        .map(|v| g.delete_vertex(v).and_then(|h| bipartite_coeffs(&charpoly(&h))))
        .collect::<Result<Vec<_>>>()?;
    let edges: Vec<_> = g.edges().collect();
    for k in 0..=g.n() / 2 {
        let lhs: BigInt = deleted.iter().map(|d| b.get(k) - d.get(k)).sum();
        let per_edge = edges
            .iter()
            .map(|&e| count_matchings_containing_edge(g, e, k))
            .collect::<Result<Vec<_>>>()?;
        let rhs: BigInt = per_edge.into_iter().sum::<BigInt>() * 2;
        if lhs != rhs {
            return Ok(Some(format!("k = {k}: {lhs} vs {rhs}")));
        }
    }
    Ok(None)
}
