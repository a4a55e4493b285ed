//! Exact characteristic polynomials of adjacency matrices.
//!
//! The production path uses power sums `p_k = tr(A^k)` and Newton's
//! identities over big integers. [`sachs_charpoly`] recomputes the same
//! coefficients by enumerating Sachs subgraphs and serves as an independent
//! oracle on small graphs.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;

pub const DEFAULT_SACHS_CAP: usize = 16;

/// `det(xI - A(G))` with exact integer coefficients.
pub fn charpoly(g: &Graph) -> IntPolynomial {
    let n = g.n();
    let power_sums = closed_walk_totals(g, n);
    // e_k via k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    let mut e: Vec<BigInt> = Vec::with_capacity(n + 1);
    e.push(BigInt::from(1));
    for k in 1..=n {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &e[k - i] * &power_sums[i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        debug_assert!((&acc % BigInt::from(k)).is_zero());
        e.push(acc / BigInt::from(k));
    }
    let coeffs = e
        .into_iter()
        .enumerate()
        .map(|(k, ek)| if k % 2 == 1 { -ek } else { ek })
        .collect();
    IntPolynomial::new(coeffs)
}

/// `tr(A^k)` for `k = 0..=max_power`, by repeated multiplication with the
/// 0/1 adjacency matrix (additions only).
fn closed_walk_totals(g: &Graph, max_power: usize) -> Vec<BigInt> {
    let n = g.n();
    let mut traces = vec![BigInt::from(n)];
    let mut current = identity(n);
    for _ in 1..=max_power {
        current = times_adjacency(g, &current);
        traces.push((0..n).map(|i| current[i][i].clone()).sum());
    }
    traces
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as u8)).collect())
        .collect()
}

fn times_adjacency(g: &Graph, m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = g.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| g.neighbors(j).iter().map(|&l| &m[i][l]).sum())
                .collect()
        })
        .collect()
}

/// Exact `(A^k)_{vv}`, the number of closed walks of length `k` at `v`.
pub fn walk_count(g: &Graph, v: usize, k: usize) -> Result<BigInt> {
    g.check_vertex(v)?;
    let n = g.n();
    // propagate the row e_v: row_{t+1} = row_t A
    let mut row: Vec<BigInt> = (0..n).map(|j| BigInt::from((j == v) as u8)).collect();
    for _ in 0..k {
        row = (0..n)
            .map(|j| g.neighbors(j).iter().map(|&l| &row[l]).sum())
            .collect();
    }
    Ok(row[v].clone())
}

/// Characteristic polynomial of `G - v`.
pub fn charpoly_minus_vertex(g: &Graph, v: usize) -> Result<IntPolynomial> {
    Ok(charpoly(&g.delete_vertex(v)?))
}

/// Characteristic polynomial by exhaustive Sachs-subgraph enumeration.
///
/// Every vertex-disjoint union of single edges and cycles covering `k`
/// vertices contributes `(-1)^components * 2^cycles` to `a_k`.
pub fn sachs_charpoly(g: &Graph, cap: usize) -> Result<IntPolynomial> {
    let n = g.n();
    if n > cap || n > 32 {
        return Err(Error::AboveCap { n, cap: cap.min(32) });
    }
    // per-component weight, keyed by vertex mask and grouped by lowest vertex
    let mut weights: HashMap<u32, i64> = HashMap::new();
    for (u, v) in g.edges() {
        weights.insert((1 << u) | (1 << v), -1);
    }
    for mask in simple_cycles(g) {
        *weights.entry(mask).or_insert(0) -= 2;
    }
    let mut by_lowest: Vec<Vec<(u32, BigInt)>> = vec![Vec::new(); n];
    for (mask, w) in weights {
        by_lowest[mask.trailing_zeros() as usize].push((mask, BigInt::from(w)));
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut memo = HashMap::new();
    let counts = sachs_sum(full, &by_lowest, &mut memo);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, c) in counts.iter().enumerate() {
        coeffs[k] = c.clone();
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Signed weighted count of Sachs subgraphs inside `mask`, indexed by the
/// number of covered vertices.
fn sachs_sum(mask: u32, by_lowest: &[Vec<(u32, BigInt)>], memo: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if mask == 0 {
        return vec![BigInt::from(1)];
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let v = mask.trailing_zeros() as usize;
    // v left uncovered
    let mut out = sachs_sum(mask & !(1 << v), by_lowest, memo);
    for (component, weight) in &by_lowest[v] {
        if component & mask != *component {
            continue;
        }
        let size = component.count_ones() as usize;
        let rest = sachs_sum(mask & !component, by_lowest, memo);
        if out.len() < rest.len() + size {
            out.resize(rest.len() + size, BigInt::zero());
        }
        for (k, c) in rest.iter().enumerate() {
            out[k + size] += weight * c;
        }
    }
    memo.insert(mask, out.clone());
    out
}

/// Vertex masks of all simple cycles, one entry per cycle (several cycles
/// may share a mask).
fn simple_cycles(g: &Graph) -> Vec<u32> {
    fn extend(g: &Graph, start: usize, path: &mut Vec<usize>, mask: u32, out: &mut Vec<u32>) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(mask);
            } else if w > start && mask & (1 << w) == 0 {
                path.push(w);
                extend(g, start, path, mask | (1 << w), out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for start in 0..g.n() {
        let mut path = vec![start];
        extend(g, start, &mut path, 1 << start, &mut out);
    }
    out
}

/// The nonnegative sequence `b_0, b_2, b_4, ...` of a bipartite
/// characteristic polynomial `sum_k (-1)^k b_{2k} x^(n-2k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteCoeffs {
    /// `b[k]` holds `b_{2k}`.
    pub b: Vec<BigInt>,
    /// Degree of the source polynomial.
    pub degree: usize,
}

impl BipartiteCoeffs {
    pub fn reconstruct(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.degree + 1];
        for (k, b) in self.b.iter().enumerate() {
            coeffs[2 * k] = if k % 2 == 1 { -b } else { b.clone() };
        }
        IntPolynomial::new(coeffs)
    }

    /// `b_{2k}`, zero past the end.
    pub fn get(&self, k: usize) -> BigInt {
        self.b.get(k).cloned().unwrap_or_default()
    }
}

/// Extracts `b_{2k} = (-1)^k a_{2k}`, rejecting any nonzero odd coefficient or
/// negative `b_{2k}`.
pub fn bipartite_coeffs(p: &IntPolynomial) -> Result<BipartiteCoeffs> {
    let degree = p.degree().unwrap_or(0);
    let mut b = Vec::with_capacity(degree / 2 + 1);
    for (index, a) in p.coeffs().iter().enumerate() {
        if index % 2 == 1 {
            if !a.is_zero() {
                return Err(Error::SignPatternViolation { index });
            }
            continue;
        }
        let value = if (index / 2) % 2 == 1 { -a } else { a.clone() };
        if value.is_negative() {
            return Err(Error::SignPatternViolation { index });
        }
        b.push(value);
    }
    Ok(BipartiteCoeffs { b, degree })
}

/// Checks `phi(G) = x phi(G - v) - phi(G - u - v)` for a pendant vertex `v`
/// hanging from `u`.
pub fn pendant_recursion_check(g: &Graph, u: usize, v: usize) -> Result<bool> {
    require_pendant(g, u, v)?;
    let lhs = charpoly(g);
    let rhs = &charpoly(&g.delete_vertex(v)?).shift(1) - &charpoly(&g.delete_vertices(&[u, v]));
    Ok(lhs == rhs)
}

pub(crate) fn require_pendant(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if g.neighbors(v) != [u] {
        return Err(Error::NotPendant { vertex: v });
    }
    Ok(())
}
