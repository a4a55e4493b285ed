//! Floating-point eigendecomposition of adjacency matrices and vertex
//! energies `E(v) = sum_j p_vj |lambda_j|` with `p_vj = u_vj^2`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;

pub use crate::charpoly::walk_count;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    /// Eigenvalues in descending order.
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[i][j]` is entry `i` of the unit eigenvector for `eigenvalues[j]`.
    pub eigenvectors: Vec<Vec<f64>>,
    /// `weights[i][j] = eigenvectors[i][j]^2`; doubly stochastic.
    pub weights: Vec<Vec<f64>>,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `U diag(lambda) U^T`.
    pub fn reconstruct(&self) -> Vec<Vec<f64>> {
        let n = self.n();
        let u = &self.eigenvectors;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| (0..n).map(|j| u[i][j] * self.eigenvalues[j] * u[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    /// `sum_j p_vj lambda_j^k`, which equals the closed-walk count `(A^k)_vv`.
    pub fn spectral_moment(&self, v: usize, k: u32) -> f64 {
        self.weights[v]
            .iter()
            .zip(&self.eigenvalues)
            .map(|(p, l)| p * l.powi(k as i32))
            .sum()
    }
}

/// Full eigensystem of the adjacency matrix by cyclic Jacobi rotations.
pub fn decompose(g: &Graph) -> Spectrum {
    let (eigenvalues, eigenvectors) = jacobi_eigen(g.adjacency_matrix());
    let weights = eigenvectors
        .iter()
        .map(|row| row.iter().map(|x| x * x).collect())
        .collect();
    Spectrum { eigenvalues, eigenvectors, weights }
}

/// Eigenvalues (descending, ties kept in original order) and eigenvector
/// columns of a real symmetric matrix.
///
/// Sweeps over all `(p, q)` pairs until the off-diagonal Frobenius norm falls
/// below `1e-12 * n`.
pub fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let threshold = 1e-12 * n as f64;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    debug_assert!(off_diagonal_norm(&a) <= threshold, "Jacobi failed to converge");

    let mut order: Vec<usize> = (0..n).collect();
    // stable: equal eigenvalues keep their original index order
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let eigenvalues = order.iter().map(|&j| a[j][j]).collect();
    let eigenvectors = (0..n)
        .map(|i| order.iter().map(|&j| v[i][j]).collect())
        .collect();
    (eigenvalues, eigenvectors)
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut sum = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                sum += x * x;
            }
        }
    }
    sum.sqrt()
}

/// Applies the rotation that annihilates `a[p][q]`: `A <- J^T A J`, `V <- V J`.
fn rotate(a: &mut [Vec<f64>], v: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = a[p][q];
    let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let n = a.len();
    for k in 0..n {
        let (akp, akq) = (a[k][p], a[k][q]);
        a[k][p] = c * akp - s * akq;
        a[k][q] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[p][k], a[q][k]);
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
    }
    a[p][q] = 0.0;
    a[q][p] = 0.0;
    for row in v.iter_mut() {
        let (vp, vq) = (row[p], row[q]);
        row[p] = c * vp - s * vq;
        row[q] = s * vp + c * vq;
    }
}

pub fn vertex_energy_eigen(s: &Spectrum, v: usize) -> Result<f64> {
    if v >= s.n() {
        return Err(crate::Error::VertexOutOfRange { vertex: v, n: s.n() });
    }
    Ok(s.weights[v]
        .iter()
        .zip(&s.eigenvalues)
        .map(|(p, l)| p * l.abs())
        .sum())
}

pub fn vertex_energies(s: &Spectrum) -> Vec<f64> {
    (0..s.n())
        .map(|v| vertex_energy_eigen(s, v).expect("in range"))
        .collect()
}

pub fn graph_energy(s: &Spectrum) -> f64 {
    s.eigenvalues.iter().map(|l| l.abs()).sum()
}

/// `(sum over positive lambda_j of lambda_j p_vj, -sum over negative)`; both
/// equal half the vertex energy because `A_vv = 0`.
pub fn positive_part_identity(s: &Spectrum, v: usize) -> Result<(f64, f64)> {
    if v >= s.n() {
        return Err(crate::Error::VertexOutOfRange { vertex: v, n: s.n() });
    }
    let mut pos = 0.0;
    let mut neg = 0.0;
    for (p, &l) in s.weights[v].iter().zip(&s.eigenvalues) {
        if l > 0.0 {
            pos += l * p;
        } else {
            neg -= l * p;
        }
    }
    Ok((pos, neg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{free_trees, make_family, Family};
    use approx::assert_abs_diff_eq;
    use num_traits::ToPrimitive;

    macro_rules! assert_close {
        ($a:expr, $b:expr, $tol:expr) => {
            assert_abs_diff_eq!($a, $b, epsilon = $tol)
        };
    }

    fn corpus() -> Vec<Graph> {
        let mut graphs: Vec<Graph> = (1..=8).flat_map(free_trees).collect();
        graphs.extend((3..=10).map(|n| make_family(Family::Cycle, n).unwrap()));
        graphs.extend((1..=7).map(|n| make_family(Family::Complete, n).unwrap()));
        graphs.push(crate::graph::parse_graph6("IheA@GUAo").unwrap());
        graphs
    }

    #[test]
    fn k2() {
        let s = decompose(&make_family(Family::Path, 2).unwrap());
        assert_close!(s.eigenvalues[0], 1.0, 1e-14);
        assert_close!(s.eigenvalues[1], -1.0, 1e-14);
        for row in &s.weights {
            for &p in row {
                assert_close!(p, 0.5, 1e-14);
            }
        }
        assert_close!(vertex_energy_eigen(&s, 0).unwrap(), 1.0, 1e-14);
        assert_close!(graph_energy(&s), 2.0, 1e-14);
        let (pos, neg) = positive_part_identity(&s, 1).unwrap();
        assert_close!(pos, 0.5, 1e-14);
        assert_close!(neg, 0.5, 1e-14);
    }

    #[test]
    fn star_closed_forms() {
        for k in 1..=12usize {
            let s = decompose(&make_family(Family::Star, k + 1).unwrap());
            let r = (k as f64).sqrt();
            assert_close!(s.eigenvalues[0], r, 1e-12);
            assert_close!(s.eigenvalues[k], -r, 1e-12);
            for j in 1..k {
                assert_close!(s.eigenvalues[j], 0.0, 1e-12);
            }
            assert_close!(vertex_energy_eigen(&s, 0).unwrap(), r, 1e-12);
            for leaf in 1..=k {
                assert_close!(vertex_energy_eigen(&s, leaf).unwrap(), 1.0 / r, 1e-12);
            }
            assert_close!(graph_energy(&s), 2.0 * r, 1e-12);
            let (pos, neg) = positive_part_identity(&s, 0).unwrap();
            assert_close!(pos, r / 2.0, 1e-12);
            assert_close!(neg, r / 2.0, 1e-12);
        }
    }

    #[test]
    fn p3() {
        let s = decompose(&make_family(Family::Path, 3).unwrap());
        let r = 2f64.sqrt();
        assert_close!(s.eigenvalues[0], r, 1e-11);
        assert_close!(s.eigenvalues[1], 0.0, 1e-11);
        assert_close!(s.eigenvalues[2], -r, 1e-11);
        let (pos, neg) = positive_part_identity(&s, 1).unwrap();
        assert_close!(pos, r / 2.0, 1e-11);
        assert_close!(neg, r / 2.0, 1e-11);
    }

    #[test]
    fn edgeless_graph_has_zero_energy() {
        let s = decompose(&Graph::empty(4));
        assert_eq!(graph_energy(&s), 0.0);
        assert_eq!(graph_energy(&decompose(&Graph::empty(0))), 0.0);
    }

    #[test]
    fn out_of_range_vertex() {
        let s = decompose(&make_family(Family::Path, 3).unwrap());
        assert!(vertex_energy_eigen(&s, 3).is_err());
        assert!(positive_part_identity(&s, 5).is_err());
    }

    #[test]
    fn structural_invariants_over_corpus() {
        for g in corpus() {
            let s = decompose(&g);
            let n = g.n();
            for i in 0..n {
                let row: f64 = s.weights[i].iter().sum();
                let col: f64 = (0..n).map(|k| s.weights[k][i]).sum();
                assert_close!(row, 1.0, 1e-9);
                assert_close!(col, 1.0, 1e-9);
                assert!(s.weights[i].iter().all(|&p| p >= 0.0));
                assert_close!(s.spectral_moment(i, 1), 0.0, 1e-9);
            }
            let a = g.adjacency_matrix();
            let r = s.reconstruct();
            for i in 0..n {
                for j in 0..n {
                    assert_close!(r[i][j], a[i][j], 1e-9);
                }
            }
            let sum: f64 = vertex_energies(&s).iter().sum();
            assert_close!(sum, graph_energy(&s), 1e-9);
            assert!(s.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn moments_are_walk_counts() {
        for g in corpus() {
            let s = decompose(&g);
            let scale = s.eigenvalues.first().copied().unwrap_or(0.0).abs().max(1.0);
            for v in 0..g.n() {
                for k in 0..=8u32 {
                    let exact = walk_count(&g, v, k as usize).unwrap().to_f64().unwrap();
                    assert_close!(s.spectral_moment(v, k), exact, 1e-6 * scale.powi(k as i32));
                }
            }
        }
    }

    #[test]
    fn vertex_energy_below_sqrt_degree() {
        for g in corpus() {
            let s = decompose(&g);
            for v in 0..g.n() {
                let e = vertex_energy_eigen(&s, v).unwrap();
                assert!(e >= 0.0);
                assert!(e <= (g.degree(v) as f64).sqrt() + 1e-9);
            }
        }
    }

    #[test]
    fn degenerate_eigenspaces_give_invariant_energies() {
        // relabeled copies of K4 and C6 must have identical vertex energies
        for g in [make_family(Family::Complete, 4).unwrap(), make_family(Family::Cycle, 6).unwrap()] {
            let s = decompose(&g);
            let e = vertex_energies(&s);
            for w in e.windows(2) {
                assert_close!(w[0], w[1], 1e-12);
            }
        }
    }
}
