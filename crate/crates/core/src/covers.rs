//! Vertex covers, independent sets and matching counts.
//!
//! For a bipartite graph and a vertex cover `C`, `sum_{v in C} E(v) >= E(G)/2`;
//! an independent set carries at most half the energy, and either side of a
//! bipartition carries exactly half.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{decompose, graph_energy, vertex_energies};

pub const SLACK_TOL: f64 = 1e-9;
pub const DEFAULT_COVER_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetKind {
    Cover,
    Independent,
    Other,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexSubsetReport {
    pub subset: Vec<usize>,
    pub kind: SubsetKind,
    pub energy_sum: f64,
    pub half_total: f64,
    /// `energy_sum - half_total`.
    pub slack: f64,
    /// Whether the inequality for `kind` holds within [`SLACK_TOL`].
    pub holds: bool,
}

pub fn is_cover(g: &Graph, s: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in s.iter().filter(|&&v| v < g.n()) {
        inside[v] = true;
    }
    g.edges().all(|(u, v)| inside[u] || inside[v])
}

pub fn is_independent(g: &Graph, s: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in s.iter().filter(|&&v| v < g.n()) {
        inside[v] = true;
    }
    !g.edges().any(|(u, v)| inside[u] && inside[v])
}

fn normalized(g: &Graph, s: &[usize]) -> Result<Vec<usize>> {
    for &v in s {
        g.check_vertex(v)?;
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

fn report(g: &Graph, subset: Vec<usize>, kind: SubsetKind) -> VertexSubsetReport {
    let spectrum = decompose(g);
    let energies = vertex_energies(&spectrum);
    let energy_sum: f64 = subset.iter().map(|&v| energies[v]).sum();
    let half_total = 0.5 * graph_energy(&spectrum);
    let slack = energy_sum - half_total;
    let holds = match kind {
        SubsetKind::Cover => slack >= -SLACK_TOL,
        SubsetKind::Independent => slack <= SLACK_TOL,
        SubsetKind::Other => true,
    };
    VertexSubsetReport { subset, kind, energy_sum, half_total, slack, holds }
}

/// Energy carried by a vertex cover against half the total energy.
pub fn check_cover_inequality(g: &Graph, c: &[usize]) -> Result<VertexSubsetReport> {
    g.require_bipartite()?;
    let c = normalized(g, c)?;
    if !is_cover(g, &c) {
        return Err(Error::NotACover);
    }
    Ok(report(g, c, SubsetKind::Cover))
}

/// Energy carried by an independent set against half the total energy.
pub fn check_independent_inequality(g: &Graph, i: &[usize]) -> Result<VertexSubsetReport> {
    g.require_bipartite()?;
    let i = normalized(g, i)?;
    if !is_independent(g, &i) {
        return Err(Error::NotIndependent);
    }
    Ok(report(g, i, SubsetKind::Independent))
}

/// Classifies `s` and reports its energy share without rejecting anything
/// beyond out-of-range vertices.
pub fn subset_report(g: &Graph, s: &[usize]) -> Result<VertexSubsetReport> {
    let s = normalized(g, s)?;
    let kind = if is_cover(g, &s) {
        SubsetKind::Cover
    } else if is_independent(g, &s) {
        SubsetKind::Independent
    } else {
        SubsetKind::Other
    };
    Ok(report(g, s, kind))
}

/// `E(G)/2 <= sum_{j in C} sqrt(d_j)`.
pub fn check_degree_bound(g: &Graph, c: &[usize]) -> Result<bool> {
    g.require_bipartite()?;
    let c = normalized(g, c)?;
    if !is_cover(g, &c) {
        return Err(Error::NotACover);
    }
    let bound: f64 = c.iter().map(|&v| (g.degree(v) as f64).sqrt()).sum();
    Ok(0.5 * graph_energy(&decompose(g)) <= bound + SLACK_TOL)
}

fn count_from(edges: &[(usize, usize)], used: &mut [bool], k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if edges.len() < k {
        return BigInt::zero();
    }
    let (u, v) = edges[0];
    let mut total = count_from(&edges[1..], used, k);
    if !used[u] && !used[v] {
        used[u] = true;
        used[v] = true;
        total += count_from(&edges[1..], used, k - 1);
        used[u] = false;
        used[v] = false;
    }
    total
}

/// Number of `k`-matchings (sets of `k` pairwise disjoint edges).
pub fn count_k_matchings(g: &Graph, k: usize) -> BigInt {
    let edges: Vec<_> = g.edges().collect();
    count_from(&edges, &mut vec![false; g.n()], k)
}

/// Number of `k`-matchings that contain the edge `(u, v)`.
pub fn count_matchings_containing_edge(g: &Graph, (u, v): (usize, usize), k: usize) -> Result<BigInt> {
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::EdgeNotFound(u, v));
    }
    if k == 0 {
        return Ok(BigInt::zero());
    }
    Ok(count_k_matchings(&g.delete_vertices(&[u, v]), k - 1))
}

/// All inclusion-minimal vertex covers, ordered by size then lexicographically.
pub fn enumerate_minimal_covers(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if n > cap {
        return Err(Error::AboveCap { n, cap });
    }
    let edges: Vec<_> = g.edges().collect();
    let mut covers = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let inside = |v: usize| mask >> v & 1 == 1;
        if !edges.iter().all(|&(u, v)| inside(u) || inside(v)) {
            continue;
        }
        // minimal iff every chosen vertex has a neighbor outside the set
        let minimal = (0..n)
            .filter(|&v| inside(v))
            .all(|v| g.neighbors(v).iter().any(|&w| !inside(w)));
        if minimal {
            covers.push((0..n).filter(|&v| inside(v)).collect::<Vec<_>>());
        }
    }
    covers.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(covers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{bipartite_coeffs, charpoly};
    use crate::graph::{free_trees, make_family, parse_edge_list, BipartitionResult, Family};
    use approx::assert_abs_diff_eq;

    fn family(kind: Family, n: usize) -> Graph {
        make_family(kind, n).unwrap()
    }

    fn chair() -> Graph {
        parse_edge_list("0 1\n1 2\n2 3\n3 4\n3 5").unwrap()
    }

    fn b(g: &Graph, k: usize) -> BigInt {
        bipartite_coeffs(&charpoly(g)).unwrap().get(k)
    }

    /// Forests on up to `max_n` vertices: every free tree plus disjoint unions of two.
    fn forests(max_n: usize) -> Vec<Graph> {
        let trees: Vec<Graph> = (1..max_n).flat_map(free_trees).collect();
        let mut out: Vec<Graph> = (1..=max_n).flat_map(free_trees).collect();
        for a in &trees {
            for c in &trees {
                if a.n() + c.n() <= max_n && a.n() <= c.n() {
                    out.push(a.disjoint_union(c));
                }
            }
        }
        out
    }

    #[test]
    fn cover_predicates() {
        let star = family(Family::Star, 5);
        assert!(is_cover(&star, &[0]));
        let p4 = family(Family::Path, 4);
        assert!(is_cover(&p4, &[1, 2]));
        assert!(!is_cover(&p4, &[0]));
        assert!(is_independent(&p4, &[0, 2]));
        assert!(!is_independent(&p4, &[1, 2]));
        assert!(is_cover(&Graph::empty(3), &[]));
    }

    #[test]
    fn cover_inequality_examples() {
        for k in 2..=9 {
            let star = family(Family::Star, k + 1);
            let r = check_cover_inequality(&star, &[0]).unwrap();
            assert_abs_diff_eq!(r.slack, 0.0, epsilon = 1e-9);
            assert!(r.holds);
            let leaves: Vec<usize> = (1..=k).collect();
            let r = check_independent_inequality(&star, &leaves).unwrap();
            assert_abs_diff_eq!(r.slack, 0.0, epsilon = 1e-9);
            assert!(check_degree_bound(&star, &[0]).unwrap());
        }
        let p4 = family(Family::Path, 4);
        let r = check_cover_inequality(&p4, &[1, 2]).unwrap();
        assert!(r.slack > 1e-3, "{r:?}");
        // {v1, v3} is a whole side of the bipartition
        let r = check_independent_inequality(&p4, &[0, 2]).unwrap();
        assert_abs_diff_eq!(r.slack, 0.0, epsilon = 1e-9);
        let r = check_independent_inequality(&p4, &[0, 3]).unwrap();
        assert!(r.slack < -1e-3, "{r:?}");
        assert!(check_degree_bound(&p4, &[1, 2]).unwrap());
        let k2 = family(Family::Path, 2);
        let r = check_independent_inequality(&k2, &[0]).unwrap();
        assert_abs_diff_eq!(r.energy_sum, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.half_total, 1.0, epsilon = 1e-12);
        assert!(check_degree_bound(&k2, &[0]).unwrap());
    }

    #[test]
    fn rejections() {
        let p4 = family(Family::Path, 4);
        assert_eq!(check_cover_inequality(&p4, &[0]), Err(Error::NotACover));
        assert_eq!(check_independent_inequality(&p4, &[1, 2]), Err(Error::NotIndependent));
        assert!(matches!(
            check_cover_inequality(&family(Family::Cycle, 3), &[0, 1]),
            Err(Error::NotBipartite { .. })
        ));
        assert!(matches!(check_cover_inequality(&p4, &[9]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(
            count_matchings_containing_edge(&p4, (0, 2), 1),
            Err(Error::EdgeNotFound(0, 2))
        );
        assert_eq!(
            enumerate_minimal_covers(&Graph::empty(15), DEFAULT_COVER_CAP),
            Err(Error::AboveCap { n: 15, cap: 14 })
        );
    }

    #[test]
    fn matching_counts() {
        let p7 = family(Family::Path, 7);
        assert_eq!(count_k_matchings(&p7, 3), BigInt::from(4));
        assert_eq!(count_k_matchings(&chair(), 3), BigInt::zero());
        assert_eq!(count_k_matchings(&chair(), 0), BigInt::one());
        let k2 = family(Family::Path, 2);
        assert_eq!(count_matchings_containing_edge(&k2, (0, 1), 1).unwrap(), BigInt::one());
        let p4 = family(Family::Path, 4);
        assert_eq!(count_matchings_containing_edge(&p4, (1, 2), 2).unwrap(), BigInt::zero());
        assert_eq!(count_matchings_containing_edge(&p4, (0, 1), 2).unwrap(), BigInt::one());
        // perfect matchings of K_6
        assert_eq!(count_k_matchings(&family(Family::Complete, 6), 3), BigInt::from(15));
    }

    #[test]
    fn minimal_covers() {
        assert_eq!(enumerate_minimal_covers(&family(Family::Path, 2), 14).unwrap(), vec![vec![0], vec![1]]);
        assert_eq!(
            enumerate_minimal_covers(&family(Family::Path, 3), 14).unwrap(),
            vec![vec![1], vec![0, 2]]
        );
        assert_eq!(
            enumerate_minimal_covers(&family(Family::Star, 5), 14).unwrap(),
            vec![vec![0], vec![1, 2, 3, 4]]
        );
        assert_eq!(enumerate_minimal_covers(&Graph::empty(2), 14).unwrap(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn matchings_equal_bipartite_coefficients_on_forests() {
        for g in forests(8) {
            for k in 0..=g.n() / 2 + 1 {
                assert_eq!(count_k_matchings(&g, k), b(&g, k), "{g:?} k = {k}");
            }
        }
    }

    #[test]
    fn complement_duality() {
        let graphs = [chair(), family(Family::Cycle, 6), family(Family::Complete, 4), family(Family::Star, 7)];
        for g in graphs.iter().chain(free_trees(7).iter()) {
            let n = g.n();
            for mask in 0u32..1 << n {
                let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let rest: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
                assert_eq!(is_independent(g, &s), is_cover(g, &rest));
            }
        }
    }

    #[test]
    fn double_count_and_cover_domination() {
        for g in forests(8) {
            let edges: Vec<_> = g.edges().collect();
            let drops: Vec<Vec<BigInt>> = (0..g.n())
                .map(|v| {
                    let minus = g.delete_vertex(v).unwrap();
                    (0..=g.n() / 2).map(|k| b(&g, k) - b(&minus, k)).collect()
                })
                .collect();
            for k in 0..=g.n() / 2 {
                let per_edge: BigInt = edges
                    .iter()
                    .map(|&e| count_matchings_containing_edge(&g, e, k).unwrap())
                    .sum();
                let total: BigInt = drops.iter().map(|d| d[k].clone()).sum();
                assert_eq!(total, BigInt::from(2) * &per_edge);
                for cover in enumerate_minimal_covers(&g, 14).unwrap() {
                    let covered: BigInt = cover.iter().map(|&v| drops[v][k].clone()).sum();
                    assert!(covered >= per_edge);
                }
            }
        }
    }

    #[test]
    fn bipartition_halves() {
        let mut graphs: Vec<Graph> = (2..=8).flat_map(free_trees).collect();
        graphs.extend([4, 6, 8].map(|n| family(Family::Cycle, n)));
        for g in graphs {
            let BipartitionResult::Bipartite(parts) = g.bipartition() else { unreachable!() };
            for part in [&parts.part_one, &parts.part_two] {
                let r = check_cover_inequality(&g, part).unwrap();
                assert_abs_diff_eq!(r.slack, 0.0, epsilon = 1e-8);
            }
        }
    }

    #[test]
    fn cover_inequality_over_minimal_covers() {
        for n in 2..=8 {
            for t in free_trees(n) {
                for c in enumerate_minimal_covers(&t, 14).unwrap() {
                    let r = check_cover_inequality(&t, &c).unwrap();
                    assert!(r.holds, "{t:?} {r:?}");
                }
            }
        }
    }

    #[test]
    fn report_roundtrips_through_json() {
        let r = subset_report(&family(Family::Path, 4), &[2, 1]).unwrap();
        assert_eq!(r.kind, SubsetKind::Cover);
        assert_eq!(r.subset, vec![1, 2]);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<VertexSubsetReport>(&json).unwrap(), r);
        assert_eq!(subset_report(&family(Family::Path, 4), &[0, 1]).unwrap().kind, SubsetKind::Other);
    }
}
