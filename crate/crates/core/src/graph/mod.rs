//! Simple undirected graphs on contiguous 0-based vertex indices.
//!
//! Graphs are immutable values: every structural operation returns a new
//! graph. Vertex `i` is displayed as `v{i+1}` unless explicit labels are set.

mod families;
mod io;
mod trees;

pub use families::{attach_pendant_path, make_family, Family};
pub use io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use trees::free_trees;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    /// Sorted neighbor lists; symmetric, never containing the vertex itself.
    neighbors: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            neighbors: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if let Err(pos) = self.neighbors[u].binary_search(&v) {
            self.neighbors[u].insert(pos, v);
            let pos = self.neighbors[v].binary_search(&u).unwrap_err();
            self.neighbors[v].insert(pos, u);
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => format!("v{}", v + 1),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Removes `v` and its incident edges; higher indices shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        Ok(self.delete_vertices(&[v]))
    }

    /// Removes every listed vertex (duplicates ignored), reindexing the rest
    /// contiguously in their original order. Panics on out-of-range input.
    pub fn delete_vertices(&self, removed: &[usize]) -> Self {
        let n = self.n();
        let mut keep = vec![true; n];
        for &v in removed {
            keep[v] = false;
        }
        let mut new_index = vec![usize::MAX; n];
        let mut next = 0;
        for v in 0..n {
            if keep[v] {
                new_index[v] = next;
                next += 1;
            }
        }
        let neighbors = (0..n)
            .filter(|&v| keep[v])
            .map(|v| {
                self.neighbors[v]
                    .iter()
                    .filter(|&&w| keep[w])
                    .map(|&w| new_index[w])
                    .collect()
            })
            .collect();
        let labels = self.labels.as_ref().map(|labels| {
            labels
                .iter()
                .enumerate()
                .filter(|(v, _)| keep[*v])
                .map(|(_, l)| l.clone())
                .collect()
        });
        Self { neighbors, labels }
    }

    /// Vertices of `other` are appended after those of `self`, with no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let offset = self.n();
        let mut neighbors = self.neighbors.clone();
        neighbors.extend(
            other
                .neighbors
                .iter()
                .map(|ns| ns.iter().map(|&w| w + offset).collect()),
        );
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            _ => Some(
                (0..self.n())
                    .map(|v| self.label(v))
                    .chain((0..other.n()).map(|v| other.label(v)))
                    .collect(),
            ),
        };
        Self { neighbors, labels }
    }

    /// Adds the edge `uv`, returning a new graph.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { line: 0, vertex: u });
        }
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    /// Appends a new vertex adjacent only to `u`; returns the graph and the new index.
    pub fn add_pendant(&self, u: usize) -> Result<(Self, usize)> {
        self.check_vertex(u)?;
        let mut g = self.clone();
        let v = g.n();
        g.neighbors.push(Vec::new());
        if let Some(labels) = g.labels.as_mut() {
            labels.push(format!("v{}", v + 1));
        }
        g.insert_edge(u, v);
        Ok((g, v))
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        let n = self.n();
        let mut a = vec![vec![0.0; n]; n];
        for (u, v) in self.edges() {
            a[u][v] = 1.0;
            a[v][u] = 1.0;
        }
        a
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_count() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.is_connected() && self.edge_count() + 1 == self.n()
    }

    /// Two-colors the graph by breadth-first search per component.
    pub fn bipartition(&self) -> BipartitionResult {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.neighbors[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            parent[w] = u;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return BipartitionResult::NotBipartite {
                                odd_cycle: odd_cycle(&parent, u, w),
                            };
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let (part_one, part_two) = (0..n).partition(|&v| color[v] == Some(false));
        BipartitionResult::Bipartite(Bipartition { part_one, part_two })
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), BipartitionResult::Bipartite(_))
    }

    /// Errors with the odd-cycle witness when the graph is not bipartite.
    pub fn require_bipartite(&self) -> Result<Bipartition> {
        match self.bipartition() {
            BipartitionResult::Bipartite(b) => Ok(b),
            BipartitionResult::NotBipartite { odd_cycle } => Err(Error::NotBipartite { odd_cycle }),
        }
    }
}

/// Closed walk `lca .. u w .. lca` through the BFS tree, given a
/// monochromatic edge `uw`. Both endpoints sit at the same depth.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    // Same depth in BFS, so walk up in lockstep until the paths meet.
    let (mut i, mut j) = (pu.len() - 1, pw.len() - 1);
    while i > 0 && j > 0 && pu[i - 1] == pw[j - 1] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pu[..=i].iter().rev().copied().collect();
    cycle.extend_from_slice(&pw[..=j]);
    cycle
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub part_one: Vec<usize>,
    pub part_two: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartitionResult {
    Bipartite(Bipartition),
    /// Carries a closed walk of odd length, first vertex repeated at the end.
    NotBipartite { odd_cycle: Vec<usize> },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        make_family(Family::Path, n).unwrap()
    }

    fn assert_well_formed(g: &Graph) {
        for u in 0..g.n() {
            assert!(!g.has_edge(u, u));
            for &w in g.neighbors(u) {
                assert!(g.has_edge(w, u));
            }
        }
    }

    #[test]
    fn delete_star_center_leaves_isolated_vertices() {
        let star = make_family(Family::Star, 5).unwrap();
        let g = star.delete_vertex(0).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn delete_path_end_and_second_vertex() {
        let p7 = path(7);
        assert_eq!(p7.delete_vertex(0).unwrap(), path(6));
        let g = p7.delete_vertex(1).unwrap();
        assert_eq!(g, Graph::empty(1).disjoint_union(&path(5)));
        assert_well_formed(&g);
    }

    #[test]
    fn delete_out_of_range() {
        assert_eq!(
            path(3).delete_vertex(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn deletion_order_commutes() {
        let g = make_family(Family::Cycle, 7).unwrap().add_edge(0, 3).unwrap();
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u == v {
                    continue;
                }
                let a = g.delete_vertex(u).unwrap().delete_vertex(if v > u { v - 1 } else { v }).unwrap();
                let b = g.delete_vertex(v).unwrap().delete_vertex(if u > v { u - 1 } else { u }).unwrap();
                assert_eq!(a, b);
                assert_eq!(a, g.delete_vertices(&[u, v]));
            }
        }
    }

    #[test]
    fn bipartition_of_c4() {
        let c4 = make_family(Family::Cycle, 4).unwrap();
        assert_eq!(
            c4.bipartition(),
            BipartitionResult::Bipartite(Bipartition {
                part_one: vec![0, 2],
                part_two: vec![1, 3]
            })
        );
    }

    #[test]
    fn triangle_witness() {
        let c3 = make_family(Family::Cycle, 3).unwrap();
        assert_eq!(
            c3.bipartition(),
            BipartitionResult::NotBipartite { odd_cycle: vec![0, 1, 2, 0] }
        );
    }

    #[test]
    fn odd_cycle_witness_is_closed_odd_walk() {
        for n in [5, 7, 9] {
            let g = make_family(Family::Cycle, n).unwrap().disjoint_union(&path(3));
            let g = g.add_edge(n + 1, 0).unwrap();
            match g.bipartition() {
                BipartitionResult::NotBipartite { odd_cycle } => {
                    assert_eq!(odd_cycle.first(), odd_cycle.last());
                    assert_eq!((odd_cycle.len() - 1) % 2, 1);
                    for w in odd_cycle.windows(2) {
                        assert!(g.has_edge(w[0], w[1]));
                    }
                }
                other => panic!("expected odd cycle, got {other:?}"),
            }
        }
    }

    #[test]
    fn trees_are_bipartite_and_colorings_are_proper() {
        for n in 1..=8 {
            for t in free_trees(n) {
                let b = t.require_bipartite().unwrap();
                assert_eq!(b.part_one.len() + b.part_two.len(), n);
                for (u, v) in t.edges() {
                    assert_ne!(b.part_one.contains(&u), b.part_one.contains(&v));
                }
            }
        }
    }

    #[test]
    fn union_with_empty_is_identity() {
        let g = make_family(Family::Star, 4).unwrap();
        assert_eq!(g.disjoint_union(&Graph::empty(0)), g);
        let k2 = path(2);
        let two = k2.disjoint_union(&k2);
        assert_eq!((two.n(), two.edge_count()), (4, 2));
        assert!(two.has_edge(2, 3) && !two.has_edge(1, 2));
    }

    #[test]
    fn labels_follow_deletion() {
        let g = path(3).with_labels(vec!["a".into(), "b".into(), "c".into()]);
        let h = g.delete_vertex(1).unwrap();
        assert_eq!(h.label(1), "c");
        assert_eq!(path(3).label(2), "v3");
    }

    #[test]
    fn tree_and_forest_predicates() {
        assert!(path(1).is_tree());
        assert!(!Graph::empty(0).is_tree());
        assert!(Graph::empty(3).is_forest());
        assert!(!make_family(Family::Cycle, 4).unwrap().is_forest());
    }
}
