//! The quasi-order `G1 <= G2 iff b_2k(G1) <= b_2k(G2) for all k` on
//! bipartite characteristic polynomials, and the vertex-energy comparisons
//! it implies.
//!
//! For a bipartite `G`, `G - w >= G - v` gives `E(w) <= E(v)`, strictly when
//! the two sequences differ. Across graphs, `G1 u (G2 - w) >= G2 u (G1 - v)`
//! gives `E_G2(w) <= E_G1(v)`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::charpoly::{bipartite_coeffs, charpoly, BipartiteCoeffs};
use crate::error::{Error, Result};
use crate::graph::{attach_pendant_path, make_family, Family, Graph};
use crate::spectral::{decompose, vertex_energy_eigen};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Less,
    Greater,
    Equal,
    Incomparable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRelation {
    pub outcome: Outcome,
    /// Indices `2k` where the two sequences differ.
    pub witness: Vec<usize>,
}

/// Coefficientwise comparison; the shorter sequence is padded with zeros.
pub fn quasi_compare(p1: &BipartiteCoeffs, p2: &BipartiteCoeffs) -> OrderRelation {
    let len = p1.b.len().max(p2.b.len());
    let (mut less, mut greater) = (false, false);
    let mut witness = Vec::new();
    for k in 0..len {
        match p1.get(k).cmp(&p2.get(k)) {
            Ordering::Less => less = true,
            Ordering::Greater => greater = true,
            Ordering::Equal => continue,
        }
        witness.push(2 * k);
    }
    let outcome = match (less, greater) {
        (false, false) => Outcome::Equal,
        (true, false) => Outcome::Less,
        (false, true) => Outcome::Greater,
        (true, true) => Outcome::Incomparable,
    };
    OrderRelation { outcome, witness }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexComparison {
    WGreater,
    VGreater,
    Equal,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossComparison {
    G1VertexGreater,
    G2VertexGreater,
    Equal,
    Inconclusive,
}

fn coeffs_of(g: &Graph) -> Result<BipartiteCoeffs> {
    bipartite_coeffs(&charpoly(g))
}

/// `quasi_compare(b(G - w), b(G - v))` for a bipartite `g`.
pub fn deletion_relation(g: &Graph, v: usize, w: usize) -> Result<OrderRelation> {
    g.require_bipartite()?;
    let minus_w = coeffs_of(&g.delete_vertex(w)?)?;
    let minus_v = coeffs_of(&g.delete_vertex(v)?)?;
    Ok(quasi_compare(&minus_w, &minus_v))
}

pub fn compare_vertices_same_graph(g: &Graph, v: usize, w: usize) -> Result<VertexComparison> {
    Ok(match deletion_relation(g, v, w)?.outcome {
        Outcome::Greater => VertexComparison::VGreater,
        Outcome::Less => VertexComparison::WGreater,
        Outcome::Equal => VertexComparison::Equal,
        Outcome::Incomparable => VertexComparison::Inconclusive,
    })
}

/// `quasi_compare(b(G1 u (G2 - w)), b(G2 u (G1 - v)))`, with each union's
/// polynomial formed as an exact product.
pub fn union_relation(g1: &Graph, v: usize, g2: &Graph, w: usize) -> Result<OrderRelation> {
    g1.require_bipartite()?;
    g2.require_bipartite()?;
    let left = &charpoly(g1) * &charpoly(&g2.delete_vertex(w)?);
    let right = &charpoly(g2) * &charpoly(&g1.delete_vertex(v)?);
    Ok(quasi_compare(&bipartite_coeffs(&left)?, &bipartite_coeffs(&right)?))
}

pub fn compare_vertices_cross_graph(g1: &Graph, v: usize, g2: &Graph, w: usize) -> Result<CrossComparison> {
    Ok(match union_relation(g1, v, g2, w)?.outcome {
        Outcome::Greater => CrossComparison::G1VertexGreater,
        Outcome::Less => CrossComparison::G2VertexGreater,
        Outcome::Equal => CrossComparison::Equal,
        Outcome::Incomparable => CrossComparison::Inconclusive,
    })
}

/// Walks `chain` (keys in decreasing quasi-order) and checks every step is
/// strict. Keys must already be deduplicated.
fn verify_descending<K: std::fmt::Debug>(chain: &[(K, BipartiteCoeffs)]) -> Result<()> {
    for pair in chain.windows(2) {
        let rel = quasi_compare(&pair[0].1, &pair[1].1);
        if rel.outcome != Outcome::Greater {
            return Err(Error::ChainViolation(format!(
                "{:?} vs {:?}: {:?} at {:?}",
                pair[0].0, pair[1].0, rel.outcome, rel.witness
            )));
        }
    }
    Ok(())
}

fn dedup_consecutive(seq: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for x in seq {
        if out.last() != Some(&x) {
            out.push(x);
        }
    }
    out
}

/// Vertices of `P_n` (0-based) grouped into tiers of increasing energy.
///
/// Deleting `v_(i+1)` leaves `P_i u P_(m-i)` with `m = n - 1`; the chain
/// `P_m > P_2 u P_(m-2) > ... > P_2k u P_(m-2k) > P_(2k+1) u P_(m-2k-1) > ... > P_1 u P_(m-1)`
/// with `k = floor(m/4)` is verified exactly before the order is emitted.
/// Each tier holds a vertex and its mirror image.
pub fn path_removal_order(n: usize) -> Result<Vec<Vec<usize>>> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!("path order needs n >= 2, got {n}")));
    }
    let m = n - 1;
    let k = m / 4;
    let evens = (0..=k).map(|j| 2 * j);
    let odds = (0..=k).rev().map(|j| 2 * j + 1);
    let chain = dedup_consecutive(evens.chain(odds).map(|i| i.min(m - i)));
    let path = make_family(Family::Path, n)?;
    let mut checked = Vec::with_capacity(chain.len());
    for &i in &chain {
        let rel = deletion_relation(&path, i, m - i)?;
        if rel.outcome != Outcome::Equal {
            return Err(Error::ChainViolation(format!("mirror vertices {i} and {} differ", m - i)));
        }
        checked.push((i, coeffs_of(&path.delete_vertex(i)?)?));
    }
    verify_descending(&checked)?;
    let mut covered: Vec<usize> = chain.clone();
    covered.sort_unstable();
    if covered != (0..=m / 2).collect::<Vec<_>>() {
        return Err(Error::ChainViolation(format!("chain {chain:?} misses vertices of P{n}")));
    }
    Ok(chain
        .into_iter()
        .map(|i| if i == m - i { vec![i] } else { vec![i, m - i] })
        .collect())
}

/// Positions `i` along `P_(n-1)`, weakest attachment first, by the residue
/// class of `n` mod 4.
fn printed_tree_chain(n: usize) -> Vec<usize> {
    let k = n / 2;
    let evens_to = |top: usize| (1..).map(|j| 2 * j).take_while(move |&e| e <= top);
    let odds_from = |top: usize| (0..=top / 2).rev().map(|j| 2 * j + 1).filter(move |&o| o <= top);
    let mut chain: Vec<usize> = Vec::new();
    match n % 4 {
        0 => {
            chain.extend(evens_to(k));
            chain.extend(odds_from(k - 1));
        }
        2 => {
            chain.extend(evens_to(k - 1));
            chain.push(k);
            chain.extend(odds_from(k.saturating_sub(2)));
        }
        1 => {
            chain.extend(evens_to(k));
            chain.push(k + 1);
            chain.extend(odds_from(k - 1));
        }
        _ => {
            chain.extend(evens_to(k + 1));
            chain.push(k);
            chain.extend(odds_from(k.saturating_sub(2)));
        }
    }
    chain
}

/// Attachment positions (1-based along `P_(n-1)`) grouped into tiers of
/// increasing energy of the attached vertex in the tree `n-1(i)1`.
///
/// The listed chain is mirror-normalized (`i ~ n - i`); positions that
/// coincide after normalization are reported as one tier. Every strict step
/// is verified by exact comparison of the trees' coefficient sequences.
pub fn tree_attachment_order(n: usize) -> Result<Vec<Vec<usize>>> {
    if n < 4 {
        return Err(Error::InvalidFamily(format!("tree order needs n >= 4, got {n}")));
    }
    let chain = dedup_consecutive(printed_tree_chain(n).into_iter().map(|i| i.min(n - i)));
    let trees = (1..n)
        .map(|i| attach_pendant_path(n - 1, i, 1).and_then(|(t, _)| coeffs_of(&t)))
        .collect::<Result<Vec<_>>>()?;
    for i in 1..n {
        if trees[i - 1] != trees[n - i - 1] {
            return Err(Error::ChainViolation(format!("positions {i} and {} differ", n - i)));
        }
    }
    // increasing energy is increasing tree order; verify from the top
    let descending: Vec<_> = chain.iter().rev().map(|&i| (i, trees[i - 1].clone())).collect();
    verify_descending(&descending)?;
    let mut covered = chain.clone();
    covered.sort_unstable();
    if covered != (1..=n / 2).collect::<Vec<_>>() {
        return Err(Error::ChainViolation(format!("chain {chain:?} misses positions for n = {n}")));
    }
    Ok(chain
        .into_iter()
        .map(|i| if i == n - i { vec![i] } else { vec![i, n - i] })
        .collect())
}

/// Margin by which an energy increase must exceed zero to count.
pub const GROWTH_MARGIN: f64 = 1e-9;

/// Whether hanging a new leaf on `u` raises `E(u)` by more than
/// [`GROWTH_MARGIN`], measured with the eigendecomposition.
pub fn pendant_growth_check(tree: &Graph, u: usize) -> Result<bool> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let (grown, _) = tree.add_pendant(u)?;
    let before = vertex_energy_eigen(&decompose(tree), u)?;
    let after = vertex_energy_eigen(&decompose(&grown), u)?;
    Ok(after - before > GROWTH_MARGIN)
}
