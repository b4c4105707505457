//! The graph G_n on vertex set Z_n whose edges are the gcd-pairs of Z_n.
//!
//! Pairs `{a, a}` become loops and are kept apart from the simple edges:
//! colouring and planarity look only at simple edges.

mod clique;
mod coloring;
mod cycles;
mod dot;
mod planarity;

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{at_least, Error, Result};
use crate::pairs;

pub use clique::{
    clique_construction, find_clique_of_size, is_clique, is_maximal_clique, max_clique,
    CliqueConstruction, ConstructionFamily,
};
pub use coloring::{chromatic_number, greedy_coloring, is_proper_coloring};
pub use cycles::{
    hamiltonian_cycle, hamiltonian_path, has_triangle, longest_cycle_constructive, triangle_scan,
    HamiltonianCycle,
};
pub use dot::export_dot;
pub use planarity::{is_planar, is_planar_edges};

/// Default limit on `n` for the exact maximum-clique search.
pub const DEFAULT_CLIQUE_BOUND: usize = 64;
/// Default limit on `n` for the exact chromatic-number search.
pub const DEFAULT_CHROMATIC_BOUND: usize = 16;
/// Default limit on `n` for exhaustive cycle searches.
pub const DEFAULT_CYCLE_BOUND: usize = 15;

/// Environment variable overriding the exact-search bounds.
pub const MAX_EXACT_ENV: &str = "GCDPAIRS_MAX_EXACT";

/// Upper limits on `n` for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactBounds {
    pub clique: usize,
    pub chromatic: usize,
    pub cycle: usize,
}

impl Default for ExactBounds {
    fn default() -> Self {
        Self {
            clique: DEFAULT_CLIQUE_BOUND,
            chromatic: DEFAULT_CHROMATIC_BOUND,
            cycle: DEFAULT_CYCLE_BOUND,
        }
    }
}

impl ExactBounds {
    /// Parses an override: either one integer applied to every search, or
    /// comma-separated `clique=N`, `chromatic=N`, `cycle=N` entries.
    pub fn parse_override(text: &str) -> std::result::Result<Self, String> {
        let text = text.trim();
        if let Ok(all) = text.parse::<usize>() {
            return Ok(Self {
                clique: all,
                chromatic: all,
                cycle: all,
            });
        }
        let mut bounds = Self::default();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got {item:?}"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|e| format!("bad bound {value:?}: {e}"))?;
            match key.trim() {
                "clique" => bounds.clique = value,
                "chromatic" => bounds.chromatic = value,
                "cycle" => bounds.cycle = value,
                other => return Err(format!("unknown bound {other:?}")),
            }
        }
        Ok(bounds)
    }

    /// Defaults, overridden by [`MAX_EXACT_ENV`] when set.
    pub fn from_env() -> std::result::Result<Self, String> {
        match std::env::var(MAX_EXACT_ENV) {
            Ok(v) => Self::parse_override(&v),
            Err(std::env::VarError::NotPresent) => Ok(Self::default()),
            Err(e) => Err(e.to_string()),
        }
    }
}

/// G_n = (Z_n, ν_n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdGraph {
    n: usize,
    adjacency: Vec<FixedBitSet>,
    loops: Vec<usize>,
    edge_count: usize,
}

/// Builds G_n from the enumeration of ν_n.
pub fn build(n: usize) -> Result<GcdGraph> {
    at_least("n", n as u64, 1)?;
    let mut adjacency = vec![FixedBitSet::with_capacity(n); n];
    let mut loops = Vec::new();
    let mut edge_count = 0;
    pairs::for_each_pair(n as u64, |a, b| {
        let (a, b) = (a as usize, b as usize);
        if a == b {
            loops.push(a);
        } else {
            adjacency[a].insert(b);
            adjacency[b].insert(a);
            edge_count += 1;
        }
    });
    Ok(GcdGraph {
        n,
        adjacency,
        loops,
        edge_count,
    })
}

impl GcdGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a < self.n && b < self.n && self.adjacency[a].contains(b)
    }

    pub fn has_loop(&self, a: usize) -> bool {
        self.loops.binary_search(&a).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adjacency[v]
    }

    pub(crate) fn adjacency(&self) -> &[FixedBitSet] {
        &self.adjacency
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones(..)
    }

    pub fn loops(&self) -> &[usize] {
        &self.loops
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Simple edges `(a, b)` with `a < b`, lexicographically ordered.
    pub fn simple_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.ones().filter(move |&b| b > a).map(move |b| (a, b)))
    }
}

/// A path `(v_1, ..., v_m)` of distinct vertices; `closed` marks a cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub closed: bool,
}

impl PathWitness {
    pub fn open(vertices: Vec<usize>) -> Self {
        Self {
            vertices,
            closed: false,
        }
    }

    pub fn cycle(vertices: Vec<usize>) -> Self {
        Self {
            vertices,
            closed: true,
        }
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Distinct vertices joined by simple edges; cycles need at least three vertices.
    pub fn is_valid_in(&self, g: &GcdGraph) -> bool {
        let vs = &self.vertices;
        if vs.is_empty() || vs.iter().any(|&v| v >= g.n) {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(g.n);
        for &v in vs {
            if seen.put(v) {
                return false;
            }
        }
        if !vs.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        !self.closed || (vs.len() >= 3 && g.has_edge(vs[vs.len() - 1], vs[0]))
    }
}

/// A complete subgraph with its extension status.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueWitness {
    /// Ascending.
    pub vertices: Vec<usize>,
    /// No outside vertex is adjacent to all members.
    pub maximal: bool,
    /// Certified by exact search to have the largest possible size.
    pub maximum: bool,
}

impl CliqueWitness {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// A proper vertex colouring of the simple edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringWitness {
    /// `colors[v]` is the colour of vertex `v`.
    pub colors: Vec<usize>,
    pub color_count: usize,
    /// False for the greedy upper bound.
    pub exact: bool,
}

/// Star with centre `center` and the given leaves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub embedded: bool,
    pub missing_edges: Vec<(usize, usize)>,
    pub missing_loops: Vec<usize>,
}

pub fn is_connected(g: &GcdGraph) -> bool {
    let mut seen = FixedBitSet::with_capacity(g.n);
    let mut queue = VecDeque::from([0usize]);
    seen.insert(0);
    while let Some(v) = queue.pop_front() {
        for w in g.adjacency[v].ones() {
            if !seen.put(w) {
                queue.push_back(w);
            }
        }
    }
    seen.count_ones(..) == g.n
}

/// The spanning star centred at 1, validated edge by edge.
pub fn star_subgraph(g: &GcdGraph) -> Result<Star> {
    at_least("n", g.n as u64, 2)?;
    let leaves: Vec<usize> = g.vertices().filter(|&v| v != 1).collect();
    if let Some(&bad) = leaves.iter().find(|&&v| !g.has_edge(1, v)) {
        return Err(Error::Construction(format!("1 is not adjacent to {bad}")));
    }
    Ok(Star { center: 1, leaves })
}

/// Checks that G_m sits inside G_n under the identity labelling.
pub fn embedding_check(m: usize, n: usize) -> Result<EmbeddingReport> {
    at_least("m", m as u64, 1)?;
    if n == 0 || !n.is_multiple_of(m) {
        return Err(Error::NotDivisor {
            m: m as u64,
            n: n as u64,
        });
    }
    let small = build(m)?;
    let large = build(n)?;
    let missing_edges: Vec<_> = small
        .simple_edges()
        .filter(|&(a, b)| !large.has_edge(a, b))
        .collect();
    let missing_loops: Vec<_> = small
        .loops()
        .iter()
        .copied()
        .filter(|&a| !large.has_loop(a))
        .collect();
    Ok(EmbeddingReport {
        embedded: missing_edges.is_empty() && missing_loops.is_empty(),
        missing_edges,
        missing_loops,
    })
}

/// Exact domination number by search over vertex sets of increasing size.
///
/// Candidates are tried with the star centre 1 first and the remaining
/// vertices in ascending order, so the witness for G_n is `{1}`.
pub fn domination_number(g: &GcdGraph) -> Result<(usize, Vec<usize>)> {
    at_least("n", g.n as u64, 2)?;
    let order: Vec<usize> = std::iter::once(1)
        .chain(g.vertices().filter(|&v| v != 1))
        .collect();
    let closed: Vec<FixedBitSet> = g
        .vertices()
        .map(|v| {
            let mut c = g.adjacency[v].clone();
            c.insert(v);
            c
        })
        .collect();
    for size in 1..=g.n {
        let mut chosen = Vec::with_capacity(size);
        if let Some(set) = dominating_of_size(&order, &closed, g.n, size, 0, &mut chosen) {
            return Ok((size, set));
        }
    }
    unreachable!("the whole vertex set dominates")
}

fn dominating_of_size(
    order: &[usize],
    closed: &[FixedBitSet],
    n: usize,
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if chosen.len() == size {
        let mut covered = FixedBitSet::with_capacity(n);
        for &v in chosen.iter() {
            covered.union_with(&closed[v]);
        }
        return (covered.count_ones(..) == n).then(|| {
            let mut set = chosen.clone();
            set.sort_unstable();
            set
        });
    }
    for i in start..order.len() {
        if order.len() - i < size - chosen.len() {
            break;
        }
        chosen.push(order[i]);
        if let Some(found) = dominating_of_size(order, closed, n, size, i + 1, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_g5() {
        let g = build(5).unwrap();
        let edges: Vec<_> = g.simple_edges().collect();
        assert_eq!(edges, vec![(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]);
        assert_eq!(g.loops(), &[1]);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn build_g1_and_g6() {
        let g1 = build(1).unwrap();
        assert_eq!(g1.n(), 1);
        assert_eq!(g1.simple_edges().count(), 0);
        assert!(g1.loops().is_empty());

        let g6 = build(6).unwrap();
        assert_eq!(g6.edge_count(), 13);
        assert_eq!(g6.loops(), &[1, 2, 3]);
        assert!(build(0).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&build(6).unwrap()));
        assert!(is_connected(&build(1).unwrap()));
        assert!(is_connected(&build(97).unwrap()));
    }

    #[test]
    fn stars() {
        let s6 = star_subgraph(&build(6).unwrap()).unwrap();
        assert_eq!((s6.center, s6.leaves.clone()), (1, vec![0, 2, 3, 4, 5]));
        let s2 = star_subgraph(&build(2).unwrap()).unwrap();
        assert_eq!(s2.leaves, vec![0]);
        assert_eq!(star_subgraph(&build(9).unwrap()).unwrap().leaves.len(), 8);
        assert!(star_subgraph(&build(1).unwrap()).is_err());
    }

    #[test]
    fn embeddings() {
        assert!(embedding_check(3, 6).unwrap().embedded);
        assert!(embedding_check(7, 7).unwrap().embedded);
        assert!(embedding_check(5, 20).unwrap().embedded);
        assert!(matches!(
            embedding_check(4, 6),
            Err(Error::NotDivisor { .. })
        ));
    }

    #[test]
    fn domination() {
        assert_eq!(domination_number(&build(6).unwrap()).unwrap(), (1, vec![1]));
        assert_eq!(domination_number(&build(2).unwrap()).unwrap(), (1, vec![1]));
        assert_eq!(
            domination_number(&build(12).unwrap()).unwrap(),
            (1, vec![1])
        );
        assert!(domination_number(&build(1).unwrap()).is_err());
    }

    #[test]
    fn path_validation() {
        let g = build(6).unwrap();
        assert!(PathWitness::open(vec![0, 1, 2]).is_valid_in(&g));
        assert!(!PathWitness::open(vec![0, 1, 1]).is_valid_in(&g));
        assert!(!PathWitness::cycle(vec![0, 1]).is_valid_in(&g));
        assert!(!PathWitness::open(vec![0, 4]).is_valid_in(&g));
    }

    #[test]
    fn bounds_override() {
        assert_eq!(ExactBounds::parse_override("20").unwrap().chromatic, 20);
        let b = ExactBounds::parse_override("clique=80, cycle=12").unwrap();
        assert_eq!(
            (b.clique, b.chromatic, b.cycle),
            (80, DEFAULT_CHROMATIC_BOUND, 12)
        );
        assert!(ExactBounds::parse_override("speed=3").is_err());
        assert!(ExactBounds::parse_override("clique").is_err());
    }
}
