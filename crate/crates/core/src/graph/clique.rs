//! Maximum cliques by branch and bound with a greedy-colouring bound, and the
//! explicit complete subgraphs built from primes and prime powers.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::{CliqueWitness, ExactBounds, GcdGraph};
use crate::error::{at_least, Error, Result};
use crate::numtheory::{factorize, primes_below};

pub fn is_clique(g: &GcdGraph, vertices: &[usize]) -> bool {
    vertices.iter().all(|&v| v < g.n())
        && vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// A clique is maximal when no outside vertex is adjacent to every member.
pub fn is_maximal_clique(g: &GcdGraph, vertices: &[usize]) -> bool {
    is_clique(g, vertices)
        && g.vertices()
            .filter(|v| !vertices.contains(v))
            .all(|v| vertices.iter().any(|&u| !g.has_edge(u, v)))
}

/// Greedy sequential colouring of `cand` in ascending vertex order. Returns
/// vertices sorted by colour together with the colour number of each, which
/// bounds the clique size reachable from that prefix.
fn color_sort(adj: &[FixedBitSet], cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones(..));
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncolored = cand.clone();
    let mut color = 0;
    while !uncolored.is_clear() {
        color += 1;
        let mut open = uncolored.clone();
        while let Some(v) = open.ones().next() {
            open.set(v, false);
            open.difference_with(&adj[v]);
            uncolored.set(v, false);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

/// Branch and bound; stops as soon as `best` reaches `target`.
fn expand(
    adj: &[FixedBitSet],
    clique: &mut Vec<usize>,
    mut cand: FixedBitSet,
    best: &mut Vec<usize>,
    target: usize,
) {
    let (order, bounds) = color_sort(adj, &cand);
    for i in (0..order.len()).rev() {
        if clique.len() + bounds[i] <= best.len() || best.len() >= target {
            return;
        }
        let v = order[i];
        clique.push(v);
        let mut next = cand.clone();
        next.intersect_with(&adj[v]);
        if next.is_clear() {
            if clique.len() > best.len() {
                best.clone_from(clique);
            }
        } else {
            expand(adj, clique, next, best, target);
        }
        clique.pop();
        cand.set(v, false);
    }
}

fn clique_number_within(adj: &[FixedBitSet], cand: &FixedBitSet) -> usize {
    let mut best = Vec::new();
    expand(adj, &mut Vec::new(), cand.clone(), &mut best, usize::MAX);
    best.len()
}

fn has_clique_within(adj: &[FixedBitSet], cand: &FixedBitSet, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    let mut best = Vec::new();
    expand(adj, &mut Vec::new(), cand.clone(), &mut best, size);
    best.len() >= size
}

/// Lexicographically smallest clique of `size` vertices drawn from `cand`.
fn lex_smallest_clique(adj: &[FixedBitSet], cand: &FixedBitSet, size: usize) -> Option<Vec<usize>> {
    let mut chosen = Vec::with_capacity(size);
    let mut pool = cand.clone();
    while chosen.len() < size {
        let need = size - chosen.len() - 1;
        let mut picked = None;
        for v in pool.ones() {
            let mut next = pool.clone();
            next.intersect_with(&adj[v]);
            next.set_range(..v + 1, false);
            if has_clique_within(adj, &next, need) {
                picked = Some((v, next));
                break;
            }
        }
        let (v, next) = picked?;
        chosen.push(v);
        pool = next;
    }
    Some(chosen)
}

fn all_vertices(n: usize) -> FixedBitSet {
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    all
}

/// Exact maximum clique; the lexicographically smallest among those of largest size.
pub fn max_clique(g: &GcdGraph, bounds: &ExactBounds) -> Result<CliqueWitness> {
    if g.n() > bounds.clique {
        return Err(Error::BoundExceeded {
            search: "maximum clique search",
            n: g.n() as u64,
            bound: bounds.clique as u64,
        });
    }
    let all = all_vertices(g.n());
    let omega = clique_number_within(g.adjacency(), &all);
    let vertices = lex_smallest_clique(g.adjacency(), &all, omega)
        .expect("a clique of the computed clique number exists");
    Ok(CliqueWitness {
        vertices,
        maximal: true,
        maximum: true,
    })
}

/// Lexicographically smallest clique with exactly `size` vertices, if any.
pub fn find_clique_of_size(g: &GcdGraph, size: usize) -> Option<Vec<usize>> {
    lex_smallest_clique(g.adjacency(), &all_vertices(g.n()), size)
}

/// Which explicit construction produced a [`CliqueConstruction`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum ConstructionFamily {
    /// n = 2: the edge {0, 1}.
    SingleEdge,
    /// n = p^k: 1, the other primes below p^k, and p, p^2, ..., p^{k-1}.
    PrimePower { p: u64, k: u32 },
    /// n = pq, p < q: 1, the other primes below pq, p, p^2, ..., p^k and q,
    /// with k largest such that p^k < pq.
    Semiprime { p: u64, q: u64, k: u32 },
    /// Any n: 1 and every prime below n.
    PrimesBelow,
}

/// An explicit complete subgraph, checked against the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueConstruction {
    pub n: usize,
    pub family: ConstructionFamily,
    /// The vertex set the construction names, ascending.
    pub claimed_vertices: Vec<usize>,
    /// The order the construction asserts.
    pub claimed_order: usize,
    /// Whether the named vertices really are pairwise adjacent.
    pub claimed_is_clique: bool,
    /// Largest pairwise-adjacent subset of the named vertices.
    pub valid_vertices: Vec<usize>,
    /// Whether the valid subset was already maximal before extension.
    pub valid_was_maximal: bool,
    /// The valid subset extended greedily (ascending) to a maximal clique.
    pub witness: CliqueWitness,
}

/// Builds the construction that applies to `n` and validates it.
pub fn clique_construction(n: usize) -> Result<CliqueConstruction> {
    at_least("n", n as u64, 2)?;
    let g = super::build(n)?;
    let primes = primes_below(n as u64);
    let factors = factorize(n as u64);

    let (family, claimed, claimed_order): (ConstructionFamily, Vec<u64>, usize) =
        match factors.as_slice() {
            [(2, 1)] => (ConstructionFamily::SingleEdge, vec![0, 1], 2),
            &[(p, k)] => {
                let mut set = vec![1];
                set.extend(primes.iter().copied().filter(|&x| x != p));
                let m = set.len() - 1;
                set.extend((1..k).map(|i| p.pow(i)));
                (ConstructionFamily::PrimePower { p, k }, set, m + k as usize)
            }
            &[(p, 1), (q, 1)] => {
                let mut k = 1u32;
                while p.pow(k + 1) < p * q {
                    k += 1;
                }
                let mut set = vec![1];
                set.extend(primes.iter().copied().filter(|&x| x != p && x != q));
                let m = set.len() - 1;
                set.extend((1..=k).map(|i| p.pow(i)));
                set.push(q);
                (
                    ConstructionFamily::Semiprime { p, q, k },
                    set,
                    m + k as usize + 2,
                )
            }
            _ => {
                let mut set = vec![1];
                set.extend(primes.iter().copied());
                let order = set.len();
                (ConstructionFamily::PrimesBelow, set, order)
            }
        };

    let mut claimed: Vec<usize> = claimed.into_iter().map(|x| x as usize).collect();
    claimed.sort_unstable();
    claimed.dedup();
    let claimed_is_clique = is_clique(&g, &claimed);

    let valid_vertices = if claimed_is_clique {
        claimed.clone()
    } else {
        let mut mask = FixedBitSet::with_capacity(n);
        for &v in &claimed {
            mask.insert(v);
        }
        let size = clique_number_within(g.adjacency(), &mask);
        lex_smallest_clique(g.adjacency(), &mask, size).expect("clique of computed size exists")
    };
    let valid_was_maximal = is_maximal_clique(&g, &valid_vertices);

    let mut extended = valid_vertices.clone();
    for v in g.vertices() {
        if !extended.contains(&v) && extended.iter().all(|&u| g.has_edge(u, v)) {
            extended.push(v);
        }
    }
    extended.sort_unstable();
    if !is_maximal_clique(&g, &extended) {
        return Err(Error::Construction(format!(
            "extended clique {extended:?} of G_{n} is not maximal"
        )));
    }

    Ok(CliqueConstruction {
        n,
        family,
        claimed_vertices: claimed,
        claimed_order,
        claimed_is_clique,
        valid_vertices,
        valid_was_maximal,
        witness: CliqueWitness {
            vertices: extended,
            maximal: true,
            maximum: false,
        },
    })
}
