//! Brute-force reference implementations.
//!
//! Nothing here reuses the optimized code paths: there is a separate gcd
//! loop, a separate adjacency build (a dense `u32` mask per vertex) and plain
//! exhaustive searches. Each search has a hard limit on `n`.

use crate::error::{at_least, Error, Result};
use crate::graph::{CliqueWitness, PathWitness};
use crate::pairs::{GcdPair, PairSet, PairSetLabel};

/// Largest n accepted by [`exhaustive_max_clique`].
pub const CLIQUE_LIMIT: usize = 26;
/// Largest n accepted by [`exhaustive_chromatic`].
pub const CHROMATIC_LIMIT: usize = 12;
/// Largest n accepted by [`exhaustive_hamiltonian`].
pub const HAMILTONIAN_LIMIT: usize = 15;
/// Largest n accepted by [`exhaustive_domination`].
pub const DOMINATION_LIMIT: usize = 20;

/// Euclid's algorithm; `euclid(0, 0) = 0`.
pub fn euclid(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while x != 0 {
        let t = y % x;
        y = x;
        x = t;
    }
    y
}

/// The definition itself: `gcd(a, b)` is nonzero and divides `n`.
pub fn pair_test(n: u64, a: u64, b: u64) -> bool {
    let g = euclid(a, b);
    g != 0 && n.is_multiple_of(g)
}

/// Trial division by every d with d * d <= n.
pub fn naive_is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Residues in `[1, n)` coprime to `n`.
pub fn naive_units(n: u64) -> Vec<u64> {
    (1..n).filter(|&a| euclid(a, n) == 1).collect()
}

/// Nonzero residues that are not units.
pub fn naive_zero_divisors(n: u64) -> Vec<u64> {
    (1..n).filter(|&a| euclid(a, n) != 1).collect()
}

/// |ν_n| by the double loop.
pub fn naive_count(n: u64) -> u64 {
    let mut total = 0;
    for a in 0..n {
        for b in a..n {
            if pair_test(n, a, b) {
                total += 1;
            }
        }
    }
    total
}

/// Number of gcd-pairs of Z_n with both endpoints in `members` (distinct residues).
pub fn naive_count_within(n: u64, members: &[u64]) -> u64 {
    let mut total = 0;
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i..] {
            if pair_test(n, a, b) {
                total += 1;
            }
        }
    }
    total
}

/// Whether every vertex of G_n is reachable from 0, by BFS over the definition.
pub fn naive_connected(n: u64) -> bool {
    let mut seen = vec![false; n as usize];
    let mut queue = vec![0u64];
    seen[0] = true;
    while let Some(v) = queue.pop() {
        for w in 0..n {
            if w != v && !seen[w as usize] && pair_test(n, v, w) {
                seen[w as usize] = true;
                queue.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// The first triangle of G_n in lexicographic order, by a triple loop.
pub fn naive_triangle(n: u64) -> Option<[u64; 3]> {
    for a in 0..n {
        for b in a + 1..n {
            if !pair_test(n, a, b) {
                continue;
            }
            for c in b + 1..n {
                if pair_test(n, a, c) && pair_test(n, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Vertices of G_n adjacent to every other vertex.
pub fn universal_vertices(n: u64) -> Vec<u64> {
    (0..n)
        .filter(|&v| (0..n).all(|w| w == v || pair_test(n, v, w)))
        .collect()
}

/// ν_n by the literal double loop over `0 <= a <= b < n`.
pub fn naive_enumerate(n: u64) -> Result<PairSet> {
    at_least("n", n, 1)?;
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a..n {
            if pair_test(n, a, b) {
                pairs.push(GcdPair::new(n, a, b)?);
            }
        }
    }
    PairSet::from_sorted(n, PairSetLabel::Full, pairs)
}

fn check_limit(search: &'static str, n: usize, limit: usize) -> Result<()> {
    at_least("n", n as u64, 1)?;
    if n > limit {
        return Err(Error::BoundExceeded {
            search,
            n: n as u64,
            bound: limit as u64,
        });
    }
    Ok(())
}

/// `adj[a]` has bit `b` set when `a != b` and `{a, b}` is a gcd-pair.
fn dense_adjacency(n: usize) -> Vec<u32> {
    (0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| a != b && pair_test(n as u64, a as u64, b as u64))
                .fold(0u32, |row, b| row | 1 << b)
        })
        .collect()
}

fn ones(mut mask: u32) -> Vec<usize> {
    let mut out = Vec::new();
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

fn grow_cliques(adj: &[u32], clique: &mut Vec<usize>, candidates: u32, best: &mut Vec<usize>) {
    if clique.len() > best.len() {
        *best = clique.clone();
    }
    for v in ones(candidates) {
        clique.push(v);
        // only later vertices, so each clique is visited once, in lexicographic order
        let later = candidates & adj[v] & !((2u32 << v) - 1);
        grow_cliques(adj, clique, later, best);
        clique.pop();
    }
}

/// Maximum clique of G_n by visiting every clique; the first one of the
/// largest size in lexicographic order is returned.
pub fn exhaustive_max_clique(n: usize) -> Result<CliqueWitness> {
    check_limit("exhaustive clique search", n, CLIQUE_LIMIT)?;
    let adj = dense_adjacency(n);
    let mut best = Vec::new();
    grow_cliques(&adj, &mut Vec::new(), (1u32 << n) - 1, &mut best);
    Ok(CliqueWitness {
        vertices: best,
        maximal: true,
        maximum: true,
    })
}

fn colorable(adj: &[u32], colors: &mut Vec<usize>, k: usize, used: usize) -> bool {
    let v = colors.len();
    if v == adj.len() {
        return true;
    }
    // a fresh colour is only ever the next unused one
    for c in 0..k.min(used + 1) {
        if (0..v).any(|u| adj[v] >> u & 1 == 1 && colors[u] == c) {
            continue;
        }
        colors.push(c);
        if colorable(adj, colors, k, used.max(c + 1)) {
            return true;
        }
        colors.pop();
    }
    false
}

/// Chromatic number of G_n (loops ignored) by trying k = 1, 2, ... colours
/// over all assignments in vertex order.
pub fn exhaustive_chromatic(n: usize) -> Result<usize> {
    check_limit("exhaustive chromatic search", n, CHROMATIC_LIMIT)?;
    let adj = dense_adjacency(n);
    let k = (1..=n)
        .find(|&k| colorable(&adj, &mut Vec::with_capacity(n), k, 0))
        .expect("n colours always suffice");
    Ok(k)
}

/// Cycle facts for G_n from exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSearch {
    /// A Hamiltonian cycle starting at 0, when one exists.
    pub hamiltonian: Option<PathWitness>,
    /// Order of a longest cycle; 0 when the graph has no cycle.
    pub longest_cycle: usize,
}

/// Decides Hamiltonicity and finds the longest cycle of G_n.
///
/// `reach[mask]` holds the end vertices `v` of paths that visit exactly the
/// vertices of `mask` and start at the smallest vertex of `mask`. Every cycle
/// is such a path closed by an edge back to its smallest vertex, so this
/// table covers all vertex orderings without listing them one by one.
pub fn exhaustive_hamiltonian(n: usize) -> Result<CycleSearch> {
    check_limit("exhaustive cycle search", n, HAMILTONIAN_LIMIT)?;
    let adj = dense_adjacency(n);
    let full = (1usize << n) - 1;
    let mut reach = vec![0u32; full + 1];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    let mut longest = 0;
    for mask in 1..=full {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let start = mask.trailing_zeros() as usize;
        let size = mask.count_ones() as usize;
        if size >= 3 && ends & adj[start] != 0 {
            longest = longest.max(size);
        }
        for v in ones(ends) {
            // extend only by vertices above the start so the start stays smallest
            let next = adj[v] & !(mask as u32) & !((2u32 << start) - 1);
            for w in ones(next) {
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }

    let hamiltonian = (n >= 3 && reach[full] & adj[0] != 0).then(|| {
        // walk back from the smallest closing vertex
        let mut order = Vec::with_capacity(n);
        let mut mask = full;
        let mut v = (reach[full] & adj[0]).trailing_zeros() as usize;
        loop {
            order.push(v);
            if mask == 1 {
                break;
            }
            let rest = mask & !(1 << v);
            v = (reach[rest] & adj[v]).trailing_zeros() as usize;
            mask = rest;
        }
        order.reverse();
        PathWitness::cycle(order)
    });
    Ok(CycleSearch {
        hamiltonian,
        longest_cycle: longest,
    })
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Domination number of G_n and the lexicographically first minimum
/// dominating set, checking every subset size by size.
pub fn exhaustive_domination(n: usize) -> Result<(usize, Vec<usize>)> {
    check_limit("exhaustive domination search", n, DOMINATION_LIMIT)?;
    let adj = dense_adjacency(n);
    let all = (1u32 << n) - 1;
    for k in 1..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let covered = idx.iter().fold(0u32, |acc, &v| acc | adj[v] | 1 << v);
            if covered == all {
                return Ok((k, idx));
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set dominates")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naive_counts() {
        assert_eq!(naive_enumerate(6).unwrap().len(), 16);
        assert_eq!(naive_enumerate(9).unwrap().len(), 26);
        assert_eq!(naive_enumerate(8).unwrap().len(), 26);
        assert!(naive_enumerate(1).unwrap().is_empty());
        assert!(naive_enumerate(0).is_err());
        assert_eq!(naive_count(9), 26);
        assert_eq!(naive_count_within(6, &naive_zero_divisors(6)), 5);
        assert_eq!(naive_units(9), vec![1, 2, 4, 5, 7, 8]);
        let primes: Vec<u64> = (0..30).filter(|&p| naive_is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn small_structure() {
        assert!(naive_connected(1) && naive_connected(30));
        assert_eq!(naive_triangle(3), None);
        assert_eq!(naive_triangle(4), Some([0, 1, 2]));
        assert_eq!(universal_vertices(6), vec![1, 2, 3]);
        assert_eq!(universal_vertices(2), vec![0, 1]);
    }

    #[test]
    fn cliques() {
        assert_eq!(
            exhaustive_max_clique(6).unwrap().vertices,
            vec![1, 2, 3, 4, 5]
        );
        assert_eq!(exhaustive_max_clique(7).unwrap().order(), 4);
        assert_eq!(exhaustive_max_clique(4).unwrap().vertices, vec![0, 1, 2]);
        assert_eq!(exhaustive_max_clique(1).unwrap().vertices, vec![0]);
        assert!(matches!(
            exhaustive_max_clique(27),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn chromatic() {
        let got: Vec<usize> = (2..=9).map(|n| exhaustive_chromatic(n).unwrap()).collect();
        assert_eq!(got, vec![2, 2, 3, 3, 5, 4, 6, 5]);
        assert!(exhaustive_chromatic(13).is_err());
    }

    #[test]
    fn cycles() {
        let six = exhaustive_hamiltonian(6).unwrap();
        assert_eq!(six.longest_cycle, 6);
        let cycle = six.hamiltonian.unwrap();
        assert_eq!(cycle.order(), 6);
        assert!(cycle.is_valid_in(&crate::graph::build(6).unwrap()));

        let seven = exhaustive_hamiltonian(7).unwrap();
        assert_eq!((seven.hamiltonian, seven.longest_cycle), (None, 6));
        let two = exhaustive_hamiltonian(2).unwrap();
        assert_eq!((two.hamiltonian, two.longest_cycle), (None, 0));
        assert_eq!(exhaustive_hamiltonian(3).unwrap().longest_cycle, 0);
        assert!(exhaustive_hamiltonian(16).is_err());
    }

    #[test]
    fn domination() {
        assert_eq!(exhaustive_domination(6).unwrap().0, 1);
        // 0 is adjacent to 1 in G_2 and comes first
        assert_eq!(exhaustive_domination(2).unwrap(), (1, vec![0]));
        assert_eq!(exhaustive_domination(16).unwrap().0, 1);
        assert!(exhaustive_domination(21).is_err());
    }
}
