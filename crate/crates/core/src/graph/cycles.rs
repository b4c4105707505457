use serde::{Deserialize, Serialize};

use super::{GcdGraph, PathWitness};
use crate::error::{at_least, Error, Result};

/// Outcome of the Hamiltonian cycle query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum HamiltonianCycle {
    Found {
        cycle: PathWitness,
    },
    /// `certificate`, when present, is an independent set with more than
    /// n/2 vertices, which no Hamiltonian cycle can accommodate.
    Absent {
        certificate: Option<Vec<usize>>,
    },
}

impl HamiltonianCycle {
    pub fn is_found(&self) -> bool {
        matches!(self, HamiltonianCycle::Found { .. })
    }
}

fn validated(g: &GcdGraph, witness: PathWitness, what: &str) -> Result<PathWitness> {
    if witness.is_valid_in(g) {
        Ok(witness)
    } else {
        Err(Error::Construction(format!(
            "{what} {:?} is not valid in G_{}",
            witness.vertices,
            g.n()
        )))
    }
}

/// Every triangle `(a, b, c)`, `a < b < c`, in lexicographic order; returns the first.
pub fn triangle_scan(g: &GcdGraph) -> Option<PathWitness> {
    for a in g.vertices() {
        for b in g.neighbors(a).ones().filter(|&b| b > a) {
            let mut common = g.neighbors(a).clone();
            common.intersect_with(g.neighbors(b));
            if let Some(c) = common.ones().find(|&c| c > b) {
                return Some(PathWitness::cycle(vec![a, b, c]));
            }
        }
    }
    None
}

/// A triangle if one exists.
///
/// The triangle `(1, 2, 3)` is preferred whenever it is present (every
/// n >= 4); otherwise the lexicographically first triangle is returned.
pub fn has_triangle(g: &GcdGraph) -> Option<PathWitness> {
    let canonical = PathWitness::cycle(vec![1, 2, 3]);
    if g.n() >= 4 && canonical.is_valid_in(g) {
        return Some(canonical);
    }
    triangle_scan(g)
}

/// The Hamiltonian path `(0, 1, ..., n-1)`; consecutive integers are coprime.
pub fn hamiltonian_path(g: &GcdGraph) -> Result<PathWitness> {
    at_least("n", g.n() as u64, 2)?;
    validated(g, PathWitness::open(g.vertices().collect()), "path")
}

/// Even n > 2: the cycle `(0, 2, 3, ..., n-1, 1)`. Odd n: absent, certified
/// by the independent set of even residues. n = 2: absent.
pub fn hamiltonian_cycle(g: &GcdGraph) -> Result<HamiltonianCycle> {
    let n = g.n();
    at_least("n", n as u64, 2)?;
    if n == 2 {
        return Ok(HamiltonianCycle::Absent { certificate: None });
    }
    if n.is_multiple_of(2) {
        let mut order = vec![0];
        order.extend(2..n);
        order.push(1);
        let cycle = validated(g, PathWitness::cycle(order), "cycle")?;
        return Ok(HamiltonianCycle::Found { cycle });
    }
    let evens: Vec<usize> = (0..n).step_by(2).collect();
    let independent = evens
        .iter()
        .enumerate()
        .all(|(i, &a)| evens[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
    if !independent || 2 * evens.len() <= n {
        return Err(Error::Construction(format!(
            "even residues do not certify non-Hamiltonicity of G_{n}"
        )));
    }
    Ok(HamiltonianCycle::Absent {
        certificate: Some(evens),
    })
}

/// For odd n >= 5, the cycle `(1, 2, ..., n-1)` of order n - 1. It is a
/// longest cycle, since the parity certificate rules out order n.
pub fn longest_cycle_constructive(g: &GcdGraph) -> Result<PathWitness> {
    let n = g.n();
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::Unsupported {
            operation: "longest_cycle_constructive",
            requirement: "odd n >= 5",
            n: n as u64,
        });
    }
    validated(g, PathWitness::cycle((1..n).collect()), "cycle")
}
