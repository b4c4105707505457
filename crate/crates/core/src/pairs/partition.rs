use std::collections::BTreeMap;

use crate::error::{at_least, Error, Result};
use crate::numtheory::{divides, gcd, nontrivial_divisors};

use super::GcdPair;

/// The zero divisors of Z_n split by their gcd with `n`.
///
/// Cell `d` is `S'_d = { rd : 1 <= r < n/d, gcd(rd, n) = d }`. Only nonempty
/// cells are kept, so the key `d = n` never appears.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDivisorPartition {
    n: u64,
    cells: BTreeMap<u64, Vec<u64>>,
}

impl ZeroDivisorPartition {
    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn cells(&self) -> &BTreeMap<u64, Vec<u64>> {
        &self.cells
    }

    pub fn cell(&self, d: u64) -> Option<&[u64]> {
        self.cells.get(&d).map(Vec::as_slice)
    }

    /// Union of all cells, ascending.
    pub fn elements(&self) -> Vec<u64> {
        let mut all: Vec<u64> = self.cells.values().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

pub fn zero_divisor_partition(n: u64) -> Result<ZeroDivisorPartition> {
    at_least("n", n, 2)?;
    let mut cells = BTreeMap::new();
    for d in nontrivial_divisors(n)? {
        let cell: Vec<u64> = (1..n / d)
            .map(|r| r * d)
            .filter(|&x| gcd(x, n) == d)
            .collect();
        if !cell.is_empty() {
            cells.insert(d, cell);
        }
    }
    Ok(ZeroDivisorPartition { n, cells })
}

/// One correspondence `{rd, sd} in ν_{n,S'_d}  <->  {r, s} in ν_{m,U(Z_m)}`, `m = n/d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchedPair {
    pub cell_pair: GcdPair,
    pub unit_pair: GcdPair,
}

/// Matches the gcd-pairs inside cell `S'_d` of Z_n with the gcd-pairs of units of Z_{n/d}.
///
/// Pairs are generated on the cell side and divided by `d`; each image is
/// checked to be a unit gcd-pair of Z_{n/d}, so an error here means the
/// correspondence broke.
pub fn sprime_unit_bijection(n: u64, d: u64) -> Result<Vec<MatchedPair>> {
    at_least("n", n, 2)?;
    if d < 2 || d >= n || !divides(d, n) {
        return Err(Error::InvalidCell { n, d });
    }
    let partition = zero_divisor_partition(n)?;
    let cell = partition.cell(d).ok_or(Error::InvalidCell { n, d })?;
    let m = n / d;
    let mut out = Vec::new();
    for (i, &x) in cell.iter().enumerate() {
        for &y in &cell[i..] {
            if !divides(gcd(x, y), n) {
                continue;
            }
            let (r, s) = (x / d, y / d);
            if gcd(r, m) != 1 || gcd(s, m) != 1 {
                return Err(Error::Construction(format!(
                    "{{{x},{y}}} maps to non-units {{{r},{s}}} of Z_{m}"
                )));
            }
            out.push(MatchedPair {
                cell_pair: GcdPair::new_unchecked(n, x, y),
                unit_pair: GcdPair::new(m, r, s)?,
            });
        }
    }
    Ok(out)
}
