//! gcd-pairs in Z_n.
//!
//! An unordered pair `{a, b}` of residues `0 <= a, b < n` is a gcd-pair when
//! `gcd(a, b)` divides `n`. Pairs are stored canonically with `a <= b`, and a
//! [`PairSet`] keeps them in lexicographic order.

mod count;
mod partition;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{at_least, Error, Result};
use crate::numtheory::{divides, gcd};

pub use count::{
    composite_lower_bound, count_prime_power_formula, count_zero_divisor_closed, unit_pair_count,
    zero_divisor_formulas, CountKind, CountResult, Provenance,
};
pub use partition::{
    sprime_unit_bijection, zero_divisor_partition, MatchedPair, ZeroDivisorPartition,
};

/// Version tag carried by every JSON document this crate emits.
pub const SCHEMA_VERSION: u32 = 1;

/// The unique residue of `x` in `[0, n)`.
pub fn canonical_residue(n: u64, x: i64) -> Result<u64> {
    at_least("n", n, 1)?;
    Ok((i128::from(x).rem_euclid(i128::from(n))) as u64)
}

/// Whether `{x mod n, y mod n}` is a gcd-pair in Z_n. `{0, 0}` never is.
pub fn is_gcd_pair(n: u64, x: i64, y: i64) -> Result<bool> {
    let a = canonical_residue(n, x)?;
    let b = canonical_residue(n, y)?;
    Ok(divides(gcd(a, b), n))
}

/// A canonical gcd-pair `{a, b}` in Z_n with `a <= b < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GcdPair {
    n: u64,
    a: u64,
    b: u64,
}

impl GcdPair {
    /// Validates and canonicalizes residues already reduced mod `n`.
    pub fn new(n: u64, x: u64, y: u64) -> Result<Self> {
        at_least("n", n, 1)?;
        for value in [x, y] {
            if value >= n {
                return Err(Error::ResidueOutOfRange { n, value });
            }
        }
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        if !divides(gcd(a, b), n) {
            return Err(Error::NotGcdPair { n, a, b });
        }
        Ok(Self { n, a, b })
    }

    /// Reduces arbitrary integers into Z_n first.
    pub fn from_integers(n: u64, x: i64, y: i64) -> Result<Self> {
        let a = canonical_residue(n, x)?;
        let b = canonical_residue(n, y)?;
        Self::new(n, a, b)
    }

    pub(crate) fn new_unchecked(n: u64, a: u64, b: u64) -> Self {
        debug_assert!(a <= b && b < n && divides(gcd(a, b), n));
        Self { n, a, b }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn first(&self) -> u64 {
        self.a
    }

    pub fn second(&self) -> u64 {
        self.b
    }

    pub fn as_array(&self) -> [u64; 2] {
        [self.a, self.b]
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    pub fn gcd(&self) -> u64 {
        gcd(self.a, self.b)
    }
}

impl fmt::Display for GcdPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

/// Which set of pairs a [`PairSet`] holds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum PairSetLabel {
    /// All of ν_n.
    Full,
    /// ν_{n,A} for the recorded subset A (sorted, deduplicated).
    Restricted(Vec<u64>),
}

impl fmt::Display for PairSetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairSetLabel::Full => f.write_str("full"),
            PairSetLabel::Restricted(subset) => {
                f.write_str("restricted:")?;
                for (i, x) in subset.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

impl From<PairSetLabel> for String {
    fn from(label: PairSetLabel) -> Self {
        label.to_string()
    }
}

impl TryFrom<String> for PairSetLabel {
    type Error = String;

    fn try_from(s: String) -> std::result::Result<Self, Self::Error> {
        if s == "full" {
            return Ok(PairSetLabel::Full);
        }
        let rest = s
            .strip_prefix("restricted:")
            .ok_or_else(|| format!("unknown pair-set label {s:?}"))?;
        if rest.is_empty() {
            return Ok(PairSetLabel::Restricted(Vec::new()));
        }
        let mut subset = rest
            .split(',')
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|e| format!("bad subset element {t:?}: {e}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        subset.sort_unstable();
        subset.dedup();
        Ok(PairSetLabel::Restricted(subset))
    }
}

/// A deduplicated, lexicographically ordered collection of gcd-pairs for one modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPairSet", into = "RawPairSet")]
pub struct PairSet {
    n: u64,
    label: PairSetLabel,
    pairs: Vec<GcdPair>,
}

#[derive(Serialize, Deserialize)]
struct RawPairSet {
    #[serde(default = "default_schema")]
    schema_version: u32,
    n: u64,
    label: PairSetLabel,
    pairs: Vec<[u64; 2]>,
}

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

impl From<PairSet> for RawPairSet {
    fn from(ps: PairSet) -> Self {
        RawPairSet {
            schema_version: SCHEMA_VERSION,
            n: ps.n,
            label: ps.label,
            pairs: ps.pairs.iter().map(GcdPair::as_array).collect(),
        }
    }
}

impl TryFrom<RawPairSet> for PairSet {
    type Error = String;

    fn try_from(raw: RawPairSet) -> std::result::Result<Self, Self::Error> {
        if raw.schema_version != SCHEMA_VERSION {
            return Err(format!("unsupported schema_version {}", raw.schema_version));
        }
        let pairs = raw
            .pairs
            .iter()
            .map(|&[a, b]| {
                if a > b {
                    return Err(format!("pair [{a},{b}] is not in canonical order"));
                }
                GcdPair::new(raw.n, a, b).map_err(|e| e.to_string())
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        PairSet::from_sorted(raw.n, raw.label, pairs).map_err(|e| e.to_string())
    }
}

impl PairSet {
    /// Builds a pair set, checking order, duplicates and label membership.
    pub fn from_sorted(n: u64, label: PairSetLabel, pairs: Vec<GcdPair>) -> Result<Self> {
        at_least("n", n, 1)?;
        if let Some(w) = pairs.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Construction(format!(
                "pairs not strictly increasing at {} / {}",
                w[0], w[1]
            )));
        }
        if let Some(p) = pairs.iter().find(|p| p.n != n) {
            return Err(Error::Construction(format!(
                "pair {p} belongs to Z_{}",
                p.n
            )));
        }
        if let PairSetLabel::Restricted(subset) = &label {
            if let Some(&value) = subset.iter().find(|&&x| x >= n) {
                return Err(Error::ResidueOutOfRange { n, value });
            }
            let inside = |x: u64| subset.binary_search(&x).is_ok();
            if let Some(p) = pairs.iter().find(|p| !inside(p.a) || !inside(p.b)) {
                return Err(Error::Construction(format!(
                    "pair {p} leaves the restriction subset"
                )));
            }
        }
        Ok(Self { n, label, pairs })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn label(&self) -> &PairSetLabel {
        &self.label
    }

    pub fn pairs(&self) -> &[GcdPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GcdPair> {
        self.pairs.iter()
    }

    pub fn contains(&self, a: u64, b: u64) -> bool {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.pairs
            .binary_search_by(|p| (p.a, p.b).cmp(&(a, b)))
            .is_ok()
    }

    pub fn to_arrays(&self) -> Vec<[u64; 2]> {
        self.pairs.iter().map(GcdPair::as_array).collect()
    }
}

impl<'a> IntoIterator for &'a PairSet {
    type Item = &'a GcdPair;
    type IntoIter = std::slice::Iter<'a, GcdPair>;

    fn into_iter(self) -> Self::IntoIter {
        self.pairs.iter()
    }
}

/// Streams ν_n in lexicographic order without materializing it.
///
/// Rows whose first entry divides `n` are emitted wholesale with no gcd
/// evaluation, since every pair containing a divisor of `n` qualifies.
pub fn for_each_pair<F: FnMut(u64, u64)>(n: u64, mut emit: F) {
    for a in 0..n {
        if a != 0 && n.is_multiple_of(a) {
            for b in a..n {
                emit(a, b);
            }
        } else {
            for b in a..n {
                if divides(gcd(a, b), n) {
                    emit(a, b);
                }
            }
        }
    }
}

/// |ν_n| by streaming enumeration.
pub fn count_pairs(n: u64) -> u64 {
    let mut total = 0u64;
    for a in 0..n {
        if a != 0 && n.is_multiple_of(a) {
            total += n - a;
        } else {
            total += (a..n).filter(|&b| divides(gcd(a, b), n)).count() as u64;
        }
    }
    total
}

/// ν_n, lexicographically ordered.
pub fn enumerate(n: u64) -> Result<PairSet> {
    at_least("n", n, 1)?;
    let mut pairs = Vec::new();
    for_each_pair(n, |a, b| pairs.push(GcdPair::new_unchecked(n, a, b)));
    Ok(PairSet {
        n,
        label: PairSetLabel::Full,
        pairs,
    })
}

/// ν_{n,A}: the pairs of `ps` whose endpoints both lie in `subset`.
///
/// Restricting an already restricted set intersects the recorded subsets.
pub fn restrict(ps: &PairSet, subset: &[u64]) -> Result<PairSet> {
    let n = ps.n;
    if let Some(&value) = subset.iter().find(|&&x| x >= n) {
        return Err(Error::ResidueOutOfRange { n, value });
    }
    let mut members: Vec<u64> = subset.to_vec();
    members.sort_unstable();
    members.dedup();
    if let PairSetLabel::Restricted(previous) = &ps.label {
        members.retain(|x| previous.binary_search(x).is_ok());
    }
    let mut mask = vec![false; n as usize];
    for &x in &members {
        mask[x as usize] = true;
    }
    let pairs = ps
        .pairs
        .iter()
        .filter(|p| mask[p.a as usize] && mask[p.b as usize])
        .copied()
        .collect();
    Ok(PairSet {
        n,
        label: PairSetLabel::Restricted(members),
        pairs,
    })
}

/// The three element classes of Z_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementClasses {
    pub n: u64,
    pub units: Vec<u64>,
    pub zero_divisors: Vec<u64>,
}

impl ElementClasses {
    pub fn zero(&self) -> u64 {
        0
    }
}

/// Splits Z_n into {0}, the units and the zero divisors.
pub fn classify_elements(n: u64) -> Result<ElementClasses> {
    at_least("n", n, 2)?;
    let (units, zero_divisors) = (1..n).partition(|&a| gcd(a, n) == 1);
    Ok(ElementClasses {
        n,
        units,
        zero_divisors,
    })
}

/// |ν_{n,Z(Z_n)}| by enumeration.
pub fn count_zero_divisor_pairs(n: u64) -> Result<u64> {
    let classes = classify_elements(n)?;
    let zds = &classes.zero_divisors;
    let mut total = 0u64;
    for (i, &a) in zds.iter().enumerate() {
        total += zds[i..].iter().filter(|&&b| divides(gcd(a, b), n)).count() as u64;
    }
    Ok(total)
}
