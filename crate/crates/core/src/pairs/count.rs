//! Closed-form counts of ν_n and ν_{n,Z(Z_n)}.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{at_least, Error, Result};
use crate::numtheory::{
    divides, factorize, gcd, is_prime, nontrivial_divisors, phi_partial_sum, PrimePower,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountKind {
    /// The value is the count.
    Exact,
    /// The count is strictly greater than the value.
    StrictLowerBound,
    /// The count is at least the value.
    LowerBound,
}

impl CountKind {
    pub fn admits(self, value: u64, actual: u64) -> bool {
        match self {
            CountKind::Exact => actual == value,
            CountKind::StrictLowerBound => actual > value,
            CountKind::LowerBound => actual >= value,
        }
    }
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountKind::Exact => "exact",
            CountKind::StrictLowerBound => "strict-lower-bound",
            CountKind::LowerBound => "lower-bound",
        })
    }
}

/// The result that produced a [`CountResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// |ν_{p^k}| = k + Σ_i Σ_{j < p^i} φ(j).
    PrimePowerCount,
    /// |ν_n| > 1 + Σ_{j < n} φ(j) for composite n.
    CompositeLowerBound,
    /// Z(Z_p) is empty.
    ZeroDivisorsPrime,
    /// |ν_{p^k,Z}| = |ν_{p^{k-1}}| - k + 1.
    ZeroDivisorsPrimePower,
    /// |ν_{2p,Z}| = |ν_p| + p - 1.
    ZeroDivisors2p,
    /// |ν_{3p,Z}| = |ν_p| + p + ceil((p-1)/2).
    ZeroDivisors3p,
    /// |ν_{pq,Z}| >= |ν_p| + |ν_q| + p + q - 5.
    ZeroDivisorsPq,
    /// |ν_{n,Z}| >= Σ_d |ν_{n/d,U(Z_{n/d})}|.
    ZeroDivisorCellSum,
}

impl Provenance {
    pub fn id(self) -> &'static str {
        match self {
            Provenance::PrimePowerCount => "prime-power-count",
            Provenance::CompositeLowerBound => "composite-lower-bound",
            Provenance::ZeroDivisorsPrime => "zero-divisors-prime",
            Provenance::ZeroDivisorsPrimePower => "zero-divisors-prime-power",
            Provenance::ZeroDivisors2p => "zero-divisors-2p",
            Provenance::ZeroDivisors3p => "zero-divisors-3p",
            Provenance::ZeroDivisorsPq => "zero-divisors-pq",
            Provenance::ZeroDivisorCellSum => "zero-divisor-cell-sum",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountResult {
    pub value: u64,
    pub kind: CountKind,
    pub provenance: Provenance,
}

impl CountResult {
    fn new(value: u64, kind: CountKind, provenance: Provenance) -> Self {
        Self {
            value,
            kind,
            provenance,
        }
    }

    /// Whether an observed count is consistent with this result.
    pub fn admits(&self, actual: u64) -> bool {
        self.kind.admits(self.value, actual)
    }
}

fn nu_prime_power(pp: PrimePower) -> u64 {
    let p = pp.prime();
    let k = pp.exponent();
    let inner: u64 = (1..=k).map(|i| phi_partial_sum(p.pow(i) - 1)).sum();
    u64::from(k) + inner
}

fn nu_prime(p: u64) -> u64 {
    1 + phi_partial_sum(p - 1)
}

/// |ν_{p^k}| in closed form.
pub fn count_prime_power_formula(pp: PrimePower) -> CountResult {
    CountResult::new(
        nu_prime_power(pp),
        CountKind::Exact,
        Provenance::PrimePowerCount,
    )
}

/// `1 + Σ_{j=1}^{n-1} φ(j)`, which |ν_n| strictly exceeds for composite `n`.
pub fn composite_lower_bound(n: u64) -> Result<CountResult> {
    if n < 4 || is_prime(n) {
        return Err(Error::NotComposite { n });
    }
    Ok(CountResult::new(
        1 + phi_partial_sum(n - 1),
        CountKind::StrictLowerBound,
        Provenance::CompositeLowerBound,
    ))
}

/// |ν_{m,U(Z_m)}|: gcd-pairs whose endpoints are both units of Z_m.
pub fn unit_pair_count(m: u64) -> u64 {
    let units: Vec<u64> = (1..m).filter(|&r| gcd(r, m) == 1).collect();
    let mut total = 0u64;
    for (i, &r) in units.iter().enumerate() {
        total += units[i..]
            .iter()
            .filter(|&&s| divides(gcd(r, s), m))
            .count() as u64;
    }
    total
}

/// Every closed form that applies to |ν_{n,Z(Z_n)}|, exact results first.
///
/// A modulus can match several shapes at once (15 is both `3p` and `pq`), so
/// all of them are reported.
pub fn zero_divisor_formulas(n: u64) -> Result<Vec<CountResult>> {
    at_least("n", n, 2)?;
    let factors = factorize(n);
    let mut out = Vec::new();

    if is_prime(n) {
        out.push(CountResult::new(
            0,
            CountKind::Exact,
            Provenance::ZeroDivisorsPrime,
        ));
        return Ok(out);
    }
    if let [(p, k)] = factors.as_slice() {
        let lower = nu_prime_power(PrimePower::new(*p, k - 1)?);
        out.push(CountResult::new(
            lower + 1 - u64::from(*k),
            CountKind::Exact,
            Provenance::ZeroDivisorsPrimePower,
        ));
    }
    if n.is_multiple_of(2) && is_prime(n / 2) && n / 2 != 2 {
        let p = n / 2;
        out.push(CountResult::new(
            nu_prime(p) + p - 1,
            CountKind::Exact,
            Provenance::ZeroDivisors2p,
        ));
    }
    if n.is_multiple_of(3) && is_prime(n / 3) && n / 3 != 3 {
        let p = n / 3;
        out.push(CountResult::new(
            nu_prime(p) + p + (p - 1).div_ceil(2),
            CountKind::Exact,
            Provenance::ZeroDivisors3p,
        ));
    }
    if let [(p, 1), (q, 1)] = factors.as_slice() {
        out.push(CountResult::new(
            nu_prime(*p) + nu_prime(*q) + p + q - 5,
            CountKind::LowerBound,
            Provenance::ZeroDivisorsPq,
        ));
    }
    let cell_sum: u64 = nontrivial_divisors(n)?
        .into_iter()
        .filter(|&d| d != n)
        .map(|d| unit_pair_count(n / d))
        .sum();
    out.push(CountResult::new(
        cell_sum,
        CountKind::LowerBound,
        Provenance::ZeroDivisorCellSum,
    ));
    Ok(out)
}

/// The strongest closed form for |ν_{n,Z(Z_n)}|: exact when one applies,
/// otherwise the first applicable lower bound.
pub fn count_zero_divisor_closed(n: u64) -> Result<CountResult> {
    let all = zero_divisor_formulas(n)?;
    Ok(all[0])
}
