//! Elementary number theory on 64-bit naturals: gcd, totients, divisors,
//! small primes and prime-power detection.

use std::collections::HashMap;

use crate::error::{at_least, Result};

/// Euclid's algorithm. `gcd(0, 0) == 0`, so zero never divides a positive modulus.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// `d | n` with the convention that 0 divides nothing positive.
#[inline]
pub fn divides(d: u64, n: u64) -> bool {
    if d == 0 {
        n == 0
    } else {
        n.is_multiple_of(d)
    }
}

/// A prime power `p^k` with `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    k: u32,
}

impl PrimePower {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        at_least("exponent", u64::from(k), 1)?;
        if !is_prime(p) {
            return Err(crate::Error::Unsupported {
                operation: "PrimePower::new",
                requirement: "a prime base",
                n: p,
            });
        }
        p.checked_pow(k)
            .ok_or(crate::Error::Overflow("prime power value"))?;
        Ok(Self { p, k })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }

    pub fn value(&self) -> u64 {
        self.p.pow(self.k)
    }
}

/// Deterministic trial division on a 2-3 wheel.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut f = 5u64;
    while f <= n / f {
        if n.is_multiple_of(f) || n.is_multiple_of(f + 2) {
            return false;
        }
        f += 6;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs. Empty for 0 and 1.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut take = |n: &mut u64, p: u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    take(&mut n, 2);
    take(&mut n, 3);
    let mut f = 5u64;
    while f <= n / f {
        take(&mut n, f);
        take(&mut n, f + 2);
        f += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient by factorization.
pub fn euler_phi(m: u64) -> Result<u64> {
    at_least("totient argument", m, 1)?;
    Ok(factorize(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1)))
}

/// `phi[j]` for every `0 <= j <= limit` via a linear sieve; `phi[0] = 0`.
pub fn phi_table(limit: usize) -> Vec<u64> {
    let mut phi = vec![0u64; limit + 1];
    if limit >= 1 {
        phi[1] = 1;
    }
    let mut primes: Vec<usize> = Vec::new();
    let mut composite = vec![false; limit + 1];
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i);
            phi[i] = (i - 1) as u64;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > limit {
                break;
            }
            composite[ip] = true;
            if i % p == 0 {
                phi[ip] = phi[i] * p as u64;
                break;
            }
            phi[ip] = phi[i] * (p as u64 - 1);
        }
    }
    phi
}

const SIEVE_ONLY_LIMIT: u64 = 1 << 20;

/// Summatory totient `sum_{j=1}^{n} phi(j)`; zero for `n = 0`.
///
/// Small arguments use a sieve; larger ones use the Dirichlet-hyperbola
/// recursion `S(n) = n(n+1)/2 - sum_{d>=2} S(n/d)` over a sieved prefix.
///
/// Panics if the result does not fit in a `u64` (roughly `n > 5 * 10^9`).
pub fn phi_partial_sum(n: u64) -> u64 {
    if n <= SIEVE_ONLY_LIMIT {
        return phi_table(n as usize).iter().sum();
    }
    let cut = ((n as f64).powf(2.0 / 3.0) as u64).clamp(SIEVE_ONLY_LIMIT, n) as usize;
    let phi = phi_table(cut);
    let mut prefix = Vec::with_capacity(phi.len());
    let mut acc = 0u128;
    for v in &phi {
        acc += u128::from(*v);
        prefix.push(acc);
    }
    let mut memo = HashMap::new();
    let total = summatory_large(n, &prefix, &mut memo);
    u64::try_from(total).expect("summatory totient exceeds u64")
}

fn summatory_large(n: u64, prefix: &[u128], memo: &mut HashMap<u64, u128>) -> u128 {
    if (n as usize) < prefix.len() {
        return prefix[n as usize];
    }
    if let Some(&v) = memo.get(&n) {
        return v;
    }
    let n128 = u128::from(n);
    let mut total = n128 * (n128 + 1) / 2;
    let mut d = 2u64;
    while d <= n {
        let q = n / d;
        let last = n / q;
        total -= u128::from(last - d + 1) * summatory_large(q, prefix, memo);
        d = last + 1;
    }
    memo.insert(n, total);
    total
}

/// All positive divisors of `n >= 1`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            low.push(d);
            if d != n / d {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// `D_n`: divisors of `n` other than 1, ascending, including `n` itself.
pub fn nontrivial_divisors(n: u64) -> Result<Vec<u64>> {
    at_least("n", n, 2)?;
    let mut ds = divisors(n);
    ds.remove(0);
    Ok(ds)
}

/// Ascending primes strictly below `x` (sieve of Eratosthenes).
pub fn primes_below(x: u64) -> Vec<u64> {
    if x <= 2 {
        return Vec::new();
    }
    let len = x as usize;
    let mut sieve = vec![true; len];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i < len {
        if sieve[i] {
            for j in (i * i..len).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &p)| p.then_some(i as u64))
        .collect()
}

/// `Some(p^k)` when `n` has exactly one distinct prime factor.
pub fn prime_power_decompose(n: u64) -> Option<PrimePower> {
    match factorize(n).as_slice() {
        [(p, k)] => Some(PrimePower { p: *p, k: *k }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_gcd(a: u64, b: u64) -> u64 {
        (1..=a.max(b))
            .rev()
            .find(|d| a.is_multiple_of(*d) && b.is_multiple_of(*d))
            .unwrap_or(0)
    }

    fn brute_phi(m: u64) -> u64 {
        (1..=m).filter(|&j| brute_gcd(j, m) == 1).count() as u64
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(2, 4), 2);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(9, 15), brute_gcd(9, 15));
        assert_eq!(gcd(9, 15), 3);
        assert_eq!(gcd(7, 0), 7);
        assert!(!divides(0, 6));
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_phi(8).unwrap(), 4);
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(12).unwrap(), brute_phi(12));
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert!(euler_phi(0).is_err());
    }

    #[test]
    fn totient_matches_brute_force_and_sieve() {
        let table = phi_table(10_000);
        for m in 1..=10_000u64 {
            assert_eq!(euler_phi(m).unwrap(), table[m as usize], "m = {m}");
        }
        for m in 1..=400u64 {
            assert_eq!(table[m as usize], brute_phi(m), "m = {m}");
        }
    }

    #[test]
    fn partial_sum_examples() {
        assert_eq!(phi_partial_sum(5), 10);
        assert_eq!(phi_partial_sum(0), 0);
        assert_eq!(phi_partial_sum(8), 22);
        for n in 1..500u64 {
            assert_eq!(
                phi_partial_sum(n) - phi_partial_sum(n - 1),
                euler_phi(n).unwrap()
            );
        }
    }

    #[test]
    fn partial_sum_large_path_matches_sieve() {
        for n in [SIEVE_ONLY_LIMIT + 1, 3_000_000, 4_194_303] {
            let sieved: u64 = phi_table(n as usize).iter().sum();
            assert_eq!(phi_partial_sum(n), sieved, "n = {n}");
        }
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(nontrivial_divisors(6).unwrap(), vec![2, 3, 6]);
        assert_eq!(nontrivial_divisors(15).unwrap(), vec![3, 5, 15]);
        assert_eq!(nontrivial_divisors(8).unwrap(), vec![2, 4, 8]);
        assert!(nontrivial_divisors(1).is_err());
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn primes_examples() {
        assert_eq!(primes_below(6), vec![2, 3, 5]);
        assert_eq!(primes_below(8), vec![2, 3, 5, 7]);
        assert!(primes_below(2).is_empty());
        assert_eq!(primes_below(3), vec![2]);
        let listed = primes_below(2000);
        let brute: Vec<u64> = (0..2000).filter(|&x| is_prime(x)).collect();
        assert_eq!(listed, brute);
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(prime_power_decompose(9), Some(PrimePower { p: 3, k: 2 }));
        assert_eq!(prime_power_decompose(6), None);
        let eight = prime_power_decompose(8).unwrap();
        assert_eq!((eight.prime(), eight.exponent(), eight.value()), (2, 3, 8));
        assert!(PrimePower::new(4, 2).is_err());
        assert!(PrimePower::new(2, 0).is_err());
        assert!(PrimePower::new(2, 64).is_err());
    }

    #[test]
    fn prime_power_iff_single_prime_factor() {
        let primes = primes_below(5000);
        for n in 2..5000u64 {
            let distinct = primes.iter().filter(|&&p| n % p == 0).count();
            assert_eq!(prime_power_decompose(n).is_some(), distinct == 1, "n = {n}");
        }
    }
}
