//! gcd-pairs in the residue rings Z_n and the graphs G_n = (Z_n, ν_n).
//!
//! * [`numtheory`]: gcd, totients, divisors and primes.
//! * [`pairs`]: enumeration, restriction and closed-form counting of gcd-pairs.
//! * [`graph`]: the graph G_n with exact invariant algorithms and DOT export.
//! * [`oracle`]: brute-force reference implementations used for cross-checks.
//! * [`verify`]: the claim-by-claim verification harness behind `gcdpairs verify`.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod error;
pub mod graph;
pub mod numtheory;
pub mod oracle;
pub mod pairs;
pub mod verify;

pub use error::{Error, Result};
