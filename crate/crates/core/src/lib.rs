//! Exact-arithmetic toolkit for Goldbach-type partitions of even numbers.
//!
//! * [`primes`]: segmented sieve, deterministic primality, π(a) and a#.
//! * [`partitions`]: Goldbach partitions, prime-difference representations,
//!   prime reflective points, ternary decompositions and prime-gap censuses.
//! * [`algebra`]: the polynomials `prod (x -+ p)` over primes `p <= a`, their
//!   Vieta coefficients, complement products, smoothness splits and Bezout
//!   witnesses, all in arbitrary precision.
//! * [`audit`]: a registry of executable claims run over ranges of `a`, with
//!   deterministic JSON-lines and CSV reports.

pub mod algebra;
pub mod audit;
pub mod bigjson;
pub mod error;
pub mod partitions;
pub mod primes;

pub use algebra::{
    BezoutKind, BezoutWitness, ComplementSet, Expansion, QAndC1, SmoothnessReport, Variant,
    VietaCoefficients,
};
pub use audit::{AuditConfig, AuditReport, Auditor, ClaimId, ClaimResult, ReportFormat, Status};
pub use error::{Error, Result};
pub use partitions::{DiffRepresentation, GapCensus, GoldbachPartition, PrpResult, TernaryDecomposition};
pub use primes::{build_sieve, PrimeSet};

pub use num_bigint::{BigInt, BigUint};
