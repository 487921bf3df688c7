//! Direct searches for additive prime structures around an even number 2a.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::PrimeSet;

/// All unordered prime pairs `p <= q` with `p + q = 2a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldbachPartition {
    pub a: u64,
    pub pairs: Vec<(u64, u64)>,
}

/// Prime pairs `(p, q)` with `q - p = 2a` and `p <= a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffRepresentation {
    pub a: u64,
    pub pairs: Vec<(u64, u64)>,
}

/// Prime reflective points of `a`: offsets `b > 0` with `a - b` and `a + b`
/// both prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrpResult {
    pub a: u64,
    pub points: Vec<u64>,
    pub min_point: Option<u64>,
}

/// An odd `n` written as `3 + p + q` with odd primes `p <= q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TernaryDecomposition {
    pub n: u64,
    pub parts: [u64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapCensus {
    pub gap: u64,
    pub limit: u64,
    pub count: u64,
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(msg()))
    }
}

pub fn goldbach_partitions(a: u64, ps: &PrimeSet) -> Result<GoldbachPartition> {
    require(a >= 2, || format!("goldbach partitions need a >= 2, got {a}"))?;
    ps.ensure_covers("2a", 2 * a)?;
    let pairs = ps
        .primes_up_to(a)
        .iter()
        .filter(|&&p| ps.is_prime_sieved(2 * a - p))
        .map(|&p| (p, 2 * a - p))
        .collect();
    Ok(GoldbachPartition { a, pairs })
}

/// True iff 2a is a sum of two primes. Stops at the first hit.
pub fn has_goldbach(a: u64, ps: &PrimeSet) -> Result<bool> {
    Ok(first_goldbach_prime(a, ps)?.is_some())
}

/// Smallest prime `p` with `2a - p` prime.
pub fn first_goldbach_prime(a: u64, ps: &PrimeSet) -> Result<Option<u64>> {
    require(a >= 2, || format!("goldbach search needs a >= 2, got {a}"))?;
    ps.ensure_covers("2a", 2 * a)?;
    Ok(ps
        .primes_up_to(a)
        .iter()
        .copied()
        .find(|&p| ps.is_prime_sieved(2 * a - p)))
}

pub fn diff_representations(a: u64, ps: &PrimeSet) -> Result<DiffRepresentation> {
    require(a >= 2, || format!("difference representations need a >= 2, got {a}"))?;
    ps.ensure_covers("3a", 3 * a)?;
    let pairs = ps
        .primes_up_to(a)
        .iter()
        .filter(|&&p| ps.is_prime_sieved(2 * a + p))
        .map(|&p| (p, 2 * a + p))
        .collect();
    Ok(DiffRepresentation { a, pairs })
}

/// Smallest prime `p <= a` with `2a + p` prime.
pub fn first_diff_prime(a: u64, ps: &PrimeSet) -> Result<Option<u64>> {
    require(a >= 2, || format!("difference search needs a >= 2, got {a}"))?;
    ps.ensure_covers("3a", 3 * a)?;
    Ok(ps
        .primes_up_to(a)
        .iter()
        .copied()
        .find(|&p| ps.is_prime_sieved(2 * a + p)))
}

pub fn prime_reflective_points(a: u64, ps: &PrimeSet) -> Result<PrpResult> {
    require(a >= 4, || format!("reflective points need a >= 4, got {a}"))?;
    ps.ensure_covers("2a", 2 * a)?;
    let points: Vec<u64> = (1..=a - 2)
        .filter(|&b| ps.is_prime_sieved(a - b) && ps.is_prime_sieved(a + b))
        .collect();
    Ok(PrpResult {
        a,
        min_point: points.first().copied(),
        points,
    })
}

/// Smallest nonzero reflective point, scanning `b` upward.
pub fn min_prime_reflective_point(a: u64, ps: &PrimeSet) -> Result<Option<u64>> {
    require(a >= 4, || format!("reflective points need a >= 4, got {a}"))?;
    ps.ensure_covers("2a", 2 * a)?;
    Ok((1..=a - 2).find(|&b| ps.is_prime_sieved(a - b) && ps.is_prime_sieved(a + b)))
}

/// `n = 3 + p + q` where `(p, q)` is the odd-prime partition of `n - 3` with
/// the smallest `p`.
pub fn ternary_decomposition(n: u64, ps: &PrimeSet) -> Result<TernaryDecomposition> {
    require(n >= 9 && n % 2 == 1, || {
        format!("ternary decomposition needs an odd n >= 9, got {n}")
    })?;
    ps.ensure_covers("n", n)?;
    let m = n - 3;
    ps.primes_up_to(m / 2)
        .iter()
        .skip(1)
        .find(|&&p| ps.is_prime_sieved(m - p))
        .map(|&p| TernaryDecomposition {
            n,
            parts: [3, p, m - p],
        })
        .ok_or(Error::NoDecomposition { n })
}

/// Number of primes `p <= limit` with `p + gap` prime.
pub fn polignac_census(gap: u64, limit: u64, ps: &PrimeSet) -> Result<GapCensus> {
    let counts = polignac_checkpoints(gap, &[limit], ps)?;
    Ok(counts[0])
}

/// Census counts at several ascending limits in one pass.
pub fn polignac_checkpoints(gap: u64, limits: &[u64], ps: &PrimeSet) -> Result<Vec<GapCensus>> {
    require(gap >= 2 && gap.is_multiple_of(2), || {
        format!("gap must be an even number >= 2, got {gap}")
    })?;
    require(limits.windows(2).all(|w| w[0] <= w[1]), || {
        "census limits must be ascending".to_string()
    })?;
    let Some(&top) = limits.last() else {
        return Ok(Vec::new());
    };
    ps.ensure_covers("limit + gap", top.saturating_add(gap))?;

    let mut out = Vec::with_capacity(limits.len());
    let mut count = 0;
    let mut primes = ps.primes_up_to(top).iter().peekable();
    for &limit in limits {
        while let Some(&&p) = primes.peek() {
            if p > limit {
                break;
            }
            if ps.is_prime_sieved(p + gap) {
                count += 1;
            }
            primes.next();
        }
        out.push(GapCensus { gap, limit, count });
    }
    Ok(out)
}
