//! Prime generation and primality services.
//!
//! [`PrimeSet`] is a segmented sieve of Eratosthenes over `0..=limit`. It keeps
//! an odd-only bit table for O(1) membership and the ascending list of primes
//! for counting and iteration. Values above the sieve limit fall back to a
//! deterministic Miller-Rabin test.

mod miller_rabin;

use num_bigint::BigUint;
use num_integer::Roots;

use crate::error::{Error, Result};

pub use miller_rabin::is_prime_u64;

/// Numbers per sieve segment.
pub const DEFAULT_SEGMENT_SIZE: u64 = 1 << 20;
/// Largest sieve limit accepted without an explicit override.
pub const DEFAULT_MAX_SIEVE_LIMIT: u64 = 1 << 35;
/// Largest argument accepted by [`PrimeSet::primorial`].
pub const DEFAULT_PRIMORIAL_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveConfig {
    pub segment_size: u64,
    pub max_limit: u64,
}

impl Default for SieveConfig {
    fn default() -> Self {
        Self {
            segment_size: DEFAULT_SEGMENT_SIZE,
            max_limit: DEFAULT_MAX_SIEVE_LIMIT,
        }
    }
}

/// Sieved primality table and prime list for `0..=limit`.
///
/// Immutable once built, so it can be shared freely between worker threads.
#[derive(Debug, Clone)]
pub struct PrimeSet {
    limit: u64,
    /// Bit `i` is set iff `2i + 1` is prime.
    odd_bits: Vec<u64>,
    list: Vec<u64>,
}

/// Builds a [`PrimeSet`] with the default configuration.
pub fn build_sieve(limit: u64) -> Result<PrimeSet> {
    PrimeSet::build(limit, SieveConfig::default())
}

impl PrimeSet {
    pub fn build(limit: u64, config: SieveConfig) -> Result<Self> {
        if limit > config.max_limit {
            return Err(Error::Capacity {
                what: "sieve limit",
                requested: limit,
                max: config.max_limit,
            });
        }
        if config.segment_size < 2 {
            return Err(Error::InvalidArgument(
                "sieve segment size must be at least 2".into(),
            ));
        }

        let odd_slots = limit / 2 + 1;
        let mut odd_bits = vec![0u64; (odd_slots as usize).div_ceil(64)];
        let mut list = Vec::with_capacity(approx_pi(limit));
        if limit >= 2 {
            list.push(2);
        }

        let root = limit.sqrt();
        let base = simple_odd_primes(root);
        let seg = config.segment_size + config.segment_size % 2;
        let mut composite = vec![false; (seg / 2) as usize];

        // Each segment covers the odd numbers in [lo, lo + seg).
        let mut lo = 1u64;
        while lo <= limit {
            let hi = lo.saturating_add(seg).min(limit.saturating_add(1));
            let slots = (hi - lo).div_ceil(2) as usize;
            composite[..slots].fill(false);
            for &p in &base {
                let sq = p * p;
                if sq >= hi {
                    break;
                }
                let mut m = if sq >= lo {
                    sq
                } else {
                    let r = lo.div_ceil(p) * p;
                    if r % 2 == 0 {
                        r + p
                    } else {
                        r
                    }
                };
                while m < hi {
                    composite[((m - lo) / 2) as usize] = true;
                    m += 2 * p;
                }
            }
            for (i, &c) in composite[..slots].iter().enumerate() {
                let n = lo + 2 * i as u64;
                if !c && n > 1 {
                    let idx = n / 2;
                    odd_bits[(idx / 64) as usize] |= 1 << (idx % 64);
                    list.push(n);
                }
            }
            lo = hi + hi.is_multiple_of(2) as u64;
        }

        Ok(Self {
            limit,
            odd_bits,
            list,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Ascending primes `<= limit`.
    pub fn list(&self) -> &[u64] {
        &self.list
    }

    /// Primes `<= a`; `a` may exceed the limit, in which case the whole list
    /// is returned.
    pub fn primes_up_to(&self, a: u64) -> &[u64] {
        &self.list[..self.list.partition_point(|&p| p <= a)]
    }

    /// Table lookup. Panics if `n > limit`.
    #[inline]
    pub fn is_prime_sieved(&self, n: u64) -> bool {
        assert!(n <= self.limit, "{n} is beyond the sieve limit {}", self.limit);
        if n.is_multiple_of(2) {
            return n == 2;
        }
        let idx = n / 2;
        self.odd_bits[(idx / 64) as usize] >> (idx % 64) & 1 == 1
    }

    /// Exact primality for any `u64`: table lookup inside the sieve,
    /// Miller-Rabin beyond it.
    pub fn is_prime(&self, n: u64) -> bool {
        if n <= self.limit {
            self.is_prime_sieved(n)
        } else {
            is_prime_u64(n)
        }
    }

    pub fn ensure_covers(&self, what: &'static str, n: u64) -> Result<()> {
        if n > self.limit {
            Err(Error::OutOfRange {
                what,
                value: n,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    /// π(a), the number of primes `<= a`.
    pub fn prime_pi(&self, a: u64) -> Result<u64> {
        self.ensure_covers("prime_pi", a)?;
        Ok(self.primes_up_to(a).len() as u64)
    }

    /// Smallest prime strictly greater than `n`, if the sieve holds one.
    pub fn next_prime_after(&self, n: u64) -> Option<u64> {
        self.list.get(self.list.partition_point(|&p| p <= n)).copied()
    }

    /// a#, the product of primes `<= a` (1 for a < 2).
    pub fn primorial(&self, a: u64) -> Result<BigUint> {
        self.primorial_capped(a, DEFAULT_PRIMORIAL_CAP)
    }

    pub fn primorial_capped(&self, a: u64, cap: u64) -> Result<BigUint> {
        if a > cap {
            return Err(Error::Capacity {
                what: "primorial argument",
                requested: a,
                max: cap,
            });
        }
        self.ensure_covers("primorial", a)?;
        Ok(product_tree(self.primes_up_to(a)))
    }
}

/// Free-function form of [`PrimeSet::prime_pi`].
pub fn prime_pi(a: u64, ps: &PrimeSet) -> Result<u64> {
    ps.prime_pi(a)
}

pub fn primorial(a: u64, ps: &PrimeSet) -> Result<BigUint> {
    ps.primorial(a)
}

/// Primality for any `u64` when no sieve is at hand.
pub fn is_prime(n: u64) -> bool {
    is_prime_u64(n)
}

/// Balanced product of small factors.
pub(crate) fn product_tree(values: &[u64]) -> BigUint {
    match values.len() {
        0 => BigUint::from(1u32),
        1 => BigUint::from(values[0]),
        n if n <= 16 => values.iter().fold(BigUint::from(1u32), |acc, &v| acc * v),
        n => {
            let (l, r) = values.split_at(n / 2);
            product_tree(l) * product_tree(r)
        }
    }
}

fn simple_odd_primes(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 3..=n {
        if i % 2 == 1 && !composite[i] {
            out.push(i as u64);
            let mut m = i * i;
            while m <= n {
                composite[m] = true;
                m += 2 * i;
            }
        }
    }
    out
}

fn approx_pi(limit: u64) -> usize {
    if limit < 20 {
        return 8;
    }
    let x = limit as f64;
    (1.26 * x / x.ln()) as usize
}
