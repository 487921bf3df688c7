use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bigjson;
use crate::error::{Error, Result};
use crate::primes::PrimeSet;

/// Trial-division split of `value` over the primes `<= bound`, then over
/// `bound + 1` when that is prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessReport {
    #[serde(with = "bigjson::uint")]
    pub value: BigUint,
    pub bound: u64,
    /// Prime `p <= bound` to its multiplicity; only primes that divide.
    pub exponents: BTreeMap<u64, u32>,
    pub a_plus_1_exponent: u32,
    /// Cofactor left after removing every prime `<= bound` and `bound + 1`.
    #[serde(with = "bigjson::uint")]
    pub leftover: BigUint,
}

impl SmoothnessReport {
    pub fn reconstruct(&self) -> BigUint {
        let mut acc = self.leftover.clone();
        acc *= BigUint::from(self.bound + 1).pow(self.a_plus_1_exponent);
        for (&p, &e) in &self.exponents {
            acc *= BigUint::from(p).pow(e);
        }
        acc
    }

    /// Every prime factor is `<= bound`, apart from possibly `bound + 1`.
    pub fn is_smooth_up_to_a_plus_1(&self) -> bool {
        self.leftover.is_one()
    }

    /// Every prime factor is `<= bound`.
    pub fn is_smooth(&self) -> bool {
        self.leftover.is_one() && self.a_plus_1_exponent == 0
    }

    /// Product of all prime factors greater than `bound`.
    pub fn above_bound(&self) -> BigUint {
        &self.leftover * BigUint::from(self.bound + 1).pow(self.a_plus_1_exponent)
    }
}

/// Strips `d` from `t` as often as it divides; returns the multiplicity.
fn strip(t: &mut BigUint, d: u64) -> u32 {
    let mut e = 0;
    while (&*t % d).is_zero() {
        *t /= d;
        e += 1;
    }
    e
}

pub fn smoothness_factorization(value: &BigUint, a: u64, ps: &PrimeSet) -> Result<SmoothnessReport> {
    if value.is_zero() {
        return Err(Error::InvalidArgument(
            "smoothness factorization needs a positive value".into(),
        ));
    }
    ps.ensure_covers("smoothness bound", a)?;

    let mut rest = value.clone();
    let mut exponents = BTreeMap::new();
    for &p in ps.primes_up_to(a) {
        if rest.is_one() {
            break;
        }
        let e = strip(&mut rest, p);
        if e > 0 {
            exponents.insert(p, e);
        }
    }
    let a_plus_1_exponent = if !rest.is_one() && beta(a + 1) == 1 {
        strip(&mut rest, a + 1)
    } else {
        0
    };
    Ok(SmoothnessReport {
        value: value.clone(),
        bound: a,
        exponents,
        a_plus_1_exponent,
        leftover: rest,
    })
}

/// 1 when `n` is prime, else 0.
pub fn beta(n: u64) -> u32 {
    crate::primes::is_prime_u64(n) as u32
}
