use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bigjson;

/// Which identity a [`BezoutWitness`] certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BezoutKind {
    /// `(2a)^2 u + c0 v = 2a`, with `c0 = -D`.
    Quadratic,
    /// `(2a) u + (Q + c1) v = 1`.
    Unit,
}

/// Integers `u, v` with `x u + y v = target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BezoutWitness {
    pub a: u64,
    pub kind: BezoutKind,
    #[serde(with = "bigjson::int")]
    pub x: BigInt,
    #[serde(with = "bigjson::int")]
    pub y: BigInt,
    #[serde(with = "bigjson::int")]
    pub target: BigInt,
    #[serde(with = "bigjson::int")]
    pub u: BigInt,
    #[serde(with = "bigjson::int")]
    pub v: BigInt,
    pub verified: bool,
}

impl BezoutWitness {
    /// Re-evaluates the identity from scratch.
    pub fn check(&self) -> bool {
        &self.x * &self.u + &self.y * &self.v == self.target
    }
}

/// Extended Euclid: returns `(g, s, t)` with `x s + y t = g` and `g >= 0`.
pub fn extended_gcd(x: &BigInt, y: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (x.clone(), y.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Solves `x u + y v = gcd(x, y)` with `u` the least non-negative solution.
///
/// Returns `(g, u, v)`. When `y == 0` the solution set is a single `u` and no
/// normalization applies.
pub fn normalized_bezout(x: &BigInt, y: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (g, s, t) = extended_gcd(x, y);
    if g.is_zero() || y.is_zero() {
        return (g, s, t);
    }
    let period = (y / &g).abs();
    let u = s.mod_floor(&period);
    let v = (&g - x * &u) / y;
    (g, u, v)
}
