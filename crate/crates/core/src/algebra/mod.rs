//! Exact polynomial machinery over the primes `p_1 < ... < p_k <= a`.
//!
//! For the sum variant the complements are `q_i = 2a - p_i` and the
//! polynomial is `prod (x - p_i)`; for the difference variant `q_i = 2a + p_i`
//! and `prod (x + p_i)`. Evaluating either polynomial at `x = 2a` gives the
//! complement product, so
//!
//! ```text
//! prod q_i - c_0 = 2a * (Q + c_1),   Q = sum_{k>=2} c_k (2a)^(k-1)
//! ```
//!
//! The left side is stored as the realized difference `D`. Any statement
//! phrased in terms of a constant `c0` on the right-hand side uses `c0 = -D`.

mod bezout;
mod smooth;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bigjson;
use crate::error::{Error, Result};
use crate::primes::{product_tree, PrimeSet};

pub use bezout::{extended_gcd, normalized_bezout, BezoutKind, BezoutWitness};
pub use smooth::{beta, smoothness_factorization, SmoothnessReport};

/// Largest `a` accepted by the polynomial operations by default.
pub const DEFAULT_ALGEBRA_CAP: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Goldbach polynomial `prod (x - p_i)`, complements `2a - p_i`.
    Sum,
    /// Prime difference polynomial `prod (x + p_i)`, complements `2a + p_i`.
    Diff,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Sum, Variant::Diff];

    pub fn complement(self, a: u64, p: u64) -> u64 {
        match self {
            Variant::Sum => 2 * a - p,
            Variant::Diff => 2 * a + p,
        }
    }

    fn root_sign(self) -> i64 {
        match self {
            Variant::Sum => -1,
            Variant::Diff => 1,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Sum => "sum",
            Variant::Diff => "diff",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum" => Ok(Variant::Sum),
            "diff" => Ok(Variant::Diff),
            other => Err(Error::InvalidArgument(format!(
                "variant must be `sum` or `diff`, got `{other}`"
            ))),
        }
    }
}

/// The complements `q_i`, indexed like the primes `p_i <= a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementSet {
    pub a: u64,
    pub variant: Variant,
    pub primes: Vec<u64>,
    pub values: Vec<u64>,
}

impl ComplementSet {
    /// Checks size, ordering and the defining identity of every entry.
    pub fn is_well_formed(&self, prime_count: u64) -> bool {
        let two_a = 2 * self.a;
        if self.values.len() as u64 != prime_count || self.primes.len() != self.values.len() {
            return false;
        }
        let ordered = match self.variant {
            Variant::Sum => self.values.windows(2).all(|w| w[0] > w[1]),
            Variant::Diff => self.values.windows(2).all(|w| w[0] < w[1]),
        };
        let closed = self.primes.iter().zip(&self.values).all(|(&p, &q)| match self.variant {
            Variant::Sum => q + p == two_a,
            Variant::Diff => q - p == two_a,
        });
        ordered && closed
    }
}

/// Coefficients of `prod (x -+ p_i)`, ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VietaCoefficients {
    pub a: u64,
    pub variant: Variant,
    #[serde(with = "bigjson::int_vec")]
    pub coeffs: Vec<BigInt>,
}

impl VietaCoefficients {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn c1(&self) -> BigInt {
        self.coeffs.get(1).cloned().unwrap_or_default()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `sum_{k>=2} c_k x^(k-1)`.
    pub fn q_value_at(&self, x: &BigInt) -> BigInt {
        if self.coeffs.len() <= 2 {
            return BigInt::zero();
        }
        let inner = self.coeffs[2..]
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c);
        inner * x
    }
}

/// Expands `prod (x + sign * p)` by multiplying in one linear factor at a time.
pub fn expand_linear_factors(roots: &[u64], sign: i64) -> Vec<BigInt> {
    let mut c = Vec::with_capacity(roots.len() + 1);
    c.push(BigInt::one());
    for &p in roots {
        let s = BigInt::from(sign) * p;
        c.push(BigInt::zero());
        for k in (1..c.len()).rev() {
            let (lo, hi) = c.split_at_mut(k);
            hi[0] *= &s;
            hi[0] += &lo[k - 1];
        }
        c[0] *= &s;
    }
    c
}

/// `Q` and `c1` such that the bracket `Q + c1` times `2a` is the realized
/// difference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QAndC1 {
    #[serde(with = "bigjson::int")]
    pub q_value: BigInt,
    #[serde(with = "bigjson::int")]
    pub c1: BigInt,
}

impl QAndC1 {
    pub fn bracket(&self) -> BigInt {
        &self.q_value + &self.c1
    }
}

/// Everything derived from one `(a, variant)` expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub a: u64,
    pub variant: Variant,
    pub prime_count: u64,
    pub vieta: VietaCoefficients,
    pub complement_product: BigInt,
    pub q_value: BigInt,
    pub c1: BigInt,
    /// `complement_product - c_0`.
    pub realized_difference: BigInt,
}

impl Expansion {
    pub fn two_a(&self) -> BigInt {
        BigInt::from(2 * self.a)
    }

    pub fn bracket(&self) -> BigInt {
        &self.q_value + &self.c1
    }

    /// The constant written `c0` when the identity is arranged as
    /// `2a (Q + c1) = c0`: equal to `-D`.
    pub fn arranged_c0(&self) -> BigInt {
        -&self.realized_difference
    }
}

/// Polynomial operations bound to a prime table and a size cap.
#[derive(Debug, Clone, Copy)]
pub struct Algebra<'p> {
    ps: &'p PrimeSet,
    cap: u64,
}

impl<'p> Algebra<'p> {
    pub fn new(ps: &'p PrimeSet) -> Self {
        Self {
            ps,
            cap: DEFAULT_ALGEBRA_CAP,
        }
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn primes(&self) -> &'p PrimeSet {
        self.ps
    }

    fn check(&self, a: u64) -> Result<&'p [u64]> {
        self.check_min(a, 4)
    }

    fn check_min(&self, a: u64, min: u64) -> Result<&'p [u64]> {
        if a < min {
            return Err(Error::InvalidArgument(format!(
                "polynomial operations need a >= {min}, got {a}"
            )));
        }
        if a > self.cap {
            return Err(Error::Capacity {
                what: "algebra argument a",
                requested: a,
                max: self.cap,
            });
        }
        self.ps.ensure_covers("a", a)?;
        Ok(self.ps.primes_up_to(a))
    }

    pub fn complement_set(&self, a: u64, variant: Variant) -> Result<ComplementSet> {
        let primes = self.check_min(a, 2)?;
        Ok(ComplementSet {
            a,
            variant,
            primes: primes.to_vec(),
            values: primes.iter().map(|&p| variant.complement(a, p)).collect(),
        })
    }

    pub fn vieta_coefficients(&self, a: u64, variant: Variant) -> Result<VietaCoefficients> {
        let primes = self.check(a)?;
        Ok(VietaCoefficients {
            a,
            variant,
            coeffs: expand_linear_factors(primes, variant.root_sign()),
        })
    }

    /// `prod q_i`. Accepts `a >= 2` so the small boundary cases can be
    /// reproduced.
    pub fn complement_product(&self, a: u64, variant: Variant) -> Result<BigInt> {
        let primes = self.check_min(a, 2)?;
        let qs: Vec<u64> = primes.iter().map(|&p| variant.complement(a, p)).collect();
        Ok(BigInt::from_biguint(Sign::Plus, product_tree(&qs)))
    }

    pub fn q_and_c1(&self, a: u64, variant: Variant) -> Result<QAndC1> {
        let vieta = self.vieta_coefficients(a, variant)?;
        Ok(QAndC1 {
            q_value: vieta.q_value_at(&BigInt::from(2 * a)),
            c1: vieta.c1(),
        })
    }

    /// `D = prod q_i - c_0`, computed from the complement product and the
    /// constant term `(-1)^pi(a) a#` (sum) or `a#` (diff).
    pub fn realized_difference(&self, a: u64, variant: Variant) -> Result<BigInt> {
        let primes = self.check(a)?;
        let product = self.complement_product(a, variant)?;
        Ok(product - constant_term(primes, variant))
    }

    pub fn expand(&self, a: u64, variant: Variant) -> Result<Expansion> {
        let primes = self.check(a)?;
        let vieta = self.vieta_coefficients(a, variant)?;
        let complement_product = self.complement_product(a, variant)?;
        let two_a = BigInt::from(2 * a);
        let q_value = vieta.q_value_at(&two_a);
        let c1 = vieta.c1();
        let realized_difference = &complement_product - vieta.constant_term();
        Ok(Expansion {
            a,
            variant,
            prime_count: primes.len() as u64,
            vieta,
            complement_product,
            q_value,
            c1,
            realized_difference,
        })
    }

    /// Smoothness split of the complement product over the primes `<= a`.
    pub fn factor_complement_product(&self, a: u64, variant: Variant) -> Result<SmoothnessReport> {
        let product = self.complement_product(a, variant)?;
        smoothness_factorization(product.magnitude(), a, self.ps)
    }

    /// Witness for `(2a)^2 u + c0 v = 2a` where `c0 = -D`.
    pub fn bezout_quadratic(&self, a: u64, variant: Variant) -> Result<BezoutWitness> {
        let d = self.realized_difference(a, variant)?;
        let two_a = BigInt::from(2 * a);
        witness(a, BezoutKind::Quadratic, &two_a * &two_a, -d, two_a)
    }

    /// Witness for `(2a) u + (Q + c1) v = 1`.
    pub fn bezout_unit(&self, a: u64, variant: Variant) -> Result<BezoutWitness> {
        let bracket = self.q_and_c1(a, variant)?.bracket();
        witness(a, BezoutKind::Unit, BigInt::from(2 * a), bracket, BigInt::one())
    }
}

fn constant_term(primes: &[u64], variant: Variant) -> BigInt {
    let primorial = BigInt::from_biguint(Sign::Plus, product_tree(primes));
    match variant {
        Variant::Sum if primes.len() % 2 == 1 => -primorial,
        _ => primorial,
    }
}

fn witness(a: u64, kind: BezoutKind, x: BigInt, y: BigInt, target: BigInt) -> Result<BezoutWitness> {
    let (g, u, v) = normalized_bezout(&x, &y);
    if g != target {
        return Err(Error::GcdMismatch {
            a,
            expected: target.to_string(),
            found: g.to_string(),
        });
    }
    let mut w = BezoutWitness {
        a,
        kind,
        x,
        y,
        target,
        u,
        v,
        verified: false,
    };
    w.verified = w.check();
    Ok(w)
}

/// `p`-adic valuation of a nonzero integer; 0 for zero.
pub fn valuation(n: &BigUint, p: u64) -> u32 {
    if n.is_zero() || p < 2 {
        return 0;
    }
    let divisor = BigUint::from(p);
    let mut rest = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = rest.div_rem(&divisor);
        if !r.is_zero() {
            return e;
        }
        rest = q;
        e += 1;
    }
}

/// Free-function forms that use the default cap.
pub fn vieta_coefficients(a: u64, variant: Variant, ps: &PrimeSet) -> Result<VietaCoefficients> {
    Algebra::new(ps).vieta_coefficients(a, variant)
}

pub fn complement_product(a: u64, variant: Variant, ps: &PrimeSet) -> Result<BigInt> {
    Algebra::new(ps).complement_product(a, variant)
}

pub fn q_and_c1(a: u64, variant: Variant, ps: &PrimeSet) -> Result<QAndC1> {
    Algebra::new(ps).q_and_c1(a, variant)
}

pub fn realized_difference(a: u64, variant: Variant, ps: &PrimeSet) -> Result<BigInt> {
    Algebra::new(ps).realized_difference(a, variant)
}

pub fn bezout_quadratic(a: u64, variant: Variant, ps: &PrimeSet) -> Result<BezoutWitness> {
    Algebra::new(ps).bezout_quadratic(a, variant)
}

pub fn bezout_unit(a: u64, variant: Variant, ps: &PrimeSet) -> Result<BezoutWitness> {
    Algebra::new(ps).bezout_unit(a, variant)
}
