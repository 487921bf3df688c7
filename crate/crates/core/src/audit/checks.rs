//! Per-`a` executable form of each claim.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::claims::ClaimId;
use crate::algebra::{self, beta, smoothness_factorization, Algebra, Expansion, Variant};
use crate::bigjson::number;
use crate::error::{Error, Result};
use crate::partitions;
use crate::primes::PrimeSet;

/// Result of checking one claim at one `a`.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Pass,
    /// Outside the claim's domain.
    Skip,
    /// Premise verified; the stated conclusion does not hold on the data.
    Gap(Value),
    Fail(Value),
}

impl Outcome {
    fn from_checks(failed: Vec<&'static str>, detail: impl FnOnce() -> Value) -> Self {
        if failed.is_empty() {
            Outcome::Pass
        } else {
            let mut d = detail();
            d["failed"] = json!(failed);
            Outcome::Fail(d)
        }
    }
}

fn variant_of(claim: ClaimId) -> Variant {
    if claim.code().starts_with("D-") {
        Variant::Diff
    } else {
        Variant::Sum
    }
}

/// Runs `claim` at a single `a`. Errors are limited to caller mistakes
/// (caps, sieve coverage); falsifications come back as [`Outcome::Fail`].
pub fn check(claim: ClaimId, a: u64, alg: &Algebra<'_>) -> Result<Outcome> {
    let ps = alg.primes();
    let variant = variant_of(claim);
    use ClaimId::*;
    match claim {
        GClose | DClose => {
            let set = alg.complement_set(a, variant)?;
            let pi = ps.prime_pi(a)?;
            Ok(if set.is_well_formed(pi) {
                Outcome::Pass
            } else {
                Outcome::Fail(json!({ "values": set.values, "pi": pi }))
            })
        }
        GEquiv => equivalence_sum(a, alg),
        DEquiv => equivalence_diff(a, alg),
        GCong | DCong => congruence(a, variant, alg),
        GC1 | DC1 => c1_coprimality(a, variant, alg),
        GQdiv | DQdiv => q_divisibility(&alg.expand(a, variant)?, ps),
        GC0 | DC0 => realized_c0(&alg.expand(a, variant)?),
        GBez2 | DBez2 => quadratic_bezout(a, variant, alg),
        GDeg | DDeg => degree_gap(a, variant, alg),
        GEmp => Ok(match partitions::first_goldbach_prime(a, ps)? {
            Some(_) => Outcome::Pass,
            None => Outcome::Fail(json!({ "even": 2 * a })),
        }),
        GPrp => Ok(match partitions::min_prime_reflective_point(a, ps)? {
            Some(_) => Outcome::Pass,
            None => Outcome::Fail(json!({ "min_point": Value::Null })),
        }),
        GTern => match partitions::ternary_decomposition(2 * a + 1, ps) {
            Ok(_) => Ok(Outcome::Pass),
            Err(Error::NoDecomposition { n }) => Ok(Outcome::Fail(json!({ "n": n }))),
            Err(e) => Err(e),
        },
        DEmp => Ok(match partitions::first_diff_prime(a, ps)? {
            Some(_) => Outcome::Pass,
            None => Outcome::Fail(json!({ "even": 2 * a })),
        }),
        DBeta => a_plus_1_exponent(a, alg),
        BPrimo => bertrand_primorial(a, ps),
        PCensus => Err(Error::InvalidArgument(
            "P-CENSUS is evaluated over the whole range, not per a".into(),
        )),
    }
}

fn equivalence_sum(a: u64, alg: &Algebra<'_>) -> Result<Outcome> {
    let ps = alg.primes();
    if ps.is_prime(a) {
        return Ok(Outcome::Skip);
    }
    let report = alg.factor_complement_product(a, Variant::Sum)?;
    let pairs = partitions::goldbach_partitions(a, ps)?.pairs;
    let smooth = report.is_smooth();
    if smooth == pairs.is_empty() {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Fail(json!({
            "smooth": smooth,
            "leftover": number(&report.above_bound()),
            "partitions": pairs,
        })))
    }
}

fn equivalence_diff(a: u64, alg: &Algebra<'_>) -> Result<Outcome> {
    let report = alg.factor_complement_product(a, Variant::Diff)?;
    let pairs = partitions::diff_representations(a, alg.primes())?.pairs;
    let smooth = report.is_smooth_up_to_a_plus_1();
    if smooth == pairs.is_empty() {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Fail(json!({
            "smooth": smooth,
            "leftover": number(&report.leftover),
            "a_plus_1_exponent": report.a_plus_1_exponent,
            "representations": pairs,
        })))
    }
}

fn congruence(a: u64, variant: Variant, alg: &Algebra<'_>) -> Result<Outcome> {
    let d = alg.realized_difference(a, variant)?;
    let residue = d.mod_floor(&BigInt::from(2 * a));
    Ok(if residue.is_zero() {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({ "residue": number(&residue) }))
    })
}

fn c1_coprimality(a: u64, variant: Variant, alg: &Algebra<'_>) -> Result<Outcome> {
    let c1 = alg.vieta_coefficients(a, variant)?.c1();
    let mag = c1.magnitude();
    let dividing: Vec<u64> = alg
        .primes()
        .primes_up_to(a)
        .iter()
        .copied()
        .filter(|&p| (mag % p).is_zero())
        .collect();
    let g = mag.gcd(&BigUint::from(2 * a));
    let mut failed = Vec::new();
    if !dividing.is_empty() {
        failed.push("gcd(p, c1) = 1");
    }
    if !g.is_one() {
        failed.push("gcd(2a, c1) = 1");
    }
    Ok(Outcome::from_checks(failed, || {
        json!({ "c1": number(&c1), "dividing_primes": dividing, "gcd_2a_c1": number(&g) })
    }))
}

fn q_divisibility(e: &Expansion, ps: &PrimeSet) -> Result<Outcome> {
    let two_a = e.two_a();
    let vieta = &e.vieta;
    let primorial = BigInt::from(ps.primorial(e.a)?);
    let expected_c0 = match e.variant {
        Variant::Sum if e.prime_count % 2 == 1 => -primorial,
        _ => primorial,
    };
    let mut failed = Vec::new();
    if !e.q_value.is_multiple_of(&two_a) {
        failed.push("2a | Q");
    }
    if vieta.evaluate(&two_a) != e.complement_product {
        failed.push("expansion at 2a equals complement product");
    }
    if vieta.degree() as u64 != e.prime_count || !vieta.coeffs.last().is_some_and(|c| c.is_one()) {
        failed.push("monic of degree pi(a)");
    }
    if *vieta.constant_term() != expected_c0 {
        failed.push("constant term is the signed primorial");
    }
    Ok(Outcome::from_checks(failed, || {
        json!({ "q_value": number(&e.q_value), "complement_product": number(&e.complement_product) })
    }))
}

fn realized_c0(e: &Expansion) -> Result<Outcome> {
    let two_a = e.two_a();
    let d = &e.realized_difference;
    let bracket = e.bracket();
    let mut failed = Vec::new();
    if d.is_zero() {
        failed.push("D != 0");
    }
    if !d.is_multiple_of(&two_a) {
        failed.push("2a | D");
    } else if !d.is_zero() && !(d / &two_a).gcd(&two_a).is_one() {
        failed.push("gcd(2a, D/2a) = 1");
    }
    if d.abs() != &two_a * bracket.abs() {
        failed.push("|D| = 2a |Q + c1|");
    }
    if d.abs() <= bracket.abs() {
        failed.push("|D| > |Q + c1|");
    }
    Ok(Outcome::from_checks(failed, || {
        json!({ "d": number(d), "bracket": number(&bracket) })
    }))
}

fn quadratic_bezout(a: u64, variant: Variant, alg: &Algebra<'_>) -> Result<Outcome> {
    match alg.bezout_quadratic(a, variant) {
        Ok(w) if w.verified && w.check() => Ok(Outcome::Pass),
        Ok(w) => Ok(Outcome::Fail(json!({ "u": number(&w.u), "v": number(&w.v) }))),
        Err(Error::GcdMismatch { found, .. }) => {
            Ok(Outcome::Fail(json!({ "failed": ["gcd((2a)^2, c0) = 2a"], "gcd": found })))
        }
        Err(e) => Err(e),
    }
}

fn degree_gap(a: u64, variant: Variant, alg: &Algebra<'_>) -> Result<Outcome> {
    let pi = alg.primes().prime_pi(a)?;
    let deg = pi - 1;
    match alg.bezout_unit(a, variant) {
        Ok(w) if w.verified && w.check() => {
            let detail = json!({
                "deg": deg,
                "pi": pi,
                "unit_bezout_verified": true,
                "u": number(&w.u),
                "v": number(&w.v),
            });
            Ok(if deg > 1 {
                Outcome::Gap(detail)
            } else {
                Outcome::Pass
            })
        }
        Ok(_) => Ok(Outcome::Fail(json!({ "deg": deg, "unit_bezout_verified": false }))),
        Err(Error::GcdMismatch { found, .. }) => Ok(Outcome::Fail(json!({
            "deg": deg,
            "unit_bezout_verified": false,
            "gcd": found,
        }))),
        Err(e) => Err(e),
    }
}

fn a_plus_1_exponent(a: u64, alg: &Algebra<'_>) -> Result<Outcome> {
    let product = alg.complement_product(a, Variant::Diff)?;
    let b = beta(a + 1);
    let report = smoothness_factorization(product.magnitude(), a, alg.primes())?;
    let direct = if b == 1 {
        algebra::valuation(product.magnitude(), a + 1)
    } else {
        0
    };
    Ok(if report.a_plus_1_exponent == b && direct == b {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({
            "beta": b,
            "exponent": report.a_plus_1_exponent,
            "valuation": direct,
        }))
    })
}

fn bertrand_primorial(a: u64, ps: &PrimeSet) -> Result<Outcome> {
    ps.ensure_covers("2a", 2 * a)?;
    let mut failed = Vec::new();
    if !ps.next_prime_after(a).is_some_and(|q| q < 2 * a) {
        failed.push("prime in (a, 2a)");
    }
    if a > 4 {
        // Exact: stop multiplying once the product passes 2a.
        let mut product: u128 = 1;
        for &p in ps.primes_up_to(a) {
            product *= p as u128;
            if product > 2 * a as u128 {
                break;
            }
        }
        if product <= 2 * a as u128 {
            failed.push("2a < a#");
        }
    }
    Ok(Outcome::from_checks(failed, || json!({ "a": a })))
}

/// Census counts for one gap at every limit in `lo..=hi`; returns a failure
/// detail if the count ever decreases or ends at zero.
pub fn census_check(gap: u64, lo: u64, hi: u64, ps: &PrimeSet) -> Result<Option<Value>> {
    let limits: Vec<u64> = (lo..=hi).collect();
    let counts = partitions::polignac_checkpoints(gap, &limits, ps)?;
    if let Some(w) = counts.windows(2).find(|w| w[1].count < w[0].count) {
        return Ok(Some(json!({
            "gap": gap,
            "failed": ["monotone"],
            "limit": w[1].limit,
            "count": w[1].count,
        })));
    }
    let last = counts.last().expect("non-empty range");
    if last.count == 0 {
        return Ok(Some(json!({
            "gap": gap,
            "failed": ["positive"],
            "limit": last.limit,
            "count": 0,
        })));
    }
    Ok(None)
}
