use std::sync::OnceLock;

use gbaudit_core::algebra::{self, smoothness_factorization, Algebra, Variant};
use gbaudit_core::partitions;
use gbaudit_core::primes::{build_sieve, is_prime_u64, PrimeSet};
use gbaudit_core::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn primes() -> &'static PrimeSet {
    static PS: OnceLock<PrimeSet> = OnceLock::new();
    PS.get_or_init(|| build_sieve(200_000).unwrap())
}

fn trial_division(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Lucas-Lehmer for M_p = 2^p - 1, p an odd prime, p <= 63.
fn lucas_lehmer(p: u32) -> bool {
    let m: u128 = (1u128 << p) - 1;
    let mut s: u128 = 4;
    for _ in 0..p - 2 {
        s = (mul_mod(s, s, m) + m - 2) % m;
    }
    s == 0
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    // m < 2^63, so split b to keep products below 2^128.
    let (hi, lo) = (b >> 32, b & 0xffff_ffff);
    let t = (a * hi) % m;
    ((t << 32) % m + a * lo % m) % m
}

#[test]
fn mersenne_61_matches_lucas_lehmer() {
    assert!(lucas_lehmer(61));
    assert!(is_prime_u64((1 << 61) - 1));
    for p in [3u32, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61] {
        assert_eq!(is_prime_u64((1u64 << p) - 1), lucas_lehmer(p), "M_{p}");
    }
}

/// Elementary symmetric sums by subset enumeration.
fn vieta_by_subsets(roots: &[u64], sign: i64) -> Vec<BigInt> {
    let k = roots.len();
    let mut coeffs = vec![BigInt::zero(); k + 1];
    for mask in 0u32..(1 << k) {
        let chosen = mask.count_ones() as usize;
        let mut term = BigInt::one();
        for (i, &r) in roots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                term *= BigInt::from(sign) * r;
            }
        }
        // Choosing `chosen` roots leaves x^(k - chosen).
        coeffs[k - chosen] += term;
    }
    coeffs
}

#[test]
fn vieta_matches_subset_enumeration() {
    let ps = primes();
    for a in 4..=60u64 {
        for (variant, sign) in [(Variant::Sum, -1), (Variant::Diff, 1)] {
            let got = algebra::vieta_coefficients(a, variant, ps).unwrap();
            assert_eq!(got.coeffs, vieta_by_subsets(ps.primes_up_to(a), sign), "a = {a}");
        }
    }
}

#[test]
fn json_round_trip_keeps_big_values() {
    let ps = primes();
    let v = algebra::vieta_coefficients(500, Variant::Diff, ps).unwrap();
    assert!(v.coeffs[0].bits() > 128);
    let text = serde_json::to_string(&v).unwrap();
    let back: gbaudit_core::VietaCoefficients = serde_json::from_str(&text).unwrap();
    assert_eq!(back, v);

    let t = algebra::complement_product(500, Variant::Sum, ps).unwrap();
    let r = smoothness_factorization(t.magnitude(), 500, ps).unwrap();
    let back: gbaudit_core::SmoothnessReport =
        serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(back, r);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn primality_routes_agree(n in 0u64..2_000_000_000) {
        let ps = primes();
        let expected = trial_division(n);
        prop_assert_eq!(is_prime_u64(n), expected);
        prop_assert_eq!(ps.is_prime(n), expected);
    }

    #[test]
    fn expansion_identities(a in 4u64..700, diff in any::<bool>()) {
        let variant = if diff { Variant::Diff } else { Variant::Sum };
        let ps = primes();
        let e = Algebra::new(ps).expand(a, variant).unwrap();
        let two_a = e.two_a();
        let v = &e.vieta;

        prop_assert_eq!(v.degree() as u64, ps.prime_pi(a).unwrap());
        prop_assert!(v.coeffs.last().unwrap().is_one());
        prop_assert_eq!(v.evaluate(&two_a), e.complement_product.clone());
        prop_assert!(e.q_value.is_multiple_of(&two_a));
        prop_assert_eq!(&e.realized_difference, &(&two_a * e.bracket()));
        prop_assert!(!e.realized_difference.is_zero());
        prop_assert!((&e.realized_difference / &two_a).gcd(&two_a).is_one());

        let primorial = BigInt::from(ps.primorial(a).unwrap());
        let c0 = if variant == Variant::Sum && e.prime_count % 2 == 1 { -primorial } else { primorial };
        prop_assert_eq!(v.constant_term(), &c0);
        prop_assert!((&e.complement_product - &c0).is_multiple_of(&two_a));

        for &p in ps.primes_up_to(a) {
            prop_assert!(!e.c1.is_multiple_of(&BigInt::from(p)), "p = {} divides c1", p);
        }
        prop_assert!(e.c1.gcd(&two_a).is_one());
    }

    #[test]
    fn bezout_witnesses_verify(a in 4u64..400, diff in any::<bool>()) {
        let variant = if diff { Variant::Diff } else { Variant::Sum };
        let alg = Algebra::new(primes());
        let q = alg.bezout_quadratic(a, variant).unwrap();
        prop_assert!(q.verified && q.check());
        prop_assert!(!q.u.is_negative());
        let u = alg.bezout_unit(a, variant).unwrap();
        prop_assert!(u.verified && u.check());
        prop_assert_eq!(u.target, BigInt::one());
    }

    #[test]
    fn smoothness_reconstructs(t in 1u64..u64::MAX, a in 2u64..300) {
        let ps = primes();
        let value = BigUint::from(t);
        let r = smoothness_factorization(&value, a, ps).unwrap();
        prop_assert_eq!(r.reconstruct(), value);
        for &p in ps.primes_up_to(a) {
            prop_assert!(!(&r.leftover % p).is_zero() || r.leftover.is_one());
        }
        if r.a_plus_1_exponent > 0 {
            prop_assert!(is_prime_u64(a + 1));
        }
    }

    #[test]
    fn returned_pairs_revalidate(a in 2u64..30_000) {
        let ps = primes();
        let g = partitions::goldbach_partitions(a, ps).unwrap();
        prop_assert!(g.pairs.windows(2).all(|w| w[0].0 < w[1].0));
        for &(p, q) in &g.pairs {
            prop_assert!(p <= q && p + q == 2 * a && is_prime_u64(p) && is_prime_u64(q));
        }
        let d = partitions::diff_representations(a, ps).unwrap();
        for &(p, q) in &d.pairs {
            prop_assert!(p <= a && q == 2 * a + p && is_prime_u64(p) && is_prime_u64(q));
        }
        if a >= 4 {
            let r = partitions::prime_reflective_points(a, ps).unwrap();
            for &b in &r.points {
                prop_assert!(b >= 1 && b + 2 <= a && is_prime_u64(a - b) && is_prime_u64(a + b));
            }
            prop_assert_eq!(r.min_point, r.points.first().copied());
        }
    }

    #[test]
    fn census_is_monotone(gap in 1u64..50, n1 in 0u64..100_000, n2 in 0u64..100_000) {
        let ps = primes();
        let gap = 2 * gap;
        let (lo, hi) = (n1.min(n2), n1.max(n2));
        let c1 = partitions::polignac_census(gap, lo, ps).unwrap().count;
        let c2 = partitions::polignac_census(gap, hi, ps).unwrap().count;
        prop_assert!(c1 <= c2);
    }
}

#[test]
fn equivalences_hold_to_1500() {
    let ps = primes();
    let alg = Algebra::new(ps);
    for a in 4..=1500u64 {
        let diff = alg.factor_complement_product(a, Variant::Diff).unwrap();
        let reps = partitions::diff_representations(a, ps).unwrap();
        assert_eq!(diff.is_smooth_up_to_a_plus_1(), reps.pairs.is_empty(), "diff a = {a}");
        if ps.is_prime(a) {
            continue;
        }
        let sum = alg.factor_complement_product(a, Variant::Sum).unwrap();
        let parts = partitions::goldbach_partitions(a, ps).unwrap();
        assert_eq!(sum.is_smooth(), parts.pairs.is_empty(), "sum a = {a}");
        // The cofactor above a is exactly the product of the partners q.
        let partners = parts.pairs.iter().fold(BigUint::one(), |acc, &(_, q)| acc * q);
        assert_eq!(sum.above_bound(), partners, "a = {a}");
    }
}

#[test]
fn a_plus_1_divides_difference_product_once() {
    let ps = primes();
    let alg = Algebra::new(ps);
    for a in 4..=3000u64 {
        if !is_prime_u64(a + 1) {
            continue;
        }
        let t = alg.complement_product(a, Variant::Diff).unwrap();
        assert_eq!(algebra::valuation(t.magnitude(), a + 1), 1, "a = {a}");
    }
}
