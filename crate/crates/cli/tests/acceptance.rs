//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use gbaudit_core::algebra::{self, Variant};
use gbaudit_core::audit::{deterministic_body, run_claim, ClaimId, Status};
use gbaudit_core::primes::build_sieve;
use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

const JOBS: &str = "8";

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Run {
    code: i32,
    stdout: String,
    elapsed: Duration,
}

fn gbaudit(args: &[&str]) -> Result<Run, String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_gbaudit"))
        .args(args)
        .output()
        .map_err(|e| format!("spawn failed: {e}"))?;
    Ok(Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).map_err(|e| e.to_string())?,
        elapsed: start.elapsed(),
    })
}

fn first_record(run: &Run) -> Result<Value, String> {
    let line = run.stdout.lines().next().ok_or("no output")?;
    serde_json::from_str(line).map_err(|e| e.to_string())
}

/// Plain Eratosthenes, independent of the segmented sieve under test.
fn oracle_sieve(limit: usize) -> Vec<bool> {
    let mut is_p = vec![true; limit + 1];
    is_p[0] = false;
    if limit >= 1 {
        is_p[1] = false;
    }
    let mut i = 2;
    while i * i <= limit {
        if is_p[i] {
            for m in (i * i..=limit).step_by(i) {
                is_p[m] = false;
            }
        }
        i += 1;
    }
    is_p
}

fn factor_product(record: &Value, a: u64) -> Result<(), String> {
    // exponents * (a+1)^e * leftover must rebuild the product.
    let product: BigInt = record["product"].to_string().parse().map_err(|_| "bad product")?;
    let mut rebuilt: BigInt = record["leftover"].to_string().parse().map_err(|_| "bad leftover")?;
    let e = record["a_plus_1_exponent"].as_u64().ok_or("no exponent")? as u32;
    rebuilt *= BigInt::from(a + 1).pow(e);
    for (p, e) in record["exponents"].as_object().ok_or("no exponents")? {
        rebuilt *= BigInt::from(p.parse::<u64>().unwrap()).pow(e.as_u64().unwrap() as u32);
    }
    ensure(rebuilt == product, || format!("factorization does not rebuild {product}"))
}

fn worked_sum() -> Check {
    let run = gbaudit(&["product", "--a", "10", "--variant", "sum", "--factor"])?;
    let r = first_record(&run)?;
    ensure(run.code == 0, || format!("exit {}", run.code))?;
    ensure(r["product"] == json!(59670), || format!("product {}", r["product"]))?;
    ensure(r["exponents"] == json!({"2": 1, "3": 3, "5": 1}), || format!("exponents {}", r["exponents"]))?;
    ensure(r["a_plus_1_exponent"] == json!(0), || "a+1 exponent".into())?;
    ensure(r["leftover"] == json!(13 * 17), || format!("leftover {}", r["leftover"]))?;
    factor_product(&r, 10)?;
    let parts = gbaudit(&["goldbach", "--a", "10"])?;
    let p = first_record(&parts)?;
    ensure(p["pairs"] == json!([[3, 17], [7, 13]]), || format!("partitions {}", p["pairs"]))?;
    ensure(r["pairs"] == p["pairs"], || "product and goldbach disagree".into())?;
    let slowest = run.elapsed.max(parts.elapsed);
    ensure(slowest < Duration::from_secs(1), || format!("took {slowest:?}"))?;
    Ok(format!("59670 = 2*3^3*5*13*17, leftover 221, pairs (3,17),(7,13) in {slowest:?}"))
}

fn worked_diff() -> Check {
    let run = gbaudit(&["product", "--a", "10", "--variant", "diff", "--factor"])?;
    let r = first_record(&run)?;
    ensure(run.code == 0, || format!("exit {}", run.code))?;
    ensure(r["product"] == json!(341550), || format!("product {}", r["product"]))?;
    ensure(r["exponents"] == json!({"2": 1, "3": 3, "5": 2}), || format!("exponents {}", r["exponents"]))?;
    ensure(r["a_plus_1_exponent"] == json!(1), || "a+1 exponent".into())?;
    ensure(r["leftover"] == json!(23), || format!("leftover {}", r["leftover"]))?;
    factor_product(&r, 10)?;
    let reps = gbaudit(&["diff", "--a", "10"])?;
    let d = first_record(&reps)?;
    ensure(d["pairs"] == json!([[3, 23]]), || format!("representations {}", d["pairs"]))?;
    let slowest = run.elapsed.max(reps.elapsed);
    ensure(slowest < Duration::from_secs(1), || format!("took {slowest:?}"))?;
    Ok(format!("341550 = 2*3^3*5^2*11*23, leftover 23, (3,23) in {slowest:?}"))
}

fn boundary_solutions() -> Check {
    let sum = first_record(&gbaudit(&["product", "--a", "3", "--variant", "sum", "--factor"])?)?;
    ensure(sum["product"] == json!(12), || format!("sum product {}", sum["product"]))?;
    ensure(sum["exponents"] == json!({"2": 2, "3": 1}), || "sum exponents".into())?;
    ensure(sum["leftover"] == json!(1) && sum["a_plus_1_exponent"] == json!(0), || "sum leftover".into())?;

    let diff = first_record(&gbaudit(&["product", "--a", "3", "--variant", "diff", "--factor"])?)?;
    ensure(diff["product"] == json!(72), || format!("diff product {}", diff["product"]))?;
    ensure(diff["exponents"] == json!({"2": 3, "3": 2}), || "diff exponents".into())?;
    ensure(algebra::beta(4) == 0, || "beta(4) != 0".into())?;
    ensure(diff["a_plus_1_exponent"] == json!(0), || "a+1 exponent".into())?;
    ensure(diff["leftover"] == json!(1), || "diff leftover".into())?;
    ensure(diff["pairs"] == json!([]), || "diff representations not empty".into())?;
    let run = gbaudit(&["diff", "--a", "3"])?;
    ensure(run.code == 1 && first_record(&run)?["pairs"] == json!([]), || "diff --a 3".into())?;
    Ok("4*3 = 2^2*3 and 9*8 = 2^3*3^2, beta(4)=0, no representation".into())
}

fn equivalence_oracle() -> Check {
    let start = Instant::now();
    let oracle = oracle_sieve(5000);
    let composites = (4..=5000).filter(|&a| !oracle[a]).count() as u64;
    let g = run_claim(ClaimId::GEquiv, 4, 5000, 8).map_err(|e| e.to_string())?;
    ensure(g.failures().count() == 0, || format!("{} G-EQUIV mismatches", g.failures().count()))?;
    ensure(g.status == Status::Pass, || format!("G-EQUIV {:?}", g.status))?;
    ensure(g.checked_count == composites, || format!("checked {} of {composites} composites", g.checked_count))?;
    let d = run_claim(ClaimId::DEquiv, 4, 5000, 8).map_err(|e| e.to_string())?;
    ensure(d.status == Status::Pass && d.checked_count == 4997, || format!("D-EQUIV {:?}", d.status))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{composites} composite a (sum) and 4997 a (diff), zero mismatches in {elapsed:?}"))
}

fn identity_suite() -> Check {
    let start = Instant::now();
    use ClaimId::*;
    let claims = [GCong, DCong, GC1, DC1, GQdiv, DQdiv, GC0, DC0, GBez2, DBez2, GDeg, DDeg];
    for c in claims {
        let r = run_claim(c, 4, 2000, 8).map_err(|e| e.to_string())?;
        ensure(r.failures().count() == 0, || format!("{c}: {} failures", r.failures().count()))?;
        ensure(r.checked_count == 1997, || format!("{c}: checked {}", r.checked_count))?;
        match c {
            GDeg | DDeg => {
                ensure(r.status == Status::GapWitnessed, || format!("{c}: {:?}", r.status))?;
                ensure(
                    r.witnesses.iter().all(|w| w.detail["unit_bezout_verified"] == json!(true)),
                    || format!("{c}: unverified unit witness"),
                )?;
            }
            _ => ensure(r.status == Status::Pass, || format!("{c}: {:?}", r.status))?,
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("12 claims over 4..=2000, zero failures in {elapsed:?}"))
}

fn convolve(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn vieta_cross_check() -> Check {
    let oracle = oracle_sieve(300);
    let ps = build_sieve(300).map_err(|e| e.to_string())?;
    for a in 4..=300u64 {
        for (variant, sign) in [(Variant::Sum, -1i64), (Variant::Diff, 1)] {
            let mut naive = vec![BigInt::from(1)];
            for p in (2..=a as usize).filter(|&p| oracle[p]) {
                naive = convolve(&naive, &[BigInt::from(sign * p as i64), BigInt::from(1)]);
            }
            let got = algebra::vieta_coefficients(a, variant, &ps).map_err(|e| e.to_string())?;
            ensure(got.coeffs == naive, || format!("a = {a}, {variant}"))?;
        }
    }
    Ok("594 expansions equal repeated convolution".into())
}

fn empirical_ranges() -> Check {
    let mut notes = Vec::new();
    let small = gbaudit(&["goldbach", "--from", "2", "--to", "3"])?;
    ensure(small.code == 0, || "goldbach 2..=3".into())?;

    for (claim, to, budget) in [
        ("G-EMP", "5e6", Some(Duration::from_secs(300))),
        ("D-EMP", "1e5", None),
        ("G-PRP", "1e6", None),
    ] {
        let run = gbaudit(&["audit", "--claims", claim, "--from", "4", "--to", to, "--jobs", JOBS])?;
        ensure(run.code == 0, || format!("{claim}: exit {}", run.code))?;
        let line = run.stdout.lines().nth(1).ok_or("no result line")?;
        let r: Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        ensure(r["status"] == json!("PASS"), || format!("{claim}: {}", r["status"]))?;
        if let Some(budget) = budget {
            ensure(run.elapsed < budget, || format!("{claim} took {:?}", run.elapsed))?;
        }
        notes.push(format!("{claim} to {to} ({:?})", run.elapsed));
    }

    let run = gbaudit(&["ternary", "--from", "9", "--to", "1e5"])?;
    ensure(run.code == 0, || format!("ternary: exit {}", run.code))?;
    let lines = run.stdout.lines().count();
    ensure(lines == (100_000 - 9) / 2 + 1, || format!("ternary: {lines} records"))?;
    notes.push("ternary odd 9..=1e5".into());
    Ok(notes.join(", "))
}

fn polignac_census() -> Check {
    let top = 1_000_000u64;
    let oracle = oracle_sieve(top as usize + 100);
    let ps = build_sieve(top + 100).map_err(|e| e.to_string())?;
    let checkpoints = [10_000u64, 100_000, 1_000_000];
    for gap in (2..=100u64).step_by(2) {
        let counts = gbaudit_core::partitions::polignac_checkpoints(gap, &checkpoints, &ps)
            .map_err(|e| e.to_string())?;
        for c in &counts {
            let expected = (2..=c.limit as usize)
                .filter(|&p| oracle[p] && oracle[p + gap as usize])
                .count() as u64;
            ensure(c.count == expected, || format!("gap {gap} limit {}: {} != {expected}", c.limit, c.count))?;
            ensure(c.count > 0, || format!("gap {gap} limit {}: zero", c.limit))?;
        }
        ensure(counts.windows(2).all(|w| w[0].count <= w[1].count), || format!("gap {gap} not monotone"))?;
    }
    Ok("50 gaps x 3 checkpoints match the oracle, positive and monotone".into())
}

fn degree_gap() -> Check {
    let oracle = oracle_sieve(2000);
    let pi = |a: u64| (2..=a as usize).filter(|&p| oracle[p]).count() as u64;
    let mut witnessed = 0;
    for (claim, variant) in [(ClaimId::GDeg, Variant::Sum), (ClaimId::DDeg, Variant::Diff)] {
        let r = run_claim(claim, 8, 2000, 8).map_err(|e| e.to_string())?;
        ensure(r.status == Status::GapWitnessed, || format!("{claim}: {:?}", r.status))?;
        ensure(r.failures().count() == 0, || format!("{claim}: failures"))?;
        for a in (8..=2000u64).filter(|&a| !oracle[a as usize] && pi(a) > 2) {
            let w = r
                .witnesses
                .iter()
                .find(|w| w.a == a)
                .ok_or_else(|| format!("{claim}: no witness at a = {a}"))?;
            ensure(w.kind == Status::GapWitnessed, || format!("{claim} a = {a}: {:?}", w.kind))?;
            ensure(w.detail["deg"] == json!(pi(a) - 1), || format!("{claim} a = {a}: deg"))?;
            ensure(w.detail["unit_bezout_verified"] == json!(true), || format!("{claim} a = {a}"))?;

            // Re-check the unit identity against an independently built bracket.
            let two_a = BigInt::from(2 * a);
            let primes: Vec<u64> = (2..=a).filter(|&p| oracle[p as usize]).collect();
            let product: BigInt = primes
                .iter()
                .map(|&p| match variant {
                    Variant::Sum => BigInt::from(2 * a - p),
                    Variant::Diff => BigInt::from(2 * a + p),
                })
                .product();
            let primorial: BigInt = primes.iter().map(|&p| BigInt::from(p)).product();
            let c0 = if variant == Variant::Sum && primes.len() % 2 == 1 { -primorial } else { primorial };
            let (bracket, rem) = (product - c0).div_rem(&two_a);
            ensure(rem == BigInt::from(0), || format!("{claim} a = {a}: 2a does not divide D"))?;
            let u: BigInt = w.detail["u"].to_string().parse().map_err(|_| "bad u")?;
            let v: BigInt = w.detail["v"].to_string().parse().map_err(|_| "bad v")?;
            ensure(&two_a * u + bracket * v == BigInt::from(1), || format!("{claim} a = {a}: identity"))?;
            witnessed += 1;
        }
    }
    Ok(format!("{witnessed} composite (a, variant) cases GAP-WITNESSED with verified unit witnesses"))
}

fn determinism() -> Check {
    let args = ["audit", "--claims", "all", "--from", "4", "--to", "500"];
    let one = gbaudit(&[&args[..], &["--jobs", "1"]].concat())?;
    let many = gbaudit(&[&args[..], &["--jobs", JOBS]].concat())?;
    ensure(one.code == 0 && many.code == 0, || format!("exit {} / {}", one.code, many.code))?;
    let (b1, b8) = (deterministic_body(&one.stdout), deterministic_body(&many.stdout));
    ensure(!b1.is_empty() && b1 == b8, || "bodies differ".into())?;
    ensure(one.stdout != b1, || "missing timing trailer".into())?;
    Ok(format!("{} byte body identical for --jobs 1 and --jobs {JOBS}", b1.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 worked example, sum", worked_sum),
        ("2 worked example, difference", worked_diff),
        ("3 boundary solutions a = 3", boundary_solutions),
        ("4 smoothness/partition equivalence", equivalence_oracle),
        ("5 identity suite to 2000", identity_suite),
        ("6 Vieta vs convolution", vieta_cross_check),
        ("7 empirical ranges", empirical_ranges),
        ("8 Polignac census", polignac_census),
        ("9 GAP-WITNESSED degree", degree_gap),
        ("10 determinism across jobs", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{:.1?}]", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} [{:.1?}]", start.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
