//! `gbaudit` command-line front end.
//!
//! Every subcommand writes one JSON object per line (or CSV with `--format
//! csv`). Exit codes: 0 when every check holds, 1 when a counterexample or
//! failed claim was found, 2 on usage or capacity errors.

pub mod args;
mod records;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::time::Instant;

use clap::Parser;
use gbaudit_core::audit::{emit_report, parse_claim_list, AuditConfig, Auditor, ReportFormat};
use gbaudit_core::primes::{PrimeSet, SieveConfig};
use gbaudit_core::{algebra, partitions, Error, Status, Variant};

use args::{Cli, Command, Format, KindArg, VariantArg};
use records::{Emitter, Record};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Failure modes of a single invocation.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<bool, Failure>;

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid usage");
            let _ = writeln!(stderr, "{line}");
            return EXIT_USAGE;
        }
    };

    let result = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(f) => {
                let mut w = BufWriter::new(f);
                dispatch(&cli, &mut w).and_then(|ok| w.flush().map(|_| ok).map_err(Failure::Io))
            }
            Err(e) => Err(Failure::Usage(format!("cannot create {}: {e}", path.display()))),
        },
        None => {
            let mut w = BufWriter::new(&mut *stdout);
            dispatch(&cli, &mut w).and_then(|ok| w.flush().map(|_| ok).map_err(Failure::Io))
        }
    };

    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FOUND,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn sieve(cli: &Cli, need: u64) -> Result<PrimeSet, Failure> {
    Ok(PrimeSet::build(
        need,
        SieveConfig {
            max_limit: cli.sieve_limit,
            ..SieveConfig::default()
        },
    )?)
}

fn variant(v: VariantArg) -> Variant {
    match v {
        VariantArg::Sum => Variant::Sum,
        VariantArg::Diff => Variant::Diff,
    }
}

fn range(a: Option<u64>, from: Option<u64>, to: Option<u64>) -> Result<(u64, u64), Failure> {
    match (a, from, to) {
        (Some(a), _, _) => Ok((a, a)),
        (None, Some(lo), Some(hi)) if lo <= hi => Ok((lo, hi)),
        (None, Some(lo), Some(hi)) => Err(Failure::Usage(format!("empty range {lo}..={hi}"))),
        _ => Err(Failure::Usage("give either a single value or --from and --to".into())),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let mut em = Emitter::new(out, cli.format);
    match &cli.command {
        Command::Sieve { limit, list } => {
            let ps = sieve(cli, *limit)?;
            em.emit(&Record::Sieve {
                limit: *limit,
                prime_count: ps.list().len() as u64,
                largest: ps.list().last().copied(),
                primes: list.then(|| ps.list().to_vec()),
            })?;
            Ok(true)
        }
        Command::Goldbach { target, count_only } => {
            let (lo, hi) = range(target.a, target.from, target.to)?;
            let ps = sieve(cli, hi.saturating_mul(2))?;
            let mut ok = true;
            for a in lo..=hi {
                let p = partitions::goldbach_partitions(a, &ps)?;
                ok &= !p.pairs.is_empty();
                em.emit(&Record::pairs(a, p.pairs, *count_only))?;
            }
            Ok(ok)
        }
        Command::Diff { target } => {
            let (lo, hi) = range(target.a, target.from, target.to)?;
            let ps = sieve(cli, hi.saturating_mul(3))?;
            let mut ok = true;
            for a in lo..=hi {
                let d = partitions::diff_representations(a, &ps)?;
                ok &= !d.pairs.is_empty();
                em.emit(&Record::pairs(a, d.pairs, false))?;
            }
            Ok(ok)
        }
        Command::Prp { target } => {
            let (lo, hi) = range(target.a, target.from, target.to)?;
            let ps = sieve(cli, hi.saturating_mul(2))?;
            let mut ok = true;
            for a in lo..=hi {
                let r = partitions::prime_reflective_points(a, &ps)?;
                ok &= r.min_point.is_some();
                em.emit(&Record::Prp(r))?;
            }
            Ok(ok)
        }
        Command::Ternary { target } => {
            let (lo, hi) = range(target.n, target.from, target.to)?;
            let ps = sieve(cli, hi)?;
            let mut ok = true;
            // Over a range only the odd values are decomposed.
            let odd_lo = if lo == hi { lo } else { lo | 1 };
            for n in (odd_lo..=hi).step_by(2) {
                match partitions::ternary_decomposition(n, &ps) {
                    Ok(t) => em.emit(&Record::Ternary {
                        n,
                        parts: Some(t.parts),
                    })?,
                    Err(Error::NoDecomposition { .. }) => {
                        ok = false;
                        em.emit(&Record::Ternary { n, parts: None })?;
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(ok)
        }
        Command::Polignac {
            gap,
            limit,
            max_gap,
        } => {
            let gaps: Vec<u64> = match (gap, max_gap) {
                (_, Some(m)) => (2..=*m).step_by(2).collect(),
                (Some(g), None) => vec![*g],
                (None, None) => unreachable!("clap requires --gap or --max-gap"),
            };
            let top = gaps.iter().max().copied().unwrap_or(2);
            let ps = sieve(cli, limit.saturating_add(top))?;
            for g in gaps {
                em.emit(&Record::Census(partitions::polignac_census(g, *limit, &ps)?))?;
            }
            Ok(true)
        }
        Command::Vieta { a, variant: v } => {
            let ps = sieve(cli, *a)?;
            let vieta = algebra::vieta_coefficients(*a, variant(*v), &ps)?;
            em.emit(&Record::Vieta(vieta))?;
            Ok(true)
        }
        Command::Product {
            a,
            variant: v,
            factor,
        } => {
            let v = variant(*v);
            let need = match v {
                Variant::Sum => a.saturating_mul(2),
                Variant::Diff => a.saturating_mul(3),
            };
            let ps = sieve(cli, need)?;
            let alg = algebra::Algebra::new(&ps);
            let product = alg.complement_product(*a, v)?;
            let record = if *factor {
                let report = algebra::smoothness_factorization(product.magnitude(), *a, &ps)?;
                let pairs = match v {
                    Variant::Sum => partitions::goldbach_partitions(*a, &ps)?.pairs,
                    Variant::Diff => partitions::diff_representations(*a, &ps)?.pairs,
                };
                Record::factored_product(*a, v, product, report, pairs)
            } else {
                Record::product(*a, v, product)
            };
            em.emit(&record)?;
            Ok(true)
        }
        Command::Bezout {
            a,
            variant: v,
            kind,
        } => {
            let ps = sieve(cli, *a)?;
            let alg = algebra::Algebra::new(&ps);
            let w = match kind {
                KindArg::Quadratic => alg.bezout_quadratic(*a, variant(*v)),
                KindArg::Unit => alg.bezout_unit(*a, variant(*v)),
            };
            match w {
                Ok(w) => {
                    let ok = w.verified;
                    em.emit(&Record::Bezout {
                        variant: variant(*v),
                        witness: w,
                    })?;
                    Ok(ok)
                }
                Err(Error::GcdMismatch { a, expected, found }) => {
                    em.emit(&Record::GcdMismatch { a, expected, found })?;
                    Ok(false)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Audit {
            claims,
            from,
            to,
            jobs,
            algebra_cap,
            search_cap,
            max_gap,
        } => {
            let start = Instant::now();
            let claims = parse_claim_list(claims)?;
            let config = AuditConfig {
                algebra_cap: *algebra_cap,
                search_cap: *search_cap,
                max_gap: *max_gap,
                max_sieve_limit: cli.sieve_limit,
            };
            let jobs = usize::try_from(*jobs).unwrap_or(usize::MAX);
            let auditor = Auditor::for_claims(config, &claims, *to)?;
            let mut report = auditor.run_suite(&claims, *from, *to, jobs)?;
            report.timing.elapsed_ms = start.elapsed().as_millis();
            let format = match cli.format {
                Format::Json => ReportFormat::JsonLines,
                Format::Csv => ReportFormat::Csv,
            };
            em.raw(&emit_report(&report, format))?;
            Ok(report.status() != Status::Fail)
        }
    }
}
