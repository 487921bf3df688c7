use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Parses a natural number, accepting plain digits (with optional `_`
/// separators) or exact scientific notation such as `1e7` or `2.5e3`.
pub fn parse_natural(s: &str) -> Result<u64, String> {
    let s = s.trim().replace('_', "");
    let bad = || format!("`{s}` is not a natural number");
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.strip_prefix('+').unwrap_or(e).parse::<u32>().map_err(|_| bad())?),
        None => (s.as_str(), 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let frac_part = frac_part.trim_end_matches('0');
    let frac_len = frac_part.len() as u32;
    if frac_len > exp {
        return Err(format!("`{s}` is not an integer"));
    }
    let digits: u128 = format!("{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let scale = 10u128
        .checked_pow(exp - frac_len)
        .ok_or_else(|| format!("`{s}` is too large"))?;
    digits
        .checked_mul(scale)
        .and_then(|v| u64::try_from(v).ok())
        .ok_or_else(|| format!("`{s}` is too large"))
}

#[derive(Debug, Parser)]
#[command(
    name = "gbaudit",
    version,
    about = "Exact Goldbach-partition and prime-polynomial toolkit"
)]
pub struct Cli {
    /// Largest sieve the command may build.
    #[arg(long, global = true, default_value = "1e7", value_parser = parse_natural)]
    pub sieve_limit: u64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Sum,
    Diff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Quadratic,
    Unit,
}

/// Either a single value or an inclusive range.
#[derive(Debug, Args)]
#[group(required = true, multiple = true)]
pub struct Target {
    #[arg(long, value_parser = parse_natural, conflicts_with_all = ["from", "to"])]
    pub a: Option<u64>,
    #[arg(long, value_parser = parse_natural, requires = "to")]
    pub from: Option<u64>,
    #[arg(long, value_parser = parse_natural, requires = "from")]
    pub to: Option<u64>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = true)]
pub struct OddTarget {
    #[arg(long, value_parser = parse_natural, conflicts_with_all = ["from", "to"])]
    pub n: Option<u64>,
    #[arg(long, value_parser = parse_natural, requires = "to")]
    pub from: Option<u64>,
    #[arg(long, value_parser = parse_natural, requires = "from")]
    pub to: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sieve primes up to a limit and report the count.
    Sieve {
        #[arg(long, value_parser = parse_natural)]
        limit: u64,
        /// Include the full prime list.
        #[arg(long)]
        list: bool,
    },
    /// Goldbach partitions of 2a.
    Goldbach {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        count_only: bool,
    },
    /// Representations 2a = q - p with primes p <= a.
    Diff {
        #[command(flatten)]
        target: Target,
    },
    /// Prime reflective points of a.
    Prp {
        #[command(flatten)]
        target: Target,
    },
    /// Odd n as 3 + p + q.
    Ternary {
        #[command(flatten)]
        target: OddTarget,
    },
    /// Count primes p <= limit with p + gap prime.
    Polignac {
        #[arg(long, value_parser = parse_natural, required_unless_present = "max_gap")]
        gap: Option<u64>,
        #[arg(long, value_parser = parse_natural)]
        limit: u64,
        /// Report every even gap from 2 up to this value.
        #[arg(long, value_parser = parse_natural)]
        max_gap: Option<u64>,
    },
    /// Vieta coefficients of prod(x -+ p) over primes p <= a.
    Vieta {
        #[arg(long, value_parser = parse_natural)]
        a: u64,
        #[arg(long, value_enum)]
        variant: VariantArg,
    },
    /// Complement product prod(2a -+ p).
    Product {
        #[arg(long, value_parser = parse_natural)]
        a: u64,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Split the product over primes <= a and a + 1.
        #[arg(long)]
        factor: bool,
    },
    /// Bezout witness for the quadratic or unit identity.
    Bezout {
        #[arg(long, value_parser = parse_natural)]
        a: u64,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Run registered claims over a range of a.
    Audit {
        /// Comma-separated claim codes, or `all`.
        #[arg(long)]
        claims: String,
        #[arg(long, value_parser = parse_natural)]
        from: u64,
        #[arg(long, value_parser = parse_natural)]
        to: u64,
        #[arg(long, default_value = "1", value_parser = parse_natural)]
        jobs: u64,
        #[arg(long, default_value = "1e4", value_parser = parse_natural)]
        algebra_cap: u64,
        #[arg(long, default_value = "5e6", value_parser = parse_natural)]
        search_cap: u64,
        #[arg(long, default_value = "100", value_parser = parse_natural)]
        max_gap: u64,
    },
}
