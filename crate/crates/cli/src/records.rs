//! Output records for the single-operation subcommands.

use std::collections::BTreeMap;
use std::io::{self, Write};

use gbaudit_core::algebra::SmoothnessReport;
use gbaudit_core::{bigjson, BezoutWitness, BigInt, BigUint, GapCensus, PrpResult, Variant, VietaCoefficients};
use serde::Serialize;

use crate::args::Format;

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Record {
    Sieve {
        limit: u64,
        prime_count: u64,
        largest: Option<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        primes: Option<Vec<u64>>,
    },
    Pairs {
        a: u64,
        even: u64,
        count: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        pairs: Option<Vec<(u64, u64)>>,
    },
    Prp(PrpResult),
    Ternary {
        n: u64,
        parts: Option<[u64; 3]>,
    },
    Census(GapCensus),
    Vieta(VietaCoefficients),
    Product {
        a: u64,
        variant: Variant,
        #[serde(with = "bigjson::int")]
        product: BigInt,
        #[serde(flatten, skip_serializing_if = "Option::is_none")]
        factors: Option<Factors>,
    },
    Bezout {
        variant: Variant,
        #[serde(flatten)]
        witness: BezoutWitness,
    },
    GcdMismatch {
        a: u64,
        expected: String,
        found: String,
    },
}

#[derive(Debug, Serialize)]
pub struct Factors {
    exponents: BTreeMap<u64, u32>,
    a_plus_1_exponent: u32,
    #[serde(with = "bigjson::uint")]
    leftover: BigUint,
    pairs: Vec<(u64, u64)>,
}

impl Record {
    pub fn pairs(a: u64, pairs: Vec<(u64, u64)>, count_only: bool) -> Self {
        Record::Pairs {
            a,
            even: 2 * a,
            count: pairs.len() as u64,
            pairs: (!count_only).then_some(pairs),
        }
    }

    pub fn product(a: u64, variant: Variant, product: BigInt) -> Self {
        Record::Product {
            a,
            variant,
            product,
            factors: None,
        }
    }

    pub fn factored_product(
        a: u64,
        variant: Variant,
        product: BigInt,
        report: SmoothnessReport,
        pairs: Vec<(u64, u64)>,
    ) -> Self {
        Record::Product {
            a,
            variant,
            product,
            factors: Some(Factors {
                exponents: report.exponents,
                a_plus_1_exponent: report.a_plus_1_exponent,
                leftover: report.leftover,
                pairs,
            }),
        }
    }

    fn csv_header(&self) -> &'static str {
        match self {
            Record::Sieve { .. } => "limit,prime_count,largest",
            Record::Pairs { .. } => "a,even,count,pairs",
            Record::Prp(_) => "a,min_point,points",
            Record::Ternary { .. } => "n,p1,p2,p3",
            Record::Census(_) => "gap,limit,count",
            Record::Vieta(_) => "a,variant,coeffs",
            Record::Product { .. } => "a,variant,product,exponents,a_plus_1_exponent,leftover,pairs",
            Record::Bezout { .. } => "a,variant,kind,u,v,verified",
            Record::GcdMismatch { .. } => "a,expected,found",
        }
    }

    fn csv_row(&self) -> String {
        fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
            items
                .into_iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(";")
        }
        fn opt<T: ToString>(v: Option<T>) -> String {
            v.map(|v| v.to_string()).unwrap_or_default()
        }
        let pair_list = |pairs: &[(u64, u64)]| join(pairs.iter().map(|(p, q)| format!("{p}:{q}")));
        match self {
            Record::Sieve {
                limit,
                prime_count,
                largest,
                ..
            } => format!("{limit},{prime_count},{}", opt(*largest)),
            Record::Pairs {
                a,
                even,
                count,
                pairs,
            } => format!(
                "{a},{even},{count},{}",
                pairs.as_deref().map(pair_list).unwrap_or_default()
            ),
            Record::Prp(r) => format!("{},{},{}", r.a, opt(r.min_point), join(&r.points)),
            Record::Ternary { n, parts } => match parts {
                Some([x, y, z]) => format!("{n},{x},{y},{z}"),
                None => format!("{n},,,"),
            },
            Record::Census(c) => format!("{},{},{}", c.gap, c.limit, c.count),
            Record::Vieta(v) => format!("{},{},{}", v.a, v.variant, join(&v.coeffs)),
            Record::Product {
                a,
                variant,
                product,
                factors,
            } => match factors {
                Some(f) => format!(
                    "{a},{variant},{product},{},{},{},{}",
                    join(f.exponents.iter().map(|(p, e)| format!("{p}^{e}"))),
                    f.a_plus_1_exponent,
                    f.leftover,
                    pair_list(&f.pairs)
                ),
                None => format!("{a},{variant},{product},,,,"),
            },
            Record::Bezout { variant, witness } => format!(
                "{},{variant},{},{},{},{}",
                witness.a,
                match witness.kind {
                    gbaudit_core::BezoutKind::Quadratic => "quadratic",
                    gbaudit_core::BezoutKind::Unit => "unit",
                },
                witness.u,
                witness.v,
                witness.verified
            ),
            Record::GcdMismatch { a, expected, found } => format!("{a},{expected},{found}"),
        }
    }
}

/// Writes records in the selected format; CSV gets one header line before
/// the first row.
pub struct Emitter<'w> {
    out: &'w mut dyn Write,
    format: Format,
    header_written: bool,
}

impl<'w> Emitter<'w> {
    pub fn new(out: &'w mut dyn Write, format: Format) -> Self {
        Self {
            out,
            format,
            header_written: false,
        }
    }

    pub fn emit(&mut self, record: &Record) -> io::Result<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut *self.out, record)?;
                self.out.write_all(b"\n")
            }
            Format::Csv => {
                if !self.header_written {
                    writeln!(self.out, "{}", record.csv_header())?;
                    self.header_written = true;
                }
                writeln!(self.out, "{}", record.csv_row())
            }
        }
    }

    pub fn raw(&mut self, text: &str) -> io::Result<()> {
        self.out.write_all(text.as_bytes())
    }
}
