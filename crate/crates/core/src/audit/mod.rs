//! Claim registry and range runner.
//!
//! Each claim in [`ClaimId::ALL`] is an executable property of one even
//! number `2a`. [`Auditor::run_claim`] shards a range of `a` across a rayon
//! pool and merges the shards in order, so the result does not depend on the
//! number of workers.

mod checks;
mod claims;
mod report;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Algebra, DEFAULT_ALGEBRA_CAP};
use crate::error::{Error, Result};
use crate::primes::{PrimeSet, SieveConfig};

pub use checks::{check, Outcome};
pub use claims::{parse_claim_list, ClaimId, ClaimKind};
pub use report::{deterministic_body, emit_report, ReportFormat, CSV_HEADER};

/// Largest `a` for sieve-backed claims by default.
pub const DEFAULT_SEARCH_CAP: u64 = 5_000_000;
/// Largest even gap covered by `P-CENSUS` by default.
pub const DEFAULT_MAX_GAP: u64 = 100;

const SHARD: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "SKIPPED")]
    Skipped,
    #[serde(rename = "GAP-WITNESSED")]
    GapWitnessed,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Skipped => "SKIPPED",
            Status::GapWitnessed => "GAP-WITNESSED",
            Status::Fail => "FAIL",
        }
    }
}

/// One recorded `a` with its detail record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub a: u64,
    pub kind: Status,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: ClaimId,
    pub a_lo: u64,
    pub a_hi: u64,
    pub status: Status,
    #[serde(rename = "checked")]
    pub checked_count: u64,
    #[serde(rename = "skipped")]
    pub skipped_count: u64,
    pub witness_count: u64,
    pub witnesses: Vec<Witness>,
}

impl ClaimResult {
    fn from_parts(claim: ClaimId, a_lo: u64, a_hi: u64, tally: Tally) -> Self {
        let status = if tally.witnesses.iter().any(|w| w.kind == Status::Fail) {
            Status::Fail
        } else if !tally.witnesses.is_empty() {
            Status::GapWitnessed
        } else if tally.checked > 0 {
            Status::Pass
        } else {
            Status::Skipped
        };
        Self {
            claim,
            a_lo,
            a_hi,
            status,
            checked_count: tally.checked,
            skipped_count: tally.skipped,
            witness_count: tally.witnesses.len() as u64,
            witnesses: tally.witnesses,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| w.kind == Status::Fail)
    }
}

#[derive(Debug, Default)]
struct Tally {
    checked: u64,
    skipped: u64,
    witnesses: Vec<Witness>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.witnesses.extend(other.witnesses);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub algebra_cap: u64,
    pub search_cap: u64,
    pub max_gap: u64,
    pub max_sieve_limit: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            algebra_cap: DEFAULT_ALGEBRA_CAP,
            search_cap: DEFAULT_SEARCH_CAP,
            max_gap: DEFAULT_MAX_GAP,
            max_sieve_limit: SieveConfig::default().max_limit,
        }
    }
}

impl AuditConfig {
    /// Sieve bound that `claim` needs to audit every `a <= a_hi`.
    pub fn sieve_need(&self, claim: ClaimId, a_hi: u64) -> u64 {
        use ClaimId::*;
        match claim {
            DEquiv | DEmp => 3 * a_hi,
            PCensus => a_hi + self.max_gap,
            GEquiv | GEmp | GPrp | BPrimo => 2 * a_hi,
            GTern => 2 * a_hi + 1,
            _ => a_hi + 1,
        }
    }

    fn cap_for(&self, claim: ClaimId) -> u64 {
        match claim.kind() {
            ClaimKind::Algebra => self.algebra_cap,
            ClaimKind::Search => self.search_cap,
        }
    }
}

/// Fixed, execution-independent facts about a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportMetadata {
    pub version: String,
    pub a_lo: u64,
    pub a_hi: u64,
    pub sieve_limit: u64,
    pub algebra_cap: u64,
    pub search_cap: u64,
    pub max_gap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub jobs: usize,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub metadata: ReportMetadata,
    pub results: Vec<ClaimResult>,
    pub timing: Timing,
}

impl AuditReport {
    /// Worst status across all results; PASS when empty.
    pub fn status(&self) -> Status {
        self.results
            .iter()
            .map(|r| r.status)
            .max()
            .unwrap_or(Status::Pass)
    }
}

/// Owns the prime table and caps for a batch of claim runs.
#[derive(Debug, Clone)]
pub struct Auditor {
    config: AuditConfig,
    ps: PrimeSet,
}

impl Auditor {
    pub fn new(config: AuditConfig, ps: PrimeSet) -> Self {
        Self { config, ps }
    }

    /// Builds a sieve large enough for `claims` over `a <= a_hi`.
    pub fn for_claims(config: AuditConfig, claims: &[ClaimId], a_hi: u64) -> Result<Self> {
        let limit = claims
            .iter()
            .map(|&c| config.sieve_need(c, a_hi))
            .max()
            .unwrap_or(0);
        let ps = PrimeSet::build(
            limit,
            SieveConfig {
                max_limit: config.max_sieve_limit,
                ..SieveConfig::default()
            },
        )?;
        Ok(Self::new(config, ps))
    }

    pub fn primes(&self) -> &PrimeSet {
        &self.ps
    }

    pub fn config(&self) -> &AuditConfig {
        &self.config
    }

    fn validate(&self, claim: ClaimId, a_lo: u64, a_hi: u64, jobs: usize) -> Result<()> {
        if jobs == 0 {
            return Err(Error::InvalidArgument("jobs must be at least 1".into()));
        }
        if a_lo <= 3 || a_lo > a_hi {
            return Err(Error::InvalidArgument(format!(
                "audit range needs 3 < a_lo <= a_hi, got [{a_lo}, {a_hi}]"
            )));
        }
        let cap = self.config.cap_for(claim);
        if a_hi > cap {
            return Err(Error::Capacity {
                what: "audit range upper bound",
                requested: a_hi,
                max: cap,
            });
        }
        self.ps
            .ensure_covers("audit sieve requirement", self.config.sieve_need(claim, a_hi))
    }

    pub fn run_claim(&self, claim: ClaimId, a_lo: u64, a_hi: u64, jobs: usize) -> Result<ClaimResult> {
        self.validate(claim, a_lo, a_hi, jobs)?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        let tally = pool.install(|| {
            if claim == ClaimId::PCensus {
                self.census(a_lo, a_hi)
            } else {
                self.sharded(claim, a_lo, a_hi)
            }
        })?;
        Ok(ClaimResult::from_parts(claim, a_lo, a_hi, tally))
    }

    fn sharded(&self, claim: ClaimId, a_lo: u64, a_hi: u64) -> Result<Tally> {
        let alg = Algebra::new(&self.ps).with_cap(self.config.algebra_cap);
        let shards: Vec<(u64, u64)> = (a_lo..=a_hi)
            .step_by(SHARD as usize)
            .map(|s| (s, (s + SHARD - 1).min(a_hi)))
            .collect();
        let parts = shards
            .into_par_iter()
            .map(|(lo, hi)| {
                let mut t = Tally::default();
                for a in lo..=hi {
                    match check(claim, a, &alg)? {
                        Outcome::Pass => t.checked += 1,
                        Outcome::Skip => t.skipped += 1,
                        Outcome::Gap(detail) => {
                            t.checked += 1;
                            t.witnesses.push(Witness {
                                a,
                                kind: Status::GapWitnessed,
                                detail,
                            });
                        }
                        Outcome::Fail(detail) => {
                            t.checked += 1;
                            t.witnesses.push(Witness {
                                a,
                                kind: Status::Fail,
                                detail,
                            });
                        }
                    }
                }
                Ok(t)
            })
            .collect::<Result<Vec<Tally>>>()?;
        Ok(parts.into_iter().fold(Tally::default(), Tally::merge))
    }

    /// Every limit in `[a_lo, a_hi]` is a census checkpoint for every even
    /// gap up to the configured maximum.
    fn census(&self, a_lo: u64, a_hi: u64) -> Result<Tally> {
        let gaps: Vec<u64> = (2..=self.config.max_gap).step_by(2).collect();
        let failures = gaps
            .into_par_iter()
            .map(|gap| checks::census_check(gap, a_lo, a_hi, &self.ps))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tally {
            checked: a_hi - a_lo + 1,
            skipped: 0,
            witnesses: failures
                .into_iter()
                .flatten()
                .map(|detail| Witness {
                    a: detail["limit"].as_u64().unwrap_or(a_hi),
                    kind: Status::Fail,
                    detail,
                })
                .collect(),
        })
    }

    pub fn run_suite(&self, claims: &[ClaimId], a_lo: u64, a_hi: u64, jobs: usize) -> Result<AuditReport> {
        let start = Instant::now();
        let mut ordered = claims.to_vec();
        ordered.sort_by_key(|c| c.code());
        ordered.dedup();
        let results = ordered
            .iter()
            .map(|&c| self.run_claim(c, a_lo, a_hi, jobs))
            .collect::<Result<Vec<_>>>()?;
        Ok(AuditReport {
            metadata: self.metadata(a_lo, a_hi),
            results,
            timing: Timing {
                jobs,
                elapsed_ms: start.elapsed().as_millis(),
            },
        })
    }

    fn metadata(&self, a_lo: u64, a_hi: u64) -> ReportMetadata {
        ReportMetadata {
            version: env!("CARGO_PKG_VERSION").to_string(),
            a_lo,
            a_hi,
            sieve_limit: self.ps.limit(),
            algebra_cap: self.config.algebra_cap,
            search_cap: self.config.search_cap,
            max_gap: self.config.max_gap,
        }
    }
}

/// Runs one claim with default caps and a sieve sized for it.
pub fn run_claim(claim: ClaimId, a_lo: u64, a_hi: u64, jobs: usize) -> Result<ClaimResult> {
    Auditor::for_claims(AuditConfig::default(), &[claim], a_hi)?.run_claim(claim, a_lo, a_hi, jobs)
}

/// Runs several claims over one range with default caps.
pub fn run_suite(claims: &[ClaimId], a_lo: u64, a_hi: u64, jobs: usize) -> Result<AuditReport> {
    Auditor::for_claims(AuditConfig::default(), claims, a_hi)?.run_suite(claims, a_lo, a_hi, jobs)
}
