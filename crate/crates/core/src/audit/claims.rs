use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

macro_rules! claims {
    ($($variant:ident => $code:literal, $kind:ident, $what:literal;)*) => {
        /// Registered claim codes.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ClaimId {
            $($variant,)*
        }

        impl ClaimId {
            /// Catalog in registration order.
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant,)*];

            pub fn code(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $code,)*
                }
            }

            pub fn kind(self) -> ClaimKind {
                match self {
                    $(ClaimId::$variant => ClaimKind::$kind,)*
                }
            }

            /// One-line description of the executable check.
            pub fn description(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $what,)*
                }
            }
        }

        impl FromStr for ClaimId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self, Error> {
                match s {
                    $($code => Ok(ClaimId::$variant),)*
                    other => Err(Error::UnknownClaim(other.to_string())),
                }
            }
        }
    };
}

/// Which cap governs a claim's range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    /// Big-integer polynomial work per `a`.
    Algebra,
    /// Sieve lookups per `a`.
    Search,
}

claims! {
    GClose => "G-CLOSE", Algebra, "complements 2a - p_i are well formed";
    GEquiv => "G-EQUIV", Algebra, "prod(2a - p_i) is a-smooth iff 2a has no Goldbach partition (composite a)";
    GCong => "G-CONG", Algebra, "prod(2a - p_i) = (-1)^pi(a) a# (mod 2a)";
    GC1 => "G-C1", Algebra, "gcd(p, c1) = 1 for p <= a and gcd(2a, c1) = 1";
    GQdiv => "G-QDIV", Algebra, "2a | Q and the expansion at 2a equals the complement product";
    GC0 => "G-C0", Algebra, "D != 0, 2a | D, gcd(2a, D/2a) = 1, |D| = 2a|Q + c1| > |Q + c1|";
    GBez2 => "G-BEZ2", Algebra, "(2a)^2 u + c0 v = 2a has a verified witness";
    GDeg => "G-DEG", Algebra, "deg Q = pi(a) - 1 recorded next to a verified unit Bezout witness";
    GEmp => "G-EMP", Search, "2a is a sum of two primes";
    GPrp => "G-PRP", Search, "a has a nonzero prime reflective point";
    GTern => "G-TERN", Search, "2a + 1 = 3 + p + q with odd primes p, q";
    DClose => "D-CLOSE", Algebra, "complements 2a + p_i are well formed";
    DEquiv => "D-EQUIV", Algebra, "prod(2a + p_i) is a-smooth up to a+1 iff no difference representation";
    DCong => "D-CONG", Algebra, "prod(2a + p_i) = a# (mod 2a)";
    DC1 => "D-C1", Algebra, "gcd(p, c1) = 1 for p <= a and gcd(2a, c1) = 1";
    DQdiv => "D-QDIV", Algebra, "2a | Q and the expansion at 2a equals the complement product";
    DC0 => "D-C0", Algebra, "D != 0, 2a | D, gcd(2a, D/2a) = 1, |D| = 2a|Q + c1| > |Q + c1|";
    DBez2 => "D-BEZ2", Algebra, "(2a)^2 u + c0 v = 2a has a verified witness";
    DDeg => "D-DEG", Algebra, "deg Q = pi(a) - 1 recorded next to a verified unit Bezout witness";
    DEmp => "D-EMP", Search, "2a = q - p with primes p <= a and q";
    DBeta => "D-BETA", Algebra, "a+1 divides prod(2a + p_i) exactly beta(a+1) times";
    PCensus => "P-CENSUS", Search, "prime-gap census is positive and monotone for every even gap";
    BPrimo => "B-PRIMO", Search, "a prime lies in (a, 2a) and 2a < a# for a > 4";
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for ClaimId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let code = String::deserialize(d)?;
        code.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated claim list; `all` selects the whole catalog.
pub fn parse_claim_list(list: &str) -> Result<Vec<ClaimId>, Error> {
    if list.trim() == "all" {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for code in list.split(',').map(str::trim).filter(|c| !c.is_empty()) {
        let id: ClaimId = code.parse()?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    Ok(out)
}
