//! Serde adapters that write big integers as bare JSON numbers.
//!
//! These rely on `serde_json`'s `arbitrary_precision` feature so that values
//! wider than 64 bits survive a round trip without going through `f64`.

use num_bigint::{BigInt, BigUint};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

fn to_number<T: ToString, E: serde::ser::Error>(v: &T) -> Result<Number, E> {
    v.to_string().parse().map_err(E::custom)
}

pub mod int {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_number::<_, S::Error>(v)?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        Number::deserialize(d)?
            .to_string()
            .parse()
            .map_err(D::Error::custom)
    }
}

pub mod uint {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        to_number::<_, S::Error>(v)?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        Number::deserialize(d)?
            .to_string()
            .parse()
            .map_err(D::Error::custom)
    }
}

pub mod int_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let nums = v
            .iter()
            .map(to_number::<_, S::Error>)
            .collect::<Result<Vec<_>, _>>()?;
        nums.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Number>::deserialize(d)?
            .into_iter()
            .map(|n| n.to_string().parse().map_err(D::Error::custom))
            .collect()
    }
}

/// A big integer as a JSON number, for building ad-hoc records.
pub fn number(v: &impl ToString) -> serde_json::Value {
    serde_json::Value::Number(
        v.to_string()
            .parse()
            .expect("integer display is valid JSON"),
    )
}
