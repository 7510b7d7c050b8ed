//! JSON representation of big integers: plain numbers when they fit in an
//! `i64`, decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum JsonInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(s) => JsonInt::Small(s),
            None => JsonInt::Big(v.to_string()),
        }
    }
}

impl TryFrom<JsonInt> for BigInt {
    type Error = String;
    fn try_from(v: JsonInt) -> Result<Self, String> {
        match v {
            JsonInt::Small(s) => Ok(BigInt::from(s)),
            JsonInt::Big(s) => s.parse().map_err(|_| format!("invalid integer `{s}`")),
        }
    }
}

/// `#[serde(with = "crate::jsonint::big")]` for `BigInt` fields.
pub(crate) mod big {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        JsonInt::from(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        BigInt::try_from(JsonInt::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// `#[serde(with = "crate::jsonint::big_vec")]` for `Vec<BigInt>` fields.
pub(crate) mod big_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(JsonInt::from).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<JsonInt>::deserialize(d)?
            .into_iter()
            .map(|v| BigInt::try_from(v).map_err(serde::de::Error::custom))
            .collect()
    }
}
