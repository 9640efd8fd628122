//! Report envelope shared by the CLI subcommands, plus serde helpers for
//! exact numbers.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: &str = "weilmot.report/1";

/// Top-level JSON document written by every subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: Vec<String>,
    /// SHA-256 of each input document, keyed by role.
    pub inputs: Vec<InputDigest>,
    /// Claims taken on trust from the user (smoothness, `CH_0`-triviality)
    /// and modelling assumptions.
    pub assertions: Value,
    pub results: Value,
    pub verdicts: Vec<Verdict>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub role: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(role: impl Into<String>, bytes: &[u8]) -> Self {
        let digest = Sha256::digest(bytes);
        InputDigest {
            role: role.into(),
            sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub fn new(check: impl Into<String>, pass: bool, detail: Option<String>) -> Self {
        Verdict {
            check: check.into(),
            pass,
            detail,
        }
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Integers as JSON numbers when they fit in 64 bits, as decimal strings
/// otherwise.
pub mod json_bigint {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        if let Some(v) = x.to_i64() {
            s.serialize_i64(v)
        } else if let Some(v) = x.to_u64() {
            s.serialize_u64(v)
        } else {
            s.serialize_str(&x.to_string())
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => n
                .to_string()
                .parse()
                .map_err(|_| D::Error::custom("expected an integer")),
            serde_json::Value::String(s) => s
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid integer {s:?}"))),
            _ => Err(D::Error::custom("expected an integer")),
        }
    }

    pub fn to_value(x: &BigInt) -> serde_json::Value {
        serialize(x, serde_json::value::Serializer).expect("infallible")
    }
}

pub mod json_bigints {
    use num_bigint::BigInt;
    use serde::{ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&super::json_bigint::to_value(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "super::json_bigint")] BigInt);
        Ok(Vec::<Wrap>::deserialize(d)?.into_iter().map(|w| w.0).collect())
    }
}

/// Rationals as JSON integers when integral and within 64 bits, otherwise
/// as `"a/b"` strings. Both forms are accepted on input.
pub mod json_rationals {
    use num_rational::BigRational;
    use num_traits::ToPrimitive;
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    use crate::algebraic::{format_rational, parse_rational};

    pub fn to_value(x: &BigRational) -> serde_json::Value {
        match x.is_integer().then(|| x.numer().to_i64()).flatten() {
            Some(v) => v.into(),
            None => format_rational(x).into(),
        }
    }

    pub fn serialize<S: Serializer>(xs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&to_value(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        Vec::<serde_json::Value>::deserialize(d)?
            .into_iter()
            .map(|v| match v {
                serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => {
                    parse_rational(&n.to_string()).map_err(D::Error::custom)
                }
                serde_json::Value::String(s) => parse_rational(&s).map_err(D::Error::custom),
                other => Err(D::Error::custom(format!("expected an integer or \"a/b\", got {other}"))),
            })
            .collect()
    }
}
