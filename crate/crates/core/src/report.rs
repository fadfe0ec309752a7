//! Serializable check results shared by the library and the CLI.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

pub const SCHEMA_VERSION: u32 = 1;

/// Serializes a big integer as a decimal string.
pub fn big_string<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn big_string_opt<S: Serializer>(x: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

/// Two sides of an identity evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub t: usize,
    #[serde(serialize_with = "big_string")]
    pub lhs: BigUint,
    #[serde(serialize_with = "big_string")]
    pub rhs: BigUint,
    pub equal: bool,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, n: usize, t: usize, lhs: BigUint, rhs: BigUint) -> Self {
        let equal = lhs == rhs;
        Self {
            check: check.into(),
            n,
            t,
            lhs,
            rhs,
            equal,
        }
    }
}
