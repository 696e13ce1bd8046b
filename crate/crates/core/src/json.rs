//! Serialization helpers: arbitrary-precision integers travel as decimal strings.

use std::collections::BTreeMap;
use std::fmt::Display;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

pub(crate) fn ser_decimal<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(n)
}

pub(crate) fn ser_decimal_vec<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

/// A map whose keys print as strings, so it can become a JSON object.
pub(crate) fn ser_string_keyed<K: Display, V: Serialize, S: Serializer>(
    m: &BTreeMap<K, V>,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v)))
}

/// An exact rational as `{"num": "...", "den": "..."}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl RationalJson {
    pub fn new(num: impl ToString, den: impl ToString) -> Self {
        RationalJson {
            num: num.to_string(),
            den: den.to_string(),
        }
    }
}
