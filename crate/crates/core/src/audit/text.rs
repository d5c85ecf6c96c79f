//! Serde adapters that write exact numbers as canonical strings.

use std::fmt::Display;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};
use crate::numerics::{parse_rational, Integer, Rational};

pub trait TextForm: Sized + Display {
    fn parse_text(s: &str) -> Result<Self>;
}

impl TextForm for Rational {
    fn parse_text(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

impl TextForm for Integer {
    fn parse_text(s: &str) -> Result<Self> {
        s.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
    }
}

pub fn serialize<T: TextForm, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn deserialize<'de, T: TextForm, D: Deserializer<'de>>(d: D) -> std::result::Result<T, D::Error> {
    let s = String::deserialize(d)?;
    T::parse_text(&s).map_err(D::Error::custom)
}

pub mod seq {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<T: TextForm, S: Serializer>(
        v: &[T],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for item in v {
            seq.serialize_element(&item.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, T: TextForm, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<T>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| T::parse_text(s).map_err(D::Error::custom))
            .collect()
    }
}
