//! String forms of rationals ("p/q" or "p") and the serde glue that keeps
//! every number in reports exact.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Q;

pub fn parse_rational(text: &str) -> Result<Q> {
    let t = text.trim().replace('\u{2212}', "-");
    let bad = || Error::InvalidInput(format!("not a rational number: {text:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t.as_str(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::InvalidInput(format!("zero denominator in {text:?}")));
    }
    Ok(Q::new(num, den))
}

pub fn format_rational(x: &Q) -> String {
    x.to_string()
}

pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
    d.deserialize_any(RationalVisitor)
}

struct RationalVisitor;

impl<'de> Visitor<'de> for RationalVisitor {
    type Value = Q;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("a rational as a \"p/q\" string or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Q, E> {
        parse_rational(v).map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Q, E> {
        Ok(Q::from_integer(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Q, E> {
        Ok(Q::from_integer(v.into()))
    }
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.serialize_str(&format_rational(v)),
            None => s.serialize_none(),
        }
    }
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&format_rational(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        struct Wrapped(Q);
        impl<'de> serde::Deserialize<'de> for Wrapped {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                super::deserialize(d).map(Wrapped)
            }
        }
        let v: Vec<Wrapped> = serde::Deserialize::deserialize(d)?;
        Ok(v.into_iter().map(|w| w.0).collect())
    }
}
