//! Exact rationals extended by `+∞`.
//!
//! Every threshold and exponent in the crate is an [`ExtRational`]. The
//! infinite value is the maximum of the order, so `min` over an empty
//! constraint set is naturally `+∞`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(BigRational),
    Infinite,
}

impl ExtRational {
    /// `num / den` in lowest terms. Panics if `den == 0`.
    pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        ExtRational::Finite(BigRational::new(num.into(), den))
    }

    pub fn integer(value: impl Into<BigInt>) -> Self {
        ExtRational::Finite(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinite)
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExtRational::Finite(q) => Some(q),
            ExtRational::Infinite => None,
        }
    }

    pub fn numer(&self) -> Option<&BigInt> {
        self.finite().map(|q| q.numer())
    }

    pub fn denom(&self) -> Option<&BigInt> {
        self.finite().map(|q| q.denom())
    }

    pub fn is_negative(&self) -> bool {
        self.finite().is_some_and(|q| q.is_negative())
    }

    /// `1/x`, with `1/0 = +∞` and `1/∞ = 0`. Negative inputs are rejected.
    pub fn recip(&self) -> Result<Self> {
        match self {
            ExtRational::Infinite => Ok(Self::zero()),
            ExtRational::Finite(q) if q.is_zero() => Ok(ExtRational::Infinite),
            ExtRational::Finite(q) if q.is_negative() => Err(Error::OutOfRange(format!(
                "reciprocal of negative value {q}"
            ))),
            ExtRational::Finite(q) => Ok(ExtRational::Finite(q.recip())),
        }
    }

    /// Scale a finite value by a rational factor; `∞` stays `∞`.
    pub fn scale(&self, num: i64, den: i64) -> Self {
        match self {
            ExtRational::Infinite => ExtRational::Infinite,
            ExtRational::Finite(q) => {
                ExtRational::Finite(q * BigRational::new(num.into(), den.into()))
            }
        }
    }
}

impl From<BigRational> for ExtRational {
    fn from(q: BigRational) -> Self {
        ExtRational::Finite(q)
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
            (ExtRational::Finite(_), ExtRational::Infinite) => Ordering::Less,
            (ExtRational::Infinite, ExtRational::Finite(_)) => Ordering::Greater,
            (ExtRational::Infinite, ExtRational::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Infinite => f.write_str("inf"),
            ExtRational::Finite(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            ExtRational::Finite(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "+inf" | "∞" | "infinity") {
            return Ok(ExtRational::Infinite);
        }
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(ExtRational::ratio(num, den))
    }
}

// JSON wire format: {"num": "<int>", "den": "<int>"} or the string "inf".
impl Serialize for ExtRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtRational::Infinite => serializer.serialize_str("inf"),
            ExtRational::Finite(q) => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("num", &q.numer().to_string())?;
                map.serialize_entry("den", &q.denom().to_string())?;
                map.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for ExtRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ExtVisitor;

        impl<'de> Visitor<'de> for ExtVisitor {
            type Value = ExtRational;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str(r#""inf" or {"num": "<int>", "den": "<int>"}"#)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExtRational, E> {
                if v == "inf" {
                    Ok(ExtRational::Infinite)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }

            fn visit_map<A: de::MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<ExtRational, A::Error> {
                let mut num: Option<String> = None;
                let mut den: Option<String> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "num" => num = Some(map.next_value()?),
                        "den" => den = Some(map.next_value()?),
                        other => return Err(de::Error::unknown_field(other, &["num", "den"])),
                    }
                }
                let num = num.ok_or_else(|| de::Error::missing_field("num"))?;
                let den = den.ok_or_else(|| de::Error::missing_field("den"))?;
                format!("{num}/{den}").parse().map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_any(ExtVisitor)
    }
}
