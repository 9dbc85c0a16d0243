//! Natural numbers extended with an infinity element.

use std::fmt;
use std::ops::Add;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A natural number or infinity.
///
/// Infinity absorbs addition and sits above every finite value in the
/// ordering, matching deletion numbers of graphs that admit no feasible
/// deletion set and the girth of forests.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtInt {
    Fin(u64),
    Inf,
}

impl ExtInt {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Fin(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtInt::Fin(x) => Some(x),
            ExtInt::Inf => None,
        }
    }

    /// Returns the finite value, panicking on infinity.
    pub fn expect_finite(self) -> u64 {
        self.finite().expect("value is infinite")
    }
}

impl From<u64> for ExtInt {
    fn from(x: u64) -> Self {
        ExtInt::Fin(x)
    }
}

impl Add for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Fin(a), ExtInt::Fin(b)) => ExtInt::Fin(a + b),
            _ => ExtInt::Inf,
        }
    }
}

impl Add<u64> for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: u64) -> ExtInt {
        self + ExtInt::Fin(rhs)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Fin(x) => write!(f, "{x}"),
            ExtInt::Inf => write!(f, "infinity"),
        }
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtInt::Fin(x) => serializer.serialize_u64(*x),
            ExtInt::Inf => serializer.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ExtIntVisitor;
        impl<'de> Visitor<'de> for ExtIntVisitor {
            type Value = ExtInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or the string \"infinity\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtInt, E> {
                Ok(ExtInt::Fin(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtInt, E> {
                u64::try_from(v)
                    .map(ExtInt::Fin)
                    .map_err(|_| E::custom("negative value"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtInt, E> {
                if v == "infinity" {
                    Ok(ExtInt::Inf)
                } else {
                    Err(E::custom(format!("expected \"infinity\", got {v:?}")))
                }
            }
        }
        deserializer.deserialize_any(ExtIntVisitor)
    }
}
