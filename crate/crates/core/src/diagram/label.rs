use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coxeter label `m(s, t)`: the order of the product of two generators.
///
/// `Finite(2)` means the generators are unjoined. `Finite(1)` only ever
/// appears as the diagonal sentinel returned for `m(v, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub const UNJOINED: Label = Label::Finite(2);

    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }

    /// Odd finite label `>= 3`. Infinity is neither odd nor even.
    pub fn is_odd(self) -> bool {
        matches!(self, Label::Finite(m) if m >= 3 && m % 2 == 1)
    }

    /// Even finite label, including the absent edge `2`.
    pub fn is_even(self) -> bool {
        matches!(self, Label::Finite(m) if m >= 2 && m % 2 == 0)
    }

    pub fn is_infinite(self) -> bool {
        self == Label::Infinity
    }

    /// Whether the pair is drawn as an edge of the diagram.
    pub fn is_joined(self) -> bool {
        !matches!(self, Label::Finite(m) if m <= 2)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadLabel(pub String);

impl FromStr for Label {
    type Err = BadLabel;

    /// Accepts an integer `>= 2` or the token `inf`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(Label::Infinity);
        }
        match s.parse::<u32>() {
            Ok(m) if m >= 2 => Ok(Label::Finite(m)),
            _ => Err(BadLabel(s.to_string())),
        }
    }
}

// Finite labels serialize as numbers, infinity as the string "inf".
impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Label::Finite(m) => serializer.serialize_u32(*m),
            Label::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct LabelVisitor;

        impl Visitor<'_> for LabelVisitor {
            type Value = Label;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer label >= 2 or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Label, E> {
                match u32::try_from(v) {
                    Ok(m) if m >= 2 => Ok(Label::Finite(m)),
                    _ => Err(E::custom(format!("bad label {v}"))),
                }
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Label, E> {
                u64::try_from(v)
                    .map_err(|_| E::custom(format!("bad label {v}")))
                    .and_then(|v| self.visit_u64(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Label, E> {
                v.parse().map_err(|_| E::custom(format!("bad label {v:?}")))
            }
        }

        deserializer.deserialize_any(LabelVisitor)
    }
}
