//! Degrees extended by a minus-infinity sentinel.
//!
//! `a_0` of a module with no `H^0` and the postulation number of the zero
//! module are `-inf`. The sentinel orders below every integer but supports no
//! arithmetic; use [`Degree::finite`] to get at the integer.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }

    /// Largest index `t` (shifted by `offset`) where `pred` holds.
    pub fn last_where<T>(values: &[T], offset: i64, pred: impl Fn(&T) -> bool) -> Degree {
        values
            .iter()
            .rposition(pred)
            .map_or(Degree::NegInfinity, |i| Degree::Finite(i as i64 + offset))
    }
}

impl From<i64> for Degree {
    fn from(d: i64) -> Self {
        Degree::Finite(d)
    }
}

impl PartialEq<i64> for Degree {
    fn eq(&self, other: &i64) -> bool {
        *self == Degree::Finite(*other)
    }
}

impl PartialOrd<i64> for Degree {
    fn partial_cmp(&self, other: &i64) -> Option<std::cmp::Ordering> {
        self.partial_cmp(&Degree::Finite(*other))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DegreeRepr {
    Int(i64),
    Str(String),
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::Finite(d) => serializer.serialize_i64(*d),
            Degree::NegInfinity => serializer.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match DegreeRepr::deserialize(deserializer)? {
            DegreeRepr::Int(d) => Ok(Degree::Finite(d)),
            DegreeRepr::Str(s) if s == "-inf" => Ok(Degree::NegInfinity),
            DegreeRepr::Str(s) => Err(serde::de::Error::custom(format!("bad degree `{s}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sentinel_orders_below_integers() {
        assert!(Degree::NegInfinity < Degree::Finite(i64::MIN));
        assert!(Degree::NegInfinity < -1);
        assert_eq!(Degree::NegInfinity.finite(), None);
        assert_eq!(Degree::Finite(3).max(Degree::NegInfinity), 3);
    }

    #[test]
    fn json_round_trip() {
        for d in [Degree::NegInfinity, Degree::Finite(-1), Degree::Finite(7)] {
            let s = serde_json::to_string(&d).unwrap();
            assert_eq!(serde_json::from_str::<Degree>(&s).unwrap(), d);
        }
        assert_eq!(serde_json::to_string(&Degree::NegInfinity).unwrap(), "\"-inf\"");
    }
}
