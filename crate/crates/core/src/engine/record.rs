use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::vertex::Specialization;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Nested,
    Product,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Nested => "nested",
            Route::Product => "product",
        })
    }
}

impl FromStr for Route {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "nested" => Ok(Route::Nested),
            "product" => Ok(Route::Product),
            _ => Err(format!("unknown route `{s}`")),
        }
    }
}

/// A rational as decimal strings, so no precision is lost in JSON.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalRepr {
    fn from(r: &Rational) -> Self {
        Self {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl fmt::Display for RationalRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpecializationRepr {
    pub x: RationalRepr,
    pub y: RationalRepr,
}

impl From<&Specialization> for SpecializationRepr {
    fn from(s: &Specialization) -> Self {
        Self {
            x: (&s.x).into(),
            y: (&s.y).into(),
        }
    }
}

/// One computed invariant.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub surface: String,
    pub bundle: String,
    pub n1: u32,
    pub n2: u32,
    pub route: Route,
    pub value: RationalRepr,
    pub specializations: Vec<SpecializationRepr>,
    /// The value was the same at every specialization.
    pub agreement: bool,
}
