//! The scalar ring: Laurent polynomials over the integers in six parameters.

mod kpoly;
mod parse;
mod poly;

pub use kpoly::{factor_against_klist, Factor, FactorList, KName, KOp, KPolynomial};
pub use parse::parse_point;
pub use poly::{LaurentPoly, Monomial, Point};

use std::fmt;

use serde::{Deserialize, Serialize};
use std::str::FromStr;

use crate::error::Error;

/// The six independent parameters, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ParamName {
    #[serde(rename = "d")]
    Delta,
    #[serde(rename = "dL")]
    DeltaL,
    #[serde(rename = "dR")]
    DeltaR,
    #[serde(rename = "kL")]
    KappaL,
    #[serde(rename = "kR")]
    KappaR,
    #[serde(rename = "kLR")]
    KappaLR,
}

impl ParamName {
    pub const ALL: [ParamName; 6] = [
        ParamName::Delta,
        ParamName::DeltaL,
        ParamName::DeltaR,
        ParamName::KappaL,
        ParamName::KappaR,
        ParamName::KappaLR,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Short name used in the text format.
    pub fn symbol(self) -> &'static str {
        match self {
            ParamName::Delta => "d",
            ParamName::DeltaL => "dL",
            ParamName::DeltaR => "dR",
            ParamName::KappaL => "kL",
            ParamName::KappaR => "kR",
            ParamName::KappaLR => "kLR",
        }
    }

    /// Resolve a short name, long name, or presentation alias.
    ///
    /// Aliases: `delta_e` (the blob parameter) is `dL`; `gamma` and `kappa` are `kL`;
    /// `kappa_prime`, `k_L` and `k_R` are `kLR`.
    pub fn resolve(s: &str) -> Option<ParamName> {
        Some(match s {
            "d" | "delta" => ParamName::Delta,
            "dL" | "deltaL" | "delta_e" | "de" => ParamName::DeltaL,
            "dR" | "deltaR" => ParamName::DeltaR,
            "kL" | "kappaL" | "gamma" | "kappa" => ParamName::KappaL,
            "kR" | "kappaR" => ParamName::KappaR,
            "kLR" | "kappaLR" | "kappa_prime" | "k_L" | "k_R" => ParamName::KappaLR,
            _ => return None,
        })
    }
}

impl fmt::Display for ParamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for ParamName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ParamName::resolve(s.trim()).ok_or_else(|| Error::Parse(format!("unknown parameter {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliases_resolve() {
        assert_eq!(ParamName::resolve("delta_e"), Some(ParamName::DeltaL));
        assert_eq!(ParamName::resolve("gamma"), Some(ParamName::KappaL));
        assert_eq!(ParamName::resolve("k_L"), Some(ParamName::KappaLR));
        assert_eq!(ParamName::resolve("k_R"), Some(ParamName::KappaLR));
        assert_eq!(ParamName::resolve("nope"), None);
        for p in ParamName::ALL {
            assert_eq!(ParamName::resolve(p.symbol()), Some(p));
        }
    }
}
