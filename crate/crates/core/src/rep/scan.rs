use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::gram::{rank_at, rational_determinant};
use super::{gram_entries, Weight};
use crate::error::{Error, Result};
use crate::params::{KName, KOp, KPolynomial, ParamName, Point};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightScan {
    pub l: i64,
    pub dimension: usize,
    pub determinant: String,
    pub vanishes: bool,
    pub rank: usize,
}

/// One of the manifold conditions of the non-semisimplicity result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub value: String,
    pub vanishes: bool,
    /// Whether the condition implies non-semisimplicity at this `m`.
    pub applies: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub m: u32,
    pub weights: Vec<WeightScan>,
    pub conditions: Vec<Condition>,
    /// No Gram determinant vanishes.
    pub semisimple: bool,
}

impl ScanReport {
    pub fn weight(&self, l: i64) -> Option<&WeightScan> {
        self.weights.iter().find(|w| w.l == l)
    }
}

fn applies(op: KOp, m: u32) -> bool {
    match op {
        KOp::Id => m % 2 == 1 && m >= 3,
        KOp::Phi | KOp::Psi => m % 2 == 0 && m >= 4,
        KOp::PhiPsi => m % 2 == 1 && m >= 5,
    }
}

/// Evaluate every Gram determinant of `b^φ_{2m}` at a point where all six
/// parameters are nonzero, and report which manifold conditions hold there.
pub fn semisimplicity_scan(m: u32, point: &Point) -> Result<ScanReport> {
    for p in ParamName::ALL {
        match point.get(&p) {
            None => return Err(Error::Parse(format!("no value for parameter {p}"))),
            Some(v) if v.is_zero() => return Err(Error::ZeroParameter(p.to_string())),
            Some(_) => {}
        }
    }
    let mut weights = Vec::new();
    for w in Weight::all(m) {
        let mat = gram_entries(m, w.value())?;
        let num: Vec<Vec<BigRational>> =
            mat.iter().map(|r| r.iter().map(|p| p.evaluate(point)).collect()).collect::<Result<_>>()?;
        let det = rational_determinant(&num);
        weights.push(WeightScan {
            l: w.value(),
            dimension: num.len(),
            vanishes: det.is_zero(),
            determinant: det.to_string(),
            rank: rank_at(&num),
        });
    }
    let mut conditions = Vec::new();
    for name in [KName::K3, KName::K13] {
        for op in KOp::ALL {
            let k = KPolynomial::new(name, op);
            let v = k.expansion().evaluate(point)?;
            conditions.push(Condition {
                name: k.to_string(),
                vanishes: v.is_zero(),
                value: v.to_string(),
                applies: applies(op, m),
            });
        }
    }
    let semisimple = weights.iter().all(|w| !w.vanishes);
    Ok(ScanReport { m, weights, conditions, semisimple })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::parse_point;

    #[test]
    fn k3_point_kills_minus_one() {
        let p = parse_point("d=2,dL=1,dR=1,kL=3,kR=3,kLR=5").unwrap();
        let r = semisimplicity_scan(3, &p).unwrap();
        let w = r.weight(-1).unwrap();
        assert!(w.vanishes);
        assert!(w.rank < w.dimension);
        assert!(!r.semisimple);
        assert!(r.conditions.iter().any(|c| c.name == "K3" && c.vanishes && c.applies));
    }

    #[test]
    fn zero_parameter_rejected() {
        let p = parse_point("d=0,dL=1,dR=1,kL=3,kR=3,kLR=5").unwrap();
        assert!(matches!(semisimplicity_scan(2, &p), Err(Error::ZeroParameter(_))));
    }

    #[test]
    fn generic_point_is_semisimple() {
        let p = parse_point("d=7/3,dL=5/2,dR=11/7,kL=13/5,kR=17/4,kLR=19/6").unwrap();
        assert!(semisimplicity_scan(3, &p).unwrap().semisimple);
    }

    #[test]
    fn k1_point_kills_zero() {
        let p = parse_point("d=5,dL=2,dR=3,kL=7,kR=11,kLR=6").unwrap();
        let r = semisimplicity_scan(3, &p).unwrap();
        assert!(r.weight(0).unwrap().vanishes);
        assert!(!r.weight(-1).unwrap().vanishes);
    }
}
