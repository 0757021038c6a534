use std::fmt;

use serde::Serialize;

use super::blob::{blob_e, blob_mul, BlobElement, BlobParams};
use super::core::Diagram;
use crate::algebra::AlgebraElement;
use crate::error::Result;
use crate::params::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub instance: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub family: String,
    pub n: u32,
    pub checks: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn new(family: &str, n: u32) -> Self {
        Self { family: family.into(), n, checks: Vec::new() }
    }

    pub fn record<K: Ord + Clone>(
        &mut self,
        relation: &str,
        instance: String,
        lhs: &AlgebraElement<K>,
        rhs: &AlgebraElement<K>,
    ) {
        self.checks.push(RelationCheck { relation: relation.into(), instance, passed: lhs == rhs });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for PresentationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "{} n={} {:<6} {:<28} {status}", self.family, self.n, c.relation, c.instance)?;
        }
        Ok(())
    }
}

/// Product of a word in the generators.
pub fn word_product<K: Ord + Clone>(
    word: &[&AlgebraElement<K>],
    unit: &AlgebraElement<K>,
    mul: impl Fn(&AlgebraElement<K>, &AlgebraElement<K>) -> AlgebraElement<K>,
) -> AlgebraElement<K> {
    word.iter().fold(unit.clone(), |acc, x| mul(&acc, x))
}

/// Check the type-B Temperley-Lieb relations in the blob diagram algebra.
pub fn verify_tlb(n: u32, params: &BlobParams) -> Result<PresentationReport> {
    let mut report = PresentationReport::new("TLb", n);
    let unit = BlobElement::basis(Diagram::identity(n));
    let e = BlobElement::basis(blob_e(n)?);
    let u: Vec<BlobElement> =
        (1..n).map(|i| Diagram::tl_generator(n, i).map(BlobElement::basis)).collect::<Result<_>>()?;
    let mul = |a: &BlobElement, b: &BlobElement| blob_mul(a, b, params).expect("same rank");
    let prod = |w: &[&BlobElement]| word_product(w, &unit, mul);
    let scaled = |c: &LaurentPoly, x: &BlobElement| x.scale(c);

    for i in 0..u.len() {
        let ui = &u[i];
        report.record("TL001", format!("U{0}U{0}", i + 1), &prod(&[ui, ui]), &scaled(&params.delta, ui));
        for j in [i.wrapping_sub(1), i + 1] {
            if j < u.len() {
                report.record("TL002", format!("U{}U{}U{}", i + 1, j + 1, i + 1), &prod(&[ui, &u[j], ui]), ui);
            }
        }
        for j in 0..u.len() {
            if i.abs_diff(j) > 1 {
                report.record("TL003", format!("U{}U{}", i + 1, j + 1), &prod(&[ui, &u[j]]), &prod(&[&u[j], ui]));
            }
        }
    }
    if let Some(u1) = u.first() {
        report.record("TL004", "U1eU1".into(), &prod(&[u1, &e, u1]), &scaled(&params.gamma, u1));
    }
    report.record("TL005", "ee".into(), &prod(&[&e, &e]), &scaled(&params.delta_e, &e));
    for (i, ui) in u.iter().enumerate().skip(1) {
        report.record("TL006", format!("U{}e", i + 1), &prod(&[ui, &e]), &prod(&[&e, ui]));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tlb_relations_hold() {
        for n in 1..=5 {
            let r = verify_tlb(n, &BlobParams::default()).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn tlb_n3_lists_expected_instances() {
        let r = verify_tlb(3, &BlobParams::default()).unwrap();
        assert!(r.checks.iter().any(|c| c.instance == "U1U2U1" && c.passed));
        assert!(r.checks.iter().any(|c| c.instance == "U1eU1" && c.passed));
    }
}
