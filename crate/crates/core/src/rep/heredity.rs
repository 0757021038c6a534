use std::collections::BTreeSet;

use serde::Serialize;

use super::{weight_of, Weight};
use crate::error::Result;
use crate::symplectic::{compose_phi, enumerate_bphi, Strip};

/// One section `J_l` of the ideal chain, spanned by the diagrams of weight `l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HereditySection {
    pub l: i64,
    pub size: usize,
    /// Every diagram of the section is a product of two section diagrams
    /// that stays in the section, so `J² = J` modulo lower ideals.
    pub square_spans: bool,
    /// A diagram `d` with `d² = u d` for a unit `u`, if one exists.
    pub witness: Option<String>,
}

impl HereditySection {
    pub fn passed(&self) -> bool {
        self.square_spans && self.witness.is_some()
    }
}

/// Sections in chain order `0, -1, 1, -2, 2, …`.
pub fn check_heredity(m: u32) -> Result<Vec<HereditySection>> {
    let all = enumerate_bphi(m);
    let mut weighted: Vec<(i64, Strip)> = Vec::with_capacity(all.len());
    for s in all {
        weighted.push((weight_of(&s)?.value(), s));
    }
    let mut order: Vec<i64> = Weight::all(m).iter().map(|w| w.value()).collect();
    order.sort_by_key(|&l| (l.abs(), l > 0));
    let mut out = Vec::new();
    for l in order {
        let section: Vec<&Strip> = weighted.iter().filter(|(w, _)| *w == l).map(|(_, s)| s).collect();
        let members: BTreeSet<&Strip> = section.iter().copied().collect();
        let mut reached: BTreeSet<Strip> = BTreeSet::new();
        let mut witness = None;
        for a in &section {
            for b in &section {
                let (k, c) = compose_phi(a, b)?;
                if members.contains(&c) {
                    if witness.is_none() && a == b && &c == *a && k.is_unit_monomial() {
                        witness = Some(a.to_string());
                    }
                    reached.insert(c);
                }
            }
        }
        out.push(HereditySection { l, size: section.len(), square_spans: reached.len() == members.len(), witness });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_section_is_heredity() {
        for m in 0..=3 {
            let secs = check_heredity(m).unwrap();
            assert_eq!(secs.len(), Weight::all(m).len());
            for s in &secs {
                assert!(s.passed(), "m={m} {s:?}");
            }
        }
    }

    #[test]
    fn chain_order_at_rank_two() {
        let ls: Vec<i64> = check_heredity(2).unwrap().iter().map(|s| s.l).collect();
        assert_eq!(ls, [0, -1, 1, -2]);
    }
}
