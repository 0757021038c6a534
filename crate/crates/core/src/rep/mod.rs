//! Standard modules of `b^φ_{2m}`: half-diagram bases, weights, dimensions,
//! Gram determinants, restriction and globalisation.

pub mod cellular;
pub mod export;
pub mod globalise;
pub mod gram;
pub mod heredity;
pub mod restrict;
pub mod scan;

use std::fmt;

use num_integer::binomial;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::symplectic::{compose_phi, enumerate_bphi, Strip, TurnString};

pub use cellular::{check_cellularity, check_cellularity_with, CellularityReport};
pub use globalise::{colour_basis, globalise_module, globalise_right, GlobalisedBasis};
pub use export::{dimension_table, dimension_table_csv, dimension_table_json, gram_matrix_csv, gram_report_json, DimensionRow};
pub use heredity::{check_heredity, HereditySection};
pub use gram::{determinant, gram_entries, gram_matrix, inner_product, leibniz_determinant, rank_at, rational_determinant, GramReport};
pub use restrict::{blob_standard_dimension, restrict_to_blob, ur_values, Section};
pub use scan::{semisimplicity_scan, Condition, ScanReport, WeightScan};

/// A weight `l ∈ Λ^φ_m = {-m, …, m-1}`; `{0}` when `m = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight {
    m: u32,
    l: i64,
}

impl Weight {
    pub fn new(m: u32, l: i64) -> Result<Self> {
        let ok = if m == 0 { l == 0 } else { -(m as i64) <= l && l < m as i64 };
        if ok {
            Ok(Weight { m, l })
        } else {
            Err(Error::WeightOutOfRange { m: m as usize, l })
        }
    }

    pub fn m(self) -> u32 {
        self.m
    }

    pub fn value(self) -> i64 {
        self.l
    }

    /// Number of propagating pairs.
    pub fn x(self) -> usize {
        self.l.unsigned_abs() as usize
    }

    /// The order `l ⊴ l'` iff `|l| < |l'|`.
    pub fn below(self, other: Weight) -> bool {
        self.l.abs() < other.l.abs()
    }

    /// `Λ^φ_m` from `-m` upwards.
    pub fn all(m: u32) -> Vec<Weight> {
        if m == 0 {
            return vec![Weight { m, l: 0 }];
        }
        (-(m as i64)..m as i64).map(|l| Weight { m, l }).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.l)
    }
}

/// Half-diagram basis of `S_l(2m)`: valid turn strings with `x = |l|` and the
/// table sign rule.
pub fn standard_basis(m: u32, l: i64) -> Result<Vec<TurnString>> {
    let w = Weight::new(m, l)?;
    Ok(TurnString::all(m as usize).into_iter().filter(|t| t.x() == w.x() && t.table_weight() == l).collect())
}

/// Closed form for `dim S_l(2m)`.
pub fn dimension(m: u32, l: i64) -> Result<u64> {
    let w = Weight::new(m, l)?;
    if l == 0 {
        return Ok(1u64 << m);
    }
    let (m, x) = (m as i64, w.x() as i64);
    let eps = match ((m - x) % 2 == 1, l > 0) {
        (true, _) => 1,
        (false, true) => 2,
        (false, false) => 0,
    };
    let k = (m - x - eps) / 2;
    Ok((0..=k).map(|i| binomial(m as u64, i as u64)).sum())
}

/// Weight of a basis diagram from its propagating number and inner colour,
/// normalised so that `1 ↦ -m`, `e ↦ m-1`, `f ↦ -(m-1)`.
pub fn weight_of(d: &Strip) -> Result<Weight> {
    Weight::new(d.m(), d.weight()?)
}

/// One link of the ideal chain: all basis diagrams of weight `±x`, or of one
/// signed weight. `S_x` collects weights with `|l| ≤ x` and `l ≠ x`; `T_x`
/// adds `+x` too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub name: String,
    pub weights: Vec<i64>,
    pub basis: Vec<Strip>,
}

/// The chain `S_0 ⊆ S_1 ⊆ T_1 ⊆ S_2 ⊆ T_2 ⊆ …` of ideals spanned by weight
/// classes, ending with the whole algebra.
pub fn filtration_ideals(m: u32) -> Result<Vec<Ideal>> {
    let all = enumerate_bphi(m);
    let mut weighted = Vec::with_capacity(all.len());
    for s in all {
        weighted.push((weight_of(&s)?.value(), s));
    }
    let mut chain = Vec::new();
    let mut weights = vec![0i64];
    let push = |name: String, weights: &Vec<i64>, chain: &mut Vec<Ideal>| {
        let basis = weighted.iter().filter(|(l, _)| weights.contains(l)).map(|(_, s)| s.clone()).collect();
        chain.push(Ideal { name, weights: weights.clone(), basis });
    };
    push("S0".into(), &weights, &mut chain);
    for x in 1..=m as i64 {
        weights.push(-x);
        push(format!("S{x}"), &weights, &mut chain);
        if x < m as i64 {
            weights.push(x);
            push(format!("T{x}"), &weights, &mut chain);
        }
    }
    Ok(chain)
}

/// True when `a·d·b` stays in the span of `ideal` for all basis `a, b` and
/// `d` in the ideal.
pub fn is_two_sided_ideal(m: u32, ideal: &Ideal) -> Result<bool> {
    let all = enumerate_bphi(m);
    for d in &ideal.basis {
        for a in &all {
            let (_, ad) = compose_phi(a, d)?;
            let (_, da) = compose_phi(d, a)?;
            for s in [ad, da] {
                if !ideal.basis.contains(&s) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Left action of a basis diagram on a half diagram of weight `l`: zero when
/// the propagating number drops, else a monomial times a half diagram.
pub fn act(d: &Strip, t: &TurnString, base: &TurnString) -> Result<Option<(crate::LaurentPoly, TurnString)>> {
    let (k, s) = compose_phi(d, &Strip::glue(t, base)?)?;
    if s.propagating_count() < Strip::glue(t, base)?.propagating_count() {
        return Ok(None);
    }
    let (top, _, _) = s.halves()?;
    Ok(Some((k, top)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[TurnString]) -> Vec<String> {
        v.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn table_cells() {
        assert_eq!(strings(&standard_basis(3, -1).unwrap()), ["LLo", "RLo", "oRL", "oRR"]);
        assert_eq!(strings(&standard_basis(4, -1).unwrap()), ["LLLo", "LRLo", "LoRL", "LoRR", "RLLo"]);
        let mut p1 = strings(&standard_basis(4, 1).unwrap());
        p1.sort();
        assert_eq!(p1, ["LLoR", "RLoR", "oRLR", "oRRL", "oRRR"]);
        assert_eq!(strings(&standard_basis(2, -2).unwrap()), ["oo"]);
        assert_eq!(standard_basis(4, 0).unwrap().len(), 16);
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for m in 0..=6 {
            for w in Weight::all(m) {
                let n = standard_basis(m, w.value()).unwrap().len() as u64;
                assert_eq!(n, dimension(m, w.value()).unwrap(), "m={m} l={w}");
            }
        }
        assert_eq!(dimension(3, 0).unwrap(), 8);
        assert_eq!(dimension(4, 1).unwrap(), 5);
    }

    #[test]
    fn out_of_range_weights() {
        assert!(matches!(dimension(2, 2), Err(Error::WeightOutOfRange { .. })));
        assert!(standard_basis(0, 1).is_err());
        assert!(Weight::new(3, -3).is_ok());
    }

    #[test]
    fn squares_sum_to_algebra_dimension() {
        for m in 0..=4 {
            let s: u64 = Weight::all(m).iter().map(|w| dimension(m, w.value()).unwrap().pow(2)).sum();
            assert_eq!(s as usize, enumerate_bphi(m).len());
        }
    }

    #[test]
    fn weight_anchors() {
        use crate::symplectic::{strip_e, strip_f};
        for m in 1..=3 {
            assert_eq!(weight_of(&Strip::identity(m)).unwrap().value(), -(m as i64));
            assert_eq!(weight_of(&strip_e(m).unwrap()).unwrap().value(), m as i64 - 1);
            assert_eq!(weight_of(&strip_f(m).unwrap()).unwrap().value(), -(m as i64 - 1));
        }
        let mut counts = std::collections::BTreeMap::new();
        for s in enumerate_bphi(2) {
            *counts.entry(weight_of(&s).unwrap().value()).or_insert(0) += 1;
        }
        assert_eq!(counts.into_iter().collect::<Vec<_>>(), [(-2, 1), (-1, 1), (0, 16), (1, 1)]);
    }

    #[test]
    fn chain_at_rank_one() {
        let chain = filtration_ideals(1).unwrap();
        let sizes: Vec<usize> = chain.iter().map(|i| i.basis.len()).collect();
        assert_eq!(sizes, [4, 5]);
    }

    #[test]
    fn chain_links_are_ideals() {
        for m in 1..=3 {
            for ideal in filtration_ideals(m).unwrap() {
                assert!(is_two_sided_ideal(m, &ideal).unwrap(), "m={m} {}", ideal.name);
            }
        }
    }
}
