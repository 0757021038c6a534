use std::collections::BTreeSet;

use super::{act, Weight};
use crate::error::Result;
use crate::symplectic::{enumerate_bphi, globalise_insert, Side, Strip, TurnString};

/// Half diagrams `|Bφ[l]⟩` with `l` read from the inner colour, matching
/// [`super::weight_of`].
pub fn colour_basis(m: u32, l: i64) -> Result<Vec<TurnString>> {
    let w = Weight::new(m, l)?;
    Ok(TurnString::all(m as usize).into_iter().filter(|t| t.x() == w.x() && t.colour_weight() == l).collect())
}

/// A basis of a globalised module, as the set of half diagrams it reaches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalisedBasis {
    pub m: u32,
    pub weight: i64,
    /// The inserted images of the source basis.
    pub inserted: Vec<TurnString>,
    /// Everything reached from them under left multiplication.
    pub basis: Vec<TurnString>,
}

fn globalise_with(m: u32, source: &[TurnString], side: Side) -> Result<GlobalisedBasis> {
    let lift = |t: &TurnString| -> Result<TurnString> {
        let s = globalise_insert(&Strip::glue(t, t)?, side)?;
        Ok(s.halves()?.0)
    };
    let inserted: Vec<TurnString> = source.iter().map(lift).collect::<Result<_>>()?;
    let Some(base) = inserted.first().cloned() else {
        return Ok(GlobalisedBasis { m: m + 1, weight: 0, inserted, basis: Vec::new() });
    };
    let algebra = enumerate_bphi(m + 1);
    let mut seen: BTreeSet<TurnString> = inserted.iter().cloned().collect();
    for t in &inserted {
        for a in &algebra {
            if let Some((_, t2)) = act(a, t, &base)? {
                seen.insert(t2);
            }
        }
    }
    let weight = base.colour_weight();
    Ok(GlobalisedBasis { m: m + 1, weight, inserted, basis: seen.into_iter().collect() })
}

/// `G`: insert a cup-cap astride the 0-wall and close up under the algebra
/// at rank `m + 1`. Sends weight `l` to `-l`.
pub fn globalise_module(m: u32, source: &[TurnString]) -> Result<GlobalisedBasis> {
    globalise_with(m, source, Side::Left)
}

/// `G'`: the same astride the 1-wall. Keeps the weight.
pub fn globalise_right(m: u32, source: &[TurnString]) -> Result<GlobalisedBasis> {
    globalise_with(m, source, Side::Right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::dimension;

    fn sorted(mut v: Vec<TurnString>) -> Vec<TurnString> {
        v.sort();
        v
    }

    #[test]
    fn g_flips_and_g_prime_keeps_weight() {
        for m in 1..=4u32 {
            for w in Weight::all(m - 1) {
                let l = w.value();
                let src = colour_basis(m - 1, l).unwrap();
                let g = globalise_module(m - 1, &src).unwrap();
                assert_eq!(g.basis, sorted(colour_basis(m, -l).unwrap()), "G m={m} l={l}");
                assert_eq!(g.basis.len() as u64, dimension(m, -l).unwrap());
                let g2 = globalise_right(m - 1, &src).unwrap();
                assert_eq!(g2.basis, sorted(colour_basis(m, l).unwrap()), "G' m={m} l={l}");
                assert_eq!(g2.basis.len() as u64, dimension(m, l).unwrap());
            }
        }
    }

    #[test]
    fn zero_weight_tower() {
        let s2 = colour_basis(1, 0).unwrap();
        assert_eq!(s2.len(), 2);
        let s4 = globalise_module(1, &s2).unwrap();
        assert_eq!(s4.basis.len(), 4);
        let s6 = globalise_module(2, &s4.basis).unwrap();
        assert_eq!(s6.basis.len(), 8);
    }

    #[test]
    fn g_and_g_prime_commute() {
        for m in 0..=2u32 {
            for w in Weight::all(m) {
                let src = colour_basis(m, w.value()).unwrap();
                let a = globalise_right(m + 1, &globalise_module(m, &src).unwrap().basis).unwrap();
                let b = globalise_module(m + 1, &globalise_right(m, &src).unwrap().basis).unwrap();
                assert_eq!(a.basis, b.basis);
            }
        }
    }
}
