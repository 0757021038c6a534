use std::collections::BTreeMap;

use num_integer::binomial;
use serde::Serialize;

use super::{standard_basis, Weight};
use crate::error::Result;

/// One `ur`-section of the restriction to the blob subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub ur: usize,
    /// Weight of the blob standard module the section is isomorphic to.
    pub blob_weight: i64,
    pub dim: u64,
}

/// `dim Δ_b(±c)` on `m` strings.
pub fn blob_standard_dimension(m: u32, c: i64) -> u64 {
    let c = c.unsigned_abs();
    if c > m as u64 || (m as u64 - c) % 2 == 1 {
        return 0;
    }
    binomial(m as u64, (m as u64 - c) / 2)
}

/// The `ur` values realised in `S_l(2m)`, by the parity of `m - x` and the
/// sign of `l`. Ascending.
pub fn ur_values(m: u32, l: i64) -> Result<Vec<usize>> {
    let w = Weight::new(m, l)?;
    if l == 0 {
        return Ok((0..=m as usize).collect());
    }
    let d = m as usize - w.x();
    // d even with l < 0, or d odd with l > 0, reaches d itself; the others
    // stop one short. The parity of ur is fixed.
    let top = if (d % 2 == 0) == (l < 0) { d as i64 } else { d as i64 - 1 };
    let parity = if l < 0 { 0 } else { 1 };
    Ok((0..=top.max(-1)).filter(|r| r % 2 == parity).map(|r| r as usize).collect())
}

/// Sections of `S_l(2m)` restricted to the blob subalgebra, ordered by `ur`.
/// Each is a blob standard: `x + r` lines propagate, plus one blobbed line
/// from the 0-wall when the inner region is black.
pub fn restrict_to_blob(m: u32, l: i64) -> Result<Vec<Section>> {
    let w = Weight::new(m, l)?;
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for t in standard_basis(m, l)? {
        *counts.entry(t.ur()).or_insert(0) += 1;
    }
    Ok(counts
        .into_iter()
        .map(|(ur, dim)| {
            let c = (w.x() + ur) as i64;
            let black = (m as usize - w.x() - ur) % 2 == 1;
            let blob_weight = if black { -(c + 1) } else { c };
            Section { ur, blob_weight, dim }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{act, dimension};
    use crate::symplectic::{strip_e, strip_u, TurnString};

    #[test]
    fn zero_weight_is_one_copy_of_each() {
        for m in 0..=5 {
            let s = restrict_to_blob(m, 0).unwrap();
            assert_eq!(s.len(), m as usize + 1);
            assert_eq!(s.iter().map(|x| x.dim).sum::<u64>(), 1 << m);
            let mut ws: Vec<i64> = s.iter().map(|x| x.blob_weight).collect();
            ws.sort();
            let mut expect: Vec<i64> = (0..=m as i64).map(|r| if (m as i64 - r) % 2 == 1 { -(r + 1) } else { r }).collect();
            expect.sort();
            assert_eq!(ws, expect);
        }
        let dims: Vec<u64> = restrict_to_blob(3, 0).unwrap().iter().map(|x| x.dim).collect();
        let mut sorted = dims.clone();
        sorted.sort();
        assert_eq!(sorted, [1, 1, 3, 3]);
    }

    #[test]
    fn sections_are_blob_standards() {
        for m in 0..=6 {
            for w in Weight::all(m) {
                let s = restrict_to_blob(m, w.value()).unwrap();
                for sec in &s {
                    assert_eq!(sec.dim, blob_standard_dimension(m, sec.blob_weight), "m={m} l={w} {sec:?}");
                }
                assert_eq!(s.iter().map(|x| x.dim).sum::<u64>(), dimension(m, w.value()).unwrap());
                let seen: Vec<usize> = s.iter().map(|x| x.ur).collect();
                assert_eq!(seen, ur_values(m, w.value()).unwrap(), "m={m} l={w}");
            }
        }
        assert_eq!(ur_values(3, -1).unwrap(), [0, 2]);
    }

    #[test]
    fn blob_action_never_raises_ur() {
        for m in 1..=4u32 {
            let mut gens = vec![strip_e(m).unwrap()];
            gens.extend((1..m).map(|i| strip_u(m, i).unwrap()));
            for w in Weight::all(m) {
                let basis: Vec<TurnString> = standard_basis(m, w.value()).unwrap();
                let base = &basis[0];
                for t in &basis {
                    for g in &gens {
                        if let Some((_, t2)) = act(g, t, base).unwrap() {
                            assert!(t2.ur() <= t.ur(), "{g} on {t}");
                        }
                    }
                }
            }
        }
    }
}
