//! The fold `ν` from strips to rectangular L/R-decorated diagrams and the
//! unfold `μ^x` back.

use std::collections::{BTreeMap, BTreeSet};

use super::strip::{compose_phi, End, Strip};
use super::turn::{Turn, TurnString};
use crate::algebra::AlgebraElement;
use crate::diagram::{Diagram, VertexId};
use crate::error::{Error, Result};
use crate::params::LaurentPoly;

/// Element of `b^x_m` over the rectangular basis.
pub type XElement = AlgebraElement<Diagram>;

fn vertex(e: End) -> Option<VertexId> {
    match e {
        End::N(i) => Some(VertexId::north(i)),
        End::S(i) => Some(VertexId::south(i)),
        _ => None,
    }
}

/// Wall points `(1,2), (3,4), …` are consecutive and get joined.
fn wall_partner(e: End) -> (End, char) {
    let step = |p: u32| if p % 2 == 1 { p + 1 } else { p - 1 };
    match e {
        End::W(p) => (End::W(step(p)), 'L'),
        End::E(p) => (End::E(step(p)), 'R'),
        _ => unreachable!("not a wall point"),
    }
}

/// `ν`: join consecutive wall crossings in pairs, a 0-wall join leaving an `L`
/// and a 1-wall join an `R`. Chains that never reach a vertex become loops.
pub fn fold_nu(s: &Strip) -> Result<Diagram> {
    if !s.is_cc() {
        return Err(Error::NotCC(format!("{} crossings of the 0-wall, {} of the 1-wall", s.west(), s.east())));
    }
    let p = s.partners();
    let mut used: BTreeSet<End> = BTreeSet::new();
    let mut lines = Vec::new();
    let m = s.m();
    let starts = (1..=m).map(End::N).chain((1..=m).map(End::S));
    for start in starts {
        if used.contains(&start) {
            continue;
        }
        let mut word = String::new();
        let mut cur = start;
        let end = loop {
            used.insert(cur);
            let y = p[&cur];
            used.insert(y);
            if let Some(v) = vertex(y) {
                break v;
            }
            let (next, c) = wall_partner(y);
            word.push(c);
            cur = next;
        };
        lines.push((vertex(start).expect("vertex"), end, word));
    }
    let mut loops: Vec<String> = vec![String::new(); s.loops() as usize];
    let walls: Vec<End> = p.keys().copied().filter(|e| vertex(*e).is_none()).collect();
    for s0 in walls {
        if used.contains(&s0) {
            continue;
        }
        let mut word = String::new();
        let mut cur = s0;
        loop {
            used.insert(cur);
            let y = p[&cur];
            used.insert(y);
            let (next, c) = wall_partner(y);
            word.push(c);
            if next == s0 {
                break;
            }
            cur = next;
        }
        loops.push(word);
    }
    Diagram::new(m, m, lines, loops)
}

fn turn_at(d: &Diagram, v: VertexId) -> Result<Turn> {
    let p = d.pair_at(v).ok_or_else(|| Error::InvalidDiagram(format!("no line at {v}")))?;
    let w = p.word_from(v);
    match w.chars().next() {
        Some('L') => Ok(Turn::L),
        Some('R') => Ok(Turn::R),
        Some(c) => Err(Error::InvalidDiagram(format!("bead {c:?} outside {{L, R}}"))),
        None => {
            let o = p.other(v);
            Ok(if o.primed != v.primed {
                Turn::O
            } else if o.index > v.index {
                Turn::R
            } else {
                Turn::L
            })
        }
    }
}

/// Unfold an L/R-decorated diagram without reducing: each `LR`/`RL` adjacency
/// on a line contributes one belt.
pub fn unfold_raw(d: &Diagram) -> Result<Strip> {
    if d.n() != d.m() {
        return Err(Error::RankMismatch(format!("{} north and {} south vertices", d.n(), d.m())));
    }
    if d.has_loops() {
        return Err(Error::InvalidDiagram("cannot unfold a diagram carrying loops".into()));
    }
    let m = d.n();
    let top = (1..=m).map(|i| turn_at(d, VertexId::north(i))).collect::<Result<Vec<_>>>()?;
    let bot = (1..=m).map(|i| turn_at(d, VertexId::south(i))).collect::<Result<Vec<_>>>()?;
    let belts: usize = d
        .pairs()
        .iter()
        .map(|p| p.word.as_bytes().windows(2).filter(|w| w[0] != w[1]).count())
        .sum();
    Strip::from_halves(&TurnString::new(top)?, &TurnString::new(bot)?, belts as u32)
}

/// `μ^x` on a basis diagram of `b^x_m`.
pub fn unfold_mux(d: &Diagram) -> Result<Strip> {
    let s = unfold_raw(d)?;
    if !s.is_basis() || fold_nu(&s)? != *d {
        return Err(Error::InvalidDiagram(format!("{d} is not a basis diagram of b^x")));
    }
    Ok(s)
}

/// Basis product in `b^x_m`, computed on the periodic side.
pub fn x_product(a: &Diagram, b: &Diagram) -> Result<(LaurentPoly, Diagram)> {
    if a.n() != b.n() {
        return Err(Error::RankMismatch(format!("ranks {} and {}", a.n(), b.n())));
    }
    let (k, s) = compose_phi(&unfold_mux(a)?, &unfold_mux(b)?)?;
    Ok((k, fold_nu(&s)?))
}

/// `ν(μ^x(a) μ^x(b))`, extended bilinearly.
pub fn compose_x(a: &XElement, b: &XElement) -> Result<XElement> {
    let mut out = XElement::zero();
    for (da, ca) in a.terms() {
        for (db, cb) in b.terms() {
            let (k, d) = x_product(da, db)?;
            out.add_term(&(ca * cb) * &k, d);
        }
    }
    Ok(out)
}

/// Unfold a whole element into `b^φ_{2m}`.
pub fn unfold_element(a: &XElement) -> Result<AlgebraElement<Strip>> {
    let mut out = AlgebraElement::zero();
    for (d, c) in a.terms() {
        out.add_term(c.clone(), unfold_mux(d)?);
    }
    Ok(out)
}

/// Left-blob generator `e` of `b^x_m`.
pub fn x_e(m: u32) -> Result<Diagram> {
    Diagram::decorated_identity(m, 1, "L")
}

/// Right-blob generator `f` of `b^x_m`.
pub fn x_f(m: u32) -> Result<Diagram> {
    Diagram::decorated_identity(m, m, "R")
}

/// Memoised basis multiplication table over a fixed basis.
pub fn multiplication_table(basis: &[Strip]) -> Result<BTreeMap<(usize, usize), (LaurentPoly, usize)>> {
    let index: BTreeMap<&Strip, usize> = basis.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut out = BTreeMap::new();
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let (k, c) = compose_phi(a, b)?;
            let ci = *index
                .get(&c)
                .ok_or_else(|| Error::InvalidDiagram(format!("product {c} outside the basis")))?;
            out.insert((i, j), (k, ci));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParamName;
    use crate::symplectic::strip::{enumerate_bphi, strip_e};

    #[test]
    fn identity_round_trip() {
        for m in 0..=3 {
            let id = Diagram::identity(m);
            assert_eq!(unfold_mux(&id).unwrap(), Strip::identity(m));
            assert_eq!(fold_nu(&Strip::identity(m)).unwrap(), id);
        }
    }

    #[test]
    fn e_unfolds_to_wall_pair() {
        let s = unfold_mux(&x_e(2).unwrap()).unwrap();
        assert_eq!(s, strip_e(2).unwrap());
        assert_eq!(s.west(), 2);
    }

    #[test]
    fn nu_mu_is_identity_on_strips() {
        for m in 0..=3 {
            for s in enumerate_bphi(m) {
                let d = fold_nu(&s).unwrap();
                assert_eq!(unfold_mux(&d).unwrap(), s, "{d}");
            }
        }
    }

    #[test]
    fn lr_string_squares_to_kappa_lr() {
        let lr = Diagram::decorated_identity(1, 1, "LR").unwrap();
        assert_eq!(x_product(&lr, &lr).unwrap(), (ParamName::KappaLR.into(), lr));
    }

    #[test]
    fn non_cc_rejected() {
        let s = Strip::new(1, [(End::N(1), End::W(1)), (End::S(1), End::E(1))], 0).unwrap();
        assert!(matches!(fold_nu(&s), Err(Error::NotCC(_))));
    }
}
