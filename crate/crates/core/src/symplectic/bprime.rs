//! The unfolding `μ` of blob diagrams into left-right symmetric TL diagrams,
//! and the two-colour composition on the symmetric side.

use crate::algebra::AlgebraElement;
use crate::diagram::{abacus_concat, tl_diagrams, BlobParams, Diagram, VertexId};
use crate::error::{Error, Result};
use crate::params::LaurentPoly;

pub type BPrimeElement = AlgebraElement<Diagram>;

pub fn is_symmetric(d: &Diagram) -> bool {
    d.n() == d.m() && d.n() % 2 == 0 && d.mirror() == *d
}

/// Left-right symmetric TL diagrams on `2n` strings.
pub fn symmetric_tl_diagrams(n: u32) -> Vec<Diagram> {
    tl_diagrams(2 * n).into_iter().filter(is_symmetric).collect()
}

/// `μ`: reflect the blob diagram about its western edge. An undecorated line
/// becomes a mirror pair, a blobbed line is cut at the axis into two arcs.
pub fn fold_blob_mu(d: &Diagram) -> Result<Diagram> {
    if d.n() != d.m() || d.has_loops() {
        return Err(Error::InvalidDiagram(format!("{d} is not a blob diagram")));
    }
    let n = d.n();
    let right = |v: VertexId| VertexId { primed: v.primed, index: n + v.index };
    let left = |v: VertexId| VertexId { primed: v.primed, index: n + 1 - v.index };
    let mut lines = Vec::new();
    for p in d.pairs() {
        match p.word.as_str() {
            "" => {
                lines.push((right(p.a), right(p.b)));
                lines.push((left(p.a), left(p.b)));
            }
            "L" => {
                lines.push((right(p.a), left(p.a)));
                lines.push((right(p.b), left(p.b)));
            }
            w => return Err(Error::InvalidDiagram(format!("word {w:?} is not a single blob"))),
        }
    }
    Diagram::plain(2 * n, 2 * n, lines)
}

/// Lines crossing the central axis, tagged with a private bead so the abacus
/// product reports which crossings each loop picked up. Crossings are numbered
/// from the top: north arcs innermost first, then south arcs outermost first.
fn tag_crossings(d: &Diagram, offset: u32) -> (Diagram, u32) {
    let half = d.n() / 2;
    let crosses = |a: VertexId, b: VertexId| a.primed == b.primed && (a.index <= half) != (b.index <= half);
    let mut north: Vec<(u32, usize)> = Vec::new();
    let mut south: Vec<(u32, usize)> = Vec::new();
    for (k, p) in d.pairs().iter().enumerate() {
        if crosses(p.a, p.b) {
            let depth = half + 1 - p.a.index.min(p.b.index);
            if p.a.primed {
                south.push((depth, k));
            } else {
                north.push((depth, k));
            }
        }
    }
    north.sort();
    south.sort_by(|x, y| y.cmp(x));
    let mut tags = vec![None; d.pairs().len()];
    let mut next = offset;
    for &(_, k) in north.iter().chain(&south) {
        next += 1;
        tags[k] = Some(next);
    }
    let tagged = d.map_words(|p| {
        let k = d.pairs().iter().position(|q| q == p).expect("own pair");
        tags[k].map(|t| char::from_u32(0x100 + t).expect("tag").to_string()).unwrap_or_default()
    });
    (tagged, next)
}

/// Product in `b'_{2n}(δ, δ_e, κ)`: mirror pairs of loops give `δ`; a loop
/// astride the axis is white (`δ_e`) iff its upper crossing has even index,
/// black (`κ`) otherwise.
pub fn compose_bprime(a: &Diagram, b: &Diagram, params: &BlobParams) -> Result<(LaurentPoly, Diagram)> {
    if a.n() != b.n() || !is_symmetric(a) || !is_symmetric(b) {
        return Err(Error::RankMismatch(format!("symmetric diagrams of ranks {} and {}", a.n(), b.n())));
    }
    let (ta, used) = tag_crossings(a, 0);
    let (tb, _) = tag_crossings(b, used);
    let c = abacus_concat(&ta, &tb)?;
    let mut k = LaurentPoly::one();
    let mut off_axis = 0;
    for l in c.loops() {
        match l.chars().map(|ch| ch as u32 - 0x100).min() {
            None => off_axis += 1,
            Some(p) if p % 2 == 0 => k = &k * &params.delta_e,
            Some(_) => k = &k * &params.gamma,
        }
    }
    if off_axis % 2 == 1 {
        return Err(Error::InvalidDiagram("unpaired off-axis loop".into()));
    }
    k = &k * &params.delta.pow(off_axis / 2);
    Ok((k, c.shape().underlying()))
}

pub fn bprime_mul(a: &BPrimeElement, b: &BPrimeElement, params: &BlobParams) -> Result<BPrimeElement> {
    let mut out = BPrimeElement::zero();
    for (da, ca) in a.terms() {
        for (db, cb) in b.terms() {
            let (k, d) = compose_bprime(da, db, params)?;
            out.add_term(&(ca * cb) * &k, d);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{blob_e, blob_product, enumerate_basis, Family};
    use crate::params::ParamName;

    #[test]
    fn e_maps_to_central_cup_cap() {
        let e = fold_blob_mu(&blob_e(2).unwrap()).unwrap();
        let expect = Diagram::plain(
            4,
            4,
            [
                (VertexId::north(2), VertexId::north(3)),
                (VertexId::south(2), VertexId::south(3)),
                (VertexId::north(1), VertexId::south(1)),
                (VertexId::north(4), VertexId::south(4)),
            ],
        )
        .unwrap();
        assert_eq!(e, expect);
        let (k, c) = compose_bprime(&e, &e, &BlobParams::default()).unwrap();
        assert_eq!(k, ParamName::DeltaL.into());
        assert_eq!(c, e);
    }

    #[test]
    fn mu_is_bijective_onto_symmetric_diagrams() {
        for n in 1..=4 {
            let mut images: Vec<Diagram> = enumerate_basis(Family::Blob, n)
                .unwrap()
                .iter()
                .map(|d| fold_blob_mu(d).unwrap())
                .collect();
            images.sort();
            let mut sym = symmetric_tl_diagrams(n);
            sym.sort();
            assert_eq!(images, sym);
        }
    }

    #[test]
    fn mu_is_multiplicative() {
        let params = BlobParams::default();
        for n in 1..=3 {
            let basis = enumerate_basis(Family::Blob, n).unwrap();
            for a in &basis {
                for b in &basis {
                    let (k, c) = blob_product(a, b, &params).unwrap();
                    let (k2, c2) =
                        compose_bprime(&fold_blob_mu(a).unwrap(), &fold_blob_mu(b).unwrap(), &params).unwrap();
                    assert_eq!((k, fold_blob_mu(&c).unwrap()), (k2, c2), "{a} * {b}");
                }
            }
        }
    }
}
