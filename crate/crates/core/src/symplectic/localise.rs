//! Localisation to the idempotent subalgebra cut out by a cup-cap pair astride
//! a wall, and its inverse on bases.

use super::strip::{compose_phi, Strip};
use crate::algebra::AlgebraElement;
use crate::diagram::{blob_e, blob_mul, BlobElement, BlobParams, Diagram, VertexId};
use crate::error::{Error, Result};
use crate::params::{LaurentPoly, ParamName};

pub type PhiElement = AlgebraElement<Strip>;

/// Which wall the cup-cap pair sits astride.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// 0-wall; swaps `δ_L ↔ κ_L`.
    Left,
    /// 1-wall; swaps `δ_R ↔ κ_R`.
    Right,
}

impl Side {
    fn params(self) -> (ParamName, ParamName) {
        match self {
            Side::Left => (ParamName::DeltaL, ParamName::KappaL),
            Side::Right => (ParamName::DeltaR, ParamName::KappaR),
        }
    }

    /// The parameter interchange carried by the localisation.
    pub fn swap(self, p: &LaurentPoly) -> LaurentPoly {
        let (a, b) = self.params();
        p.swap(a, b)
    }
}

/// `ρ⁻`: remove the cup and cap astride the chosen wall.
pub fn localise_strip(s: &Strip, side: Side) -> Result<Strip> {
    let (u, v, belt) = s.halves()?;
    let cut = |t: &super::turn::TurnString| match side {
        Side::Left => t.strip_leading_l(),
        Side::Right => t.strip_trailing_r(),
    };
    match (cut(&u), cut(&v)) {
        (Some(u2), Some(v2)) => Strip::from_halves(&u2, &v2, belt),
        _ => Err(Error::NotInIdempotentSubalgebra(format!("{s} lacks the cup-cap pair"))),
    }
}

/// Insert a cup and cap astride the chosen wall.
pub fn globalise_insert(s: &Strip, side: Side) -> Result<Strip> {
    let (u, v, belt) = s.halves()?;
    let (u2, v2) = match side {
        Side::Left => (u.with_leading_l(), v.with_leading_l()),
        Side::Right => (u.with_trailing_r(), v.with_trailing_r()),
    };
    Strip::from_halves(&u2, &v2, belt)
}

pub fn in_idempotent_subalgebra(s: &Strip, side: Side) -> bool {
    localise_strip(s, side).is_ok()
}

/// `ρ` on an element written over raw diagrams of the subalgebra. A raw
/// diagram `d` is `δ · (d/δ)` with `d/δ` a normalised basis element, so it maps
/// to `swap(δ) ρ⁻(d)`; coefficients are carried across the swap.
pub fn localise(x: &PhiElement, side: Side) -> Result<PhiElement> {
    let (white, _) = side.params();
    let norm = side.swap(&LaurentPoly::param(white));
    let mut out = PhiElement::zero();
    for (s, c) in x.terms() {
        out.add_term(&side.swap(c) * &norm, localise_strip(s, side)?);
    }
    Ok(out)
}

pub fn phi_mul(a: &PhiElement, b: &PhiElement) -> Result<PhiElement> {
    let mut out = PhiElement::zero();
    for (sa, ca) in a.terms() {
        for (sb, cb) in b.terms() {
            let (k, s) = compose_phi(sa, sb)?;
            out.add_term(&(ca * cb) * &k, s);
        }
    }
    Ok(out)
}

/// The identity `ρ(ab) = ρ(a)ρ(b)` for two basis diagrams of the subalgebra.
pub fn localisation_commutes(a: &Strip, b: &Strip, side: Side) -> Result<bool> {
    let (x, y) = (PhiElement::basis(a.clone()), PhiElement::basis(b.clone()));
    let lhs = localise(&phi_mul(&x, &y)?, side)?;
    let rhs = phi_mul(&localise(&x, side)?, &localise(&y, side)?)?;
    Ok(lhs == rhs)
}

/// `B'_n`: blob diagrams whose lines at `1` and `1'` are both decorated.
pub fn is_in_bprime_n(d: &Diagram) -> bool {
    let dec = |v: VertexId| d.pair_at(v).map(|p| !p.word.is_empty()).unwrap_or(false);
    d.n() > 0 && dec(VertexId::north(1)) && dec(VertexId::south(1))
}

/// `ρ_1` on `B'_n`. Walk the western face clockwise from `1`; the decorated
/// lines met form `{1,i_1}, {i_2,i_3}, …, {i_l,1'}`. Replace them by decorated
/// `{i_1,i_2}, …, {i_{l-1},i_l}`, drop `1` and `1'`, and renumber.
pub fn rho1(d: &Diagram) -> Result<Diagram> {
    if !is_in_bprime_n(d) {
        return Err(Error::NotInIdempotentSubalgebra(format!("{d} is not blobbed at 1 and 1'")));
    }
    let n = d.n();
    let total = 2 * n as usize;
    let pos_of = |v: VertexId| if v.primed { total - v.index as usize } else { v.index as usize - 1 };
    let vert_of = |p: usize| {
        if p < n as usize {
            VertexId::north(p as u32 + 1)
        } else {
            VertexId::south((total - p) as u32)
        }
    };
    let mut partner = vec![(0usize, false); total];
    for p in d.pairs() {
        let (x, y) = (pos_of(p.a), pos_of(p.b));
        partner[x] = (y, !p.word.is_empty());
        partner[y] = (x, !p.word.is_empty());
    }
    // Ends of the decorated lines on the western face, in walking order.
    let mut ends = Vec::new();
    let mut i = 0;
    while i < total {
        let (j, dec) = partner[i];
        if dec {
            ends.push(i);
            ends.push(j);
        }
        i = j + 1;
    }
    
    let inner = &ends[1..ends.len() - 1];
    let is_seq = |p: usize| ends.contains(&p);
    let renumber = |v: VertexId| VertexId { primed: v.primed, index: v.index - 1 };
    let mut lines = Vec::new();
    for p in d.pairs() {
        if !is_seq(pos_of(p.a)) {
            lines.push((renumber(p.a), renumber(p.b), p.word.clone()));
        }
    }
    for pair in inner.chunks(2) {
        lines.push((renumber(vert_of(pair[0])), renumber(vert_of(pair[1])), "L".to_string()));
    }
    Diagram::new(n - 1, n - 1, lines, [])
}

/// Check `ρ_1(ab) = ρ_1(a)ρ_1(b)` with `δ_e ↔ γ` interchanged, in the form
/// `k_ab = δ_e · swap(k_{ρa,ρb})` together with equality of diagrams.
pub fn rho1_commutes(a: &Diagram, b: &Diagram, params: &BlobParams) -> Result<bool> {
    let (k, c) = crate::diagram::blob_product(a, b, params)?;
    let (k2, c2) = crate::diagram::blob_product(&rho1(a)?, &rho1(b)?, params)?;
    let swapped = k2.swap(ParamName::DeltaL, ParamName::KappaL);
    Ok(rho1(&c)? == c2 && k == &params.delta_e * &swapped)
}

/// A pair `d_1, d_2 ∈ B'_n` with `d_1 d_2 = k · c`, and the raw product of
/// their images `ρ(d_1) ρ(d_2) = k' · c'` in the unswapped algebra.
#[derive(Clone, Debug)]
pub struct LocalisationExample {
    pub d1: Diagram,
    pub d2: Diagram,
    pub k: LaurentPoly,
    pub product: Diagram,
    pub image_k: LaurentPoly,
    pub image_product: Diagram,
}

/// The diagram `eU_2U_4 ∈ B'_5`.
pub fn e_u2_u4() -> Result<Diagram> {
    let params = BlobParams::default();
    let e = BlobElement::basis(blob_e(5)?);
    let u2 = BlobElement::basis(Diagram::tl_generator(5, 2)?);
    let u4 = BlobElement::basis(Diagram::tl_generator(5, 4)?);
    let x = blob_mul(&blob_mul(&e, &u2, &params)?, &u4, &params)?;
    Ok(x.as_single().map(|(_, d)| d.clone()).expect("monomial"))
}

/// Search `B'_n` for a pair with product factor `k`, optionally with a fixed
/// product diagram.
pub fn find_localisation_example(
    k: &LaurentPoly,
    target: Option<&Diagram>,
    basis: &[Diagram],
) -> Result<Option<LocalisationExample>> {
    let params = BlobParams::default();
    let bp: Vec<&Diagram> = basis.iter().filter(|d| is_in_bprime_n(d)).collect();
    for d1 in &bp {
        for d2 in &bp {
            let (kk, c) = crate::diagram::blob_product(d1, d2, &params)?;
            if &kk == k && target.is_none_or(|t| *t == c) {
                let (ik, ic) = crate::diagram::blob_product(&rho1(d1)?, &rho1(d2)?, &params)?;
                return Ok(Some(LocalisationExample {
                    d1: (*d1).clone(),
                    d2: (*d2).clone(),
                    k: kk,
                    product: c,
                    image_k: ik,
                    image_product: ic,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{enumerate_basis, Family};
    use crate::symplectic::{enumerate_bphi, strip_e};
    use crate::symplectic::turn::TurnString;

    fn ts(s: &str) -> TurnString {
        s.parse().unwrap()
    }

    #[test]
    fn worked_pair() {
        let a = Strip::glue(&ts("LL"), &ts("LL")).unwrap();
        let la = localise_strip(&a, Side::Left).unwrap();
        assert_eq!(la, strip_e(1).unwrap());
        assert!(localisation_commutes(&a, &a, Side::Left).unwrap());
    }

    #[test]
    fn localisation_is_multiplicative() {
        for side in [Side::Left, Side::Right] {
            for m in 1..=3 {
                let sub: Vec<Strip> =
                    enumerate_bphi(m).into_iter().filter(|s| in_idempotent_subalgebra(s, side)).collect();
                for a in &sub {
                    for b in &sub {
                        assert!(localisation_commutes(a, b, side).unwrap(), "{a} * {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn insert_round_trip() {
        for s in enumerate_bphi(2) {
            for side in [Side::Left, Side::Right] {
                assert_eq!(localise_strip(&globalise_insert(&s, side).unwrap(), side).unwrap(), s);
            }
        }
    }

    #[test]
    fn rho1_bijective_and_multiplicative() {
        let params = BlobParams::default();
        for n in 1..=4 {
            let bp: Vec<Diagram> =
                enumerate_basis(Family::Blob, n).unwrap().into_iter().filter(is_in_bprime_n).collect();
            let mut images: Vec<Diagram> = bp.iter().map(|d| rho1(d).unwrap()).collect();
            images.sort();
            let mut target = enumerate_basis(Family::Blob, n - 1).unwrap();
            target.sort();
            assert_eq!(images, target);
            for a in &bp {
                for b in &bp {
                    assert!(rho1_commutes(a, b, &params).unwrap(), "{a} * {b}");
                }
            }
        }
    }

    #[test]
    fn factor_swap_examples() {
        use crate::params::ParamName::{DeltaL, KappaL};
        let basis = enumerate_basis(Family::Blob, 5).unwrap();
        let de = LaurentPoly::param(DeltaL);
        let ka = LaurentPoly::param(KappaL);
        let ex = find_localisation_example(&de.pow(3), Some(&e_u2_u4().unwrap()), &basis).unwrap().expect("first example");
        assert_eq!(ex.image_k, ka.pow(2));
        let ex = find_localisation_example(&(&de * &ka.pow(2)), None, &basis).unwrap().expect("second example");
        assert_eq!(ex.image_k, de.pow(2));
        assert_eq!(ex.image_product, rho1(&ex.product).unwrap());
    }
}
