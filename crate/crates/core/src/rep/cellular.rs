use std::collections::BTreeMap;

use serde::Serialize;

use super::{colour_basis, weight_of, Weight};
use crate::error::Result;
use crate::params::{LaurentPoly, ParamName};
use crate::symplectic::{compose_phi, enumerate_bphi, strip_e, strip_f, Strip, TurnString};

/// Outcome of the cell-datum checks on `b^φ_{2m}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CellularityReport {
    pub m: u32,
    pub products_checked: usize,
    /// `(ab)* = b* a*` with equal scalars.
    pub antiautomorphism: bool,
    /// `a** = a`.
    pub involution: bool,
    /// `e* = e` and `f* = f`.
    pub generators_fixed: bool,
    /// `|u⟩⟨v| ↦ C(u, v)` is a bijection from `⊔_l M(l) × M(l)` onto the basis.
    pub sections_spanned: bool,
    /// Whether cell elements at weight 0 carry their unreduced belt pairs.
    pub normalised: bool,
    /// In `a C(u, v)`, modulo lower weights, the new ket and its coefficient do
    /// not depend on `v`.
    pub lower_terms: bool,
    /// As `lower_terms`, but comparing coefficients only up to powers of
    /// `κ_LR`.
    pub lower_terms_up_to_belts: bool,
    pub failures: Vec<String>,
}

impl CellularityReport {
    pub fn passed(&self) -> bool {
        self.antiautomorphism && self.involution && self.generators_fixed && self.sections_spanned && self.lower_terms
    }
}

fn strip_kappa_lr(k: &LaurentPoly) -> LaurentPoly {
    let lo = k.min_exponents()[ParamName::KappaLR.index()];
    let mut s = [0; 6];
    s[ParamName::KappaLR.index()] = -lo;
    k.shift(s)
}

/// Rescaling between the reduced `|u⟩⟨v|` and the unreduced product of the
/// two halves, which carries `⌊(ur0(u) + ur0(v))/2⌋` extra belt pairs.
fn belt_pairs(u: &TurnString, v: &TurnString) -> i32 {
    if u.x() > 0 {
        0
    } else {
        ((u.ur0() + v.ur0()) / 2) as i32
    }
}

fn belt_shift(u: &TurnString, v: &TurnString, u2: &TurnString) -> LaurentPoly {
    LaurentPoly::param_pow(ParamName::KappaLR, belt_pairs(u, v) - belt_pairs(u2, v))
}

/// Exhaustive checks of the cell datum with involution the upside-down flip.
/// At weight 0 the cell element is `κ_LR^{⌊(ur0(u)+ur0(v))/2⌋} |u⟩⟨v|`; the
/// reduced diagram alone only satisfies the lower-terms axiom up to `κ_LR`.
pub fn check_cellularity(m: u32) -> Result<CellularityReport> {
    check_cellularity_with(m, true)
}

pub fn check_cellularity_with(m: u32, normalise: bool) -> Result<CellularityReport> {
    let basis = enumerate_bphi(m);
    let mut r = CellularityReport {
        m,
        normalised: normalise,
        antiautomorphism: true,
        involution: true,
        lower_terms: true,
        lower_terms_up_to_belts: true,
        ..Default::default()
    };
    for a in &basis {
        if a.flip().flip() != *a {
            r.involution = false;
            r.failures.push(format!("{a}** != {a}"));
        }
        for b in &basis {
            let (k, c) = compose_phi(a, b)?;
            let (k2, c2) = compose_phi(&b.flip(), &a.flip())?;
            r.products_checked += 1;
            if k != k2 || c.flip() != c2 {
                r.antiautomorphism = false;
                r.failures.push(format!("({a})({b}) against its flip"));
            }
        }
    }
    r.generators_fixed = m == 0 || {
        let (e, f) = (strip_e(m)?, strip_f(m)?);
        e.flip() == e && f.flip() == f
    };

    // Every basis diagram is C(u, v) for a unique pair in one weight class.
    let mut cells: BTreeMap<(TurnString, TurnString), i64> = BTreeMap::new();
    for w in Weight::all(m) {
        let half = colour_basis(m, w.value())?;
        for u in &half {
            for v in &half {
                cells.insert((u.clone(), v.clone()), w.value());
            }
        }
    }
    let mut hit = 0usize;
    r.sections_spanned = true;
    for d in &basis {
        let (u, v, _) = d.halves()?;
        let l = weight_of(d)?.value();
        if cells.get(&(u.clone(), v.clone())) == Some(&l) {
            hit += 1;
        } else {
            r.sections_spanned = false;
            r.failures.push(format!("{d} is not a cell element of weight {l}"));
        }
    }
    r.sections_spanned &= hit == cells.len() && hit == basis.len();

    // a C(u, v) ≡ Σ r_a(u', u) C(u', v) modulo lower weights.
    for w in Weight::all(m) {
        let half = colour_basis(m, w.value())?;
        for a in &basis {
            for u in &half {
                let mut seen: Option<(LaurentPoly, TurnString)> = None;
                for v in &half {
                    let (k, c) = compose_phi(a, &Strip::glue(u, v)?)?;
                    if c.propagating_count() < Strip::glue(u, v)?.propagating_count() {
                        continue;
                    }
                    let (u2, v2, _) = c.halves()?;
                    let k = if normalise { &k * &belt_shift(u, v, &u2) } else { k };
                    if v2 != *v {
                        r.lower_terms = false;
                        r.lower_terms_up_to_belts = false;
                        r.failures.push(format!("{a} changes the bra of |{u}><{v}|"));
                        continue;
                    }
                    match &seen {
                        None => seen = Some((k, u2)),
                        Some((k0, u0)) => {
                            if *u0 != u2 {
                                r.lower_terms = false;
                                r.lower_terms_up_to_belts = false;
                                r.failures.push(format!("{a}|{u}>: ket depends on the bra"));
                            } else if *k0 != k {
                                r.lower_terms = false;
                                if strip_kappa_lr(k0) != strip_kappa_lr(&k) {
                                    r.lower_terms_up_to_belts = false;
                                }
                                r.failures.push(format!("{a}|{u}>: coefficient {k0} vs {k} at <{v}|"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(r)
}
