use std::collections::BTreeSet;

use super::core::{abacus_concat, Diagram};
use super::enumerate::{enumerate_basis, Family};
use crate::error::{Error, Result};
use crate::params::{LaurentPoly, ParamName};

/// Loop rule table for a contour algebra: a loop carrying `i` beads (mod the
/// period) is replaced by `loop_params[i]`.
#[derive(Clone, Debug)]
pub struct ContourParams {
    pub period: u32,
    pub loop_params: Vec<LaurentPoly>,
}

impl ContourParams {
    /// `δ` for undecorated loops and `kL` for every decorated class.
    pub fn generic(period: u32) -> Self {
        let mut loop_params = vec![LaurentPoly::param(ParamName::Delta)];
        loop_params.extend((1..period).map(|_| LaurentPoly::param(ParamName::KappaL)));
        Self { period, loop_params }
    }
}

/// Product in `C_{n,m}(l)`: beads on a line reduce modulo the period.
pub fn contour_product(a: &Diagram, b: &Diagram, params: &ContourParams) -> Result<(LaurentPoly, Diagram)> {
    if a.m() != b.n() {
        return Err(Error::RankMismatch(format!("contour ranks {} and {}", a.m(), b.n())));
    }
    let c = abacus_concat(a, b)?;
    let period = params.period as usize;
    let mut k = LaurentPoly::one();
    for l in c.loops() {
        k = &k * &params.loop_params[l.len() % period];
    }
    Ok((k, c.underlying().map_words(|p| "L".repeat(p.word.len() % period))))
}

/// `Id`, `L_1..L_{l+1}` and `U_1..U_{n-1}`.
pub fn contour_generators(n: u32, exposure: u32) -> Result<Vec<Diagram>> {
    let mut gens = vec![Diagram::identity(n)];
    for i in 1..=(exposure + 1).min(n) {
        gens.push(Diagram::decorated_identity(n, i, "L")?);
    }
    for i in 1..n {
        gens.push(Diagram::tl_generator(n, i)?);
    }
    Ok(gens)
}

/// Diagrams reachable as products of generators. All loop parameters are
/// nonzero monomials, so the span is that of the reachable diagram set.
pub fn generated_diagrams(n: u32, period: u32, exposure: u32) -> Result<BTreeSet<Diagram>> {
    let params = ContourParams::generic(period);
    let gens = contour_generators(n, exposure)?;
    let mut seen: BTreeSet<Diagram> = gens.iter().cloned().collect();
    let mut frontier: Vec<Diagram> = gens.clone();
    while let Some(d) = frontier.pop() {
        for g in &gens {
            let (_, x) = contour_product(&d, g, &params)?;
            if seen.insert(x.clone()) {
                frontier.push(x);
            }
        }
    }
    Ok(seen)
}

pub fn check_generation(n: u32, period: u32, exposure: u32) -> Result<bool> {
    let basis: BTreeSet<Diagram> = enumerate_basis(Family::Contour { period, exposure }, n)?
        .into_iter()
        .collect();
    Ok(generated_diagrams(n, period, exposure)? == basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_generation() {
        assert!(check_generation(1, 2, 0).unwrap());
        assert!(check_generation(2, 2, 0).unwrap());
        assert!(check_generation(3, 2, 0).unwrap());
    }

    #[test]
    fn bead_count_reduces_mod_period() {
        let l1 = Diagram::decorated_identity(2, 1, "L").unwrap();
        let params = ContourParams::generic(2);
        let (_, x) = contour_product(&l1, &l1, &params).unwrap();
        assert_eq!(x, Diagram::identity(2));
    }
}
