use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{standard_basis, Weight};
use crate::error::{Error, Result};
use crate::params::{factor_against_klist, FactorList, LaurentPoly, ParamName, Point};
use crate::symplectic::{compose_phi, Strip, TurnString};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramReport {
    pub weight: Weight,
    pub dimension: usize,
    pub basis: Vec<TurnString>,
    /// The half diagram `t` fixing the base diagram `|t⟩⟨t|`.
    pub base: TurnString,
    pub matrix: Vec<Vec<LaurentPoly>>,
    pub determinant: LaurentPoly,
    pub factors: FactorList,
}

#[derive(Serialize)]
struct GramJson {
    m: u32,
    l: i64,
    dimension: usize,
    basis: Vec<String>,
    base: String,
    matrix: Vec<Vec<String>>,
    determinant: String,
    factors: Vec<(String, u32)>,
    remainder: String,
}

impl GramReport {
    pub fn to_json(&self) -> serde_json::Value {
        let j = GramJson {
            m: self.weight.m(),
            l: self.weight.value(),
            dimension: self.dimension,
            basis: self.basis.iter().map(|t| t.to_string()).collect(),
            base: self.base.to_string(),
            matrix: self.matrix.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect(),
            determinant: self.determinant.to_string(),
            factors: self.factors.factors.iter().map(|(f, k)| (f.to_string(), *k)).collect(),
            remainder: self.factors.remainder.to_string(),
        };
        serde_json::to_value(j).expect("plain data")
    }

    /// Matrix evaluated at a point.
    pub fn evaluate(&self, point: &Point) -> Result<Vec<Vec<BigRational>>> {
        self.matrix.iter().map(|r| r.iter().map(|p| p.evaluate(point)).collect()).collect()
    }
}

/// `⟨a|b⟩` against the base half diagram `t`: the scalar of
/// `(|t⟩⟨a|)(|b⟩⟨t|) = ⟨a|b⟩ |t⟩⟨t|`, zero if propagating lines are lost.
pub fn inner_product(a: &TurnString, b: &TurnString, t: &TurnString) -> Result<LaurentPoly> {
    let base = Strip::glue(t, t)?;
    let (k, s) = compose_phi(&Strip::glue(t, a)?, &Strip::glue(b, t)?)?;
    if s.propagating_count() < base.propagating_count() {
        return Ok(LaurentPoly::zero());
    }
    if s != base {
        return Err(Error::InvalidDiagram(format!("product {s} is not the base diagram {base}")));
    }
    Ok(k)
}

fn matrix_for(basis: &[TurnString], t: &TurnString) -> Result<Vec<Vec<LaurentPoly>>> {
    basis.iter().map(|a| basis.iter().map(|b| inner_product(a, b, t)).collect()).collect()
}

/// Gram matrix against the first basis element, skipping the determinant.
pub fn gram_entries(m: u32, l: i64) -> Result<Vec<Vec<LaurentPoly>>> {
    let basis = standard_basis(m, l)?;
    matrix_for(&basis, &basis[0])
}

fn kappa_lr_power(p: &LaurentPoly) -> i32 {
    p.min_exponents()[ParamName::KappaLR.index()]
}

/// Gram matrix of `S_l(2m)` and its determinant. For `l ≠ 0` the base
/// diagram is irrelevant and the first basis element is used; for `l = 0` the
/// base giving the lowest overall power of `κ_LR` is chosen.
pub fn gram_matrix(m: u32, l: i64) -> Result<GramReport> {
    let weight = Weight::new(m, l)?;
    let basis = standard_basis(m, l)?;
    let bases: Vec<&TurnString> = if l == 0 { basis.iter().collect() } else { basis.iter().take(1).collect() };
    let mut best: Option<(TurnString, Vec<Vec<LaurentPoly>>, LaurentPoly)> = None;
    for t in bases {
        let mat = matrix_for(&basis, t)?;
        let det = determinant(&mat);
        let better = match &best {
            None => true,
            Some((_, _, d)) => !det.is_zero() && (d.is_zero() || kappa_lr_power(&det) < kappa_lr_power(d)),
        };
        if better {
            best = Some((t.clone(), mat, det));
        }
    }
    let (base, matrix, det) = best.expect("standard modules are nonzero");
    Ok(GramReport {
        weight,
        dimension: basis.len(),
        basis,
        base,
        matrix,
        factors: factor_against_klist(&det),
        determinant: det,
    })
}

/// Fraction-free elimination. Every division is exact in the Laurent ring.
pub fn determinant(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut sign = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Sum over permutations; an independent check for small matrices.
pub fn leibniz_determinant(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    fn go(m: &[Vec<LaurentPoly>], row: usize, used: &mut Vec<bool>, acc: &LaurentPoly, odd: bool, out: &mut LaurentPoly) {
        if row == m.len() {
            if odd {
                *out -= acc;
            } else {
                *out += acc;
            }
            return;
        }
        for j in 0..m.len() {
            if used[j] || m[row][j].is_zero() {
                continue;
            }
            // Sign flips by the number of used columns to the right of j.
            let flips = used[j + 1..].iter().filter(|&&u| u).count() % 2 == 1;
            used[j] = true;
            go(m, row + 1, used, &(acc * &m[row][j]), odd ^ flips, out);
            used[j] = false;
        }
    }
    let mut out = LaurentPoly::zero();
    go(m, 0, &mut vec![false; m.len()], &LaurentPoly::one(), false, &mut out);
    out
}

/// Rank over the rationals.
pub fn rank_at(m: &[Vec<BigRational>]) -> usize {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        let piv = a[rank][c].clone();
        for i in 0..rows {
            if i != rank && !a[i][c].is_zero() {
                let f = &a[i][c] / &piv;
                for j in c..cols {
                    let t = &f * &a[rank][j];
                    a[i][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of a rational matrix.
pub fn rational_determinant(m: &[Vec<BigRational>]) -> BigRational {
    let mut a = m.to_vec();
    let n = a.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return BigRational::zero() };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for i in c + 1..n {
            let f = &a[i][c] / &piv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{KName, KOp, KPolynomial};

    fn k(name: KName, op: KOp) -> LaurentPoly {
        KPolynomial::new(name, op).expansion()
    }

    fn p(n: ParamName) -> LaurentPoly {
        LaurentPoly::param(n)
    }

    #[test]
    fn rank_one_is_the_unit() {
        let r = gram_matrix(1, -1).unwrap();
        assert_eq!(r.dimension, 1);
        assert_eq!(r.determinant, LaurentPoly::one());
    }

    #[test]
    fn gamma6_minus_one() {
        let r = gram_matrix(3, -1).unwrap();
        let expect = &(&p(ParamName::KappaL) * &p(ParamName::KappaR)) * &k(KName::K3, KOp::Id);
        assert_eq!(r.determinant, expect, "{}", r.factors);
    }

    #[test]
    fn gamma6_zero() {
        let r = gram_matrix(3, 0).unwrap();
        let expect = [
            p(ParamName::KappaLR).pow(4),
            k(KName::K1, KOp::Id).pow(4),
            k(KName::K1, KOp::PhiPsi),
            k(KName::K2, KOp::Psi),
            k(KName::K2, KOp::Phi),
            k(KName::K13, KOp::Id),
        ]
        .iter()
        .fold(LaurentPoly::one(), |acc, f| &acc * f);
        assert_eq!(r.determinant, expect, "{}", r.factors);
    }

    #[test]
    fn bareiss_matches_leibniz() {
        for m in 0..=3 {
            for w in Weight::all(m) {
                let r = gram_matrix(m, w.value()).unwrap();
                assert_eq!(r.determinant, leibniz_determinant(&r.matrix), "m={m} l={w}");
                assert!(!r.determinant.is_zero(), "m={m} l={w}");
                assert_eq!(r.factors.reconstruct(), r.determinant);
            }
        }
    }

    #[test]
    fn symmetric_matrices() {
        for m in 0..=3 {
            for w in Weight::all(m) {
                let r = gram_matrix(m, w.value()).unwrap();
                for i in 0..r.dimension {
                    for j in 0..r.dimension {
                        assert_eq!(r.matrix[i][j], r.matrix[j][i]);
                    }
                }
            }
        }
    }

    #[test]
    fn nonzero_weights_ignore_the_base() {
        for m in 1..=3 {
            for w in Weight::all(m).into_iter().filter(|w| w.value() != 0) {
                let basis = standard_basis(m, w.value()).unwrap();
                let first = matrix_for(&basis, &basis[0]).unwrap();
                for t in &basis[1..] {
                    assert_eq!(matrix_for(&basis, t).unwrap(), first, "m={m} l={w} base {t}");
                }
            }
        }
    }

    #[test]
    fn zero_weight_bases_differ_by_kappa_lr() {
        let basis = standard_basis(3, 0).unwrap();
        let dets: Vec<LaurentPoly> = basis.iter().map(|t| determinant(&matrix_for(&basis, t).unwrap())).collect();
        let lo = gram_matrix(3, 0).unwrap().determinant;
        for d in dets {
            let q = d.div_exact(&lo).expect("divides");
            let e = q.exponent_of_monomial().expect("monomial");
            assert!(q.is_unit_monomial());
            assert!(e.iter().enumerate().all(|(i, &x)| x == 0 || i == ParamName::KappaLR.index()));
        }
    }
}
