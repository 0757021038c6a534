use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ParamName;
use crate::error::{Error, Result};

/// Exponent vector indexed by [`ParamName::index`].
pub type Monomial = [i32; 6];

/// A rational evaluation point. Missing parameters are treated as errors by
/// [`LaurentPoly::evaluate`] only if they occur in the polynomial.
pub type Point = BTreeMap<ParamName, BigRational>;

/// Integer Laurent polynomial in the six parameters, kept in normal form
/// (no zero coefficients).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, [0; 6])
    }

    pub fn term(c: impl Into<BigInt>, exps: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    pub fn monomial(exps: Monomial) -> Self {
        Self::term(1, exps)
    }

    pub fn param(p: ParamName) -> Self {
        Self::param_pow(p, 1)
    }

    pub fn param_pow(p: ParamName, e: i32) -> Self {
        let mut exps = [0; 6];
        exps[p.index()] = e;
        Self::monomial(exps)
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0; 6]).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// `Some((c, exps))` when the polynomial is a single term.
    pub fn as_term(&self) -> Option<(&BigInt, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// True for a single term with coefficient ±1.
    pub fn is_unit_monomial(&self) -> bool {
        self.as_term().is_some_and(|(c, _)| c.abs().is_one())
    }

    pub fn exponent_of_monomial(&self) -> Option<Monomial> {
        self.as_term().map(|(_, m)| *m)
    }

    /// Leading term in lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Monomial {
        let mut out = [i32::MAX; 6];
        for m in self.terms.keys() {
            for i in 0..6 {
                out[i] = out[i].min(m[i]);
            }
        }
        if self.is_zero() {
            [0; 6]
        } else {
            out
        }
    }

    /// Componentwise maximum exponent over all terms.
    pub fn max_exponents(&self) -> Monomial {
        let mut out = [i32::MIN; 6];
        for m in self.terms.keys() {
            for i in 0..6 {
                out[i] = out[i].max(m[i]);
            }
        }
        if self.is_zero() {
            [0; 6]
        } else {
            out
        }
    }

    pub fn shift(&self, by: Monomial) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = *m;
                    for i in 0..6 {
                        e[i] += by[i];
                    }
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Apply a permutation of parameters: parameter `i` is replaced by `perm[i]`.
    pub fn permute(&self, perm: [ParamName; 6]) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = [0; 6];
            for i in 0..6 {
                e[perm[i].index()] += m[i];
            }
            (e, c.clone())
        }))
    }

    /// Exchange two parameters.
    pub fn swap(&self, a: ParamName, b: ParamName) -> Self {
        let mut perm = ParamName::ALL;
        perm.swap(a.index(), b.index());
        self.permute(perm)
    }

    /// The operator exchanging `dL` and `kL`.
    pub fn phi(&self) -> Self {
        self.swap(ParamName::DeltaL, ParamName::KappaL)
    }

    /// The operator exchanging `dR` and `kR`.
    pub fn psi(&self) -> Self {
        self.swap(ParamName::DeltaR, ParamName::KappaR)
    }

    pub fn degree_in(&self, p: ParamName) -> Option<i32> {
        self.terms.keys().map(|m| m[p.index()]).max()
    }

    pub fn evaluate(&self, point: &Point) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for p in ParamName::ALL {
                let e = m[p.index()];
                if e == 0 {
                    continue;
                }
                let x = point
                    .get(&p)
                    .ok_or_else(|| Error::Parse(format!("no value for parameter {p}")))?;
                if x.is_zero() {
                    if e < 0 {
                        return Err(Error::ZeroDenominator(p.to_string()));
                    }
                    v = BigRational::zero();
                    continue;
                }
                let base = if e < 0 { x.recip() } else { x.clone() };
                v *= num_traits::pow(base, e.unsigned_abs() as usize);
            }
            total += v;
        }
        Ok(total)
    }

    /// Partial substitution: parameters present in `point` become rational values,
    /// the rest stay symbolic. Returns the denominator-cleared polynomial and the
    /// rational scale, so that `self = scale * result`.
    pub fn specialise(&self, point: &Point) -> Result<(BigRational, LaurentPoly)> {
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            let mut e = *m;
            for p in ParamName::ALL {
                let k = m[p.index()];
                if k == 0 {
                    continue;
                }
                if let Some(x) = point.get(&p) {
                    if x.is_zero() {
                        if k < 0 {
                            return Err(Error::ZeroDenominator(p.to_string()));
                        }
                        v = BigRational::zero();
                    } else {
                        let base = if k < 0 { x.recip() } else { x.clone() };
                        v *= num_traits::pow(base, k.unsigned_abs() as usize);
                    }
                    e[p.index()] = 0;
                }
            }
            *acc.entry(e).or_insert_with(BigRational::zero) += v;
        }
        acc.retain(|_, v| !v.is_zero());
        let mut den = BigInt::one();
        for v in acc.values() {
            den = den.lcm(v.denom());
        }
        let poly = LaurentPoly::from_terms(
            acc.iter().map(|(m, v)| (*m, (v * BigRational::from_integer(den.clone())).to_integer())),
        );
        Ok((BigRational::new(BigInt::one(), den), poly))
    }

    /// Exact quotient `self / divisor` in the Laurent ring, or `None` if the
    /// divisor does not divide.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, m)) = divisor.as_term() {
            let mut out = BTreeMap::new();
            for (e, a) in &self.terms {
                let (q, r) = a.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                let mut k = *e;
                for i in 0..6 {
                    k[i] -= m[i];
                }
                out.insert(k, q);
            }
            return Some(Self { terms: out });
        }
        let lo_a = self.min_exponents();
        let lo_b = divisor.min_exponents();
        let neg = |m: Monomial| m.map(|x| -x);
        let mut rem = self.shift(neg(lo_a));
        let b = divisor.shift(neg(lo_b));
        let (lead_m, lead_c) = {
            let (m, c) = b.leading().expect("nonzero");
            (*m, c.clone())
        };
        let mut quot = LaurentPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let mut e = [0; 6];
            for i in 0..6 {
                e[i] = rm[i] - lead_m[i];
                if e[i] < 0 {
                    return None;
                }
            }
            let (q, r) = rc.div_rem(&lead_c);
            if !r.is_zero() {
                return None;
            }
            let t = LaurentPoly::term(q, e);
            rem -= &(&t * &b);
            quot += &t;
        }
        let mut back = [0; 6];
        for i in 0..6 {
            back[i] = lo_a[i] - lo_b[i];
        }
        Some(quot.shift(back))
    }
}

impl From<ParamName> for LaurentPoly {
    fn from(p: ParamName) -> Self {
        LaurentPoly::param(p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<'a> MulAssign<&'a LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &'a LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl<'b> Add<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'b> Sub<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'b> Mul<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut e = *ma;
                for i in 0..6 {
                    e[i] += mb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| a * b)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ParamName::*;

    fn p(name: ParamName) -> LaurentPoly {
        LaurentPoly::param(name)
    }

    #[test]
    fn monomial_product() {
        let prod = &p(DeltaL) * &p(DeltaR);
        assert_eq!(prod, LaurentPoly::monomial([0, 1, 1, 0, 0, 0]));
    }

    #[test]
    fn k1_times_k0() {
        let k1 = &(&p(DeltaL) * &p(DeltaR)) - &p(KappaLR);
        let expected = &(&(&p(DeltaL) * &p(DeltaR)) * &p(KappaLR)) - &p(KappaLR).pow(2);
        assert_eq!(&k1 * &p(KappaLR), expected);
        assert_eq!(&k1 * &LaurentPoly::one(), k1);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = &p(Delta) - &p(Delta);
        assert!(a.is_zero());
        assert_eq!(a.len(), 0);
    }

    #[test]
    fn evaluate_basic() {
        let mut pt = Point::new();
        pt.insert(Delta, BigRational::from_integer(2.into()));
        assert_eq!(p(Delta).evaluate(&pt).unwrap(), BigRational::from_integer(2.into()));
        pt.insert(Delta, BigRational::zero());
        let inv = LaurentPoly::param_pow(Delta, -1);
        assert_eq!(inv.evaluate(&pt), Err(Error::ZeroDenominator("d".into())));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = &(&p(Delta) * &p(KappaL)) - &p(DeltaR);
        let b = &(&p(DeltaL).pow(2) + &p(KappaLR)) - &LaurentPoly::param_pow(Delta, -2);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b));
        assert_eq!(a.div_exact(&(&p(Delta) + &LaurentPoly::one())), None);
    }

    #[test]
    fn phi_psi_swap() {
        let x = &p(DeltaL) * &p(KappaR);
        assert_eq!(x.phi(), &p(KappaL) * &p(KappaR));
        assert_eq!(x.psi(), &p(DeltaL) * &p(DeltaR));
    }
}
