//! Finite formal sums of basis elements with Laurent polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::params::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraElement<K: Ord> {
    terms: BTreeMap<K, LaurentPoly>,
}

impl<K: Ord> Default for AlgebraElement<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> AlgebraElement<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(LaurentPoly::one(), k)
    }

    pub fn term(c: LaurentPoly, k: K) -> Self {
        let mut out = Self::zero();
        out.add_term(c, k);
        out
    }

    pub fn add_term(&mut self, c: LaurentPoly, k: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, k: &K) -> LaurentPoly {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    /// `Some((c, k))` for a single-term element.
    pub fn as_single(&self) -> Option<(&LaurentPoly, &K)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (c, k))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (k, x) in &self.terms {
            out.add_term(x * c, k.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(c.clone(), k.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-LaurentPoly::one()))
    }

    /// Apply `f` to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(f(c), k.clone());
        }
        out
    }

    /// Map basis keys (e.g. through an algebra map that sends basis to basis
    /// with a scalar).
    pub fn map_basis<J: Ord + Clone>(&self, f: impl Fn(&K) -> (LaurentPoly, J)) -> AlgebraElement<J> {
        let mut out = AlgebraElement::zero();
        for (k, c) in &self.terms {
            let (s, j) = f(k);
            out.add_term(c * &s, j);
        }
        out
    }

    /// Bilinear extension of a basis product `mul(a, b) = (scalar, basis)`.
    pub fn mul_with(&self, other: &Self, mul: impl Fn(&K, &K) -> (LaurentPoly, K)) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (k, c) = mul(a, b);
                out.add_term(&(ca * cb) * &k, c);
            }
        }
        out
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for AlgebraElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| if c.is_one() { k.to_string() } else { format!("({c}) {k}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
