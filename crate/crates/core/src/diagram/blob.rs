use super::core::{abacus_concat, Diagram};
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::params::{LaurentPoly, ParamName};

/// Loop and blob parameters `(δ, δ_e, γ)`. By default these are the ring
/// parameters `d`, `dL`, `kL`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlobParams {
    pub delta: LaurentPoly,
    pub delta_e: LaurentPoly,
    pub gamma: LaurentPoly,
}

impl Default for BlobParams {
    fn default() -> Self {
        Self {
            delta: ParamName::Delta.into(),
            delta_e: ParamName::DeltaL.into(),
            gamma: ParamName::KappaL.into(),
        }
    }
}

impl BlobParams {
    /// The same algebra with `δ_e` and `γ` interchanged.
    pub fn swapped(&self) -> Self {
        Self { delta: self.delta.clone(), delta_e: self.gamma.clone(), gamma: self.delta_e.clone() }
    }
}

pub type BlobElement = AlgebraElement<Diagram>;

/// The blob generator `e`: a blob on the first string.
pub fn blob_e(n: u32) -> Result<Diagram> {
    Diagram::decorated_identity(n, 1, "L")
}

/// Compose two blob diagrams and reduce: repeated blobs cost `δ_e`, plain loops
/// `δ`, blobbed loops `γ`.
pub fn blob_product(a: &Diagram, b: &Diagram, params: &BlobParams) -> Result<(LaurentPoly, Diagram)> {
    if a.n() != a.m() || b.n() != b.m() || a.n() != b.n() {
        return Err(Error::RankMismatch(format!("blob ranks {} and {}", a.n(), b.n())));
    }
    let c = abacus_concat(a, b)?;
    let mut k = LaurentPoly::one();
    for p in c.pairs() {
        let beads = p.word.len() as u32;
        if beads > 1 {
            k = &k * &params.delta_e.pow(beads - 1);
        }
    }
    for l in c.loops() {
        let beads = l.len() as u32;
        if beads == 0 {
            k = &k * &params.delta;
        } else {
            k = &(&k * &params.delta_e.pow(beads - 1)) * &params.gamma;
        }
    }
    let d = c.underlying().map_words(|p| if p.word.is_empty() { String::new() } else { "L".into() });
    Ok((k, d))
}

pub fn blob_mul(a: &BlobElement, b: &BlobElement, params: &BlobParams) -> Result<BlobElement> {
    let rank = |x: &BlobElement| x.terms().next().map(|(d, _)| d.n());
    if let (Some(x), Some(y)) = (rank(a), rank(b)) {
        if x != y {
            return Err(Error::RankMismatch(format!("blob ranks {x} and {y}")));
        }
    }
    Ok(a.mul_with(b, |x, y| blob_product(x, y, params).expect("ranks checked")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(a: &Diagram, b: &Diagram) -> (LaurentPoly, Diagram) {
        blob_product(a, b, &BlobParams::default()).unwrap()
    }

    #[test]
    fn ee_is_delta_e_e() {
        let e = blob_e(3).unwrap();
        assert_eq!(mul(&e, &e), (ParamName::DeltaL.into(), e));
    }

    #[test]
    fn u1_e_u1() {
        let e = blob_e(3).unwrap();
        let u = Diagram::tl_generator(3, 1).unwrap();
        let (k1, x) = mul(&u, &e);
        let (k2, y) = mul(&x, &u);
        assert_eq!(&k1 * &k2, ParamName::KappaL.into());
        assert_eq!(y, u);
    }

    #[test]
    fn uu_is_delta_u() {
        let u = Diagram::tl_generator(3, 2).unwrap();
        assert_eq!(mul(&u, &u), (ParamName::Delta.into(), u));
    }
}
