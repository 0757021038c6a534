use std::fmt;

use serde::Serialize;

use super::{LaurentPoly, ParamName};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum KName {
    K0,
    K1,
    K2,
    K3,
    K13,
}

/// Image under the commuting parameter swaps: `Phi` exchanges dL/kL, `Psi` dR/kR.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum KOp {
    Id,
    Phi,
    Psi,
    PhiPsi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct KPolynomial {
    pub name: KName,
    pub op: KOp,
}

impl KName {
    pub const ALL: [KName; 5] = [KName::K0, KName::K1, KName::K2, KName::K3, KName::K13];

    pub fn expansion(self) -> LaurentPoly {
        let s = match self {
            KName::K0 => "kLR",
            KName::K1 => "dL*dR - kLR",
            KName::K2 => "kLR - dL*kR - kL*dR + d*dL*dR",
            KName::K3 => "d^2*dL*dR - d*dL*kR - d*dR*kL - dL*dR + kL*kR",
            KName::K13 => "d^2*dL*dR - d*dL*kR - d*dR*kL + kL*kR - kLR",
        };
        s.parse().expect("static polynomial")
    }
}

impl KOp {
    pub const ALL: [KOp; 4] = [KOp::Id, KOp::Phi, KOp::Psi, KOp::PhiPsi];

    pub fn apply(self, p: &LaurentPoly) -> LaurentPoly {
        match self {
            KOp::Id => p.clone(),
            KOp::Phi => p.phi(),
            KOp::Psi => p.psi(),
            KOp::PhiPsi => p.phi().psi(),
        }
    }
}

impl KPolynomial {
    pub fn new(name: KName, op: KOp) -> Self {
        Self { name, op }
    }

    pub fn expansion(&self) -> LaurentPoly {
        self.op.apply(&self.name.expansion())
    }
}

impl fmt::Display for KName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KName::K0 => "K0",
            KName::K1 => "K1",
            KName::K2 => "K2",
            KName::K3 => "K3",
            KName::K13 => "K13",
        })
    }
}

impl fmt::Display for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.op {
            KOp::Id => write!(f, "{}", self.name),
            KOp::Phi => write!(f, "Phi({})", self.name),
            KOp::Psi => write!(f, "Psi({})", self.name),
            KOp::PhiPsi => write!(f, "PhiPsi({})", self.name),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Factor {
    Param(ParamName),
    K(KPolynomial),
}

impl Factor {
    pub fn expansion(&self) -> LaurentPoly {
        match self {
            Factor::Param(p) => LaurentPoly::param(*p),
            Factor::K(k) => k.expansion(),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Param(p) => write!(f, "{p}"),
            Factor::K(k) => write!(f, "{k}"),
        }
    }
}

/// Result of trial division: `input = remainder * prod(factor^mult)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorList {
    pub factors: Vec<(Factor, u32)>,
    pub remainder: LaurentPoly,
}

impl FactorList {
    pub fn reconstruct(&self) -> LaurentPoly {
        let mut acc = self.remainder.clone();
        for (f, k) in &self.factors {
            acc = &acc * &f.expansion().pow(*k);
        }
        acc
    }
}

impl fmt::Display for FactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let rem = &self.remainder;
        if rem.is_zero() {
            return f.write_str("0");
        }
        if !rem.is_one() {
            if rem == &-LaurentPoly::one() {
                parts.push("-1".into());
            } else if rem.len() == 1 {
                parts.push(rem.to_string());
            } else {
                parts.push(format!("({rem})"));
            }
        }
        for (fac, k) in &self.factors {
            if *k == 1 {
                parts.push(fac.to_string());
            } else {
                parts.push(format!("{fac}^{k}"));
            }
        }
        if parts.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&parts.join(" * "))
    }
}

/// The fixed trial-division catalogue: the six parameters, then every distinct
/// Φ/Ψ image of K0..K3 and K13 not already listed.
pub fn catalogue() -> Vec<(Factor, LaurentPoly)> {
    let mut out: Vec<(Factor, LaurentPoly)> = ParamName::ALL
        .iter()
        .map(|p| (Factor::Param(*p), LaurentPoly::param(*p)))
        .collect();
    for name in KName::ALL {
        for op in KOp::ALL {
            let k = KPolynomial::new(name, op);
            let e = k.expansion();
            if out.iter().all(|(_, x)| x != &e) {
                out.push((Factor::K(k), e));
            }
        }
    }
    out
}

/// Greedy trial division of `p` by the catalogue.
///
/// Parameters are extracted with nonnegative multiplicity only; negative powers
/// stay in the remainder.
pub fn factor_against_klist(p: &LaurentPoly) -> FactorList {
    let mut rem = p.clone();
    let mut factors = Vec::new();
    if rem.is_zero() {
        return FactorList { factors, remainder: rem };
    }
    for (fac, e) in catalogue() {
        let mut k = 0u32;
        match fac {
            Factor::Param(name) => {
                // Laurent division by a parameter always succeeds; only pull out
                // the power that every term actually carries.
                let lo = rem.min_exponents()[name.index()];
                if lo > 0 {
                    k = lo as u32;
                    rem = rem.shift({
                        let mut s = [0; 6];
                        s[name.index()] = -lo;
                        s
                    });
                }
            }
            Factor::K(_) => {
                while let Some(q) = rem.div_exact(&e) {
                    rem = q;
                    k += 1;
                }
            }
        }
        if k > 0 {
            factors.push((fac, k));
        }
    }
    FactorList { factors, remainder: rem }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(name: KName, op: KOp) -> LaurentPoly {
        KPolynomial::new(name, op).expansion()
    }

    #[test]
    fn phi_psi_commute_on_catalogue() {
        for (_, e) in catalogue() {
            assert_eq!(e.phi().psi(), e.psi().phi());
        }
    }

    #[test]
    fn factor_gamma_minus_one_shape() {
        let p = &(&LaurentPoly::param(ParamName::KappaL) * &LaurentPoly::param(ParamName::KappaR))
            * &k(KName::K3, KOp::Id);
        let fl = factor_against_klist(&p);
        assert_eq!(fl.to_string(), "kL * kR * K3");
        assert!(fl.remainder.is_one());
    }

    #[test]
    fn factor_trivial() {
        let fl = factor_against_klist(&LaurentPoly::one());
        assert!(fl.factors.is_empty());
        assert!(fl.remainder.is_one());
    }

    #[test]
    fn factor_k1_squared_psi_k2() {
        let p = &k(KName::K1, KOp::Id).pow(2) * &k(KName::K2, KOp::Psi);
        let fl = factor_against_klist(&p);
        assert_eq!(
            fl.factors,
            vec![
                (Factor::K(KPolynomial::new(KName::K1, KOp::Id)), 2),
                (Factor::K(KPolynomial::new(KName::K2, KOp::Psi)), 1),
            ]
        );
        assert!(fl.remainder.is_one());
        assert_eq!(fl.reconstruct(), p);
    }

    #[test]
    fn k0_is_catalogued_as_parameter() {
        assert!(catalogue()
            .iter()
            .all(|(f, _)| !matches!(f, Factor::K(KPolynomial { name: KName::K0, .. }))));
    }
}
