//! Text format: terms `c * d^a * dL^b * ...` joined by ` + ` / ` - `.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{LaurentPoly, Monomial, ParamName, Point};
use crate::error::Error;

fn write_monomial(f: &mut fmt::Formatter<'_>, c: &BigInt, m: &Monomial) -> fmt::Result {
    let mut parts: Vec<String> = Vec::new();
    let is_const = m.iter().all(|&e| e == 0);
    if is_const || !c.is_one() {
        parts.push(c.to_string());
    }
    for p in ParamName::ALL {
        match m[p.index()] {
            0 => {}
            1 => parts.push(p.symbol().to_string()),
            e => parts.push(format!("{}^{}", p.symbol(), e)),
        }
    }
    f.write_str(&parts.join(" * "))
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending lexicographic order of exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_monomial(f, &c.abs(), m)?;
        }
        Ok(())
    }
}

fn parse_term(src: &str) -> Result<LaurentPoly, Error> {
    let mut coeff = BigInt::one();
    let mut exps: Monomial = [0; 6];
    if src.trim().is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    for factor in src.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {src:?}")));
        }
        if factor.chars().all(|c| c.is_ascii_digit()) {
            coeff *= factor
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(e.to_string()))?;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e = e.trim().trim_start_matches('(').trim_end_matches(')').trim();
                let e: i32 = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        let p: ParamName = name.parse()?;
        exps[p.index()] += exp;
    }
    Ok(LaurentPoly::term(coeff, exps))
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // Split on top-level signs, skipping signs that belong to an exponent.
        let mut out = LaurentPoly::zero();
        let mut sign_negative = false;
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut pieces: Vec<(bool, &str)> = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let b = bytes[i];
            if b == b'+' || b == b'-' {
                let prev = s[..i].trim_end();
                let in_exponent = prev.ends_with('^') || prev.ends_with("^(");
                if !in_exponent {
                    let piece = &s[start..i];
                    if !piece.trim().is_empty() {
                        pieces.push((sign_negative, piece));
                    } else if i != 0 && !pieces.is_empty() {
                        return Err(Error::Parse(format!("dangling sign in {s:?}")));
                    }
                    sign_negative = b == b'-';
                    start = i + 1;
                }
            }
            i += 1;
        }
        pieces.push((sign_negative, &s[start..]));
        for (neg, piece) in pieces {
            let t = parse_term(piece)?;
            if neg {
                out -= &t;
            } else {
                out += &t;
            }
        }
        Ok(out)
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parse `name=value` assignments separated by commas or whitespace, values
/// being integers or fractions `p/q`.
pub fn parse_point(src: &str) -> Result<Point, Error> {
    let mut out = Point::new();
    for item in src.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| Error::Parse(format!("expected name=value, got {item:?}")))?;
        let p: ParamName = k.parse()?;
        let v: BigRational = v.trim().parse().map_err(|_| Error::Parse(format!("bad rational {v:?}")))?;
        out.insert(p, v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_examples() {
        let p: LaurentPoly = "d^2*dL*dR - d*dL*kR + 3".parse().unwrap();
        assert_eq!(p.to_string(), "d^2 * dL * dR - d * dL * kR + 3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let q: LaurentPoly = "-2 * kLR^-1 * d".parse().unwrap();
        assert_eq!(q.to_string(), "-2 * d * kLR^-1");
    }

    #[test]
    fn parse_signed_exponents() {
        let p: LaurentPoly = "dL^-2 - kR^(-1)".parse().unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("d * * dL".parse::<LaurentPoly>().is_err());
        assert!("x".parse::<LaurentPoly>().is_err());
        assert!("d^y".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn points() {
        let p = parse_point("d=2, kLR=3/2 dL=-1").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p[&ParamName::KappaLR], BigRational::new(3.into(), 2.into()));
        assert!(parse_point("d=x").is_err());
        assert!(parse_point("q=1").is_err());
    }
}
