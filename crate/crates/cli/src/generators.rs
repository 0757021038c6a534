//! Words in the generators of each algebra, and their products.

use anyhow::Result;
use blobalg::diagram::{blob_e, blob_mul, BlobElement, BlobParams};
use blobalg::symplectic::{compose_x, phi_mul, strip_e, strip_f, strip_u, x_e, x_f, PhiElement, Strip, XElement};
use blobalg::{Diagram, LaurentPoly};
use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    /// Temperley-Lieb: `U_i`.
    Tl,
    /// Blob algebra: `e`, `U_i`.
    Blob,
    /// L/R blob algebra `b^x_n`: `e`, `f`, `U_i`.
    Bx,
    /// Periodic algebra `b^φ_{2n}`: `e`, `f`, `U_i`.
    Phi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    One,
    E,
    F,
    U(u32),
}

pub struct Rendered {
    pub text: String,
    pub json: serde_json::Value,
}

/// Parse generator tokens such as `e`, `f`, `U2`, `1`.
pub fn parse_word(algebra: Algebra, n: u32, tokens: &[&str]) -> Result<Vec<Gen>, String> {
    tokens
        .iter()
        .map(|&t| {
            let g = match t {
                "1" | "id" => Gen::One,
                "e" => Gen::E,
                "f" => Gen::F,
                _ => {
                    let i = t
                        .strip_prefix('U')
                        .or_else(|| t.strip_prefix('u'))
                        .and_then(|s| s.trim_start_matches('_').parse::<u32>().ok())
                        .ok_or_else(|| format!("unknown generator {t:?}"))?;
                    Gen::U(i)
                }
            };
            match g {
                Gen::E if algebra == Algebra::Tl => Err("the Temperley-Lieb algebra has no e".into()),
                Gen::F if matches!(algebra, Algebra::Tl | Algebra::Blob) => Err(format!("{algebra:?} has no f")),
                Gen::E | Gen::F if n == 0 => Err("rank 0 has no blob generators".into()),
                Gen::U(i) if i == 0 || i >= n => Err(format!("U{i} needs 1 <= i < {n}")),
                g => Ok(g),
            }
        })
        .collect()
}

fn diagram_terms(x: &BlobElement) -> Vec<(Rendered, LaurentPoly)> {
    x.terms()
        .map(|(d, c)| (Rendered { text: d.to_string(), json: serde_json::to_value(d.to_json()).expect("plain data") }, c.clone()))
        .collect()
}

/// Product of the word, as basis elements with coefficients.
pub fn product(algebra: Algebra, n: u32, word: &[Gen]) -> Result<Vec<(Rendered, LaurentPoly)>> {
    match algebra {
        Algebra::Tl | Algebra::Blob => {
            let params = BlobParams::default();
            let mut acc = BlobElement::basis(Diagram::identity(n));
            for g in word {
                let d = match *g {
                    Gen::One => Diagram::identity(n),
                    Gen::E => blob_e(n)?,
                    Gen::U(i) => Diagram::tl_generator(n, i)?,
                    Gen::F => unreachable!("rejected by parse_word"),
                };
                acc = blob_mul(&acc, &BlobElement::basis(d), &params)?;
            }
            Ok(diagram_terms(&acc))
        }
        Algebra::Bx => {
            let mut acc = XElement::basis(Diagram::identity(n));
            for g in word {
                let d = match *g {
                    Gen::One => Diagram::identity(n),
                    Gen::E => x_e(n)?,
                    Gen::F => x_f(n)?,
                    Gen::U(i) => Diagram::tl_generator(n, i)?,
                };
                acc = compose_x(&acc, &XElement::basis(d))?;
            }
            Ok(diagram_terms(&acc))
        }
        Algebra::Phi => {
            let mut acc = PhiElement::basis(Strip::identity(n));
            for g in word {
                let s = match *g {
                    Gen::One => Strip::identity(n),
                    Gen::E => strip_e(n)?,
                    Gen::F => strip_f(n)?,
                    Gen::U(i) => strip_u(n, i)?,
                };
                acc = phi_mul(&acc, &PhiElement::basis(s))?;
            }
            Ok(acc
                .terms()
                .map(|(s, c)| (Rendered { text: s.to_string(), json: serde_json::to_value(s.to_json()).expect("plain data") }, c.clone()))
                .collect())
        }
    }
}
