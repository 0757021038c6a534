//! Exact diagram calculus for Temperley-Lieb, blob, contour and symplectic blob
//! algebras over a six-parameter Laurent polynomial ring.

pub mod algebra;
pub mod diagram;
pub mod error;
pub mod params;
pub mod rep;
pub mod symplectic;

pub use algebra::AlgebraElement;
pub use diagram::{Diagram, VertexId};
pub use error::{Error, Result};
pub use params::{LaurentPoly, ParamName};

/// Which presentation `verify_presentation` checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relations {
    /// Type-B Temperley-Lieb relations in the blob algebra.
    TLb,
    /// Affine-C relations in the L/R blob algebra `b^x_n`.
    AffineC,
}

impl std::str::FromStr for Relations {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tlb" => Ok(Relations::TLb),
            "affinec" | "affine-c" => Ok(Relations::AffineC),
            other => Err(Error::Parse(format!("unknown relation set {other:?}"))),
        }
    }
}

/// Check every relation of the chosen presentation at rank `n`, with generic
/// parameters.
pub fn verify_presentation(relations: Relations, n: u32) -> Result<diagram::PresentationReport> {
    match relations {
        Relations::TLb => diagram::verify_tlb(n, &diagram::BlobParams::default()),
        Relations::AffineC => symplectic::verify_affine_c(n, symplectic::Target::Small),
    }
}
