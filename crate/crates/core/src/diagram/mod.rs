//! Beaded pair-partition diagrams and the classical algebras built on them.

pub mod blob;
pub mod contour;
mod core;
pub mod enumerate;
pub mod exposure;
pub mod presentation;
mod vertex;
pub mod word;

pub use self::core::{abacus_concat, scalar_reduce, DiagramJson, Diagram, Pair, PairJson};
pub use blob::{blob_e, blob_mul, blob_product, BlobElement, BlobParams};
pub use contour::{check_generation, contour_product, ContourParams};
pub use enumerate::{enumerate_basis, tl_diagrams, Family};
pub use exposure::{exposure_levels, exposure_levels_from, exposure_levels_oracle, Edge};
pub use presentation::{verify_tlb, word_product, PresentationReport, RelationCheck};
pub use vertex::VertexId;
pub use word::BeadWord;
