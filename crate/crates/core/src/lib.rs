//! Exact combinatorial data depth: Tukey, Tverberg and enclosing depth,
//! depth regions and their cascades, bichromatic fractional Radon
//! constructions, and an axiom checker for depth measures.

pub mod axioms;
pub mod corpus;
pub mod depth;
pub mod error;
pub mod geom;
pub mod measure;
pub mod par;
pub mod radon;
pub mod regions;

pub use error::{DepthError, Result};
pub use measure::MeasureId;
