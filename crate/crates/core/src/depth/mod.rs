//! Depth measures with verifiable witnesses.

mod enclosing;
mod peeling;
mod simplicial;
mod tukey;
mod tverberg;

pub use enclosing::{
    cone_extension_check, cover_halfplanes, encloses_by_transversals, enclosing_depth_exact,
    verify_enclosing_fast, verify_enclosing_oracle, wellseparated_check, ConeCheck,
    EnclosingWitness, FastVerdict,
};
pub use peeling::peeling_depth;
pub use simplicial::simplicial_depth;
pub use tukey::{minimizing_flag, tukey_depth, tukey_depth_weighted, tukey_value};
pub use tverberg::{greedy_simplices, tverberg_depth_exact, tverberg_greedy_lower, RPartition};

use crate::geom::scalar::{to_i64, ExactScalar};
use crate::geom::OrientedHalfspace;

/// Default instance-size cap for the exhaustive searches.
pub const DEFAULT_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Partition(RPartition),
    Enclosing(EnclosingWitness),
    Halfspace(OrientedHalfspace),
}

/// A depth value, optionally with a certificate. `exact` is false for
/// lower bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthResult {
    pub value: ExactScalar,
    pub witness: Option<Witness>,
    pub exact: bool,
}

impl DepthResult {
    pub fn exact(value: ExactScalar, witness: Option<Witness>) -> Self {
        DepthResult {
            value,
            witness,
            exact: true,
        }
    }

    /// The value as an integer, for integral measures.
    pub fn as_i64(&self) -> i64 {
        to_i64(&self.value).expect("integral depth value")
    }
}
