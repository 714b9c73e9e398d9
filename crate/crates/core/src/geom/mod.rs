//! Exact rational geometry: scalars, points, predicates and halfspaces.

pub mod frame;
pub mod halfspace;
pub mod hull;
pub mod lp;
pub mod point;
pub mod predicates;
pub mod scalar;

pub use halfspace::{candidate_halfspaces_through, halfspace_count, OrientedHalfspace};
pub use point::{Color, Point, PointSet, MAX_DIM};
pub use predicates::{
    angular_order, in_convex_hull, in_convex_hull_with, is_general_position_rel, orient,
    simplex_contains, HullMethod,
};
pub use scalar::{format_scalar, int, parse_scalar, ratio, ExactScalar};
