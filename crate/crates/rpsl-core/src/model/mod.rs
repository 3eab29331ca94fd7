//! The conceptual-spaces core: domains, quality dimensions, unit-carrying
//! quantities, concept regions, knoxels, prototypes and similarity.
//!
//! A conceptual space is spanned by quality dimensions grouped into domains.
//! A concept is a convex region of that space — here the interval hull over
//! per-dimension point samples — and a knoxel is a single point representing
//! one concrete object instance. Membership is closed-interval containment;
//! similarity is (optionally normalized) Euclidean distance to a prototype
//! point.
//!
//! All values are immutable after construction and every operation is pure.

mod distance;
mod knoxel;
mod region;
mod space;
mod unit;

pub use distance::{
    axes_from_intervals, euclidean_distance, DistanceAxis, DistanceError, KnoxelSide,
    SIMILARITY_EPSILON,
};
pub use knoxel::{DimRef, Knoxel, Prototype};
pub use region::{build_region, normalize_value, ConceptRegion, Interval, RegionError};
pub use space::{builtin_registry, Domain, QualityDimension, Scale};
pub use unit::{convert_quantity, Quantity, Unit, UnitError, UnitKind};
