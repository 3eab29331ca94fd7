//! Euclidean distance between knoxels, with optional per-axis min–max
//! normalization.

use alloc::vec::Vec;
use core::fmt;

use super::knoxel::{DimRef, Knoxel};
use super::region::Interval;
use crate::math;

/// Absolute tolerance for `==`/`!=` on similarity values. Distances live in
/// normalized space, so an absolute epsilon is meaningful there.
pub const SIMILARITY_EPSILON: f64 = 1e-9;

/// Which operand of a distance computation a problem refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnoxelSide {
    Left,
    Right,
}

impl fmt::Display for KnoxelSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnoxelSide::Left => f.write_str("left"),
            KnoxelSide::Right => f.write_str("right"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DistanceError {
    /// One of the knoxels lacks a value for a requested dimension.
    MissingDimension { dim: DimRef, side: KnoxelSide },
}

impl fmt::Display for DistanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceError::MissingDimension { dim, side } => {
                write!(f, "{side} knoxel has no value for dimension {dim}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DistanceError {}

/// One axis of a distance computation: the dimension plus the interval data
/// needed to normalize differences along it.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceAxis {
    pub dim: DimRef,
    /// Concept interval for the dimension, in base units.
    pub interval: Option<Interval>,
    /// Canonical range of the dimension, used when the concept interval is
    /// degenerate.
    pub canonical: Option<Interval>,
}

impl DistanceAxis {
    pub fn new(dim: DimRef) -> Self {
        DistanceAxis {
            dim,
            interval: None,
            canonical: None,
        }
    }

    pub fn with_interval(mut self, interval: Interval) -> Self {
        self.interval = Some(interval);
        self
    }

    pub fn with_canonical(mut self, canonical: Interval) -> Self {
        self.canonical = Some(canonical);
        self
    }

    /// Divisor applied to differences along this axis when normalizing:
    /// the concept interval width, falling back to the canonical width for
    /// degenerate intervals, and to 1 when neither gives a usable width.
    fn normalization_width(&self) -> f64 {
        if let Some(iv) = self.interval {
            if !iv.is_degenerate() {
                return iv.width();
            }
        }
        if let Some(c) = self.canonical {
            if !c.is_degenerate() {
                return c.width();
            }
        }
        1.0
    }
}

/// Euclidean distance between two knoxels over the given axes.
///
/// Both knoxels must carry a value for every axis; values are compared in
/// base units. When `normalized` is set, each per-axis difference is divided
/// by the axis normalization width before squaring. Symmetric, non-negative,
/// and zero exactly when the knoxels agree on every axis.
pub fn euclidean_distance(
    a: &Knoxel,
    b: &Knoxel,
    dims: &[DistanceAxis],
    normalized: bool,
) -> Result<f64, DistanceError> {
    let mut sum = 0.0;
    for axis in dims {
        let va = a
            .get_base(&axis.dim)
            .ok_or_else(|| DistanceError::MissingDimension {
                dim: axis.dim.clone(),
                side: KnoxelSide::Left,
            })?;
        let vb = b
            .get_base(&axis.dim)
            .ok_or_else(|| DistanceError::MissingDimension {
                dim: axis.dim.clone(),
                side: KnoxelSide::Right,
            })?;
        let mut diff = va - vb;
        if normalized {
            diff /= axis.normalization_width();
        }
        sum += diff * diff;
    }
    Ok(math::sqrt(sum))
}

/// Axes for a distance over every dimension of a region, carrying the
/// region's intervals.
pub fn axes_from_intervals<'a, I>(intervals: I) -> Vec<DistanceAxis>
where
    I: IntoIterator<Item = (&'a DimRef, &'a Interval)>,
{
    intervals
        .into_iter()
        .map(|(dim, iv)| DistanceAxis::new(dim.clone()).with_interval(*iv))
        .collect()
}
