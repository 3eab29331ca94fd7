//! Concept regions as axis-aligned interval hulls.

use alloc::collections::BTreeMap;
use core::fmt;

use super::knoxel::{DimRef, Knoxel};
use super::space::Domain;
use super::unit::{Quantity, UnitKind};

/// A closed interval `[lo, hi]` in base units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    /// The degenerate interval `[v, v]`.
    pub fn singleton(v: f64) -> Self {
        Interval { lo: v, hi: v }
    }

    /// Closed-interval membership: both endpoints are inside.
    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Grows the interval just enough to contain `v`.
    pub fn include(&mut self, v: f64) {
        if v < self.lo {
            self.lo = v;
        }
        if v > self.hi {
            self.hi = v;
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// The convex region of a concept: one closed interval per used dimension,
/// all values expressed in base units.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConceptRegion {
    pub intervals: BTreeMap<DimRef, Interval>,
}

impl ConceptRegion {
    /// True when the knoxel carries a value for every region dimension and
    /// each value falls inside the corresponding interval. Dimensions the
    /// knoxel has but the region does not are ignored.
    pub fn contains(&self, knoxel: &Knoxel) -> bool {
        self.intervals.iter().all(|(dim, interval)| {
            knoxel
                .get_base(dim)
                .is_some_and(|v| interval.contains(v))
        })
    }

    pub fn interval(&self, dim: &DimRef) -> Option<Interval> {
        self.intervals.get(dim).copied()
    }

    pub fn dims(&self) -> impl Iterator<Item = &DimRef> {
        self.intervals.keys()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RegionError {
    /// A point names a dimension absent from the used domains.
    UnknownDimension { dim: DimRef },
    /// A point's unit does not match the dimension's kind.
    UnitKindMismatch {
        dim: DimRef,
        expected: UnitKind,
        found: UnitKind,
    },
    /// No point touched this dimension of a used domain.
    MissingDimension { dim: DimRef },
}

impl fmt::Display for RegionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionError::UnknownDimension { dim } => {
                write!(f, "unknown dimension {dim}")
            }
            RegionError::UnitKindMismatch {
                dim,
                expected,
                found,
            } => write!(f, "unit mismatch on {dim}: expected {expected}, found {found}"),
            RegionError::MissingDimension { dim } => {
                write!(f, "no value given for dimension {dim}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for RegionError {}

/// Builds the interval hull of a point set over the given domains.
///
/// Every `(dim, quantity)` pair must name a dimension of one of the domains
/// and carry a unit of the dimension's kind; every dimension of every domain
/// must receive at least one value. Values are converted to base units before
/// the hull is taken, so `Point(Size.Height, 2 cm)` and
/// `Point(Size.Height, 20 mm)` are the same point.
pub fn build_region(
    domains: &[&Domain],
    points: &[(DimRef, Quantity)],
) -> Result<ConceptRegion, RegionError> {
    let mut expected: BTreeMap<DimRef, UnitKind> = BTreeMap::new();
    for domain in domains {
        for dim in &domain.dimensions {
            expected.insert(DimRef::new(&domain.name, &dim.name), dim.unit_kind);
        }
    }

    let mut intervals: BTreeMap<DimRef, Interval> = BTreeMap::new();
    for (dim, q) in points {
        let Some(&kind) = expected.get(dim) else {
            return Err(RegionError::UnknownDimension { dim: dim.clone() });
        };
        if q.unit.kind() != kind {
            return Err(RegionError::UnitKindMismatch {
                dim: dim.clone(),
                expected: kind,
                found: q.unit.kind(),
            });
        }
        let v = q.to_base();
        intervals
            .entry(dim.clone())
            .and_modify(|iv| iv.include(v))
            .or_insert_with(|| Interval::singleton(v));
    }

    for dim in expected.keys() {
        if !intervals.contains_key(dim) {
            return Err(RegionError::MissingDimension { dim: dim.clone() });
        }
    }

    Ok(ConceptRegion { intervals })
}

/// Maps a base-unit value onto `[0, 1]` relative to an interval.
///
/// For a non-degenerate interval this is `(v - lo) / (hi - lo)`. A degenerate
/// interval has no width of its own, so the dimension's canonical range is
/// used instead when one exists; otherwise the raw offset `v - lo` is
/// returned. The result is not clamped.
pub fn normalize_value(v: f64, interval: Interval, canonical: Option<Interval>) -> f64 {
    if !interval.is_degenerate() {
        return (v - interval.lo) / interval.width();
    }
    match canonical {
        Some(c) if !c.is_degenerate() => (v - c.lo) / c.width(),
        _ => v - interval.lo,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::space::builtin_registry;
    use crate::model::unit::Unit;
    use alloc::vec;

    fn size_points() -> Vec<(DimRef, Quantity)> {
        vec![
            (DimRef::new("Size", "Height"), Quantity::new(20.0, Unit::Mm)),
            (DimRef::new("Size", "Height"), Quantity::new(40.0, Unit::Mm)),
            (DimRef::new("Size", "Width"), Quantity::new(20.0, Unit::Mm)),
            (DimRef::new("Size", "Width"), Quantity::new(40.0, Unit::Mm)),
            (DimRef::new("Size", "Length"), Quantity::new(100.0, Unit::Mm)),
        ]
    }

    #[test]
    fn hull_of_box_sizes() {
        let registry = builtin_registry();
        let size = registry.iter().find(|d| d.name == "Size").unwrap();
        let region = build_region(&[size], &size_points()).unwrap();
        assert_eq!(
            region.interval(&DimRef::new("Size", "Height")),
            Some(Interval::new(20.0, 40.0))
        );
        assert_eq!(
            region.interval(&DimRef::new("Size", "Width")),
            Some(Interval::new(20.0, 40.0))
        );
        assert_eq!(
            region.interval(&DimRef::new("Size", "Length")),
            Some(Interval::new(100.0, 100.0))
        );
    }

    #[test]
    fn hull_is_order_independent_and_unit_normalized() {
        let registry = builtin_registry();
        let size = registry.iter().find(|d| d.name == "Size").unwrap();
        let mut points = size_points();
        points.reverse();
        points[3] = (DimRef::new("Size", "Height"), Quantity::new(4.0, Unit::Cm));
        let region = build_region(&[size], &points).unwrap();
        assert_eq!(
            region.interval(&DimRef::new("Size", "Height")),
            Some(Interval::new(20.0, 40.0))
        );
    }

    #[test]
    fn missing_dimension_is_rejected() {
        let registry = builtin_registry();
        let size = registry.iter().find(|d| d.name == "Size").unwrap();
        let points = vec![
            (DimRef::new("Size", "Height"), Quantity::new(20.0, Unit::Mm)),
            (DimRef::new("Size", "Width"), Quantity::new(20.0, Unit::Mm)),
        ];
        let err = build_region(&[size], &points).unwrap_err();
        assert_eq!(
            err,
            RegionError::MissingDimension {
                dim: DimRef::new("Size", "Length")
            }
        );
    }

    #[test]
    fn unknown_dimension_is_rejected() {
        let registry = builtin_registry();
        let size = registry.iter().find(|d| d.name == "Size").unwrap();
        let points = vec![(DimRef::new("Size", "Depth"), Quantity::new(1.0, Unit::Mm))];
        let err = build_region(&[size], &points).unwrap_err();
        assert_eq!(
            err,
            RegionError::UnknownDimension {
                dim: DimRef::new("Size", "Depth")
            }
        );
    }

    #[test]
    fn wrong_unit_kind_is_rejected() {
        let registry = builtin_registry();
        let size = registry.iter().find(|d| d.name == "Size").unwrap();
        let points = vec![(DimRef::new("Size", "Height"), Quantity::new(3.0, Unit::S))];
        let err = build_region(&[size], &points).unwrap_err();
        assert_eq!(
            err,
            RegionError::UnitKindMismatch {
                dim: DimRef::new("Size", "Height"),
                expected: UnitKind::Length,
                found: UnitKind::Time,
            }
        );
    }

    #[test]
    fn region_membership_is_closed() {
        let registry = builtin_registry();
        let size = registry.iter().find(|d| d.name == "Size").unwrap();
        let region = build_region(&[size], &size_points()).unwrap();

        let inside = Knoxel::new()
            .with(DimRef::new("Size", "Height"), Quantity::new(20.0, Unit::Mm))
            .with(DimRef::new("Size", "Width"), Quantity::new(40.0, Unit::Mm))
            .with(DimRef::new("Size", "Length"), Quantity::new(100.0, Unit::Mm));
        assert!(region.contains(&inside));

        let outside = Knoxel::new()
            .with(DimRef::new("Size", "Height"), Quantity::new(20.0, Unit::Mm))
            .with(DimRef::new("Size", "Width"), Quantity::new(40.0, Unit::Mm))
            .with(DimRef::new("Size", "Length"), Quantity::new(101.0, Unit::Mm));
        assert!(!region.contains(&outside));

        let missing = Knoxel::new()
            .with(DimRef::new("Size", "Height"), Quantity::new(20.0, Unit::Mm));
        assert!(!region.contains(&missing));
    }

    #[test]
    fn normalize_simple_interval() {
        let iv = Interval::new(20.0, 40.0);
        assert_eq!(normalize_value(20.0, iv, None), 0.0);
        assert_eq!(normalize_value(40.0, iv, None), 1.0);
        assert_eq!(normalize_value(30.0, iv, None), 0.5);
        assert_eq!(normalize_value(50.0, iv, None), 1.5);
    }

    #[test]
    fn normalize_degenerate_interval_uses_canonical_range() {
        let iv = Interval::singleton(139.0);
        let canonical = Some(Interval::new(0.0, 255.0));
        let got = normalize_value(139.0, iv, canonical);
        assert!((got - 139.0 / 255.0).abs() < 1e-15);
    }

    #[test]
    fn normalize_degenerate_interval_without_canonical_is_raw_offset() {
        let iv = Interval::singleton(100.0);
        assert_eq!(normalize_value(103.0, iv, None), 3.0);
        assert_eq!(normalize_value(100.0, iv, None), 0.0);
    }
}
