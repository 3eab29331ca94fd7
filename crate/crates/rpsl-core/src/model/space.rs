//! Quality dimensions, domains and the built-in domain registry.

use alloc::string::String;
use alloc::vec::Vec;

use super::region::Interval;
use super::unit::UnitKind;

/// Measurement scale of a quality dimension. Ordinal dimensions hold integer
/// values only; they still participate in Euclidean distance as integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Continuous,
    OrdinalInteger,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QualityDimension {
    pub name: String,
    pub scale: Scale,
    pub unit_kind: UnitKind,
    /// Full range of the dimension when one exists (e.g. RGB channels span
    /// [0, 255]). Used as the normalization fallback for degenerate concept
    /// intervals.
    pub canonical: Option<Interval>,
}

impl QualityDimension {
    pub fn continuous(name: &str, unit_kind: UnitKind) -> Self {
        QualityDimension {
            name: String::from(name),
            scale: Scale::Continuous,
            unit_kind,
            canonical: None,
        }
    }

    pub fn ordinal(name: &str, unit_kind: UnitKind) -> Self {
        QualityDimension {
            name: String::from(name),
            scale: Scale::OrdinalInteger,
            unit_kind,
            canonical: None,
        }
    }

    pub fn with_canonical(mut self, lo: f64, hi: f64) -> Self {
        self.canonical = Some(Interval::new(lo, hi));
        self
    }
}

/// A named group of quality dimensions spanning one conceptual subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Domain {
    pub name: String,
    pub dimensions: Vec<QualityDimension>,
}

impl Domain {
    /// Dimension names must be unique within a domain.
    pub fn new(name: &str, dimensions: Vec<QualityDimension>) -> Self {
        debug_assert!({
            let mut names: Vec<&str> = dimensions.iter().map(|d| d.name.as_str()).collect();
            names.sort_unstable();
            names.windows(2).all(|w| w[0] != w[1])
        });
        Domain {
            name: String::from(name),
            dimensions,
        }
    }

    pub fn dimension(&self, name: &str) -> Option<&QualityDimension> {
        self.dimensions.iter().find(|d| d.name == name)
    }
}

/// The built-in domains every compilation unit can use without declaring
/// them: Size, RGB, Amount and Pose.
pub fn builtin_registry() -> Vec<Domain> {
    alloc::vec![
        Domain::new(
            "Size",
            alloc::vec![
                QualityDimension::continuous("Height", UnitKind::Length),
                QualityDimension::continuous("Width", UnitKind::Length),
                QualityDimension::continuous("Length", UnitKind::Length),
            ],
        ),
        Domain::new(
            "RGB",
            alloc::vec![
                QualityDimension::ordinal("Red", UnitKind::Dimensionless).with_canonical(0.0, 255.0),
                QualityDimension::ordinal("Green", UnitKind::Dimensionless)
                    .with_canonical(0.0, 255.0),
                QualityDimension::ordinal("Blue", UnitKind::Dimensionless)
                    .with_canonical(0.0, 255.0),
            ],
        ),
        Domain::new(
            "Amount",
            alloc::vec![QualityDimension::ordinal("Count", UnitKind::Dimensionless)],
        ),
        Domain::new(
            "Pose",
            alloc::vec![
                QualityDimension::continuous("X", UnitKind::Length),
                QualityDimension::continuous("Y", UnitKind::Length),
                QualityDimension::continuous("Z", UnitKind::Length),
                QualityDimension::continuous("QX", UnitKind::Dimensionless),
                QualityDimension::continuous("QY", UnitKind::Dimensionless),
                QualityDimension::continuous("QZ", UnitKind::Dimensionless),
                QualityDimension::continuous("QW", UnitKind::Dimensionless),
            ],
        ),
    ]
}
