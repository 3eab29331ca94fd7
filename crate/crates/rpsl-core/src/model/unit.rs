//! Units of measure and unit-carrying quantities.
//!
//! The unit table is fixed: lengths convert through millimetres, times
//! through milliseconds, and dimensionless values carry no unit. Conversion
//! factors are integral, so conversions are exact rational scalings.

use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UnitKind {
    Length,
    Time,
    Dimensionless,
}

impl fmt::Display for UnitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitKind::Length => f.write_str("length"),
            UnitKind::Time => f.write_str("time"),
            UnitKind::Dimensionless => f.write_str("dimensionless"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Unit {
    Mm,
    Cm,
    M,
    Ms,
    S,
    Min,
    None,
}

impl Unit {
    pub fn kind(self) -> UnitKind {
        match self {
            Unit::Mm | Unit::Cm | Unit::M => UnitKind::Length,
            Unit::Ms | Unit::S | Unit::Min => UnitKind::Time,
            Unit::None => UnitKind::Dimensionless,
        }
    }

    /// Scale factor into the base unit of this unit's kind (mm, ms or 1).
    pub fn factor_to_base(self) -> f64 {
        match self {
            Unit::Mm => 1.0,
            Unit::Cm => 10.0,
            Unit::M => 1000.0,
            Unit::Ms => 1.0,
            Unit::S => 1000.0,
            Unit::Min => 60_000.0,
            Unit::None => 1.0,
        }
    }

    pub fn base_of(kind: UnitKind) -> Unit {
        match kind {
            UnitKind::Length => Unit::Mm,
            UnitKind::Time => Unit::Ms,
            UnitKind::Dimensionless => Unit::None,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Unit::Mm => "mm",
            Unit::Cm => "cm",
            Unit::M => "m",
            Unit::Ms => "ms",
            Unit::S => "s",
            Unit::Min => "min",
            Unit::None => "none",
        }
    }

    /// Recognizes the unit symbols of the language (`none` included for the
    /// benefit of scene documents; it never appears in RPSL source).
    pub fn parse_symbol(s: &str) -> Option<Unit> {
        Some(match s {
            "mm" => Unit::Mm,
            "cm" => Unit::Cm,
            "m" => Unit::M,
            "ms" => Unit::Ms,
            "s" => Unit::S,
            "min" => Unit::Min,
            "none" => Unit::None,
            _ => return None,
        })
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A real value paired with its unit. Quantities of different unit kinds are
/// never coerced into one another.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    pub value: f64,
    pub unit: Unit,
}

impl Quantity {
    pub fn new(value: f64, unit: Unit) -> Self {
        Quantity { value, unit }
    }

    pub fn dimensionless(value: f64) -> Self {
        Quantity {
            value,
            unit: Unit::None,
        }
    }

    /// The value expressed in the base unit of its kind.
    pub fn to_base(self) -> f64 {
        self.value * self.unit.factor_to_base()
    }

    /// The same quantity re-expressed in its kind's base unit.
    pub fn in_base_unit(self) -> Quantity {
        Quantity {
            value: self.to_base(),
            unit: Unit::base_of(self.unit.kind()),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.unit {
            Unit::None => write!(f, "{}", self.value),
            u => write!(f, "{}{}", self.value, u),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitError {
    KindMismatch { from: Unit, to: Unit },
}

impl fmt::Display for UnitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitError::KindMismatch { from, to } => write!(
                f,
                "cannot convert {} ({}) to {} ({})",
                from,
                from.kind(),
                to,
                to.kind()
            ),
        }
    }
}

/// Re-expresses `q` in `target`. Fails when the unit kinds differ; kinds are
/// never coerced.
pub fn convert_quantity(q: Quantity, target: Unit) -> Result<Quantity, UnitError> {
    if q.unit.kind() != target.kind() {
        return Err(UnitError::KindMismatch {
            from: q.unit,
            to: target,
        });
    }
    Ok(Quantity {
        value: q.value * q.unit.factor_to_base() / target.factor_to_base(),
        unit: target,
    })
}
