//! Knoxels (points in a conceptual space) and prototypes.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use super::unit::Quantity;

/// A quality dimension addressed as `Domain.Dimension`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimRef {
    pub domain: String,
    pub dimension: String,
}

impl DimRef {
    pub fn new(domain: &str, dimension: &str) -> Self {
        DimRef {
            domain: String::from(domain),
            dimension: String::from(dimension),
        }
    }
}

impl fmt::Display for DimRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.domain, self.dimension)
    }
}

impl FromStr for DimRef {
    type Err = ();

    /// Parses the `Domain.Dimension` spelling used by scene documents.
    fn from_str(s: &str) -> Result<Self, ()> {
        let mut parts = s.split('.');
        match (parts.next(), parts.next(), parts.next()) {
            (Some(domain), Some(dimension), None) if !domain.is_empty() && !dimension.is_empty() => {
                Ok(DimRef::new(domain, dimension))
            }
            _ => Err(()),
        }
    }
}

/// A single point in a conceptual space: at most one quantity per qualified
/// dimension.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Knoxel {
    coords: BTreeMap<DimRef, Quantity>,
}

impl Knoxel {
    pub fn new() -> Self {
        Knoxel::default()
    }

    /// Sets the value for a dimension, replacing any previous one.
    pub fn insert(&mut self, dim: DimRef, q: Quantity) {
        self.coords.insert(dim, q);
    }

    pub fn with(mut self, dim: DimRef, q: Quantity) -> Self {
        self.insert(dim, q);
        self
    }

    pub fn get(&self, dim: &DimRef) -> Option<Quantity> {
        self.coords.get(dim).copied()
    }

    /// Value in the base unit of the quantity's kind.
    pub fn get_base(&self, dim: &DimRef) -> Option<f64> {
        self.coords.get(dim).map(|q| q.to_base())
    }

    pub fn contains_dim(&self, dim: &DimRef) -> bool {
        self.coords.contains_key(dim)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DimRef, &Quantity)> {
        self.coords.iter()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

impl FromIterator<(DimRef, Quantity)> for Knoxel {
    fn from_iter<I: IntoIterator<Item = (DimRef, Quantity)>>(iter: I) -> Self {
        Knoxel {
            coords: iter.into_iter().collect(),
        }
    }
}

/// A named reference point for similarity queries. The point holds exactly
/// one value per dimension of the concept's used domains; that is enforced
/// during analysis, not here.
#[derive(Debug, Clone, PartialEq)]
pub struct Prototype {
    pub name: String,
    /// Qualified name (`namespace.concept`) of the concept this prototype
    /// instantiates.
    pub concept: String,
    pub point: Knoxel,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Unit;

    #[test]
    fn dimref_roundtrips_through_display() {
        let d = DimRef::new("Size", "Height");
        assert_eq!(alloc::format!("{d}"), "Size.Height");
        assert_eq!("Size.Height".parse::<DimRef>().unwrap(), d);
        assert!("Size".parse::<DimRef>().is_err());
        assert!("Size.Height.Extra".parse::<DimRef>().is_err());
        assert!(".Height".parse::<DimRef>().is_err());
    }

    #[test]
    fn knoxel_keeps_one_value_per_dimension() {
        let dim = DimRef::new("Size", "Height");
        let mut k = Knoxel::new();
        k.insert(dim.clone(), Quantity::new(2.0, Unit::Cm));
        k.insert(dim.clone(), Quantity::new(30.0, Unit::Mm));
        assert_eq!(k.len(), 1);
        assert_eq!(k.get_base(&dim), Some(30.0));
    }
}
