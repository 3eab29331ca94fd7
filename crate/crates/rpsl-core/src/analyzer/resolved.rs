//! The analyzer's output: a model with every name resolved and every value
//! converted to base units.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::model::{ConceptRegion, DimRef, DistanceAxis, Domain, Knoxel};
use crate::span::Span;
use crate::syntax::ast::{RelOp, Selector};

/// A fully resolved compilation unit. Only clean entities appear; anything
/// that produced an error diagnostic is left out.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ResolvedModel {
    /// Built-in and user-declared domains, by name.
    pub domains: BTreeMap<String, Domain>,
    /// Concepts keyed by qualified name (`namespace.concept`).
    pub concepts: BTreeMap<String, ResolvedConcept>,
    /// Prototypes keyed by their (global) name.
    pub prototypes: BTreeMap<String, ResolvedPrototype>,
    /// Data specifications by name.
    pub specifications: BTreeMap<String, ResolvedSpec>,
    /// Dependency-graph specifications by name.
    pub graphs: BTreeMap<String, GraphSpec>,
}

impl ResolvedModel {
    /// The concept a specification target ultimately refers to: the target
    /// itself, or the prototype's concept.
    pub fn target_concept(&self, target: &TargetRef) -> Option<&ResolvedConcept> {
        match target.kind {
            TargetKind::Concept => self.concepts.get(&target.key),
            TargetKind::Prototype => {
                let p = self.prototypes.get(&target.key)?;
                self.concepts.get(&p.concept)
            }
        }
    }

    /// Distance axes over every dimension of the concept's region, carrying
    /// the region interval and the dimension's canonical range. Ordered by
    /// dimension for determinism.
    pub fn distance_axes(&self, concept: &ResolvedConcept) -> Vec<DistanceAxis> {
        self.region_axes(&concept.region)
    }

    fn region_axes(&self, region: &ConceptRegion) -> Vec<DistanceAxis> {
        region
            .intervals
            .iter()
            .map(|(dim, interval)| {
                let mut axis = DistanceAxis::new(dim.clone()).with_interval(*interval);
                if let Some(canonical) = self
                    .domains
                    .get(&dim.domain)
                    .and_then(|d| d.dimension(&dim.dimension))
                    .and_then(|qd| qd.canonical)
                {
                    axis = axis.with_canonical(canonical);
                }
                axis
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedConcept {
    /// Qualified name, `namespace.concept`.
    pub name: String,
    /// Names of the domains the concept uses, in declaration order.
    pub used_domains: Vec<String>,
    pub region: ConceptRegion,
    pub name_span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedPrototype {
    pub name: String,
    /// Qualified name of the concept this prototype instantiates.
    pub concept: String,
    /// One value per dimension of the concept's domains, in base units.
    pub point: Knoxel,
    /// Where each value was written, for lint spans.
    pub value_spans: BTreeMap<DimRef, Span>,
    pub name_span: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetKind {
    Concept,
    Prototype,
}

/// What a specification's `from` clause points at.
#[derive(Debug, Clone, PartialEq)]
pub struct TargetRef {
    pub kind: TargetKind,
    /// Key into [`ResolvedModel::concepts`] or [`ResolvedModel::prototypes`].
    pub key: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedSpec {
    pub name: String,
    pub selector: Selector,
    pub target: TargetRef,
    pub condition: Option<ResolvedCondition>,
    /// Deadline converted to milliseconds.
    pub deadline_ms: Option<u64>,
    pub name_span: Span,
}

/// A condition with dimension paths resolved and values in base units.
/// Parentheses are gone; the tree shape alone fixes evaluation order.
#[derive(Debug, Clone, PartialEq)]
pub enum ResolvedCondition {
    /// `dim relop value` — `value` in the base unit of the dimension's kind.
    Compare {
        dim: DimRef,
        op: RelOp,
        value: f64,
        span: Span,
    },
    /// `Similarity(EuclideanDistance) relop value` against the target
    /// prototype's point.
    Similarity { op: RelOp, value: f64, span: Span },
    And(Box<ResolvedCondition>, Box<ResolvedCondition>),
    Or(Box<ResolvedCondition>, Box<ResolvedCondition>),
}

impl ResolvedCondition {
    pub fn span(&self) -> Span {
        match self {
            ResolvedCondition::Compare { span, .. }
            | ResolvedCondition::Similarity { span, .. } => *span,
            ResolvedCondition::And(l, r) | ResolvedCondition::Or(l, r) => l.span().to(r.span()),
        }
    }
}

/// A dependency-graph specification: edges plus the node set they induce.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSpec {
    pub name: String,
    pub nodes: BTreeSet<String>,
    /// `(from, to)` meaning `from before to`.
    pub edges: BTreeSet<(String, String)>,
    pub name_span: Span,
}
