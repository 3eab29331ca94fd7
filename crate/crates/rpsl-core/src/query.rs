//! Scene-snapshot query evaluation: `get Amount|Pose from target where ...`.
//!
//! Evaluation is pure over an immutable [`Scene`] and
//! [`ResolvedModel`](crate::analyzer::ResolvedModel); different
//! specifications can be evaluated concurrently against the same scene.
//!
//! Candidate rules differ by target kind. A concept target admits the
//! instances its region contains. A prototype target admits every instance
//! that carries all of the prototype concept's dimensions, *without* region
//! gating — a prototype may legitimately sit outside its own concept's
//! region, and "looks exactly like the prototype" must stay answerable.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::analyzer::{ResolvedCondition, ResolvedModel, ResolvedPrototype, ResolvedSpec, TargetKind};
use crate::math;
use crate::model::{euclidean_distance, DistanceAxis, DistanceError, Knoxel, SIMILARITY_EPSILON};
use crate::syntax::ast::{RelOp, Selector};

/// A position plus orientation quaternion; lengths in mm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub qx: f64,
    pub qy: f64,
    pub qz: f64,
    pub qw: f64,
}

/// One perceived object: quality values in base units plus an optional pose.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceRecord {
    pub id: String,
    pub knoxel: Knoxel,
    pub pose: Option<Pose>,
    pub stamp_ms: Option<u64>,
}

/// A perception snapshot. Instance ids are unique; loaders enforce this.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub frame: String,
    pub stamp_ms: u64,
    pub instances: Vec<InstanceRecord>,
}

impl Scene {
    pub fn empty() -> Self {
        Scene {
            frame: String::new(),
            stamp_ms: 0,
            instances: Vec::new(),
        }
    }
}

/// What a selector produced.
#[derive(Debug, Clone, PartialEq)]
pub enum QueryValue {
    Amount { count: usize },
    /// `(id, pose)` pairs in ascending id order; matches without a pose are
    /// absent here but still listed in `matched_ids`.
    Poses { poses: Vec<(String, Pose)> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct QueryResult {
    pub spec: String,
    pub value: QueryValue,
    /// Ids of all matching instances, ascending.
    pub matched_ids: Vec<String>,
    /// Human-readable remarks (missing dimensions, pose-less matches),
    /// sorted and deduplicated.
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum QueryError {
    UnknownSpec(String),
    /// The name resolves to a dependency graph, which has no single
    /// scene-level answer; those run through the executor.
    TargetNotData(String),
}

impl core::fmt::Display for QueryError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            QueryError::UnknownSpec(n) => write!(f, "unknown specification `{n}`"),
            QueryError::TargetNotData(n) => {
                write!(f, "{n} is a DependencyGraph; use run")
            }
        }
    }
}

/// The condition's frame of reference: the concept gives comparison
/// dimensions, and a prototype additionally anchors `Similarity`.
pub enum EvalTarget<'a> {
    Concept,
    Prototype {
        prototype: &'a ResolvedPrototype,
        axes: &'a [DistanceAxis],
    },
}

/// Evaluates one resolved condition against one instance. Comparisons read
/// the instance in base units; a dimension the instance lacks makes the
/// comparison false and leaves a note. `and`/`or` short-circuit
/// left-to-right, so notes reflect only the comparisons actually reached.
pub fn evaluate_condition(
    cond: &ResolvedCondition,
    inst: &InstanceRecord,
    target: &EvalTarget<'_>,
    notes: &mut Vec<String>,
) -> bool {
    match cond {
        ResolvedCondition::Compare { dim, op, value, .. } => {
            let Some(v) = inst.knoxel.get_base(dim) else {
                notes.push(format!(
                    "instance `{}` has no value for `{dim}`; comparison is false",
                    inst.id
                ));
                return false;
            };
            apply_relop(v, *op, *value)
        }
        ResolvedCondition::Similarity { op, value, .. } => {
            let EvalTarget::Prototype { prototype, axes } = target else {
                // The analyzer rejects Similarity without a prototype; an
                // ill-typed caller gets a plain non-match.
                return false;
            };
            match euclidean_distance(&inst.knoxel, &prototype.point, axes, true) {
                Ok(d) => apply_relop_similarity(d, *op, *value),
                Err(DistanceError::MissingDimension { dim, .. }) => {
                    notes.push(format!(
                        "instance `{}` has no value for `{dim}`; comparison is false",
                        inst.id
                    ));
                    false
                }
            }
        }
        ResolvedCondition::And(l, r) => {
            evaluate_condition(l, inst, target, notes) && evaluate_condition(r, inst, target, notes)
        }
        ResolvedCondition::Or(l, r) => {
            evaluate_condition(l, inst, target, notes) || evaluate_condition(r, inst, target, notes)
        }
    }
}

fn apply_relop(v: f64, op: RelOp, rhs: f64) -> bool {
    match op {
        RelOp::Eq => v == rhs,
        RelOp::Ne => v != rhs,
        RelOp::Lt => v < rhs,
        RelOp::Le => v <= rhs,
        RelOp::Gt => v > rhs,
        RelOp::Ge => v >= rhs,
    }
}

/// In similarity space `==`/`!=` tolerate float noise; the orderings stay
/// exact.
fn apply_relop_similarity(v: f64, op: RelOp, rhs: f64) -> bool {
    match op {
        RelOp::Eq => math::abs(v - rhs) <= SIMILARITY_EPSILON,
        RelOp::Ne => math::abs(v - rhs) > SIMILARITY_EPSILON,
        _ => apply_relop(v, op, rhs),
    }
}

/// Evaluates a Data specification against a scene.
pub fn evaluate_specification(
    spec: &ResolvedSpec,
    scene: &Scene,
    model: &ResolvedModel,
) -> QueryResult {
    let concept = model
        .target_concept(&spec.target)
        .expect("resolved specs target concepts present in the model");

    let axes;
    let target = match spec.target.kind {
        TargetKind::Concept => EvalTarget::Concept,
        TargetKind::Prototype => {
            axes = model.distance_axes(concept);
            EvalTarget::Prototype {
                prototype: &model.prototypes[&spec.target.key],
                axes: &axes,
            }
        }
    };

    let mut notes: Vec<String> = Vec::new();
    let mut matched: Vec<&InstanceRecord> = Vec::new();
    for inst in &scene.instances {
        let candidate = match spec.target.kind {
            TargetKind::Concept => concept.region.contains(&inst.knoxel),
            TargetKind::Prototype => has_all_dims(&inst.knoxel, concept.region.dims()),
        };
        if !candidate {
            continue;
        }
        let ok = match &spec.condition {
            Some(cond) => evaluate_condition(cond, inst, &target, &mut notes),
            None => true,
        };
        if ok {
            matched.push(inst);
        }
    }

    let mut matched_ids: Vec<String> = matched.iter().map(|i| i.id.clone()).collect();
    matched_ids.sort();

    let value = match spec.selector {
        Selector::Amount => QueryValue::Amount {
            count: matched_ids.len(),
        },
        Selector::Pose => {
            let mut poses: Vec<(String, Pose)> = Vec::new();
            for inst in &matched {
                match inst.pose {
                    Some(p) => poses.push((inst.id.clone(), p)),
                    None => notes.push(format!("instance `{}` matched but has no pose", inst.id)),
                }
            }
            poses.sort_by(|a, b| a.0.cmp(&b.0));
            QueryValue::Poses { poses }
        }
    };

    notes.sort();
    notes.dedup();
    QueryResult {
        spec: spec.name.clone(),
        value,
        matched_ids,
        notes,
    }
}

/// Evaluates the named specification, failing on unknown names and on
/// dependency graphs.
pub fn evaluate_by_name(
    name: &str,
    scene: &Scene,
    model: &ResolvedModel,
) -> Result<QueryResult, QueryError> {
    if let Some(spec) = model.specifications.get(name) {
        return Ok(evaluate_specification(spec, scene, model));
    }
    if model.graphs.contains_key(name) {
        return Err(QueryError::TargetNotData(name.into()));
    }
    Err(QueryError::UnknownSpec(name.into()))
}

fn has_all_dims<'a>(
    knoxel: &Knoxel,
    mut dims: impl Iterator<Item = &'a crate::model::DimRef>,
) -> bool {
    dims.all(|d| knoxel.contains_dim(d))
}
