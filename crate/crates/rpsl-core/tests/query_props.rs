//! Property tests for query evaluation, including a small independent
//! oracle that recomputes candidate gating, conditions, and similarity from
//! first principles.

use proptest::prelude::*;
use std::sync::OnceLock;

use rpsl_core::analyzer::{
    resolve_and_check, ResolvedCondition, ResolvedModel, TargetKind, TargetRef,
};
use rpsl_core::model::{builtin_registry, DimRef, Knoxel, Quantity, Unit};
use rpsl_core::query::{
    evaluate_specification, InstanceRecord, Pose, QueryResult, QueryValue, Scene,
};
use rpsl_core::span::{FileId, Span};
use rpsl_core::syntax::ast::{RelOp, Selector};
use rpsl_core::syntax::parse_source;

const COMBINED: &str = include_str!("../../../corpus/boxes.rpsl");

fn model() -> &'static ResolvedModel {
    static MODEL: OnceLock<ResolvedModel> = OnceLock::new();
    MODEL.get_or_init(|| {
        let (ast, diags) = parse_source(COMBINED, FileId(0));
        assert!(diags.is_empty());
        let (model, diags) = resolve_and_check(&ast, &builtin_registry());
        assert!(!rpsl_core::diag::has_errors(&diags));
        model
    })
}

const DIMS: [(&str, &str); 6] = [
    ("Size", "Height"),
    ("Size", "Width"),
    ("Size", "Length"),
    ("RGB", "Red"),
    ("RGB", "Green"),
    ("RGB", "Blue"),
];

/// Instances carry a random subset of the six myBox dimensions so that both
/// candidate gates (full region membership, full dimension coverage) get
/// exercised.
fn instance_strategy() -> impl Strategy<Value = (Vec<Option<f64>>, Option<(f64, f64, f64)>)> {
    (
        prop::collection::vec(prop::option::weighted(0.85, 0.0..260.0f64), 6),
        prop::option::of((0.0..500.0f64, 0.0..500.0f64, 0.0..500.0f64)),
    )
}

fn build_scene(raw: Vec<(Vec<Option<f64>>, Option<(f64, f64, f64)>)>) -> Scene {
    let instances = raw
        .into_iter()
        .enumerate()
        .map(|(i, (values, pose))| {
            let mut knoxel = Knoxel::new();
            for (slot, v) in values.iter().enumerate() {
                if let Some(v) = v {
                    let (domain, dim) = DIMS[slot];
                    let q = if domain == "Size" {
                        Quantity::new(*v, Unit::Mm)
                    } else {
                        Quantity::dimensionless(v.floor())
                    };
                    knoxel.insert(DimRef::new(domain, dim), q);
                }
            }
            InstanceRecord {
                id: format!("i{i:03}"),
                knoxel,
                pose: pose.map(|(x, y, z)| Pose {
                    x,
                    y,
                    z,
                    qx: 0.0,
                    qy: 0.0,
                    qz: 0.0,
                    qw: 1.0,
                }),
                stamp_ms: None,
            }
        })
        .collect();
    Scene {
        frame: "base_link".into(),
        stamp_ms: 0,
        instances,
    }
}

fn scene_strategy(max: usize) -> impl Strategy<Value = Scene> {
    prop::collection::vec(instance_strategy(), 0..max).prop_map(build_scene)
}

fn compare_strategy() -> impl Strategy<Value = ResolvedCondition> {
    (
        0usize..6,
        prop::sample::select(vec![RelOp::Eq, RelOp::Ne, RelOp::Lt, RelOp::Le, RelOp::Gt, RelOp::Ge]),
        0.0..260.0f64,
    )
        .prop_map(|(slot, op, value)| {
            let (domain, dim) = DIMS[slot];
            ResolvedCondition::Compare {
                dim: DimRef::new(domain, dim),
                op,
                value,
                span: Span::detached(),
            }
        })
}

fn similarity_strategy() -> impl Strategy<Value = ResolvedCondition> {
    (
        prop::sample::select(vec![RelOp::Eq, RelOp::Ne, RelOp::Lt, RelOp::Le, RelOp::Gt, RelOp::Ge]),
        0.0..4.0f64,
    )
        .prop_map(|(op, value)| ResolvedCondition::Similarity {
            op,
            value,
            span: Span::detached(),
        })
}

fn condition_strategy(prototype_target: bool) -> impl Strategy<Value = ResolvedCondition> {
    let leaf = if prototype_target {
        prop_oneof![3 => compare_strategy(), 1 => similarity_strategy()].boxed()
    } else {
        compare_strategy().boxed()
    };
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(l, r)| ResolvedCondition::And(Box::new(l), Box::new(r))),
            (inner.clone(), inner)
                .prop_map(|(l, r)| ResolvedCondition::Or(Box::new(l), Box::new(r))),
        ]
    })
}

fn spec_strategy() -> impl Strategy<Value = rpsl_core::analyzer::ResolvedSpec> {
    (any::<bool>(), any::<bool>(), any::<bool>()).prop_flat_map(
        |(prototype, pose, with_cond)| {
            let target = if prototype {
                TargetRef {
                    kind: TargetKind::Prototype,
                    key: "darkBlueBox".into(),
                }
            } else {
                TargetRef {
                    kind: TargetKind::Concept,
                    key: "myConcepts.myBox".into(),
                }
            };
            let selector = if pose { Selector::Pose } else { Selector::Amount };
            let cond = if with_cond {
                prop::option::of(condition_strategy(prototype)).boxed()
            } else {
                Just(None).boxed()
            };
            cond.prop_map(move |condition| rpsl_core::analyzer::ResolvedSpec {
                name: "propSpec".into(),
                selector,
                target: target.clone(),
                condition,
                deadline_ms: None,
                name_span: Span::detached(),
            })
        },
    )
}

// --- independent oracle ----------------------------------------------------

fn oracle_candidate(model: &ResolvedModel, spec: &rpsl_core::analyzer::ResolvedSpec, inst: &InstanceRecord) -> bool {
    let concept = model.target_concept(&spec.target).unwrap();
    for (dim, interval) in &concept.region.intervals {
        let Some(v) = inst.knoxel.get_base(dim) else {
            return false;
        };
        if spec.target.kind == TargetKind::Concept && !(interval.lo <= v && v <= interval.hi) {
            return false;
        }
    }
    true
}

fn oracle_similarity(model: &ResolvedModel, inst: &InstanceRecord) -> f64 {
    let proto = &model.prototypes["darkBlueBox"];
    let concept = &model.concepts[&proto.concept];
    let mut sum = 0.0;
    for (dim, interval) in &concept.region.intervals {
        let a = inst.knoxel.get_base(dim).unwrap();
        let b = proto.point.get_base(dim).unwrap();
        let width = if interval.hi > interval.lo {
            interval.hi - interval.lo
        } else if dim.domain == "RGB" {
            255.0
        } else {
            1.0
        };
        let d = (a - b) / width;
        sum += d * d;
    }
    sum.sqrt()
}

fn oracle_condition(
    model: &ResolvedModel,
    cond: &ResolvedCondition,
    inst: &InstanceRecord,
) -> bool {
    match cond {
        ResolvedCondition::Compare { dim, op, value, .. } => match inst.knoxel.get_base(dim) {
            None => false,
            Some(v) => oracle_relop(v, *op, *value, false),
        },
        ResolvedCondition::Similarity { op, value, .. } => {
            oracle_relop(oracle_similarity(model, inst), *op, *value, true)
        }
        ResolvedCondition::And(l, r) => {
            oracle_condition(model, l, inst) && oracle_condition(model, r, inst)
        }
        ResolvedCondition::Or(l, r) => {
            oracle_condition(model, l, inst) || oracle_condition(model, r, inst)
        }
    }
}

fn oracle_relop(v: f64, op: RelOp, rhs: f64, fuzzy: bool) -> bool {
    match op {
        RelOp::Eq if fuzzy => (v - rhs).abs() <= 1e-9,
        RelOp::Ne if fuzzy => (v - rhs).abs() > 1e-9,
        RelOp::Eq => v == rhs,
        RelOp::Ne => v != rhs,
        RelOp::Lt => v < rhs,
        RelOp::Le => v <= rhs,
        RelOp::Gt => v > rhs,
        RelOp::Ge => v >= rhs,
    }
}

fn oracle_evaluate(
    model: &ResolvedModel,
    spec: &rpsl_core::analyzer::ResolvedSpec,
    scene: &Scene,
) -> (Vec<String>, Option<Vec<(String, Pose)>>) {
    let mut ids: Vec<String> = scene
        .instances
        .iter()
        .filter(|inst| {
            oracle_candidate(model, spec, inst)
                && spec
                    .condition
                    .as_ref()
                    .map_or(true, |c| oracle_condition(model, c, inst))
        })
        .map(|i| i.id.clone())
        .collect();
    ids.sort();
    let poses = match spec.selector {
        Selector::Amount => None,
        Selector::Pose => {
            let mut ps: Vec<(String, Pose)> = scene
                .instances
                .iter()
                .filter(|i| ids.contains(&i.id))
                .filter_map(|i| i.pose.map(|p| (i.id.clone(), p)))
                .collect();
            ps.sort_by(|a, b| a.0.cmp(&b.0));
            Some(ps)
        }
    };
    (ids, poses)
}

fn count_of(result: &QueryResult) -> usize {
    result.matched_ids.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn engine_matches_the_oracle(scene in scene_strategy(24), spec in spec_strategy()) {
        let model = model();
        let result = evaluate_specification(&spec, &scene, model);
        let (ids, poses) = oracle_evaluate(model, &spec, &scene);
        prop_assert_eq!(&result.matched_ids, &ids);
        match (&result.value, poses) {
            (QueryValue::Amount { count }, None) => prop_assert_eq!(*count, ids.len()),
            (QueryValue::Poses { poses: got }, Some(want)) => prop_assert_eq!(got, &want),
            other => prop_assert!(false, "selector/value mismatch: {other:?}"),
        }
    }

    #[test]
    fn adding_an_instance_is_monotone(
        scene in scene_strategy(16),
        extra in instance_strategy(),
        spec in spec_strategy(),
    ) {
        let model = model();
        let before = count_of(&evaluate_specification(&spec, &scene, model));
        let mut bigger = scene;
        let mut extra_scene = build_scene(vec![extra]);
        let mut inst = extra_scene.instances.pop().unwrap();
        inst.id = "i999".into();
        bigger.instances.push(inst);
        let after = count_of(&evaluate_specification(&spec, &bigger, model));
        prop_assert!(after >= before);
        prop_assert!(after <= before + 1);
    }

    #[test]
    fn results_ignore_instance_order(
        scene in scene_strategy(16).prop_flat_map(|s| {
            let n = s.instances.len();
            (Just(s), prop::collection::vec(any::<u16>(), n))
        }),
        spec in spec_strategy(),
    ) {
        let (scene, keys) = scene;
        let model = model();
        let base = evaluate_specification(&spec, &scene, model);

        let mut shuffled = scene.clone();
        let mut paired: Vec<_> = keys.iter().copied().zip(shuffled.instances).collect();
        paired.sort_by_key(|(k, _)| *k);
        shuffled.instances = paired.into_iter().map(|(_, i)| i).collect();

        let permuted = evaluate_specification(&spec, &shuffled, model);
        prop_assert_eq!(base, permuted);
    }

    #[test]
    fn conjunction_never_beats_either_operand(
        scene in scene_strategy(24),
        a in condition_strategy(true),
        b in condition_strategy(true),
    ) {
        let model = model();
        let mk = |cond: Option<ResolvedCondition>| rpsl_core::analyzer::ResolvedSpec {
            name: "conj".into(),
            selector: Selector::Amount,
            target: TargetRef { kind: TargetKind::Prototype, key: "darkBlueBox".into() },
            condition: cond,
            deadline_ms: None,
            name_span: Span::detached(),
        };
        let ca = count_of(&evaluate_specification(&mk(Some(a.clone())), &scene, model));
        let cb = count_of(&evaluate_specification(&mk(Some(b.clone())), &scene, model));
        let cab = count_of(&evaluate_specification(
            &mk(Some(ResolvedCondition::And(Box::new(a), Box::new(b)))),
            &scene,
            model,
        ));
        prop_assert!(cab <= ca.min(cb));
    }

    #[test]
    fn matched_ids_are_sorted_and_unique(scene in scene_strategy(24), spec in spec_strategy()) {
        let result = evaluate_specification(&spec, &scene, model());
        let mut sorted = result.matched_ids.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(result.matched_ids, sorted);
    }
}
