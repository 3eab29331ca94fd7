//! Model lints: warnings about models that are well-formed but suspicious.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::diag::{codes, Diagnostic};
use crate::model::DimRef;
use crate::syntax::ast::RelOp;

use super::resolved::{ResolvedCondition, ResolvedModel, TargetKind};

/// Runs all lints over a clean model.
pub fn lint_model(model: &ResolvedModel) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    lint_prototype_membership(model, &mut out);
    lint_condition_satisfiability(model, &mut out);
    out
}

/// A prototype is meant to be the most typical member of its concept, so a
/// coordinate outside the concept region deserves a warning (it is not an
/// error: regions built from sparse polytopes routinely undershoot).
fn lint_prototype_membership(model: &ResolvedModel, out: &mut Vec<Diagnostic>) {
    for proto in model.prototypes.values() {
        let concept = &model.concepts[&proto.concept];
        for (dim, interval) in &concept.region.intervals {
            let value = proto
                .point
                .get_base(dim)
                .expect("prototype covers every region dimension");
            if !interval.contains(value) {
                out.push(Diagnostic::warning(
                    codes::PROTOTYPE_OUTSIDE_REGION,
                    format!(
                        "prototype `{}` lies outside `{}` on `{dim}`: \
                         {value} is not in [{}, {}]",
                        proto.name, proto.concept, interval.lo, interval.hi
                    ),
                    proto.value_spans[dim],
                ));
            }
        }
    }
}

/// Conservative satisfiability check for where-clauses: each comparison
/// refines a per-dimension interval, `or` hulls the branch boxes. Only a
/// clause that cannot match under any instance values is reported, so a
/// "maybe" never warns.
fn lint_condition_satisfiability(model: &ResolvedModel, out: &mut Vec<Diagnostic>) {
    for spec in model.specifications.values() {
        let Some(cond) = &spec.condition else { continue };
        let concept = model
            .target_concept(&spec.target)
            .expect("clean spec targets a clean concept");

        let mut boxes: Box_ = BTreeMap::new();
        for (dim, interval) in &concept.region.intervals {
            // Instances matched against a concept are gated by its region;
            // against a prototype any value can appear.
            let seed = match spec.target.kind {
                TargetKind::Concept => Bound::closed(interval.lo, interval.hi),
                TargetKind::Prototype => Bound::full(),
            };
            boxes.insert(Axis::Dim(dim.clone()), seed);
        }
        boxes.insert(Axis::Similarity, Bound::at_least(0.0));

        if refine(cond, boxes).is_none() {
            out.push(Diagnostic::warning(
                codes::UNSATISFIABLE_CONDITION,
                format!(
                    "where-clause of `{}` can never be satisfied by an instance of `{}`",
                    spec.name, spec.target.key
                ),
                cond.span(),
            ));
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Axis {
    Dim(DimRef),
    Similarity,
}

type Box_ = BTreeMap<Axis, Bound>;

/// An interval with independently open or closed ends; infinities model
/// missing ends.
#[derive(Clone, Copy, Debug)]
struct Bound {
    lo: f64,
    hi: f64,
    lo_open: bool,
    hi_open: bool,
}

impl Bound {
    fn full() -> Self {
        Bound {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
            lo_open: true,
            hi_open: true,
        }
    }

    fn closed(lo: f64, hi: f64) -> Self {
        Bound {
            lo,
            hi,
            lo_open: false,
            hi_open: false,
        }
    }

    fn at_least(lo: f64) -> Self {
        Bound {
            lo,
            hi: f64::INFINITY,
            lo_open: false,
            hi_open: true,
        }
    }

    fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && (self.lo_open || self.hi_open))
    }

    fn is_exactly(&self, v: f64) -> bool {
        self.lo == v && self.hi == v && !self.lo_open && !self.hi_open
    }

    fn intersect(a: Bound, b: Bound) -> Bound {
        let (lo, lo_open) = if a.lo > b.lo {
            (a.lo, a.lo_open)
        } else if b.lo > a.lo {
            (b.lo, b.lo_open)
        } else {
            (a.lo, a.lo_open || b.lo_open)
        };
        let (hi, hi_open) = if a.hi < b.hi {
            (a.hi, a.hi_open)
        } else if b.hi < a.hi {
            (b.hi, b.hi_open)
        } else {
            (a.hi, a.hi_open || b.hi_open)
        };
        Bound {
            lo,
            hi,
            lo_open,
            hi_open,
        }
    }

    fn hull(a: Bound, b: Bound) -> Bound {
        let (lo, lo_open) = if a.lo < b.lo {
            (a.lo, a.lo_open)
        } else if b.lo < a.lo {
            (b.lo, b.lo_open)
        } else {
            (a.lo, a.lo_open && b.lo_open)
        };
        let (hi, hi_open) = if a.hi > b.hi {
            (a.hi, a.hi_open)
        } else if b.hi > a.hi {
            (b.hi, b.hi_open)
        } else {
            (a.hi, a.hi_open && b.hi_open)
        };
        Bound {
            lo,
            hi,
            lo_open,
            hi_open,
        }
    }

    fn apply(self, op: RelOp, v: f64) -> Option<Bound> {
        let constraint = match op {
            RelOp::Eq => Bound::closed(v, v),
            RelOp::Ne => {
                // Only an exact single-point interval is emptied; carving a
                // point out of a wider interval keeps it satisfiable.
                if self.is_exactly(v) {
                    return None;
                }
                return Some(self);
            }
            RelOp::Lt => Bound {
                lo: f64::NEG_INFINITY,
                hi: v,
                lo_open: true,
                hi_open: true,
            },
            RelOp::Le => Bound {
                lo: f64::NEG_INFINITY,
                hi: v,
                lo_open: true,
                hi_open: false,
            },
            RelOp::Gt => Bound {
                lo: v,
                hi: f64::INFINITY,
                lo_open: true,
                hi_open: true,
            },
            RelOp::Ge => Bound {
                lo: v,
                hi: f64::INFINITY,
                lo_open: false,
                hi_open: true,
            },
        };
        let merged = Bound::intersect(self, constraint);
        if merged.is_empty() {
            None
        } else {
            Some(merged)
        }
    }
}

/// `None` means the condition is unsatisfiable within `boxes`.
fn refine(cond: &ResolvedCondition, mut boxes: Box_) -> Option<Box_> {
    match cond {
        ResolvedCondition::Compare {
            dim, op, value, ..
        } => {
            let axis = Axis::Dim(dim.clone());
            let cur = boxes.get(&axis).copied().unwrap_or_else(Bound::full);
            let next = cur.apply(*op, *value)?;
            boxes.insert(axis, next);
            Some(boxes)
        }
        ResolvedCondition::Similarity { op, value, .. } => {
            let cur = boxes
                .get(&Axis::Similarity)
                .copied()
                .unwrap_or_else(|| Bound::at_least(0.0));
            let next = cur.apply(*op, *value)?;
            boxes.insert(Axis::Similarity, next);
            Some(boxes)
        }
        ResolvedCondition::And(l, r) => refine(l, boxes).and_then(|b| refine(r, b)),
        ResolvedCondition::Or(l, r) => {
            let left = refine(l, boxes.clone());
            let right = refine(r, boxes);
            match (left, right) {
                (None, None) => None,
                (Some(b), None) | (None, Some(b)) => Some(b),
                (Some(a), Some(b)) => {
                    let mut merged = a;
                    for (axis, bound) in b {
                        merged
                            .entry(axis)
                            .and_modify(|cur| *cur = Bound::hull(*cur, bound))
                            .or_insert(bound);
                    }
                    Some(merged)
                }
            }
        }
    }
}
