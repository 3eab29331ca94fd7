//! Static analysis: turns a parsed [`Ast`](crate::syntax::ast::Ast) into a
//! [`ResolvedModel`] whose names, units and references are all checked.
//!
//! The entry point is [`resolve_and_check`]. It never stops at the first
//! problem: every diagnostic the input deserves is collected, and entities
//! that check out stay in the model even when their neighbours do not.
//!
//! Error codes are stable and documented in [`crate::diag::codes`]; warnings
//! (W001, W002) come from [`lint_model`] and never block a model.

mod lints;
mod resolve;
mod resolved;

pub use lints::lint_model;
pub use resolve::resolve_and_check;
pub use resolved::{
    GraphSpec, ResolvedCondition, ResolvedConcept, ResolvedModel, ResolvedPrototype, ResolvedSpec,
    TargetKind, TargetRef,
};
