//! Core toolchain for the Robot Perception Specification Language (RPSL).
//!
//! RPSL is a small declarative language for describing the task knowledge a
//! robot perception pipeline is expected to deliver: concepts are convex
//! regions in a conceptual space, prototypes are reference points inside
//! those spaces, and specifications are SQL-flavoured queries over perceived
//! object instances, optionally chained into dependency graphs with
//! deadlines.
//!
//! The crate is organised as a classic front end plus evaluation back end:
//!
//! - [`syntax`] — lexer, recursive-descent parser, span-annotated AST and the
//!   canonical pretty-printer.
//! - [`model`] — domains, quality dimensions, unit-carrying quantities,
//!   concept regions, knoxels and the similarity metric.
//! - [`analyzer`] — name resolution, unit checking and lints; produces the
//!   [`analyzer::ResolvedModel`] everything downstream consumes.
//! - [`query`] — evaluates a resolved specification against a [`query::Scene`]
//!   snapshot.
//! - [`exec`] — validates dependency graphs and executes multi-specification
//!   plans under the timestamp/deadline protocol.
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable the default
//! `std` feature and enable `libm` for float math on bare-metal targets. All
//! IO — scene documents, provider configurations, the command line — lives in
//! the companion `rpsl-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("rpsl-core requires either the `std` or the `libm` feature");

extern crate alloc;

pub mod analyzer;
pub mod diag;
pub mod exec;
pub mod model;
pub mod query;
pub mod span;
pub mod syntax;

mod math;
