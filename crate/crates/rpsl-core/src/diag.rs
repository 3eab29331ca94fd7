//! Diagnostics shared by the parser and the analyzer.
//!
//! Every diagnostic points at real source through a [`Span`] and carries a
//! stable code. `E000` is reserved for syntax errors; `E001`–`E010` and the
//! `W`-codes are semantic and documented on [`codes`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::span::Span;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Error,
    Warning,
    Note,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::Error => f.write_str("error"),
            Severity::Warning => f.write_str("warning"),
            Severity::Note => f.write_str("note"),
        }
    }
}

/// Stable diagnostic codes.
pub mod codes {
    /// Lexical or grammatical error.
    pub const SYNTAX: &str = "E000";
    /// `use Namespace X` or `X.concept` names a namespace that does not exist.
    pub const UNKNOWN_NAMESPACE: &str = "E001";
    /// A `use_concept` or `from` target does not resolve.
    pub const UNKNOWN_CONCEPT: &str = "E002";
    /// A `use_domain` reference does not resolve.
    pub const UNKNOWN_DOMAIN: &str = "E003";
    /// A dimension path does not resolve against the entity it is used on.
    pub const UNKNOWN_DIMENSION: &str = "E004";
    /// Unit kind (or ordinal scale) mismatch between a value and a dimension.
    pub const UNIT_MISMATCH: &str = "E005";
    /// A dimension of a used domain received no Point.
    pub const MISSING_DIMENSION: &str = "E006";
    /// Duplicate or ambiguous name.
    pub const DUPLICATE_NAME: &str = "E007";
    /// A dependency edge endpoint does not name a Data specification.
    pub const UNKNOWN_SPEC: &str = "E008";
    /// `Similarity(...)` used with a concept target.
    pub const SIMILARITY_NEEDS_PROTOTYPE: &str = "E009";
    /// Unknown similarity measure.
    pub const UNKNOWN_MEASURE: &str = "E010";
    /// Prototype coordinate outside its concept region.
    pub const PROTOTYPE_OUTSIDE_REGION: &str = "W001";
    /// Where-clause unsatisfiable against the target region.
    pub const UNSATISFIABLE_CONDITION: &str = "W002";
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: &'static str,
    pub message: String,
    pub span: Span,
}

impl Diagnostic {
    pub fn error(code: &'static str, message: impl Into<String>, span: Span) -> Self {
        Diagnostic {
            severity: Severity::Error,
            code,
            message: message.into(),
            span,
        }
    }

    pub fn warning(code: &'static str, message: impl Into<String>, span: Span) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            code,
            message: message.into(),
            span,
        }
    }

    pub fn note(code: &'static str, message: impl Into<String>, span: Span) -> Self {
        Diagnostic {
            severity: Severity::Note,
            code,
            message: message.into(),
            span,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}]: {} at {}",
            self.severity, self.code, self.message, self.span
        )
    }
}

/// True when any diagnostic has error severity.
pub fn has_errors(diags: &[Diagnostic]) -> bool {
    diags.iter().any(|d| d.severity == Severity::Error)
}

/// Orders by (file, offset), then severity and code for a stable output.
pub fn sort_diagnostics(diags: &mut Vec<Diagnostic>) {
    diags.sort_by(|a, b| {
        (a.span.file, a.span.start, a.severity, a.code).cmp(&(
            b.span.file,
            b.span.start,
            b.severity,
            b.code,
        ))
    });
}
