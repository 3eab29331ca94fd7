//! Span-annotated syntax tree for RPSL compilation units.
//!
//! The tree is purely syntactic: names are stored as written and nothing is
//! resolved. Every node carries a [`Span`]; [`Ast::strip_spans`] resets them
//! all so two trees can be compared structurally.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::model::Unit;
use crate::span::Span;

/// An identifier as written in the source.
#[derive(Debug, Clone, PartialEq)]
pub struct Ident {
    pub name: String,
    pub span: Span,
}

impl Ident {
    pub fn new(name: &str, span: Span) -> Self {
        Ident {
            name: String::from(name),
            span,
        }
    }
}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A dot-separated qualified name (`myConcepts.myBox`, `Size.Height`).
#[derive(Debug, Clone, PartialEq)]
pub struct QName {
    pub segments: Vec<Ident>,
    pub span: Span,
}

impl QName {
    /// The name joined with dots, as written.
    pub fn text(&self) -> String {
        let mut out = String::new();
        for (i, seg) in self.segments.iter().enumerate() {
            if i > 0 {
                out.push('.');
            }
            out.push_str(&seg.name);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }
}

impl fmt::Display for QName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

/// A unit suffix attached to a numeric literal (`20mm`, `3 s`).
#[derive(Debug, Clone, PartialEq)]
pub struct UnitSuffix {
    pub unit: Unit,
    pub span: Span,
}

/// One parsed compilation unit (or several merged ones).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Ast {
    pub uses: Vec<UseDirective>,
    pub domains: Vec<DomainDecl>,
    pub namespaces: Vec<NamespaceDecl>,
    pub prototypes: Vec<PrototypeDecl>,
    pub specifications: Vec<SpecificationDecl>,
}

impl Ast {
    pub fn is_empty(&self) -> bool {
        self.uses.is_empty()
            && self.domains.is_empty()
            && self.namespaces.is_empty()
            && self.prototypes.is_empty()
            && self.specifications.is_empty()
    }

    /// Appends all declarations of `other`, preserving order. Used to treat
    /// several files as one compilation unit.
    pub fn merge(&mut self, other: Ast) {
        self.uses.extend(other.uses);
        self.domains.extend(other.domains);
        self.namespaces.extend(other.namespaces);
        self.prototypes.extend(other.prototypes);
        self.specifications.extend(other.specifications);
    }
}

/// `use Namespace name`
#[derive(Debug, Clone, PartialEq)]
pub struct UseDirective {
    pub namespace: Ident,
    pub span: Span,
}

/// `domain Name { Dim: continuous mm ... }`
#[derive(Debug, Clone, PartialEq)]
pub struct DomainDecl {
    pub name: Ident,
    pub dimensions: Vec<DimDecl>,
    pub span: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaleKind {
    Continuous,
    Ordinal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimDecl {
    pub name: Ident,
    pub scale: ScaleKind,
    pub unit: Option<UnitSuffix>,
    pub span: Span,
}

/// `name: Namespace { ... }`
#[derive(Debug, Clone, PartialEq)]
pub struct NamespaceDecl {
    pub name: Ident,
    pub concepts: Vec<ConceptDecl>,
    pub span: Span,
}

/// `name: Concept { use_domain ... polytope }`
#[derive(Debug, Clone, PartialEq)]
pub struct ConceptDecl {
    pub name: Ident,
    pub used_domains: Vec<QName>,
    pub polytope: PolytopeDecl,
    pub span: Span,
}

/// `label: Polytope { Point(...)+ }`
#[derive(Debug, Clone, PartialEq)]
pub struct PolytopeDecl {
    pub label: Ident,
    pub points: Vec<PointEntry>,
    pub span: Span,
}

/// `Point(path, value unit?)`
#[derive(Debug, Clone, PartialEq)]
pub struct PointEntry {
    pub path: QName,
    pub value: f64,
    pub value_span: Span,
    pub unit: Option<UnitSuffix>,
    pub span: Span,
}

/// `name: Prototype { use_concept ref label: Values { ... } }`
#[derive(Debug, Clone, PartialEq)]
pub struct PrototypeDecl {
    pub name: Ident,
    pub concept: QName,
    pub values_label: Ident,
    pub values: Vec<PointEntry>,
    pub span: Span,
}

/// `name: Specification { ... }`
#[derive(Debug, Clone, PartialEq)]
pub struct SpecificationDecl {
    pub name: Ident,
    pub body: SpecBody,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpecBody {
    Data(DataBlock),
    Graph(DependencyGraphDecl),
}

/// Which built-in selector a data block requests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    Amount,
    Pose,
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Amount => f.write_str("Amount"),
            Selector::Pose => f.write_str("Pose"),
        }
    }
}

/// `label: Data { get Selector from target where ... ensure Deadline(...) }`
#[derive(Debug, Clone, PartialEq)]
pub struct DataBlock {
    pub label: Ident,
    pub selector: Selector,
    pub selector_span: Span,
    pub target: QName,
    pub condition: Option<ConditionExpr>,
    pub deadline: Option<DeadlineClause>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConditionExpr {
    Comparison(Comparison),
    And(Box<ConditionExpr>, Box<ConditionExpr>, Span),
    Or(Box<ConditionExpr>, Box<ConditionExpr>, Span),
    /// Source-level parentheses, preserved for faithful printing.
    Paren(Box<ConditionExpr>, Span),
}

impl ConditionExpr {
    pub fn span(&self) -> Span {
        match self {
            ConditionExpr::Comparison(c) => c.span,
            ConditionExpr::And(_, _, span)
            | ConditionExpr::Or(_, _, span)
            | ConditionExpr::Paren(_, span) => *span,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl fmt::Display for RelOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelOp::Eq => "==",
            RelOp::Ne => "!=",
            RelOp::Lt => "<",
            RelOp::Le => "<=",
            RelOp::Gt => ">",
            RelOp::Ge => ">=",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CompareLhs {
    /// A dimension path such as `Size.Height` or `myBox.Size.Height`.
    Path(QName),
    Similarity(SimilarityCall),
}

/// `Similarity(measure)`
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityCall {
    pub measure: Ident,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub lhs: CompareLhs,
    pub op: RelOp,
    pub op_span: Span,
    pub value: f64,
    pub value_span: Span,
    pub unit: Option<UnitSuffix>,
    pub span: Span,
}

/// `ensure Deadline(value unit)`
#[derive(Debug, Clone, PartialEq)]
pub struct DeadlineClause {
    pub value: f64,
    pub value_span: Span,
    pub unit: UnitSuffix,
    pub span: Span,
}

/// `from before to`
#[derive(Debug, Clone, PartialEq)]
pub struct DepEdge {
    pub from: Ident,
    pub to: Ident,
    pub span: Span,
}

/// `label: DependencyGraph { edges+ }`
#[derive(Debug, Clone, PartialEq)]
pub struct DependencyGraphDecl {
    pub label: Ident,
    pub edges: Vec<DepEdge>,
    pub span: Span,
}

// --- span stripping -------------------------------------------------------

impl Ast {
    /// Resets every span in the tree to the detached default, leaving only
    /// structure. Useful for comparing trees from different sources.
    pub fn strip_spans(&mut self) {
        for u in &mut self.uses {
            u.span = Span::default();
            u.namespace.span = Span::default();
        }
        for d in &mut self.domains {
            d.span = Span::default();
            d.name.span = Span::default();
            for dim in &mut d.dimensions {
                dim.span = Span::default();
                dim.name.span = Span::default();
                if let Some(u) = &mut dim.unit {
                    u.span = Span::default();
                }
            }
        }
        for ns in &mut self.namespaces {
            ns.span = Span::default();
            ns.name.span = Span::default();
            for c in &mut ns.concepts {
                strip_concept(c);
            }
        }
        for p in &mut self.prototypes {
            p.span = Span::default();
            p.name.span = Span::default();
            p.values_label.span = Span::default();
            strip_qname(&mut p.concept);
            for point in &mut p.values {
                strip_point(point);
            }
        }
        for s in &mut self.specifications {
            s.span = Span::default();
            s.name.span = Span::default();
            match &mut s.body {
                SpecBody::Data(d) => {
                    d.span = Span::default();
                    d.label.span = Span::default();
                    d.selector_span = Span::default();
                    strip_qname(&mut d.target);
                    if let Some(cond) = &mut d.condition {
                        strip_condition(cond);
                    }
                    if let Some(dl) = &mut d.deadline {
                        dl.span = Span::default();
                        dl.value_span = Span::default();
                        dl.unit.span = Span::default();
                    }
                }
                SpecBody::Graph(g) => {
                    g.span = Span::default();
                    g.label.span = Span::default();
                    for e in &mut g.edges {
                        e.span = Span::default();
                        e.from.span = Span::default();
                        e.to.span = Span::default();
                    }
                }
            }
        }
    }
}

fn strip_qname(q: &mut QName) {
    q.span = Span::default();
    for seg in &mut q.segments {
        seg.span = Span::default();
    }
}

fn strip_point(p: &mut PointEntry) {
    p.span = Span::default();
    p.value_span = Span::default();
    strip_qname(&mut p.path);
    if let Some(u) = &mut p.unit {
        u.span = Span::default();
    }
}

fn strip_concept(c: &mut ConceptDecl) {
    c.span = Span::default();
    c.name.span = Span::default();
    for d in &mut c.used_domains {
        strip_qname(d);
    }
    c.polytope.span = Span::default();
    c.polytope.label.span = Span::default();
    for p in &mut c.polytope.points {
        strip_point(p);
    }
}

fn strip_condition(cond: &mut ConditionExpr) {
    match cond {
        ConditionExpr::Comparison(c) => {
            c.span = Span::default();
            c.op_span = Span::default();
            c.value_span = Span::default();
            match &mut c.lhs {
                CompareLhs::Path(q) => strip_qname(q),
                CompareLhs::Similarity(s) => {
                    s.span = Span::default();
                    s.measure.span = Span::default();
                }
            }
            if let Some(u) = &mut c.unit {
                u.span = Span::default();
            }
        }
        ConditionExpr::And(l, r, span) | ConditionExpr::Or(l, r, span) => {
            *span = Span::default();
            strip_condition(l);
            strip_condition(r);
        }
        ConditionExpr::Paren(inner, span) => {
            *span = Span::default();
            strip_condition(inner);
        }
    }
}
