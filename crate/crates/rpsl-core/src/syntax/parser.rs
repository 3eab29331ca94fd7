//! Recursive-descent parser for RPSL.
//!
//! Errors never abort the parse: each problem becomes a diagnostic and the
//! parser resynchronizes at the next top-level declaration (or the next
//! member inside a block), so one bad block does not hide the rest of the
//! file.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diag::{codes, Diagnostic};
use crate::model::Unit;
use crate::span::{FileId, Span};

use super::ast::*;
use super::lexer::{lex, Token, TokenKind};

/// Parses one source file into an AST plus diagnostics. Pure: the result
/// depends only on `text` and `file`. Declarations that parse cleanly are
/// kept even when others fail.
pub fn parse_source(text: &str, file: FileId) -> (Ast, Vec<Diagnostic>) {
    let (tokens, mut diags) = lex(text, file);
    let mut parser = Parser {
        tokens,
        pos: 0,
        diags: Vec::new(),
    };
    let ast = parser.parse_unit();
    diags.append(&mut parser.diags);
    (ast, diags)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    diags: Vec<Diagnostic>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn nth_kind(&self, n: usize) -> &TokenKind {
        &self.tokens[(self.pos + n).min(self.tokens.len() - 1)].kind
    }

    fn at(&self, kind: TokenKind) -> bool {
        self.peek().kind == kind
    }

    fn at_eof(&self) -> bool {
        self.at(TokenKind::Eof)
    }

    fn bump(&mut self) -> Token {
        let tok = self.peek().clone();
        if !self.at_eof() {
            self.pos += 1;
        }
        tok
    }

    fn error(&mut self, message: impl Into<String>, span: Span) {
        self.diags
            .push(Diagnostic::error(codes::SYNTAX, message, span));
    }

    fn expected(&mut self, what: &str) {
        let found = self.peek().kind.describe();
        let span = self.peek().span;
        self.error(format!("expected {what}, found {found}"), span);
    }

    /// Consumes `kind` or reports `expected what` without consuming.
    fn expect(&mut self, kind: TokenKind, what: &str) -> Option<Token> {
        if self.at(kind) {
            Some(self.bump())
        } else {
            self.expected(what);
            None
        }
    }

    fn expect_ident(&mut self, what: &str) -> Option<Ident> {
        if let TokenKind::Ident(name) = &self.peek().kind {
            let name = name.clone();
            let tok = self.bump();
            Some(Ident { name, span: tok.span })
        } else {
            self.expected(what);
            None
        }
    }

    fn expect_num(&mut self, what: &str) -> Option<(f64, Span)> {
        if let TokenKind::Num(value) = self.peek().kind {
            let tok = self.bump();
            Some((value, tok.span))
        } else {
            self.expected(what);
            None
        }
    }

    fn parse_qname(&mut self, what: &str) -> Option<QName> {
        let first = self.expect_ident(what)?;
        let mut span = first.span;
        let mut segments = alloc::vec![first];
        while self.at(TokenKind::Dot) {
            self.bump();
            let seg = self.expect_ident("an identifier after `.`")?;
            span = span.to(seg.span);
            segments.push(seg);
        }
        Some(QName { segments, span })
    }

    /// An optional unit symbol after a number. The symbol must be one of the
    /// six unit spellings; an identifier followed by `:` is left alone (it
    /// starts the next declaration, as in `H: continuous` followed by
    /// `m: ordinal`).
    fn parse_unit_suffix(&mut self) -> Option<Option<UnitSuffix>> {
        let TokenKind::Ident(name) = &self.peek().kind else {
            return Some(None);
        };
        if *self.nth_kind(1) == TokenKind::Colon {
            return Some(None);
        }
        let name = name.clone();
        match rpsl_unit(&name) {
            Some(unit) => {
                let tok = self.bump();
                Some(Some(UnitSuffix {
                    unit,
                    span: tok.span,
                }))
            }
            None => {
                let tok = self.bump();
                self.error(format!("unknown unit `{name}`"), tok.span);
                None
            }
        }
    }

    /// True when the current token can begin a top-level declaration.
    fn starts_item(&self) -> bool {
        match &self.peek().kind {
            TokenKind::KwUse => true,
            TokenKind::Ident(name) => {
                *self.nth_kind(1) == TokenKind::Colon
                    || (name == "domain" && matches!(self.nth_kind(1), TokenKind::Ident(_)))
            }
            _ => false,
        }
    }

    /// Skips forward until the next plausible top-level declaration, keeping
    /// braces balanced so a declaration nested in skipped garbage is not
    /// mistaken for a top-level one.
    fn recover_to_item(&mut self) {
        let mut depth = 0usize;
        loop {
            if self.at_eof() {
                return;
            }
            if depth == 0 && self.starts_item() {
                return;
            }
            match self.peek().kind {
                TokenKind::LBrace => depth += 1,
                TokenKind::RBrace => depth = depth.saturating_sub(1),
                _ => {}
            }
            self.bump();
        }
    }

    /// Skips forward inside a block until the next member (`ID :`) or the
    /// block's closing brace, which is left unconsumed.
    fn recover_in_block(&mut self) {
        let mut depth = 0usize;
        loop {
            match &self.peek().kind {
                TokenKind::Eof => return,
                TokenKind::RBrace if depth == 0 => return,
                TokenKind::Ident(_) if depth == 0 && *self.nth_kind(1) == TokenKind::Colon => {
                    return
                }
                TokenKind::LBrace => {
                    depth += 1;
                    self.bump();
                }
                TokenKind::RBrace => {
                    depth -= 1;
                    self.bump();
                }
                _ => {
                    self.bump();
                }
            }
        }
    }

    fn parse_unit(&mut self) -> Ast {
        let mut ast = Ast::default();
        while !self.at_eof() {
            match &self.peek().kind {
                TokenKind::KwUse => {
                    if let Some(u) = self.parse_use() {
                        ast.uses.push(u);
                    } else {
                        self.recover_to_item();
                    }
                }
                TokenKind::Ident(name)
                    if name == "domain" && matches!(self.nth_kind(1), TokenKind::Ident(_)) =>
                {
                    if let Some(d) = self.parse_domain() {
                        ast.domains.push(d);
                    } else {
                        self.recover_to_item();
                    }
                }
                TokenKind::Ident(_) if *self.nth_kind(1) == TokenKind::Colon => {
                    self.parse_named_item(&mut ast);
                }
                _ => {
                    let tok = self.bump();
                    self.error(
                        format!("expected a declaration, found {}", tok.kind.describe()),
                        tok.span,
                    );
                    self.recover_to_item();
                }
            }
        }
        ast
    }

    fn parse_use(&mut self) -> Option<UseDirective> {
        let kw = self.bump();
        self.expect(TokenKind::KwNamespace, "`Namespace` after `use`")?;
        let namespace = self.expect_ident("a namespace name")?;
        let span = kw.span.to(namespace.span);
        Some(UseDirective { namespace, span })
    }

    fn parse_domain(&mut self) -> Option<DomainDecl> {
        self.bump(); // `domain`
        let name = self.expect_ident("a domain name")?;
        self.expect(TokenKind::LBrace, "`{`")?;
        let mut dimensions = Vec::new();
        while !self.at(TokenKind::RBrace) && !self.at_eof() {
            let dim_name = self.expect_ident("a dimension name")?;
            self.expect(TokenKind::Colon, "`:`")?;
            let scale_tok = self.expect_ident("`continuous` or `ordinal`")?;
            let scale = match scale_tok.name.as_str() {
                "continuous" => ScaleKind::Continuous,
                "ordinal" => ScaleKind::Ordinal,
                _ => {
                    self.error(
                        format!("expected `continuous` or `ordinal`, found `{}`", scale_tok.name),
                        scale_tok.span,
                    );
                    return None;
                }
            };
            let unit = self.parse_unit_suffix()?;
            let span = dim_name
                .span
                .to(unit.as_ref().map_or(scale_tok.span, |u| u.span));
            dimensions.push(DimDecl {
                name: dim_name,
                scale,
                unit,
                span,
            });
        }
        let close = self.expect(TokenKind::RBrace, "`}`")?;
        if dimensions.is_empty() {
            self.error("domain needs at least one dimension", name.span);
            return None;
        }
        let span = name.span.to(close.span);
        Some(DomainDecl {
            name,
            dimensions,
            span,
        })
    }

    fn parse_named_item(&mut self, ast: &mut Ast) {
        let name = self.expect_ident("a name").expect("checked by caller");
        self.bump(); // `:`
        match self.peek().kind {
            TokenKind::KwNamespace => {
                self.bump();
                if let Some(ns) = self.parse_namespace(name) {
                    ast.namespaces.push(ns);
                } else {
                    self.recover_to_item();
                }
            }
            TokenKind::KwConcept => {
                self.bump();
                // A concept outside a namespace is parsed for its own errors
                // but never enters the AST.
                if let Some(c) = self.parse_concept(name) {
                    self.error(
                        "concept must be declared inside a namespace",
                        c.name.span,
                    );
                }
                self.recover_to_item();
            }
            TokenKind::KwPrototype => {
                self.bump();
                if let Some(p) = self.parse_prototype(name) {
                    ast.prototypes.push(p);
                } else {
                    self.recover_to_item();
                }
            }
            TokenKind::KwSpecification => {
                self.bump();
                if let Some(s) = self.parse_specification(name) {
                    ast.specifications.push(s);
                } else {
                    self.recover_to_item();
                }
            }
            _ => {
                self.expected("`Namespace`, `Concept`, `Prototype` or `Specification`");
                self.recover_to_item();
            }
        }
    }

    fn parse_namespace(&mut self, name: Ident) -> Option<NamespaceDecl> {
        self.expect(TokenKind::LBrace, "`{`")?;
        let mut concepts = Vec::new();
        while !self.at(TokenKind::RBrace) && !self.at_eof() {
            let ok = (|| {
                let concept_name = self.expect_ident("a concept declaration")?;
                self.expect(TokenKind::Colon, "`:`")?;
                self.expect(TokenKind::KwConcept, "`Concept`")?;
                self.parse_concept(concept_name)
            })();
            match ok {
                Some(c) => concepts.push(c),
                None => self.recover_in_block(),
            }
        }
        let close = self.expect(TokenKind::RBrace, "`}`")?;
        let span = name.span.to(close.span);
        Some(NamespaceDecl {
            name,
            concepts,
            span,
        })
    }

    fn parse_concept(&mut self, name: Ident) -> Option<ConceptDecl> {
        self.expect(TokenKind::LBrace, "`{`")?;
        let mut used_domains = Vec::new();
        while self.at(TokenKind::KwUseDomain) {
            self.bump();
            used_domains.push(self.parse_qname("a domain name")?);
        }
        let mut ok = true;
        if used_domains.is_empty() {
            self.error("concept requires at least one use_domain", name.span);
            ok = false;
        }
        let polytope = if self.at(TokenKind::RBrace) {
            self.error("concept requires a Polytope block", name.span);
            ok = false;
            None
        } else {
            let label = self.expect_ident("a Polytope block")?;
            self.expect(TokenKind::Colon, "`:`")?;
            self.expect(TokenKind::KwPolytope, "`Polytope`")?;
            Some(self.parse_polytope(label)?)
        };
        let close = self.expect(TokenKind::RBrace, "`}`")?;
        if !ok {
            return None;
        }
        let span = name.span.to(close.span);
        Some(ConceptDecl {
            name,
            used_domains,
            polytope: polytope.expect("present when ok"),
            span,
        })
    }

    fn parse_polytope(&mut self, label: Ident) -> Option<PolytopeDecl> {
        self.expect(TokenKind::LBrace, "`{`")?;
        let mut points = Vec::new();
        while self.at(TokenKind::KwPoint) {
            points.push(self.parse_point()?);
        }
        let close = self.expect(TokenKind::RBrace, "`}`")?;
        if points.is_empty() {
            self.error("Polytope block needs at least one Point", label.span);
            return None;
        }
        let span = label.span.to(close.span);
        Some(PolytopeDecl {
            label,
            points,
            span,
        })
    }

    fn parse_point(&mut self) -> Option<PointEntry> {
        let kw = self.bump(); // `Point`
        self.expect(TokenKind::LParen, "`(`")?;
        let path = self.parse_qname("a dimension path")?;
        let path_ok = (2..=3).contains(&path.segments.len());
        if !path_ok {
            self.error(
                "dimension path must be Domain.Dimension or Concept.Domain.Dimension",
                path.span,
            );
        }
        self.expect(TokenKind::Comma, "`,`")?;
        let (value, value_span) = self.expect_num("a numeric value")?;
        let unit = self.parse_unit_suffix()?;
        let close = self.expect(TokenKind::RParen, "`)`")?;
        if !path_ok {
            return None;
        }
        let span = kw.span.to(close.span);
        Some(PointEntry {
            path,
            value,
            value_span,
            unit,
            span,
        })
    }

    fn parse_prototype(&mut self, name: Ident) -> Option<PrototypeDecl> {
        self.expect(TokenKind::LBrace, "`{`")?;
        self.expect(TokenKind::KwUseConcept, "`use_concept`")?;
        let concept = self.parse_qname("a concept name")?;
        let values_label = self.expect_ident("a Values block")?;
        self.expect(TokenKind::Colon, "`:`")?;
        self.expect(TokenKind::KwValues, "`Values`")?;
        self.expect(TokenKind::LBrace, "`{`")?;
        let mut values = Vec::new();
        while self.at(TokenKind::KwPoint) {
            values.push(self.parse_point()?);
        }
        self.expect(TokenKind::RBrace, "`}`")?;
        let close = self.expect(TokenKind::RBrace, "`}`")?;
        if values.is_empty() {
            self.error("Values block needs at least one Point", values_label.span);
            return None;
        }
        let span = name.span.to(close.span);
        Some(PrototypeDecl {
            name,
            concept,
            values_label,
            values,
            span,
        })
    }

    fn parse_specification(&mut self, name: Ident) -> Option<SpecificationDecl> {
        self.expect(TokenKind::LBrace, "`{`")?;
        let label = self.expect_ident("a Data or DependencyGraph block")?;
        self.expect(TokenKind::Colon, "`:`")?;
        let body = match self.peek().kind {
            TokenKind::KwData => {
                self.bump();
                SpecBody::Data(self.parse_data(label)?)
            }
            TokenKind::KwDependencyGraph => {
                self.bump();
                SpecBody::Graph(self.parse_dependency_graph(label)?)
            }
            _ => {
                self.expected("`Data` or `DependencyGraph`");
                return None;
            }
        };
        let close = self.expect(TokenKind::RBrace, "`}`")?;
        let span = name.span.to(close.span);
        Some(SpecificationDecl { name, body, span })
    }

    fn parse_data(&mut self, label: Ident) -> Option<DataBlock> {
        self.expect(TokenKind::LBrace, "`{`")?;
        self.expect(TokenKind::KwGet, "`get`")?;
        let selector_tok = self.expect_ident("`Amount` or `Pose`")?;
        let selector = match selector_tok.name.as_str() {
            "Amount" => Selector::Amount,
            "Pose" => Selector::Pose,
            other => {
                self.error(
                    format!("expected `Amount` or `Pose`, found `{other}`"),
                    selector_tok.span,
                );
                return None;
            }
        };
        self.expect(TokenKind::KwFrom, "`from`")?;
        let target = self.parse_qname("a concept or prototype name")?;
        let condition = if self.at(TokenKind::KwWhere) {
            self.bump();
            Some(self.parse_condition()?)
        } else {
            None
        };
        let deadline = if self.at(TokenKind::KwEnsure) {
            Some(self.parse_deadline()?)
        } else {
            None
        };
        let close = self.expect(TokenKind::RBrace, "`}`")?;
        let span = label.span.to(close.span);
        Some(DataBlock {
            label,
            selector,
            selector_span: selector_tok.span,
            target,
            condition,
            deadline,
            span,
        })
    }

    fn parse_deadline(&mut self) -> Option<DeadlineClause> {
        let kw = self.bump(); // `ensure`
        self.expect(TokenKind::KwDeadline, "`Deadline`")?;
        self.expect(TokenKind::LParen, "`(`")?;
        let (value, value_span) = self.expect_num("a deadline value")?;
        let unit = match self.parse_unit_suffix()? {
            Some(unit) => unit,
            None => {
                self.expected("a time unit (ms, s or min)");
                return None;
            }
        };
        let close = self.expect(TokenKind::RParen, "`)`")?;
        if unit.unit.kind() != crate::model::UnitKind::Time {
            self.error("Deadline unit must be ms, s or min", unit.span);
            return None;
        }
        if value <= 0.0 {
            self.error("Deadline value must be positive", value_span);
            return None;
        }
        let span = kw.span.to(close.span);
        Some(DeadlineClause {
            value,
            value_span,
            unit,
            span,
        })
    }

    fn parse_dependency_graph(&mut self, label: Ident) -> Option<DependencyGraphDecl> {
        self.expect(TokenKind::LBrace, "`{`")?;
        let mut edges = Vec::new();
        while !self.at(TokenKind::RBrace) && !self.at_eof() {
            let from = self.expect_ident("a specification name")?;
            self.expect(TokenKind::KwBefore, "`before`")?;
            let to = self.expect_ident("a specification name")?;
            let span = from.span.to(to.span);
            edges.push(DepEdge { from, to, span });
        }
        let close = self.expect(TokenKind::RBrace, "`}`")?;
        if edges.is_empty() {
            self.error(
                "DependencyGraph needs at least one `before` edge",
                label.span,
            );
            return None;
        }
        let span = label.span.to(close.span);
        Some(DependencyGraphDecl { label, edges, span })
    }

    fn parse_condition(&mut self) -> Option<ConditionExpr> {
        let mut left = self.parse_and_expr()?;
        while self.at(TokenKind::KwOr) {
            self.bump();
            let right = self.parse_and_expr()?;
            let span = left.span().to(right.span());
            left = ConditionExpr::Or(Box::new(left), Box::new(right), span);
        }
        Some(left)
    }

    fn parse_and_expr(&mut self) -> Option<ConditionExpr> {
        let mut left = self.parse_atom()?;
        while self.at(TokenKind::KwAnd) {
            self.bump();
            let right = self.parse_atom()?;
            let span = left.span().to(right.span());
            left = ConditionExpr::And(Box::new(left), Box::new(right), span);
        }
        Some(left)
    }

    fn parse_atom(&mut self) -> Option<ConditionExpr> {
        if self.at(TokenKind::LParen) {
            let open = self.bump();
            let inner = self.parse_condition()?;
            let close = self.expect(TokenKind::RParen, "`)`")?;
            let span = open.span.to(close.span);
            return Some(ConditionExpr::Paren(Box::new(inner), span));
        }
        self.parse_comparison()
    }

    fn parse_comparison(&mut self) -> Option<ConditionExpr> {
        let lhs = match &self.peek().kind {
            TokenKind::Ident(name)
                if name == "Similarity" && *self.nth_kind(1) == TokenKind::LParen =>
            {
                let kw = self.bump();
                self.bump(); // `(`
                let measure = self.expect_ident("a similarity measure name")?;
                let close = self.expect(TokenKind::RParen, "`)`")?;
                CompareLhs::Similarity(SimilarityCall {
                    measure,
                    span: kw.span.to(close.span),
                })
            }
            _ => CompareLhs::Path(self.parse_qname("a dimension path or `Similarity(...)`")?),
        };
        let lhs_span = match &lhs {
            CompareLhs::Path(q) => q.span,
            CompareLhs::Similarity(s) => s.span,
        };
        let op = match self.peek().kind {
            TokenKind::EqEq => RelOp::Eq,
            TokenKind::NotEq => RelOp::Ne,
            TokenKind::Lt => RelOp::Lt,
            TokenKind::Le => RelOp::Le,
            TokenKind::Gt => RelOp::Gt,
            TokenKind::Ge => RelOp::Ge,
            _ => {
                self.expected("a comparison operator");
                return None;
            }
        };
        let op_span = self.bump().span;
        let (value, value_span) = self.expect_num("a numeric value")?;
        let unit = self.parse_unit_suffix()?;
        let end = unit.as_ref().map_or(value_span, |u| u.span);
        let span = lhs_span.to(end);
        Some(ConditionExpr::Comparison(Comparison {
            lhs,
            op,
            op_span,
            value,
            value_span,
            unit,
            span,
        }))
    }
}

/// The unit spellings the language accepts after a number.
fn rpsl_unit(symbol: &str) -> Option<Unit> {
    match symbol {
        "mm" => Some(Unit::Mm),
        "cm" => Some(Unit::Cm),
        "m" => Some(Unit::M),
        "ms" => Some(Unit::Ms),
        "s" => Some(Unit::S),
        "min" => Some(Unit::Min),
        _ => None,
    }
}
