//! Canonical pretty-printer: 4-space indentation, declarations grouped by
//! kind, `and`/`or` in lower case, unit suffixes attached to their number.
//!
//! Re-parsing printed output reproduces the printed AST structurally, so the
//! printer doubles as a normal form.

use alloc::string::String;
use alloc::vec::Vec;

use super::ast::*;

const INDENT: &str = "    ";

/// Renders an AST back to source text.
pub fn print_ast(ast: &Ast) -> String {
    let mut blocks: Vec<String> = Vec::new();

    if !ast.uses.is_empty() {
        let mut block = String::new();
        for (i, u) in ast.uses.iter().enumerate() {
            if i > 0 {
                block.push('\n');
            }
            block.push_str("use Namespace ");
            block.push_str(&u.namespace.name);
        }
        blocks.push(block);
    }
    for d in &ast.domains {
        blocks.push(print_domain(d));
    }
    for ns in &ast.namespaces {
        blocks.push(print_namespace(ns));
    }
    for p in &ast.prototypes {
        blocks.push(print_prototype(p));
    }
    for s in &ast.specifications {
        blocks.push(print_specification(s));
    }

    let mut out = blocks.join("\n\n");
    if !out.is_empty() {
        out.push('\n');
    }
    out
}

fn push_indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str(INDENT);
    }
}

fn print_domain(d: &DomainDecl) -> String {
    let mut out = alloc::format!("domain {} {{\n", d.name);
    for dim in &d.dimensions {
        push_indent(&mut out, 1);
        out.push_str(&dim.name.name);
        out.push_str(": ");
        out.push_str(match dim.scale {
            ScaleKind::Continuous => "continuous",
            ScaleKind::Ordinal => "ordinal",
        });
        if let Some(u) = &dim.unit {
            out.push(' ');
            out.push_str(u.unit.symbol());
        }
        out.push('\n');
    }
    out.push('}');
    out
}

fn print_namespace(ns: &NamespaceDecl) -> String {
    let mut out = alloc::format!("{}: Namespace {{\n", ns.name);
    for (i, c) in ns.concepts.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        print_concept(&mut out, c, 1);
    }
    out.push('}');
    out
}

fn print_concept(out: &mut String, c: &ConceptDecl, depth: usize) {
    push_indent(out, depth);
    out.push_str(&alloc::format!("{}: Concept {{\n", c.name));
    for d in &c.used_domains {
        push_indent(out, depth + 1);
        out.push_str("use_domain ");
        out.push_str(&d.text());
        out.push('\n');
    }
    push_indent(out, depth + 1);
    out.push_str(&alloc::format!("{}: Polytope {{\n", c.polytope.label));
    for p in &c.polytope.points {
        print_point(out, p, depth + 2);
    }
    push_indent(out, depth + 1);
    out.push_str("}\n");
    push_indent(out, depth);
    out.push_str("}\n");
}

fn print_point(out: &mut String, p: &PointEntry, depth: usize) {
    push_indent(out, depth);
    out.push_str(&alloc::format!("Point({}, {}", p.path.text(), p.value));
    if let Some(u) = &p.unit {
        out.push_str(u.unit.symbol());
    }
    out.push_str(")\n");
}

fn print_prototype(p: &PrototypeDecl) -> String {
    let mut out = alloc::format!("{}: Prototype {{\n", p.name);
    push_indent(&mut out, 1);
    out.push_str("use_concept ");
    out.push_str(&p.concept.text());
    out.push('\n');
    push_indent(&mut out, 1);
    out.push_str(&alloc::format!("{}: Values {{\n", p.values_label));
    for point in &p.values {
        print_point(&mut out, point, 2);
    }
    push_indent(&mut out, 1);
    out.push_str("}\n}");
    out
}

fn print_specification(s: &SpecificationDecl) -> String {
    let mut out = alloc::format!("{}: Specification {{\n", s.name);
    match &s.body {
        SpecBody::Data(d) => {
            push_indent(&mut out, 1);
            out.push_str(&alloc::format!("{}: Data {{\n", d.label));
            push_indent(&mut out, 2);
            out.push_str(&alloc::format!("get {} from {}", d.selector, d.target.text()));
            if let Some(cond) = &d.condition {
                out.push_str(" where ");
                print_condition(&mut out, cond);
            }
            if let Some(dl) = &d.deadline {
                out.push_str(&alloc::format!(
                    " ensure Deadline({}{})",
                    dl.value,
                    dl.unit.unit.symbol()
                ));
            }
            out.push('\n');
            push_indent(&mut out, 1);
            out.push_str("}\n");
        }
        SpecBody::Graph(g) => {
            push_indent(&mut out, 1);
            out.push_str(&alloc::format!("{}: DependencyGraph {{\n", g.label));
            for e in &g.edges {
                push_indent(&mut out, 2);
                out.push_str(&alloc::format!("{} before {}\n", e.from, e.to));
            }
            push_indent(&mut out, 1);
            out.push_str("}\n");
        }
    }
    out.push('}');
    out
}

fn print_condition(out: &mut String, cond: &ConditionExpr) {
    match cond {
        ConditionExpr::Comparison(c) => {
            match &c.lhs {
                CompareLhs::Path(q) => out.push_str(&q.text()),
                CompareLhs::Similarity(s) => {
                    out.push_str(&alloc::format!("Similarity({})", s.measure))
                }
            }
            out.push_str(&alloc::format!(" {} {}", c.op, c.value));
            if let Some(u) = &c.unit {
                out.push_str(u.unit.symbol());
            }
        }
        ConditionExpr::And(l, r, _) => {
            print_condition(out, l);
            out.push_str(" and ");
            print_condition(out, r);
        }
        ConditionExpr::Or(l, r, _) => {
            print_condition(out, l);
            out.push_str(" or ");
            print_condition(out, r);
        }
        ConditionExpr::Paren(inner, _) => {
            out.push('(');
            print_condition(out, inner);
            out.push(')');
        }
    }
}
