//! Name resolution and unit checking.
//!
//! Namespaces with the same name merge (several files form one compilation
//! unit). `use Namespace X` makes X's concepts reachable by bare name; a bare
//! name matching several candidates is an ambiguity error, never a silent
//! pick. Entities that produce any error are kept out of the returned model,
//! but resolution always continues so one broken entity cannot hide problems
//! in another.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diag::{codes, sort_diagnostics, Diagnostic};
use crate::math;
use crate::model::{
    build_region, DimRef, Domain, Knoxel, QualityDimension, Quantity, Scale, UnitKind,
};
use crate::span::Span;
use crate::syntax::ast::{
    Ast, CompareLhs, ConditionExpr, ConceptDecl, DataBlock, PointEntry, PrototypeDecl, QName,
    ScaleKind, UnitSuffix,
};

use super::lints::lint_model;
use super::resolved::{
    GraphSpec, ResolvedCondition, ResolvedConcept, ResolvedModel, ResolvedPrototype, ResolvedSpec,
    TargetKind, TargetRef,
};

/// Resolves an AST against a domain registry, checks units and coverage, and
/// runs the lints. The model contains only clean entities; diagnostics are
/// ordered by (file, offset).
pub fn resolve_and_check(ast: &Ast, registry: &[Domain]) -> (ResolvedModel, Vec<Diagnostic>) {
    let mut r = Resolver {
        model: ResolvedModel::default(),
        diags: Vec::new(),
        imports: Vec::new(),
        declared_concepts: BTreeMap::new(),
        declared_prototypes: BTreeSet::new(),
        declared_data_specs: BTreeSet::new(),
        declared_graph_specs: BTreeSet::new(),
    };

    r.collect_domains(ast, registry);
    r.collect_declared_names(ast);
    r.resolve_imports(ast);
    r.resolve_namespaces(ast);
    r.resolve_prototypes(ast);
    r.resolve_specifications(ast);

    r.diags.extend(lint_model(&r.model));
    sort_diagnostics(&mut r.diags);
    (r.model, r.diags)
}

struct Resolver {
    model: ResolvedModel,
    diags: Vec<Diagnostic>,
    /// Valid `use Namespace` targets, deduplicated, in directive order.
    imports: Vec<String>,
    /// Every syntactically declared concept per namespace, clean or not —
    /// used to tell "unknown name" from "name whose declaration failed".
    declared_concepts: BTreeMap<String, BTreeSet<String>>,
    declared_prototypes: BTreeSet<String>,
    declared_data_specs: BTreeSet<String>,
    declared_graph_specs: BTreeSet<String>,
}

impl Resolver {
    fn error(&mut self, code: &'static str, message: String, span: Span) {
        self.diags.push(Diagnostic::error(code, message, span));
    }

    fn collect_domains(&mut self, ast: &Ast, registry: &[Domain]) {
        for d in registry {
            self.model.domains.insert(d.name.clone(), d.clone());
        }
        for decl in &ast.domains {
            if self.model.domains.contains_key(&decl.name.name) {
                self.error(
                    codes::DUPLICATE_NAME,
                    format!("domain `{}` is already defined", decl.name.name),
                    decl.name.span,
                );
                continue;
            }
            let mut dims: Vec<QualityDimension> = Vec::new();
            let mut ok = true;
            for dim in &decl.dimensions {
                if dims.iter().any(|d| d.name == dim.name.name) {
                    self.error(
                        codes::DUPLICATE_NAME,
                        format!(
                            "dimension `{}` appears twice in domain `{}`",
                            dim.name.name, decl.name.name
                        ),
                        dim.name.span,
                    );
                    ok = false;
                    continue;
                }
                let unit_kind = dim.unit.as_ref().map_or(UnitKind::Dimensionless, |u| {
                    u.unit.kind()
                });
                let scale = match dim.scale {
                    ScaleKind::Continuous => Scale::Continuous,
                    ScaleKind::Ordinal => Scale::OrdinalInteger,
                };
                dims.push(QualityDimension {
                    name: dim.name.name.clone(),
                    scale,
                    unit_kind,
                    canonical: None,
                });
            }
            if ok {
                self.model
                    .domains
                    .insert(decl.name.name.clone(), Domain::new(&decl.name.name, dims));
            }
        }
    }

    fn collect_declared_names(&mut self, ast: &Ast) {
        for ns in &ast.namespaces {
            let entry = self.declared_concepts.entry(ns.name.name.clone()).or_default();
            for c in &ns.concepts {
                entry.insert(c.name.name.clone());
            }
        }
        for p in &ast.prototypes {
            self.declared_prototypes.insert(p.name.name.clone());
        }
        for s in &ast.specifications {
            match &s.body {
                crate::syntax::ast::SpecBody::Data(_) => {
                    self.declared_data_specs.insert(s.name.name.clone());
                }
                crate::syntax::ast::SpecBody::Graph(_) => {
                    self.declared_graph_specs.insert(s.name.name.clone());
                }
            }
        }
    }

    fn resolve_imports(&mut self, ast: &Ast) {
        for u in &ast.uses {
            let name = &u.namespace.name;
            if !self.declared_concepts.contains_key(name) {
                self.error(
                    codes::UNKNOWN_NAMESPACE,
                    format!("unknown namespace `{name}`"),
                    u.namespace.span,
                );
                continue;
            }
            if !self.imports.iter().any(|i| i == name) {
                self.imports.push(name.clone());
            }
        }
    }

    fn resolve_namespaces(&mut self, ast: &Ast) {
        // Same-named namespace declarations merge; a concept name may appear
        // only once across all of them.
        let mut seen: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for ns in &ast.namespaces {
            let seen_here = seen.entry(ns.name.name.clone()).or_default();
            for c in &ns.concepts {
                if !seen_here.insert(c.name.name.clone()) {
                    self.error(
                        codes::DUPLICATE_NAME,
                        format!(
                            "concept `{}` is already defined in namespace `{}`",
                            c.name.name, ns.name.name
                        ),
                        c.name.span,
                    );
                    continue;
                }
                if let Some(resolved) = self.resolve_concept(&ns.name.name, c) {
                    self.model.concepts.insert(resolved.name.clone(), resolved);
                }
            }
        }
    }

    fn resolve_concept(&mut self, ns: &str, decl: &ConceptDecl) -> Option<ResolvedConcept> {
        let before = self.diags.len();
        let mut used: Vec<String> = Vec::new();
        for d in &decl.used_domains {
            let name = d.text();
            if !self.model.domains.contains_key(&name) {
                self.error(
                    codes::UNKNOWN_DOMAIN,
                    format!("unknown domain `{name}`"),
                    d.span,
                );
                continue;
            }
            if !used.contains(&name) {
                used.push(name);
            }
        }

        let mut points: Vec<(DimRef, Quantity)> = Vec::new();
        for entry in &decl.polytope.points {
            if let Some(resolved) = self.resolve_point(entry, &used, &decl.name.name) {
                points.push(resolved);
            }
        }

        // Every dimension of every used domain needs at least one point.
        for domain_name in &used {
            let dims: Vec<String> = self.model.domains[domain_name]
                .dimensions
                .iter()
                .map(|d| d.name.clone())
                .collect();
            for dim in dims {
                let dref = DimRef::new(domain_name, &dim);
                if !points.iter().any(|(d, _)| *d == dref) {
                    self.error(
                        codes::MISSING_DIMENSION,
                        format!("no Point covers dimension `{dref}`"),
                        decl.name.span,
                    );
                }
            }
        }

        if self.diags.len() != before {
            return None;
        }
        let domains: Vec<&Domain> = used.iter().map(|n| &self.model.domains[n]).collect();
        let region = build_region(&domains, &points).expect("validated above");
        Some(ResolvedConcept {
            name: format!("{ns}.{}", decl.name.name),
            used_domains: used,
            region,
            name_span: decl.name.span,
        })
    }

    /// Resolves one `Point(path, value unit?)` against the owner's used
    /// domains. `owner` is the simple concept name a three-segment path may
    /// be prefixed with.
    fn resolve_point(
        &mut self,
        entry: &PointEntry,
        used: &[String],
        owner: &str,
    ) -> Option<(DimRef, Quantity)> {
        let segs = &entry.path.segments;
        let (domain_seg, dim_seg) = match segs.len() {
            2 => (&segs[0], &segs[1]),
            3 => {
                if segs[0].name != owner {
                    self.error(
                        codes::UNKNOWN_DIMENSION,
                        format!(
                            "path `{}` does not belong to concept `{owner}`",
                            entry.path.text()
                        ),
                        segs[0].span,
                    );
                    return None;
                }
                (&segs[1], &segs[2])
            }
            _ => return None, // parser already rejected
        };

        if !used.iter().any(|u| u == &domain_seg.name) {
            if self.model.domains.contains_key(&domain_seg.name) {
                self.error(
                    codes::UNKNOWN_DIMENSION,
                    format!("concept `{owner}` does not use domain `{}`", domain_seg.name),
                    domain_seg.span,
                );
            } else {
                self.error(
                    codes::UNKNOWN_DOMAIN,
                    format!("unknown domain `{}`", domain_seg.name),
                    domain_seg.span,
                );
            }
            return None;
        }
        let Some(qd) = self.model.domains[&domain_seg.name]
            .dimension(&dim_seg.name)
            .cloned()
        else {
            self.error(
                codes::UNKNOWN_DIMENSION,
                format!(
                    "domain `{}` has no dimension `{}`",
                    domain_seg.name, dim_seg.name
                ),
                dim_seg.span,
            );
            return None;
        };

        let dim = DimRef::new(&domain_seg.name, &dim_seg.name);
        let q = self.check_value(entry.value, entry.value_span, entry.unit.as_ref(), &qd, &dim)?;
        Some((dim, q))
    }

    /// Unit-kind and scale checks for one literal against a dimension.
    fn check_value(
        &mut self,
        value: f64,
        value_span: Span,
        unit: Option<&UnitSuffix>,
        qd: &QualityDimension,
        dim: &DimRef,
    ) -> Option<Quantity> {
        let q = match unit {
            Some(u) => {
                if u.unit.kind() != qd.unit_kind {
                    self.error(
                        codes::UNIT_MISMATCH,
                        format!(
                            "`{dim}` expects a {} value, but `{}` is a {} unit",
                            qd.unit_kind,
                            u.unit.symbol(),
                            u.unit.kind()
                        ),
                        u.span,
                    );
                    return None;
                }
                Quantity::new(value, u.unit)
            }
            None => {
                if qd.unit_kind != UnitKind::Dimensionless {
                    self.error(
                        codes::UNIT_MISMATCH,
                        format!("`{dim}` expects a {} unit on its value", qd.unit_kind),
                        value_span,
                    );
                    return None;
                }
                Quantity::dimensionless(value)
            }
        };
        if qd.scale == Scale::OrdinalInteger && !math::is_integer(q.to_base()) {
            self.error(
                codes::UNIT_MISMATCH,
                format!("`{dim}` is ordinal and requires an integer value"),
                value_span,
            );
            return None;
        }
        Some(q)
    }

    fn resolve_prototypes(&mut self, ast: &Ast) {
        let mut seen: BTreeSet<String> = BTreeSet::new();
        for decl in &ast.prototypes {
            if !seen.insert(decl.name.name.clone()) {
                self.error(
                    codes::DUPLICATE_NAME,
                    format!("prototype `{}` is already defined", decl.name.name),
                    decl.name.span,
                );
                continue;
            }
            if let Some(p) = self.resolve_prototype(decl) {
                self.model.prototypes.insert(p.name.clone(), p);
            }
        }
    }

    fn resolve_prototype(&mut self, decl: &PrototypeDecl) -> Option<ResolvedPrototype> {
        let concept_key = self.resolve_concept_ref(&decl.concept)?;
        // The reference is declared; if its declaration failed, its own
        // errors already explain the problem.
        let concept = self.model.concepts.get(&concept_key)?.clone();
        let simple = concept_simple_name(&concept.name);

        let before = self.diags.len();
        let mut point = Knoxel::new();
        let mut value_spans: BTreeMap<DimRef, Span> = BTreeMap::new();
        for entry in &decl.values {
            let Some((dim, q)) = self.resolve_point(entry, &concept.used_domains, simple) else {
                continue;
            };
            if point.contains_dim(&dim) {
                self.error(
                    codes::DUPLICATE_NAME,
                    format!("duplicate value for dimension `{dim}`"),
                    entry.path.span,
                );
                continue;
            }
            point.insert(dim.clone(), q);
            value_spans.insert(dim, entry.span);
        }
        for dim in concept.region.dims() {
            if !point.contains_dim(dim) {
                self.error(
                    codes::MISSING_DIMENSION,
                    format!(
                        "prototype `{}` gives no value for dimension `{dim}`",
                        decl.name.name
                    ),
                    decl.name.span,
                );
            }
        }
        if self.diags.len() != before {
            return None;
        }
        Some(ResolvedPrototype {
            name: decl.name.name.clone(),
            concept: concept.name.clone(),
            point,
            value_spans,
            name_span: decl.name.span,
        })
    }

    /// Resolves a concept reference (`use_concept` target): either
    /// `namespace.concept` or a bare name reachable through imports.
    /// Returns the qualified key of a *declared* concept; the caller decides
    /// what to do when the declaration itself failed.
    fn resolve_concept_ref(&mut self, q: &QName) -> Option<String> {
        match q.segments.len() {
            1 => {
                let name = &q.segments[0].name;
                let homes: Vec<&String> = self
                    .imports
                    .iter()
                    .filter(|ns| self.declared_concepts[*ns].contains(name))
                    .collect();
                match homes.len() {
                    0 => {
                        self.error(
                            codes::UNKNOWN_CONCEPT,
                            format!("unknown concept `{name}`"),
                            q.span,
                        );
                        None
                    }
                    1 => Some(format!("{}.{name}", homes[0])),
                    _ => {
                        let list = join_names(&homes);
                        self.error(
                            codes::DUPLICATE_NAME,
                            format!("`{name}` is ambiguous; it exists in namespaces {list}"),
                            q.span,
                        );
                        None
                    }
                }
            }
            2 => {
                let ns = &q.segments[0];
                let name = &q.segments[1];
                let Some(concepts) = self.declared_concepts.get(&ns.name) else {
                    self.error(
                        codes::UNKNOWN_NAMESPACE,
                        format!("unknown namespace `{}`", ns.name),
                        ns.span,
                    );
                    return None;
                };
                if !concepts.contains(&name.name) {
                    self.error(
                        codes::UNKNOWN_CONCEPT,
                        format!("namespace `{}` has no concept `{}`", ns.name, name.name),
                        name.span,
                    );
                    return None;
                }
                Some(format!("{}.{}", ns.name, name.name))
            }
            _ => {
                self.error(
                    codes::UNKNOWN_CONCEPT,
                    format!("unknown concept `{}`", q.text()),
                    q.span,
                );
                None
            }
        }
    }

    /// Resolves a `from` target, which may be a concept or a prototype.
    fn resolve_target(&mut self, q: &QName) -> Option<TargetRef> {
        if q.segments.len() == 1 {
            let name = &q.segments[0].name;
            let proto = self.declared_prototypes.contains(name);
            let homes: Vec<&String> = self
                .imports
                .iter()
                .filter(|ns| self.declared_concepts[*ns].contains(name))
                .collect();
            match (proto, homes.len()) {
                (true, 0) => {
                    if !self.model.prototypes.contains_key(name) {
                        return None; // declared but failed; already reported
                    }
                    return Some(TargetRef {
                        kind: TargetKind::Prototype,
                        key: name.clone(),
                    });
                }
                (false, 1) => {
                    let key = format!("{}.{name}", homes[0]);
                    if !self.model.concepts.contains_key(&key) {
                        return None;
                    }
                    return Some(TargetRef {
                        kind: TargetKind::Concept,
                        key,
                    });
                }
                (false, 0) => {
                    self.error(
                        codes::UNKNOWN_CONCEPT,
                        format!("unknown concept or prototype `{name}`"),
                        q.span,
                    );
                    return None;
                }
                _ => {
                    self.error(
                        codes::DUPLICATE_NAME,
                        format!("`{name}` is ambiguous between a prototype and imported concepts"),
                        q.span,
                    );
                    return None;
                }
            }
        }
        let key = self.resolve_concept_ref(q)?;
        if !self.model.concepts.contains_key(&key) {
            return None;
        }
        Some(TargetRef {
            kind: TargetKind::Concept,
            key,
        })
    }

    fn resolve_specifications(&mut self, ast: &Ast) {
        let mut seen: BTreeSet<String> = BTreeSet::new();
        // Data blocks first: dependency graphs refer to them by name.
        for decl in &ast.specifications {
            let crate::syntax::ast::SpecBody::Data(data) = &decl.body else {
                continue;
            };
            if !seen.insert(decl.name.name.clone()) {
                self.error(
                    codes::DUPLICATE_NAME,
                    format!("specification `{}` is already defined", decl.name.name),
                    decl.name.span,
                );
                continue;
            }
            if let Some(spec) = self.resolve_data_spec(decl.name.name.clone(), decl.name.span, data)
            {
                self.model.specifications.insert(spec.name.clone(), spec);
            }
        }
        for decl in &ast.specifications {
            let crate::syntax::ast::SpecBody::Graph(graph) = &decl.body else {
                continue;
            };
            if !seen.insert(decl.name.name.clone()) {
                self.error(
                    codes::DUPLICATE_NAME,
                    format!("specification `{}` is already defined", decl.name.name),
                    decl.name.span,
                );
                continue;
            }
            let before = self.diags.len();
            let mut nodes: BTreeSet<String> = BTreeSet::new();
            let mut edges: BTreeSet<(String, String)> = BTreeSet::new();
            for edge in &graph.edges {
                for endpoint in [&edge.from, &edge.to] {
                    if self.declared_graph_specs.contains(&endpoint.name) {
                        self.error(
                            codes::UNKNOWN_SPEC,
                            format!(
                                "`{}` is a dependency graph, not a Data specification",
                                endpoint.name
                            ),
                            endpoint.span,
                        );
                    } else if !self.declared_data_specs.contains(&endpoint.name) {
                        self.error(
                            codes::UNKNOWN_SPEC,
                            format!("unknown specification `{}`", endpoint.name),
                            endpoint.span,
                        );
                    }
                }
                nodes.insert(edge.from.name.clone());
                nodes.insert(edge.to.name.clone());
                edges.insert((edge.from.name.clone(), edge.to.name.clone()));
            }
            let clean = self.diags.len() == before
                && nodes.iter().all(|n| self.model.specifications.contains_key(n));
            if clean {
                self.model.graphs.insert(
                    decl.name.name.clone(),
                    GraphSpec {
                        name: decl.name.name.clone(),
                        nodes,
                        edges,
                        name_span: decl.name.span,
                    },
                );
            }
        }
    }

    fn resolve_data_spec(
        &mut self,
        name: String,
        name_span: Span,
        data: &DataBlock,
    ) -> Option<ResolvedSpec> {
        let target = self.resolve_target(&data.target)?;
        let concept = self
            .model
            .target_concept(&target)
            .expect("clean targets resolve to a clean concept")
            .clone();
        let condition = match &data.condition {
            Some(cond) => Some(self.resolve_condition(cond, &target, &concept)?),
            None => None,
        };
        let deadline_ms = data
            .deadline
            .as_ref()
            .map(|dl| (dl.value * dl.unit.unit.factor_to_base() + 0.5) as u64);
        Some(ResolvedSpec {
            name,
            selector: data.selector,
            target,
            condition,
            deadline_ms,
            name_span,
        })
    }

    fn resolve_condition(
        &mut self,
        cond: &ConditionExpr,
        target: &TargetRef,
        concept: &ResolvedConcept,
    ) -> Option<ResolvedCondition> {
        match cond {
            ConditionExpr::Paren(inner, _) => self.resolve_condition(inner, target, concept),
            ConditionExpr::And(l, r, _) => {
                let rl = self.resolve_condition(l, target, concept);
                let rr = self.resolve_condition(r, target, concept);
                Some(ResolvedCondition::And(
                    alloc::boxed::Box::new(rl?),
                    alloc::boxed::Box::new(rr?),
                ))
            }
            ConditionExpr::Or(l, r, _) => {
                let rl = self.resolve_condition(l, target, concept);
                let rr = self.resolve_condition(r, target, concept);
                Some(ResolvedCondition::Or(
                    alloc::boxed::Box::new(rl?),
                    alloc::boxed::Box::new(rr?),
                ))
            }
            ConditionExpr::Comparison(c) => match &c.lhs {
                CompareLhs::Similarity(call) => {
                    if target.kind != TargetKind::Prototype {
                        self.error(
                            codes::SIMILARITY_NEEDS_PROTOTYPE,
                            format!(
                                "`Similarity` needs a prototype target, but `{}` is a concept",
                                target.key
                            ),
                            call.span,
                        );
                        return None;
                    }
                    if call.measure.name != "EuclideanDistance" {
                        self.error(
                            codes::UNKNOWN_MEASURE,
                            format!("unknown similarity measure `{}`", call.measure.name),
                            call.measure.span,
                        );
                        return None;
                    }
                    if let Some(u) = &c.unit {
                        self.error(
                            codes::UNIT_MISMATCH,
                            "similarity values are dimensionless; remove the unit".into(),
                            u.span,
                        );
                        return None;
                    }
                    Some(ResolvedCondition::Similarity {
                        op: c.op,
                        value: c.value,
                        span: c.span,
                    })
                }
                CompareLhs::Path(path) => {
                    let (dim, qd) = self.resolve_condition_path(path, concept)?;
                    let q = self.check_value(c.value, c.value_span, c.unit.as_ref(), &qd, &dim)?;
                    Some(ResolvedCondition::Compare {
                        dim,
                        op: c.op,
                        value: q.to_base(),
                        span: c.span,
                    })
                }
            },
        }
    }

    /// Resolves a condition path against the target's concept. Accepts
    /// `Dimension`, `Domain.Dimension`, and either form prefixed with the
    /// concept's simple name. A leading segment that names a used domain is
    /// always read as the domain.
    fn resolve_condition_path(
        &mut self,
        path: &QName,
        concept: &ResolvedConcept,
    ) -> Option<(DimRef, QualityDimension)> {
        let simple = concept_simple_name(&concept.name);
        let segs = &path.segments;
        let rest: &[crate::syntax::ast::Ident] =
            if segs.len() >= 2 && concept.used_domains.contains(&segs[0].name) {
                segs
            } else if segs.len() >= 2 && segs[0].name == simple {
                &segs[1..]
            } else {
                segs
            };

        match rest.len() {
            1 => {
                let name = &rest[0].name;
                let mut matches: Vec<(String, QualityDimension)> = Vec::new();
                for domain_name in &concept.used_domains {
                    if let Some(qd) = self.model.domains[domain_name].dimension(name) {
                        matches.push((domain_name.clone(), qd.clone()));
                    }
                }
                match matches.len() {
                    0 => {
                        self.error(
                            codes::UNKNOWN_DIMENSION,
                            format!("concept `{simple}` has no dimension `{name}`"),
                            rest[0].span,
                        );
                        None
                    }
                    1 => {
                        let (domain, qd) = matches.pop().expect("one element");
                        Some((DimRef::new(&domain, name), qd))
                    }
                    _ => {
                        let homes: Vec<&String> = matches.iter().map(|(d, _)| d).collect();
                        let list = join_names(&homes);
                        self.error(
                            codes::DUPLICATE_NAME,
                            format!("dimension `{name}` is ambiguous; it exists in domains {list}"),
                            rest[0].span,
                        );
                        None
                    }
                }
            }
            2 => {
                let (domain_seg, dim_seg) = (&rest[0], &rest[1]);
                if !concept.used_domains.iter().any(|d| d == &domain_seg.name) {
                    if self.model.domains.contains_key(&domain_seg.name) {
                        self.error(
                            codes::UNKNOWN_DIMENSION,
                            format!(
                                "concept `{simple}` does not use domain `{}`",
                                domain_seg.name
                            ),
                            domain_seg.span,
                        );
                    } else {
                        self.error(
                            codes::UNKNOWN_DOMAIN,
                            format!("unknown domain `{}`", domain_seg.name),
                            domain_seg.span,
                        );
                    }
                    return None;
                }
                let Some(qd) = self.model.domains[&domain_seg.name]
                    .dimension(&dim_seg.name)
                    .cloned()
                else {
                    self.error(
                        codes::UNKNOWN_DIMENSION,
                        format!(
                            "domain `{}` has no dimension `{}`",
                            domain_seg.name, dim_seg.name
                        ),
                        dim_seg.span,
                    );
                    return None;
                };
                Some((DimRef::new(&domain_seg.name, &dim_seg.name), qd))
            }
            _ => {
                self.error(
                    codes::UNKNOWN_DIMENSION,
                    format!("cannot resolve dimension path `{}`", path.text()),
                    path.span,
                );
                None
            }
        }
    }
}

/// `namespace.concept` → `concept`.
fn concept_simple_name(qualified: &str) -> &str {
    qualified.rsplit('.').next().unwrap_or(qualified)
}

fn join_names(names: &[&String]) -> String {
    let mut out = String::new();
    for (i, n) in names.iter().enumerate() {
        if i > 0 {
            out.push_str(" and ");
        }
        out.push('`');
        out.push_str(n);
        out.push('`');
    }
    out
}
