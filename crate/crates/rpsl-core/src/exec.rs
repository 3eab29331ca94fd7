//! Dependency-graph validation and deadline-enforcing plan execution.
//!
//! The executor talks to the outside world through two behavioral contracts:
//! a [`Clock`] handing out millisecond stamps and a [`SceneProvider`]
//! answering one specification with a scene and a response stamp. Under a
//! deterministic provider and clock, repeated runs produce identical
//! reports; tests and the simulated CLI mode rely on that.
//!
//! Deadline protocol: a specification is stamped when issued, the provider's
//! answer is stamped on arrival, and `elapsed = response − request`. The
//! deadline bound is inclusive — `elapsed == deadline` completes. A missed
//! deadline (or a provider failure) poisons all transitive successors, which
//! are reported as `Skipped` naming a blocking predecessor; independent
//! nodes still run. Retries are out of scope by design.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::analyzer::{GraphSpec, ResolvedModel};
use crate::query::{evaluate_specification, QueryResult, Scene};

/// A set of Data-spec names plus `before` edges. Always acyclic once
/// [`validate_dependency_graph`] passes; edge endpoints are members of
/// `nodes` by construction.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DependencyGraph {
    pub nodes: BTreeSet<String>,
    pub edges: BTreeSet<(String, String)>,
}

impl DependencyGraph {
    /// A one-node plan: running a plain Data specification is the trivial
    /// graph over it.
    pub fn singleton(name: &str) -> Self {
        let mut nodes = BTreeSet::new();
        nodes.insert(name.to_string());
        DependencyGraph {
            nodes,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_spec(spec: &GraphSpec) -> Self {
        DependencyGraph {
            nodes: spec.nodes.clone(),
            edges: spec.edges.clone(),
        }
    }

    pub fn with_edge(mut self, from: &str, to: &str) -> Self {
        self.nodes.insert(from.to_string());
        self.nodes.insert(to.to_string());
        self.edges.insert((from.to_string(), to.to_string()));
        self
    }

    pub fn with_node(mut self, name: &str) -> Self {
        self.nodes.insert(name.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A node does not name a Data specification in the model.
    UnknownSpec(String),
    /// A directed cycle; the witness path starts and ends on the same name,
    /// e.g. `[a, b, a]`.
    Cycle(Vec<String>),
}

impl core::fmt::Display for GraphError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GraphError::UnknownSpec(n) => write!(f, "unknown specification `{n}`"),
            GraphError::Cycle(path) => {
                write!(f, "dependency cycle: ")?;
                for (i, n) in path.iter().enumerate() {
                    if i > 0 {
                        write!(f, " -> ")?;
                    }
                    write!(f, "{n}")?;
                }
                Ok(())
            }
        }
    }
}

/// Checks that every node names a Data specification and that no directed
/// cycle exists. Nodes are checked in ascending name order, so the reported
/// unknown name is deterministic.
pub fn validate_dependency_graph(
    graph: &DependencyGraph,
    model: &ResolvedModel,
) -> Result<(), GraphError> {
    for node in &graph.nodes {
        if !model.specifications.contains_key(node) {
            return Err(GraphError::UnknownSpec(node.clone()));
        }
    }
    match find_cycle(graph) {
        Some(path) => Err(GraphError::Cycle(path)),
        None => Ok(()),
    }
}

/// Depth-first search in ascending name order; the first back edge found
/// yields the witness cycle.
fn find_cycle(graph: &DependencyGraph) -> Option<Vec<String>> {
    let mut succ: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (from, to) in &graph.edges {
        succ.entry(from).or_default().push(to);
    }

    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let mut color: BTreeMap<&str, Color> =
        graph.nodes.iter().map(|n| (n.as_str(), Color::White)).collect();

    fn visit<'a>(
        node: &'a str,
        succ: &BTreeMap<&'a str, Vec<&'a str>>,
        color: &mut BTreeMap<&'a str, Color>,
        stack: &mut Vec<&'a str>,
    ) -> Option<Vec<String>> {
        color.insert(node, Color::Gray);
        stack.push(node);
        if let Some(next) = succ.get(node) {
            for &n in next {
                match color.get(n).copied().unwrap_or(Color::White) {
                    Color::Gray => {
                        let start = stack.iter().position(|s| *s == n).expect("on stack");
                        let mut path: Vec<String> =
                            stack[start..].iter().map(|s| s.to_string()).collect();
                        path.push(n.to_string());
                        return Some(path);
                    }
                    Color::White => {
                        if let Some(found) = visit(n, succ, color, stack) {
                            return Some(found);
                        }
                    }
                    Color::Black => {}
                }
            }
        }
        stack.pop();
        color.insert(node, Color::Black);
        None
    }

    let nodes: Vec<&str> = graph.nodes.iter().map(|n| n.as_str()).collect();
    for node in nodes {
        if color[node] == Color::White {
            let mut stack = Vec::new();
            if let Some(path) = visit(node, &succ, &mut color, &mut stack) {
                return Some(path);
            }
        }
    }
    None
}

/// A deterministic topological order: repeatedly take the lexicographically
/// largest remaining sink and prepend it. Every edge `(u, v)` ends up with
/// `u` before `v`, and relabeling nodes to the same lexicographic order
/// relabels the output in place.
pub fn topological_order(graph: &DependencyGraph) -> Result<Vec<String>, GraphError> {
    let mut remaining: BTreeSet<&str> = graph.nodes.iter().map(|n| n.as_str()).collect();
    let mut order: Vec<String> = Vec::with_capacity(remaining.len());

    while !remaining.is_empty() {
        let sink = remaining
            .iter()
            .rev()
            .find(|&&n| {
                !graph
                    .edges
                    .iter()
                    .any(|(from, to)| from == n && remaining.contains(to.as_str()))
            })
            .copied();
        let Some(sink) = sink else {
            let path = find_cycle(graph).expect("no sink means a cycle exists");
            return Err(GraphError::Cycle(path));
        };
        order.push(sink.to_string());
        remaining.remove(sink);
    }
    order.reverse();
    Ok(order)
}

/// Millisecond time source. `advance` is meaningful for simulated clocks;
/// real-time implementations may ignore it (their time advances on its own).
pub trait Clock {
    fn now(&mut self) -> u64;
    fn advance(&mut self, ms: u64);
}

/// A scripted clock: starts anywhere, moves only when told.
#[derive(Debug, Clone, Default)]
pub struct SimulatedClock {
    now_ms: u64,
}

impl SimulatedClock {
    pub fn starting_at(now_ms: u64) -> Self {
        SimulatedClock { now_ms }
    }
}

impl Clock for SimulatedClock {
    fn now(&mut self) -> u64 {
        self.now_ms
    }

    fn advance(&mut self, ms: u64) {
        self.now_ms += ms;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProviderError {
    pub message: String,
}

impl ProviderError {
    pub fn new(message: impl Into<String>) -> Self {
        ProviderError {
            message: message.into(),
        }
    }
}

impl core::fmt::Display for ProviderError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.message)
    }
}

/// Answers one specification with a scene snapshot and the stamp at which
/// the answer became available. Must be deterministic under a fixed
/// configuration and clock for reports to be reproducible.
pub trait SceneProvider {
    fn respond(
        &mut self,
        spec: &str,
        request_stamp_ms: u64,
    ) -> Result<(Scene, u64), ProviderError>;
}

/// An in-memory provider: per-spec scene and latency with defaults. The
/// response stamp is `request + latency`, so under a simulated clock the
/// whole run is scripted.
#[derive(Debug, Clone, Default)]
pub struct InMemoryProvider {
    default_latency_ms: u64,
    default_scene: Option<Scene>,
    per_spec: BTreeMap<String, (Option<u64>, Option<Scene>)>,
}

impl InMemoryProvider {
    pub fn new(default_latency_ms: u64) -> Self {
        InMemoryProvider {
            default_latency_ms,
            ..Default::default()
        }
    }

    pub fn with_default_scene(mut self, scene: Scene) -> Self {
        self.default_scene = Some(scene);
        self
    }

    pub fn with_spec(mut self, name: &str, latency_ms: Option<u64>, scene: Option<Scene>) -> Self {
        self.per_spec.insert(name.to_string(), (latency_ms, scene));
        self
    }
}

impl SceneProvider for InMemoryProvider {
    fn respond(
        &mut self,
        spec: &str,
        request_stamp_ms: u64,
    ) -> Result<(Scene, u64), ProviderError> {
        let (latency, scene) = match self.per_spec.get(spec) {
            Some((l, s)) => (
                l.unwrap_or(self.default_latency_ms),
                s.as_ref().or(self.default_scene.as_ref()),
            ),
            None => (self.default_latency_ms, self.default_scene.as_ref()),
        };
        let Some(scene) = scene else {
            return Err(ProviderError::new(format!(
                "no scene configured for specification `{spec}`"
            )));
        };
        Ok((scene.clone(), request_stamp_ms + latency))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Completed(QueryResult),
    DeadlineMissed { deadline_ms: u64, elapsed_ms: u64 },
    /// Never issued: a transitive predecessor missed its deadline, failed,
    /// or was itself skipped. Names the nearest blocking predecessor.
    Skipped { blocked_on: String },
    /// The provider could not answer; the plan continues without this node.
    Failed { reason: String },
}

impl Verdict {
    pub fn is_completed(&self) -> bool {
        matches!(self, Verdict::Completed(_))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportEntry {
    pub spec: String,
    pub request_stamp_ms: u64,
    /// `None` when no response was ever received (skipped or failed nodes).
    pub response_stamp_ms: Option<u64>,
    pub verdict: Verdict,
}

/// Per-spec outcomes in execution order; each spec appears exactly once.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ExecutionReport {
    pub entries: Vec<ReportEntry>,
}

impl ExecutionReport {
    pub fn all_completed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict.is_completed())
    }

    pub fn entry(&self, spec: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.spec == spec)
    }
}

/// Executes a validated plan: issues each node in topological order, stamps
/// requests and responses, enforces inclusive deadlines, and skips the
/// transitive successors of any node that did not complete.
pub fn execute_plan(
    graph: &DependencyGraph,
    model: &ResolvedModel,
    provider: &mut dyn SceneProvider,
    clock: &mut dyn Clock,
) -> Result<ExecutionReport, GraphError> {
    validate_dependency_graph(graph, model)?;
    let order = topological_order(graph)?;

    let mut poisoned: BTreeSet<&str> = BTreeSet::new();
    let mut entries: Vec<ReportEntry> = Vec::with_capacity(order.len());

    for name in &order {
        // Direct predecessors are inspected in ascending name order, so the
        // blocking predecessor reported for a skip is deterministic.
        let blocker = graph
            .edges
            .iter()
            .filter(|(_, to)| to == name)
            .map(|(from, _)| from.as_str())
            .find(|from| poisoned.contains(from));
        if let Some(blocked_on) = blocker {
            poisoned.insert(name);
            entries.push(ReportEntry {
                spec: name.clone(),
                request_stamp_ms: clock.now(),
                response_stamp_ms: None,
                verdict: Verdict::Skipped {
                    blocked_on: blocked_on.to_string(),
                },
            });
            continue;
        }

        let spec = &model.specifications[name];
        let request = clock.now();
        match provider.respond(name, request) {
            Err(e) => {
                poisoned.insert(name);
                entries.push(ReportEntry {
                    spec: name.clone(),
                    request_stamp_ms: request,
                    response_stamp_ms: None,
                    verdict: Verdict::Failed {
                        reason: e.to_string(),
                    },
                });
            }
            Ok((scene, response)) => {
                let response = response.max(request);
                let lag = response - clock.now();
                clock.advance(lag);
                let elapsed = response - request;
                match spec.deadline_ms {
                    Some(deadline) if elapsed > deadline => {
                        poisoned.insert(name);
                        entries.push(ReportEntry {
                            spec: name.clone(),
                            request_stamp_ms: request,
                            response_stamp_ms: Some(response),
                            verdict: Verdict::DeadlineMissed {
                                deadline_ms: deadline,
                                elapsed_ms: elapsed,
                            },
                        });
                    }
                    _ => {
                        let result = evaluate_specification(spec, &scene, model);
                        entries.push(ReportEntry {
                            spec: name.clone(),
                            request_stamp_ms: request,
                            response_stamp_ms: Some(response),
                            verdict: Verdict::Completed(result),
                        });
                    }
                }
            }
        }
    }

    Ok(ExecutionReport { entries })
}
