//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 success, 1 diagnostics with errors (or any non-completed
//! verdict from `run`, or warnings under `--deny-warnings`), 2 usage errors,
//! 3 runtime failures such as unreadable files or malformed documents.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rpsl_core::analyzer::{resolve_and_check, ResolvedModel};
use rpsl_core::diag::{has_errors, sort_diagnostics, Diagnostic, Severity};
use rpsl_core::exec::{execute_plan, Clock, DependencyGraph, SimulatedClock};
use rpsl_core::model::builtin_registry;
use rpsl_core::query::{evaluate_by_name, QueryError};
use rpsl_core::span::FileId;
use rpsl_core::syntax::ast::Ast;
use rpsl_core::syntax::parse_source;

use crate::providers::{load_providers, RealTimeClock};
use crate::render::Renderer;
use crate::scene::load_scene;

pub const EXIT_OK: u8 = 0;
pub const EXIT_DIAGNOSTICS: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RUNTIME: u8 = 3;

#[derive(Parser)]
#[command(name = "rpsl", version, about = "Check, evaluate and run RPSL perception specifications")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClockKind {
    /// Scripted clock starting at 0; provider latency advances it.
    Simulated,
    /// Wall clock; provider latency is slept through.
    Real,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and analyze sources, printing diagnostics.
    Check {
        /// Source files, merged into one compilation unit.
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Exit nonzero when warnings are present.
        #[arg(long)]
        deny_warnings: bool,
    },
    /// Evaluate a Data specification against a scene snapshot.
    Eval {
        /// Specification name.
        spec: String,
        /// Source files, merged into one compilation unit.
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Scene document (JSON).
        #[arg(long)]
        scene: PathBuf,
    },
    /// Execute a specification or dependency graph through scene providers.
    Run {
        /// Specification or dependency-graph name.
        name: String,
        /// Source files, merged into one compilation unit.
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Provider configuration (JSON).
        #[arg(long)]
        providers: PathBuf,
        #[arg(long, value_enum, default_value_t = ClockKind::Simulated)]
        clock: ClockKind,
    },
    /// Dump the parse tree. Debugging aid; the output format is not stable.
    Ast {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

/// A terminal failure outside the diagnostics pipeline.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn runtime(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_RUNTIME,
            message: message.into(),
        }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let renderer = Renderer::new(cli.format);
    let code = match dispatch(cli.command, &renderer) {
        Ok(code) => code,
        Err(f) => {
            renderer.error(&f.message);
            f.code
        }
    };
    ExitCode::from(code)
}

fn dispatch(command: Command, renderer: &Renderer) -> Result<u8, Failure> {
    match command {
        Command::Check {
            files,
            deny_warnings,
        } => cmd_check(&files, deny_warnings, renderer),
        Command::Eval { spec, files, scene } => cmd_eval(&spec, &files, &scene, renderer),
        Command::Run {
            name,
            files,
            providers,
            clock,
        } => cmd_run(&name, &files, &providers, clock, renderer),
        Command::Ast { files } => cmd_ast(&files, renderer),
    }
}

/// All sources of one invocation, parsed and analyzed together.
pub struct Unit {
    /// File names by `FileId` index, for diagnostic rendering.
    pub files: Vec<PathBuf>,
    pub ast: Ast,
    pub diagnostics: Vec<Diagnostic>,
    pub model: ResolvedModel,
}

fn compile(paths: &[PathBuf]) -> Result<Unit, Failure> {
    let mut ast = Ast::default();
    let mut diagnostics = Vec::new();
    for (index, path) in paths.iter().enumerate() {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Failure::runtime(format!("cannot read {}: {e}", path.display()))
        })?;
        let (file_ast, mut file_diags) = parse_source(&text, FileId(index as u32));
        ast.merge(file_ast);
        diagnostics.append(&mut file_diags);
    }
    let (model, mut semantic) = resolve_and_check(&ast, &builtin_registry());
    diagnostics.append(&mut semantic);
    sort_diagnostics(&mut diagnostics);
    Ok(Unit {
        files: paths.to_vec(),
        ast,
        diagnostics,
        model,
    })
}

fn cmd_check(files: &[PathBuf], deny_warnings: bool, renderer: &Renderer) -> Result<u8, Failure> {
    let unit = compile(files)?;
    renderer.diagnostics(&unit);
    let errors = has_errors(&unit.diagnostics);
    let warnings = unit
        .diagnostics
        .iter()
        .any(|d| d.severity == Severity::Warning);
    if errors || (deny_warnings && warnings) {
        Ok(EXIT_DIAGNOSTICS)
    } else {
        Ok(EXIT_OK)
    }
}

/// Compiles for a command that needs a model; broken sources end the
/// command with their diagnostics and exit code 1.
fn compile_for_use(files: &[PathBuf], renderer: &Renderer) -> Result<Unit, Failure> {
    let unit = compile(files)?;
    if has_errors(&unit.diagnostics) {
        renderer.diagnostics(&unit);
        return Err(Failure {
            code: EXIT_DIAGNOSTICS,
            message: String::from("sources did not compile; see diagnostics above"),
        });
    }
    Ok(unit)
}

fn cmd_eval(
    spec: &str,
    files: &[PathBuf],
    scene_path: &Path,
    renderer: &Renderer,
) -> Result<u8, Failure> {
    let unit = compile_for_use(files, renderer)?;
    let scene = load_scene(scene_path, &unit.model)?;
    let result = evaluate_by_name(spec, &scene, &unit.model).map_err(|e| match e {
        QueryError::UnknownSpec(_) | QueryError::TargetNotData(_) => {
            Failure::usage(e.to_string())
        }
    })?;
    renderer.query_result(&result);
    Ok(EXIT_OK)
}

fn cmd_run(
    name: &str,
    files: &[PathBuf],
    providers_path: &Path,
    clock: ClockKind,
    renderer: &Renderer,
) -> Result<u8, Failure> {
    let unit = compile_for_use(files, renderer)?;
    let graph = if let Some(spec) = unit.model.graphs.get(name) {
        DependencyGraph::from_spec(spec)
    } else if unit.model.specifications.contains_key(name) {
        DependencyGraph::singleton(name)
    } else {
        return Err(Failure::usage(format!("unknown specification `{name}`")));
    };
    let mut provider = load_providers(providers_path, &unit.model)?;
    let mut simulated = SimulatedClock::default();
    let mut real = RealTimeClock::new();
    let clock: &mut dyn Clock = match clock {
        ClockKind::Simulated => &mut simulated,
        ClockKind::Real => &mut real,
    };
    // Validation failures (cycles, nodes that are not Data specs) are
    // defects of the sources, same family as analyzer errors.
    let report = execute_plan(&graph, &unit.model, &mut provider, clock).map_err(|e| Failure {
        code: EXIT_DIAGNOSTICS,
        message: e.to_string(),
    })?;
    renderer.execution_report(name, &report);
    if report.all_completed() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_DIAGNOSTICS)
    }
}

fn cmd_ast(files: &[PathBuf], renderer: &Renderer) -> Result<u8, Failure> {
    let unit = compile(files)?;
    let syntax_errors: Vec<_> = unit
        .diagnostics
        .iter()
        .filter(|d| d.code == rpsl_core::diag::codes::SYNTAX)
        .cloned()
        .collect();
    if !syntax_errors.is_empty() {
        let broken = Unit {
            diagnostics: syntax_errors,
            ..unit
        };
        renderer.diagnostics(&broken);
        return Ok(EXIT_DIAGNOSTICS);
    }
    println!("{:#?}", unit.ast);
    Ok(EXIT_OK)
}
