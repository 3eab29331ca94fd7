//! End-to-end tests driving the `rpsl` binary.
//!
//! Every invocation runs from the workspace root so the corpus paths and the
//! scene paths inside provider configurations resolve the same way they do
//! in the README examples.

use std::path::PathBuf;
use std::process::Command;

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .ancestors()
        .nth(2)
        .unwrap()
        .to_path_buf()
}

struct Run {
    status: i32,
    stdout: String,
    stderr: String,
}

fn rpsl(args: &[&str]) -> Run {
    rpsl_env(args, &[("RPSL_COLOR", "0")])
}

fn rpsl_env(args: &[&str], envs: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rpsl"));
    cmd.current_dir(workspace_root()).args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        status: out.status.code().expect("no signal"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

#[test]
fn check_passes_the_concept_and_prototype_listings_with_one_warning() {
    let run = rpsl(&["check", "corpus/box-model.rpsl"]);
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let lines: Vec<&str> = run.stderr.lines().collect();
    assert_eq!(lines.len(), 1, "expected exactly one diagnostic: {lines:?}");
    assert!(lines[0].contains("warning[W001]"), "{}", lines[0]);
    assert!(run.stdout.is_empty());
}

#[test]
fn check_deny_warnings_turns_warnings_into_failure() {
    let run = rpsl(&["check", "corpus/box-model.rpsl", "--deny-warnings"]);
    assert_eq!(run.status, 1);
}

#[test]
fn check_full_corpus_reports_exactly_w001_and_w002() {
    let run = rpsl(&["check", "corpus/boxes.rpsl"]);
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let codes: Vec<&str> = run
        .stderr
        .lines()
        .map(|l| {
            if l.contains("[W001]") {
                "W001"
            } else if l.contains("[W002]") {
                "W002"
            } else {
                l
            }
        })
        .collect();
    assert_eq!(codes, ["W001", "W002"]);
}

#[test]
fn check_merges_several_files_into_one_compilation_unit() {
    // The specifications file resolves against declarations from the other
    // file; each diagnostic names the file it came from.
    let run = rpsl(&["check", "corpus/box-model.rpsl", "corpus/box-specs.rpsl"]);
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    assert!(
        run.stderr.contains("corpus/box-model.rpsl:29:3: warning[W001]"),
        "{}",
        run.stderr
    );
    assert!(
        run.stderr.contains("corpus/box-specs.rpsl:5:31: warning[W002]"),
        "{}",
        run.stderr
    );
    assert!(!run.stderr.contains("error"), "{}", run.stderr);
}

#[test]
fn check_reports_syntax_errors_with_line_and_column() {
    let path = std::env::temp_dir().join(format!("rpsl-broken-{}.rpsl", std::process::id()));
    std::fs::write(&path, "broken: Specification {\n\td: Data {\n\t\tget Amount from x\n").unwrap();
    let run = rpsl(&["check", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(run.status, 1);
    assert!(run.stderr.contains("error[E000]"), "{}", run.stderr);
    assert!(run.stderr.contains(":4:1:"), "{}", run.stderr);
}

#[test]
fn check_missing_file_is_a_runtime_failure() {
    let run = rpsl(&["check", "corpus/nope.rpsl"]);
    assert_eq!(run.status, 3);
    assert!(run.stderr.contains("cannot read"), "{}", run.stderr);
}

#[test]
fn check_json_diagnostics_carry_position_fields() {
    let run = rpsl(&["check", "corpus/box-model.rpsl", "--format", "json"]);
    assert_eq!(run.status, 0);
    let doc: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    let d = &doc["diagnostics"][0];
    assert_eq!(d["severity"], "warning");
    assert_eq!(d["code"], "W001");
    assert_eq!(d["file"], "corpus/box-model.rpsl");
    assert_eq!(d["line"], 29);
    assert_eq!(d["column"], 3);
    assert!(d["message"].as_str().unwrap().contains("139"));
}

#[test]
fn eval_counts_the_exact_prototype_match() {
    let run = rpsl(&[
        "eval",
        "darkBoxSpec",
        "corpus/boxes.rpsl",
        "--scene",
        "corpus/desk.json",
    ]);
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("darkBoxSpec: Amount = 1"), "{}", run.stdout);
    assert!(run.stdout.contains("matched: box1"), "{}", run.stdout);
}

#[test]
fn eval_on_an_empty_scene_counts_zero() {
    let run = rpsl(&[
        "eval",
        "boxSpec",
        "corpus/boxes.rpsl",
        "--scene",
        "corpus/empty.json",
    ]);
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("boxSpec: Amount = 0"), "{}", run.stdout);
}

#[test]
fn eval_refuses_dependency_graphs() {
    let run = rpsl(&[
        "eval",
        "dependSpec",
        "corpus/boxes.rpsl",
        "--scene",
        "corpus/desk.json",
    ]);
    assert_eq!(run.status, 2);
    assert!(
        run.stderr
            .contains("dependSpec is a DependencyGraph; use run"),
        "{}",
        run.stderr
    );
}

#[test]
fn eval_unknown_specification_is_a_usage_error() {
    let run = rpsl(&[
        "eval",
        "nosuch",
        "corpus/boxes.rpsl",
        "--scene",
        "corpus/desk.json",
    ]);
    assert_eq!(run.status, 2);
    assert!(run.stderr.contains("unknown specification `nosuch`"), "{}", run.stderr);
}

#[test]
fn eval_rejects_scenes_with_unknown_dimensions() {
    let path = std::env::temp_dir().join(format!("rpsl-scene-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{"frame": "f", "stamp_ms": 0, "instances": [
            {"id": "a", "values": [{"dim": "Size.Depth", "value": 1, "unit": "mm"}]}
        ]}"#,
    )
    .unwrap();
    let run = rpsl(&[
        "eval",
        "boxSpec",
        "corpus/boxes.rpsl",
        "--scene",
        path.to_str().unwrap(),
    ]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(run.status, 3);
    assert!(run.stderr.contains("unknown dimension `Size.Depth`"), "{}", run.stderr);
}

#[test]
fn eval_pose_json_matches_the_golden_document() {
    let run = rpsl(&[
        "eval",
        "darkBoxPoseSpec",
        "corpus/boxes.rpsl",
        "--scene",
        "corpus/desk.json",
        "--format",
        "json",
    ]);
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    assert_eq!(run.stdout, include_str!("golden/eval-pose.json"));
}

#[test]
fn eval_on_broken_sources_prints_diagnostics_and_fails() {
    let path = std::env::temp_dir().join(format!("rpsl-bad-{}.rpsl", std::process::id()));
    std::fs::write(&path, "s: Specification {\n\td: Data {\n\t\tget Amount from ghost\n\t}\n}\n")
        .unwrap();
    let run = rpsl(&[
        "eval",
        "s",
        path.to_str().unwrap(),
        "--scene",
        "corpus/empty.json",
    ]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(run.status, 1);
    assert!(run.stderr.contains("error[E002]"), "{}", run.stderr);
}

#[test]
fn run_reports_a_missed_deadline() {
    let run = rpsl(&[
        "run",
        "darkBoxDeadlineSpec",
        "corpus/boxes.rpsl",
        "--providers",
        "corpus/lat4000.json",
    ]);
    assert_eq!(run.status, 1);
    assert!(
        run.stdout
            .contains("DeadlineMissed (elapsed 4000ms, deadline 3000ms)"),
        "{}",
        run.stdout
    );
}

#[test]
fn run_executes_the_dependency_chain_in_order() {
    let run = rpsl(&[
        "run",
        "dependSpec",
        "corpus/boxes.rpsl",
        "--providers",
        "corpus/lat0.json",
    ]);
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let first = run.stdout.find("darkBoxSpec: Completed").expect("first entry");
    let second = run
        .stdout
        .find("darkBoxPoseSpec: Completed")
        .expect("second entry");
    assert!(first < second, "{}", run.stdout);
}

#[test]
fn run_skips_successors_of_a_missed_deadline() {
    let run = rpsl(&[
        "run",
        "dependSpec",
        "corpus/deadline-chain.rpsl",
        "--providers",
        "corpus/miss-first.json",
    ]);
    assert_eq!(run.status, 1);
    assert!(run.stdout.contains("firstSpec: DeadlineMissed"), "{}", run.stdout);
    assert!(
        run.stdout.contains("secondSpec: Skipped (blocked on firstSpec)"),
        "{}",
        run.stdout
    );
}

#[test]
fn run_json_report_is_byte_identical_across_runs_and_matches_golden() {
    let args = [
        "run",
        "dependSpec",
        "corpus/boxes.rpsl",
        "--providers",
        "corpus/lat0.json",
        "--format",
        "json",
    ];
    let a = rpsl(&args);
    let b = rpsl(&args);
    assert_eq!(a.status, 0, "stderr: {}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, include_str!("golden/run-lat0.json"));
}

#[test]
fn run_unknown_name_is_a_usage_error() {
    let run = rpsl(&[
        "run",
        "ghost",
        "corpus/boxes.rpsl",
        "--providers",
        "corpus/lat0.json",
    ]);
    assert_eq!(run.status, 2);
    assert!(run.stderr.contains("unknown specification `ghost`"), "{}", run.stderr);
}

#[test]
fn run_rejects_malformed_provider_configurations() {
    let path = std::env::temp_dir().join(format!("rpsl-prov-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"default_latency_ms": "fast"}"#).unwrap();
    let run = rpsl(&[
        "run",
        "darkBoxSpec",
        "corpus/boxes.rpsl",
        "--providers",
        path.to_str().unwrap(),
    ]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(run.status, 3);
    assert!(run.stderr.contains("providers"), "{}", run.stderr);
}

#[test]
fn run_without_a_scene_for_a_spec_records_a_failure() {
    let path = std::env::temp_dir().join(format!("rpsl-noscene-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"default_latency_ms": 0}"#).unwrap();
    let run = rpsl(&[
        "run",
        "darkBoxSpec",
        "corpus/boxes.rpsl",
        "--providers",
        path.to_str().unwrap(),
    ]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(run.status, 1);
    assert!(
        run.stdout
            .contains("Failed (no scene configured for specification `darkBoxSpec`)"),
        "{}",
        run.stdout
    );
}

#[test]
fn ast_dumps_a_parse_tree() {
    let run = rpsl(&["ast", "corpus/box-concept.rpsl"]);
    assert_eq!(run.status, 0);
    assert!(run.stdout.contains("NamespaceDecl"), "{}", run.stdout);
    assert!(run.stdout.contains("myConcepts"), "{}", run.stdout);
}

#[test]
fn color_escapes_follow_rpsl_color() {
    let colored = rpsl_env(&["check", "corpus/box-model.rpsl"], &[("RPSL_COLOR", "1")]);
    assert!(colored.stderr.contains("\x1b["), "{}", colored.stderr);
    let plain = rpsl_env(&["check", "corpus/box-model.rpsl"], &[("RPSL_COLOR", "0")]);
    assert!(!plain.stderr.contains("\x1b["), "{}", plain.stderr);
}

#[test]
fn every_corpus_command_finishes_quickly() {
    let started = std::time::Instant::now();
    rpsl(&["check", "corpus/boxes.rpsl"]);
    rpsl(&[
        "eval",
        "darkBoxSpec",
        "corpus/boxes.rpsl",
        "--scene",
        "corpus/desk.json",
    ]);
    rpsl(&[
        "run",
        "dependSpec",
        "corpus/boxes.rpsl",
        "--providers",
        "corpus/lat0.json",
    ]);
    assert!(
        started.elapsed() < std::time::Duration::from_secs(3),
        "corpus commands took {:?}",
        started.elapsed()
    );
}
