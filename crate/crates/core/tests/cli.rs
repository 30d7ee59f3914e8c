//! End-to-end checks of the `ph` binary: exit codes, determinism, and
//! engine/oracle agreement through the command-line surface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> (String, String) {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    (
        dir.join(format!("{name}.graph.json")).display().to_string(),
        dir.join(format!("{name}.filtration.json"))
            .display()
            .to_string(),
    )
}

#[test]
fn compute_is_deterministic() {
    let (graph, filt) = fixture("degree_twin_a");
    let run = || {
        ph(&[
            "compute", "--mode", "fb", "--graph", &graph, "--filtration", &filt, "--time",
            "function",
        ])
    };
    let a = run();
    let b = run();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn compute_agrees_with_oracle_on_fixtures() {
    for name in ["degree_twin_a", "tree_twin_b", "bigon_trio", "colored_star"] {
        let (graph, filt) = fixture(name);
        for mode in ["forward", "backward", "fb", "extended", "ff"] {
            let engine = ph(&[
                "compute", "--mode", mode, "--graph", &graph, "--filtration", &filt,
            ]);
            let oracle = ph(&[
                "oracle", "--mode", mode, "--graph", &graph, "--filtration", &filt,
            ]);
            assert!(engine.status.success(), "{name}/{mode}");
            assert!(oracle.status.success(), "{name}/{mode}");
            assert_eq!(
                String::from_utf8_lossy(&engine.stdout),
                String::from_utf8_lossy(&oracle.stdout),
                "{name}/{mode}"
            );
        }
    }
}

#[test]
fn witness_suite_passes() {
    let out = ph(&["witness"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 failed"));
    assert!(!text.contains("FAIL "));
}

#[test]
fn missing_second_filtration_is_a_usage_error() {
    let (graph, filt) = fixture("degree_twin_a");
    let out = ph(&[
        "compute", "--mode", "fg", "--graph", &graph, "--filtration", &filt,
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("\"error\""), "stderr: {err}");
}

#[test]
fn hourglass_function_time_is_rejected() {
    let (graph, filt) = fixture("degree_twin_a");
    let dir = std::env::temp_dir();
    let sched = dir.join("ph_cli_test_schedule.json");
    std::fs::write(
        &sched,
        r#"[{"op":"include","ic":0},{"op":"include","ic":1},{"op":"include","ic":2},{"op":"include","ic":3},{"op":"contract","ic":0},{"op":"contract","ic":1},{"op":"contract","ic":2},{"op":"contract","ic":3}]"#,
    )
    .unwrap();
    let sched = sched.display().to_string();
    let out = ph(&[
        "compute",
        "--mode",
        "hourglass",
        "--graph",
        &graph,
        "--filtration",
        &filt,
        "--schedule",
        &sched,
        "--time",
        "function",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = ph(&[
        "compute",
        "--mode",
        "hourglass",
        "--graph",
        &graph,
        "--filtration",
        &filt,
        "--schedule",
        &sched,
    ]);
    assert!(out.status.success());
}

#[test]
fn invalid_graph_file_reports_json_diagnostic() {
    let dir = std::env::temp_dir();
    let bad = dir.join("ph_cli_test_bad_graph.json");
    std::fs::write(&bad, r#"{"n": 2, "edges": [[0, 5]]}"#).unwrap();
    let (_, filt) = fixture("degree_twin_a");
    let out = ph(&[
        "compute",
        "--mode",
        "forward",
        "--graph",
        &bad.display().to_string(),
        "--filtration",
        &filt,
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    let parsed: serde_json::Value = serde_json::from_str(err.trim()).expect("json diagnostic");
    assert!(parsed["error"].as_str().unwrap().contains("out of range"));
}

#[test]
fn distance_of_identical_diagrams_is_zero() {
    let (graph, filt) = fixture("tree_twin_a");
    let dir = std::env::temp_dir();
    let a = dir.join("ph_cli_test_a.json").display().to_string();
    let b = dir.join("ph_cli_test_b.json").display().to_string();
    for out_path in [&a, &b] {
        let out = ph(&[
            "compute", "--mode", "fb", "--graph", &graph, "--filtration", &filt, "--time",
            "function", "--output", out_path,
        ]);
        assert!(out.status.success());
    }
    let out = ph(&["distance", "--dim", "1", &a, &b]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "0");

    let out = ph(&["distance", "--dim", "0", "--exclude-essential", &a, &b]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "0");
}

#[test]
fn stability_command_passes() {
    let out = ph(&[
        "stability", "--trials", "50", "--max-n", "7", "--epsilon", "0.25", "--seed", "3",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 violations"), "{text}");
}

#[test]
fn bench_smoke() {
    let out = ph(&[
        "bench",
        "--generator",
        "sparse",
        "--edges",
        "2000",
        "--cycles",
        "50",
        "--threshold",
        "300",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("peak basis columns"));
    assert!(text.contains("threshold schedule"));
}

#[test]
fn bench_on_a_tree_reports_no_cycles() {
    let out = ph(&[
        "bench",
        "--generator",
        "tree-chords",
        "--edges",
        "2000",
        "--cycles",
        "0",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("(0 cycles)"), "{text}");
}

#[test]
fn drop_zero_removes_zero_length_pairs() {
    let (graph, filt) = fixture("degree_twin_a");
    let out = ph(&[
        "compute", "--mode", "fb", "--graph", &graph, "--filtration", &filt, "--drop-zero",
    ]);
    assert!(out.status.success());
    let diagram =
        graph_ph::diagram::PersistenceDiagram::from_json(&String::from_utf8_lossy(&out.stdout))
            .unwrap();
    assert!(diagram.pairs.iter().all(|p| !p.is_zero_length()));
}
