//! End-to-end behavior of the `ordtop` binary: exit codes, byte-stable
//! output, and JSON round trips through the input parsers.

use std::process::Command;

use ordtop_cli::doc::{
    ChainDoc, CoverResultDoc, EnumerationDoc, ExtendDoc, MapsDoc, PointQueryDoc, ProfileDoc,
    ReportDoc, TopologyDoc,
};
use ordtop_cli::parse::{parse_interval_set, parse_ordinal};

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_ordtop"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
    )
}

#[test]
fn enumerate_count_only_is_exact() {
    let (code, stdout, _) = run(&["enumerate", "--n", "3", "--count-only"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "29\n");
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let args = [
        "compactify",
        "--n",
        "4",
        "--strategy",
        "random_maximal",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let (c1, out1, _) = run(&args);
    let (c2, out2, _) = run(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(out1, out2);
}

#[test]
fn seed_defaults_to_zero() {
    let (_, with_default, _) = run(&["chain", "--n", "4", "--strategy", "random_maximal"]);
    let (_, with_zero, _) =
        run(&["chain", "--n", "4", "--strategy", "random_maximal", "--seed", "0"]);
    assert_eq!(with_default, with_zero);
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, _) = run(&["enumerate"]); // missing --n
    assert_eq!(code, 2);
    let (code, _, stderr) = run(&["chain", "--n", "3", "--strategy", "sideways"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("singleton_ascending"));
    let (code, _, _) = run(&["ordinal", "--space", "0,w]", "--op", "open", "--set", "{}"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["classify", "--topology", "trivial:2", "--format", "dot"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["no-such-verb"]);
    assert_eq!(code, 2);
}

#[test]
fn module_errors_exit_one() {
    let (code, stdout, stderr) = run(&["enumerate", "--n", "9", "--count-only"]);
    assert_eq!(code, 1);
    assert!(stdout.is_empty());
    assert!(stderr.starts_with("error:"));

    // Valid JSON but not a topology.
    let (code, _, stderr) =
        run(&["classify", "--topology", r#"{"n":2,"opens":[[],[0],[1]]}"#]);
    assert_eq!(code, 1);
    assert!(stderr.contains("not a topology"));

    let (code, _, stderr) = run(&["cover", "--space", "[0,w)", "--atoms", "seg"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("no finite subcover"));

    let (code, _, _) = run(&[
        "homotopy",
        "--n",
        "2",
        "--strategy",
        "singleton_ascending",
        "--i",
        "1.5",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn cover_example_lists_two_parts() {
    let (code, stdout, _) = run(&["cover", "--space", "[0,w]", "--atoms", "seg,(5,w]"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "finite subcover with 2 parts\npart 0: [6,w]\npart 1: [0,5]\n");
}

#[test]
fn compactify_json_reports_all_verdicts_true() {
    let (code, stdout, _) = run(&[
        "compactify",
        "--n",
        "4",
        "--strategy",
        "singleton_ascending",
        "--alpha",
        "w",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let report: ReportDoc = serde_json::from_str(&stdout).unwrap();
    assert!(report.density_ok && report.infinity_is_limit_point && report.sample_cover_compact);
    assert_eq!(report.space, "[0,w]");
    assert_eq!(report.chain_length, 5);
    // The emitted document re-parses to the identical value.
    let reparsed: ReportDoc = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(reparsed, report);
}

#[test]
fn topology_json_round_trips_through_the_parser() {
    let (code, stdout, _) = run(&[
        "join",
        "--left",
        r#"{"n":2,"labels":["a","b"],"opens":[[],[0],[0,1]]}"#,
        "--right",
        r#"{"n":2,"opens":[[],[0,1],[1]]}"#,
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let doc: TopologyDoc = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc.opens, vec![vec![], vec![0], vec![0, 1], vec![1]]);
    assert_eq!(doc.labels.as_deref(), Some(&["a".to_string(), "b".to_string()][..]));
    // Feed the emitted JSON back in as input.
    let (code, again, _) = run(&["classify", "--topology", stdout.trim(), "--format", "json"]);
    assert_eq!(code, 0);
    assert!(again.contains("\"strongest\": \"T4\""));
    let t = doc.try_into_topology().unwrap();
    assert_eq!(TopologyDoc::from_topology(&t), doc);
}

#[test]
fn enumerate_json_round_trips() {
    let (code, stdout, _) = run(&["enumerate", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: EnumerationDoc = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc.count, 4);
    let topologies = doc.topologies.as_ref().unwrap();
    assert_eq!(topologies.len(), 4);
    for t in topologies {
        let back = TopologyDoc::from_topology(&t.try_into_topology().unwrap());
        assert_eq!(&back, t);
    }
    let reparsed: EnumerationDoc =
        serde_json::from_str(&serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    assert_eq!(reparsed, doc);
}

#[test]
fn chain_json_round_trips() {
    let (code, stdout, _) = run(&[
        "chain",
        "--n",
        "3",
        "--strategy",
        "random_maximal",
        "--seed",
        "42",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let doc: ChainDoc = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc.length, doc.entries.len());
    assert_eq!(doc.trace.steps.len(), doc.length);
    let reparsed: ChainDoc =
        serde_json::from_str(&serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    assert_eq!(reparsed, doc);
}

#[test]
fn ordinal_strings_in_json_round_trip() {
    let (code, stdout, _) = run(&[
        "ordinal",
        "--space",
        "[0,w*2]",
        "--op",
        "closure",
        "--set",
        "[0,w)",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let result = value["result"].as_str().unwrap();
    let set = parse_interval_set(result).unwrap();
    assert_eq!(set.to_string(), result);

    let (code, stdout, _) =
        run(&["extend", "--exceptions", "0:3.5,2:-1", "--tail", "7", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: ExtendDoc = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc.value, 7.0);
    assert_eq!(parse_ordinal(&doc.tail_start).unwrap(), parse_ordinal("3").unwrap());
}

#[test]
fn remaining_json_emitters_round_trip() {
    fn reparses<T: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug>(
        stdout: &str,
    ) {
        let doc: T = serde_json::from_str(stdout).unwrap();
        let again: T = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(again, doc);
    }

    let (code, stdout, _) = run(&["classify", "--topology", "discrete:3", "--format", "json"]);
    assert_eq!(code, 0);
    reparses::<ProfileDoc>(&stdout);

    let (code, stdout, _) =
        run(&["maps", "--dom", "trivial:2", "--cod", "discrete:2", "--format", "json"]);
    assert_eq!(code, 0);
    reparses::<MapsDoc>(&stdout);

    let (code, stdout, _) =
        run(&["cover", "--space", "[0,w]", "--atoms", "seg,(5,w]", "--format", "json"]);
    assert_eq!(code, 0);
    let cover: CoverResultDoc = serde_json::from_str(&stdout).unwrap();
    for part in &cover.parts {
        assert_eq!(parse_interval_set(part).unwrap().to_string(), *part);
    }
    reparses::<CoverResultDoc>(&stdout);

    for verb in ["limit-points", "closure", "dense"] {
        let (code, stdout, _) = run(&[
            verb,
            "--topology",
            r#"{"n":2,"opens":[[],[0],[0,1]]}"#,
            "--set",
            "0",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        reparses::<PointQueryDoc>(&stdout);
    }
}

#[test]
fn file_input_works() {
    let dir = std::env::temp_dir().join("ordtop-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sierpinski.json");
    std::fs::write(&path, r#"{"n":2,"opens":[[],[0],[0,1]]}"#).unwrap();
    let (code, stdout, _) = run(&["classify", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("strongest: T0"));
    let (code, _, _) = run(&["classify", "--file", "/nonexistent/t.json"]);
    assert_eq!(code, 1);
}

#[test]
fn dot_output_is_well_formed() {
    let (code, stdout, _) = run(&["enumerate", "--n", "3", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("digraph hasse {"));
    assert!(stdout.trim_end().ends_with('}'));
    assert_eq!(stdout.matches("label=").count(), 29);
    let (code, _, _) = run(&["enumerate", "--n", "4", "--format", "dot"]);
    assert_eq!(code, 1);
}

#[test]
fn outputs_end_with_newline() {
    for args in [
        vec!["enumerate", "--n", "2", "--count-only"],
        vec!["classify", "--topology", "discrete:2"],
        vec!["dense", "--topology", "trivial:3", "--set", "1"],
        vec!["extend", "--tail", "0"],
        vec!["ordinal", "--space", "[0,w]", "--op", "derived", "--set", "[0,w)"],
    ] {
        let (code, stdout, _) = run(&args);
        assert_eq!(code, 0, "args: {args:?}");
        assert!(stdout.ends_with('\n'));
    }
}
