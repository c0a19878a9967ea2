//! End-to-end tests of the `severi-lab` binary: verbs, formats, exit
//! codes, and the determinism and serialization contracts.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_severi-lab"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let Output {
        status,
        stdout,
        stderr,
    } = bin().args(args).output().expect("binary spawns");
    (
        status.code().expect("no signal"),
        String::from_utf8(stdout).expect("stdout is UTF-8"),
        String::from_utf8(stderr).expect("stderr is UTF-8"),
    )
}

#[test]
fn series_phi_matches_pinned_expansion() {
    let (code, stdout, _) = run(&["series", "phi", "--precision", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["results"][0]["name"], "phi");
    assert_eq!(
        value["results"][0]["series"]["coeffs"],
        serde_json::json!(["-1", "24", "73512", "3621216"])
    );
    assert_eq!(value["results"][0]["series"]["precision"], 3);
}

#[test]
fn series_e4_and_psi_sec_match_pinned_values() {
    let (code, stdout, _) = run(&["series", "E4", "--precision", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "n,coefficient\n0,1\n1,240\n");

    let (code, stdout, _) = run(&["series", "psi_sec", "--precision", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "n,coefficient\n0,0\n1,0\n2,73752\n");
}

#[test]
fn json_top_level_shape_is_pinned() {
    let (code, stdout, _) = run(&["e8", "classes", "--format", "json"]);
    assert_eq!(code, 0);
    // Key order is part of the format: tool_version, config, results.
    let tool_pos = stdout.find("\"tool_version\"").unwrap();
    let config_pos = stdout.find("\"config\"").unwrap();
    let results_pos = stdout.find("\"results\"").unwrap();
    assert!(tool_pos < config_pos && config_pos < results_pos, "{stdout}");
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["tool_version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(value["config"]["precision"], 200);
    assert_eq!(value["config"]["norm_cap"], 60);
    assert_eq!(value["results"][0]["zero"], 1);
    assert_eq!(value["results"][0]["root_type"], 120);
    assert_eq!(value["results"][0]["norm4_type"], 135);
}

#[test]
fn e8_count_and_pairs_match_pinned_values() {
    let (code, stdout, _) = run(&["e8", "count", "--norm", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "norm,count\n4,2160\n");

    let (code, stdout, _) = run(&["e8", "pairs", "--w", "root", "--m", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(stdout.contains(",3,28\n"), "{stdout}");

    let (code, stdout, _) = run(&["e8", "orbit", "--seed", "norm4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with(",2160\n"), "{stdout}");
}

#[test]
fn e8_stream_emits_canonical_vectors() {
    let (code, stdout, _) = run(&["e8", "count", "--norm", "2", "--stream", "--format", "json"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 240);
    assert_eq!(lines[0], r#"{"doubled":true,"coords":[-2,-2,0,0,0,0,0,0]}"#);
    // Canonical order is strictly increasing, so the stream is sorted.
    let mut parsed: Vec<Vec<i64>> = lines
        .iter()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            v["coords"]
                .as_array()
                .unwrap()
                .iter()
                .map(|c| c.as_i64().unwrap())
                .collect()
        })
        .collect();
    let original = parsed.clone();
    parsed.sort();
    parsed.dedup();
    assert_eq!(parsed, original);

    let (code, csv, _) = run(&["e8", "count", "--norm", "2", "--stream", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(csv.lines().next().unwrap(), "d1,d2,d3,d4,d5,d6,d7,d8");
    assert_eq!(csv.lines().nth(1).unwrap(), "-2,-2,0,0,0,0,0,0");
    assert_eq!(csv.lines().count(), 241);
}

#[test]
fn degrees_table_has_pinned_rows() {
    let (code, stdout, _) = run(&["degrees", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(
        lines[0],
        "g,type,degree,simple,nonsimple[m=1],nonsimple[m=2],bound,genus_bound"
    );
    assert_eq!(lines[1], "0,ordinary,4,8,0,,8,21");
    assert!(lines.contains(&"1,ordinary,40,28,12,,134,8778"), "{stdout}");
    assert!(
        lines.contains(&"2,weierstrass,198,120,0,12,55719,1552219903"),
        "{stdout}"
    );
}

#[test]
fn verify_single_check_passes() {
    let (code, stdout, _) = run(&["verify", "ramanujan", "--precision", "200"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("pass  ramanujan (precision 200)"), "{stdout}");
    assert!(stdout.contains("1/1 checks passed"), "{stdout}");
}

#[test]
fn verify_all_passes_and_is_thread_deterministic() {
    let args = |threads: &'static str| {
        vec![
            "verify", "all", "--precision", "24", "--norm-cap", "12", "--format", "json",
            "--threads", threads,
        ]
    };
    let (code1, one, _) = run(&args("1"));
    let (code3, three, _) = run(&args("3"));
    assert_eq!((code1, code3), (0, 0));
    assert_eq!(one, three, "output must be byte-identical across thread counts");
    let value: serde_json::Value = serde_json::from_str(&one).unwrap();
    let results = value["results"].as_array().unwrap();
    assert_eq!(results.len(), 12);
    for report in results {
        assert_eq!(report["status"], "pass", "{report}");
    }
}

#[test]
fn seed_table_emits_pinned_golden_values() {
    let (code, stdout, _) = run(&["--seed-table", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "name,value,description");
    assert_eq!(lines.len(), 28); // header + 27 values
    assert!(stdout.contains("\nphi_q2,73512,"), "{stdout}");
    assert!(stdout.contains("\nclasses_norm4_type,135,"), "{stdout}");
}

#[test]
fn out_flag_writes_file_instead_of_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let (code, stdout, _) = run(&[
        "e8",
        "count",
        "--norm",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(value["results"][0]["count"], 240);
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["series", "E8"],                          // unknown series name
        &["verify", "nonsense"],                    // unknown check name
        &["e8", "count", "--norm", "62"],           // norm above the cap
        &["e8", "count", "--norm", "3"],            // odd norm
        &["e8", "orbit", "--seed", "1,2,3"],        // malformed vector
        &["e8", "pairs", "--w", "root", "--m", "40"], // census norm above cap
        &["degrees", "300"],                        // g_max + 2 > precision
        &["verify", "all", "--precision", "4"],     // verify needs precision >= 8
        &["e8", "classes", "--norm-cap", "7"],      // odd cap
        &["e8", "classes", "--threads", "0"],       // bad thread count
        &["e8", "classes", "--threads", "lots"],    // bad thread count
        &["--seed-table", "e8", "classes"],         // seed table plus verb
        &["frobnicate"],                            // unknown verb
        &[],                                        // missing verb
    ];
    for case in cases {
        let (code, _, stderr) = run(case);
        assert_eq!(code, 2, "expected usage error for {case:?}: {stderr}");
        assert!(!stderr.is_empty(), "usage error must explain itself: {case:?}");
    }
    // The cap refusal names the cap.
    let (_, _, stderr) = run(&["e8", "count", "--norm", "62"]);
    assert!(stderr.contains("62") && stderr.contains("60"), "{stderr}");
}

#[test]
fn help_and_version_exit_0() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for verb in ["series", "e8", "degrees", "verify"] {
        assert!(stdout.contains(verb), "help must list {verb}");
    }
    let (code, stdout, _) = run(&["--version"]);
    assert_eq!(code, 0);
    assert!(stdout.contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn text_format_is_humane_and_exact() {
    let (code, stdout, _) = run(&["series", "E2", "--precision", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "E2 (precision 2)\nq^0: 1\nq^1: -24\nq^2: -72\n");

    let (code, stdout, _) = run(&["e8", "count", "--norm", "6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "6720 vectors of norm 6\n");
}
