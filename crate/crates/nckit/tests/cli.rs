//! Black-box checks of the command-line binary: output shapes, exit codes,
//! guards, and determinism, all at small sizes so the whole file stays
//! fast.

use std::process::{Command, Output};

fn nckit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nckit"))
        .args(args)
        .env_remove("NCKIT_GUARD")
        .output()
        .expect("binary runs")
}

fn nckit_with_guard(guard: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nckit"))
        .args(args)
        .env("NCKIT_GUARD", guard)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn enum_trees_lists_all_two_edge_trees() {
    let out = nckit(&["enum", "trees", "--edges", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "nct:3:1-2,2-3\nnct:3:1-3,2-3\nnct:3:1-2,1-3\ncount 3\n"
    );
}

#[test]
fn enum_json_emits_one_object_per_line() {
    let out = nckit(&["enum", "graphs", "--vertices", "3", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert_eq!(lines.len(), 5, "four graphs plus the count object");
    for line in &lines[..4] {
        let value: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
        assert!(value["graph"].as_str().unwrap().starts_with("ncg:3:"));
        assert!(value["edges"].as_u64().unwrap() >= 2);
    }
    let trailer: serde_json::Value = serde_json::from_str(lines[4]).expect("valid JSON");
    assert_eq!(trailer, serde_json::json!({ "count": 4 }));
}

#[test]
fn enum_class_filters_split_the_family() {
    let proper = nckit(&["enum", "trees", "--edges", "3", "--class", "proper"]);
    assert!(stdout(&proper).ends_with("count 2\n"));
    let improper = nckit(&["enum", "trees", "--edges", "3", "--class", "improper"]);
    assert!(stdout(&improper).ends_with("count 10\n"));
    let even = nckit(&["enum", "trees", "--edges", "3", "--class", "even"]);
    assert!(stdout(&even).ends_with("count 7\n"));
    let odd = nckit(&["enum", "trees", "--edges", "3", "--class", "odd"]);
    assert!(stdout(&odd).ends_with("count 5\n"));
}

#[test]
fn enum_guard_refuses_forces_and_reconfigures() {
    let refused = nckit(&["enum", "trees", "--edges", "11"]);
    assert_eq!(exit_code(&refused), 3);
    assert_eq!(stdout(&refused), "", "no partial output after a refusal");

    let lowered = nckit_with_guard("2", &["enum", "trees", "--edges", "3"]);
    assert_eq!(exit_code(&lowered), 3);

    let forced = nckit_with_guard("2", &["enum", "trees", "--edges", "3", "--force"]);
    assert_eq!(exit_code(&forced), 0);
    assert!(stderr(&forced).contains("warning"));
    assert!(stdout(&forced).ends_with("count 12\n"));

    let raised = nckit_with_guard("11", &["enum", "trees", "--edges", "3"]);
    assert_eq!(exit_code(&raised), 0);

    let garbled = nckit_with_guard("eleven", &["enum", "trees", "--edges", "3"]);
    assert_eq!(exit_code(&garbled), 2);
}

#[test]
fn enum_rejects_flags_outside_their_family() {
    let out = nckit(&["enum", "trees", "--edges", "2", "--vertices", "4"]);
    assert_eq!(exit_code(&out), 2);
    let out = nckit(&["enum", "ternary", "--edges", "2"]);
    assert_eq!(exit_code(&out), 2);
    let out = nckit(&["enum", "graphs", "--vertices", "3", "--class", "proper"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn map_translates_between_representations() {
    let lr = nckit(&[
        "map",
        "to-lr",
        "--input",
        "nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8",
        "--check-roundtrip",
    ]);
    assert_eq!(exit_code(&lr), 0);
    assert_eq!(stdout(&lr), "(R(L(R()))R(L()L()R()))\n");

    let back = nckit(&["map", "from-lr", "--input", "(R(L(R()))R(L()L()R()))"]);
    assert_eq!(stdout(&back), "nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8\n");
}

#[test]
fn map_phi_answers_in_the_input_serialization() {
    let tree_form = nckit(&["map", "phi", "--input", "nct:3:1-2,2-3", "--check-roundtrip"]);
    assert_eq!(exit_code(&tree_form), 0);
    assert_eq!(stdout(&tree_form), "nct:3:1-3,2-3\n");

    let lr_form = nckit(&["map", "phi", "--input", "(R(L()))", "--check-roundtrip"]);
    assert_eq!(exit_code(&lr_form), 0);
    assert_eq!(stdout(&lr_form), "(R(R()))\n");
}

#[test]
fn map_rejects_invalid_preconditions_with_exit_4() {
    let improper = nckit(&["map", "sigma", "--input", "nct:3:1-2,2-3"]);
    assert_eq!(exit_code(&improper), 4);
    assert!(stderr(&improper).contains("improper"));

    let proper = nckit(&["map", "phi", "--input", "nct:3:1-2,1-3"]);
    assert_eq!(exit_code(&proper), 4);

    let garbage = nckit(&["map", "psi", "--input", "((("]);
    assert_eq!(exit_code(&garbage), 4);

    let odd = nckit(&["map", "psi", "--input", "(()()())"]);
    assert_eq!(exit_code(&odd), 4);
}

#[test]
fn map_assembles_and_disassembles_graphs() {
    let companion = nckit(&[
        "map",
        "companion",
        "--input",
        "nct:4:1-4,3-4,2-3",
        "--descent",
        "3-2",
    ]);
    assert_eq!(stdout(&companion), "1-2\n");

    let assembled = nckit(&[
        "map",
        "assemble",
        "--input",
        "nct:7:1-4,2-3,3-4,4-7,5-7,6-7",
        "--descent",
        "4-3",
        "--descent",
        "7-6",
        "--check-roundtrip",
    ]);
    assert_eq!(exit_code(&assembled), 0);
    assert_eq!(stdout(&assembled), "ncg:7:1-3,1-4,2-3,3-4,4-7,5-6,5-7,6-7\n");

    let canonical = nckit(&[
        "map",
        "canonical-tree",
        "--input",
        "ncg:7:1-3,1-4,2-3,3-4,4-7,5-6,5-7,6-7",
        "--check-roundtrip",
    ]);
    assert_eq!(stdout(&canonical), "nct:7:1-4,2-3,3-4,4-7,5-7,6-7\n");

    let toggled = nckit(&[
        "map",
        "companion-involution",
        "--input",
        "ncg:3:1-2,1-3,2-3",
        "--check-roundtrip",
    ]);
    assert_eq!(stdout(&toggled), "ncg:3:1-3,2-3\n");

    let saturated_fixed = nckit(&["map", "companion-involution", "--input", "ncg:3:1-2*,1-3,2-3"]);
    assert_eq!(exit_code(&saturated_fixed), 4);
}

#[test]
fn verify_reports_and_exits_cleanly() {
    let out = nckit(&["verify", "--identity", "tree-counts", "--max-n", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("tree-count"));
    assert!(text.trim_end().ends_with("PASS (8 equations)"));

    let csv = nckit(&["verify", "--identity", "e-minus-o", "--max-n", "2", "--format", "csv"]);
    let lines: Vec<String> = stdout(&csv).lines().map(String::from).collect();
    assert_eq!(lines[0], "identity,params,lhs,rhs,status");
    assert!(lines[1..].iter().all(|l| l.ends_with(",ok")));

    let json = nckit(&["verify", "--identity", "alternating-sum", "--max-n", "2", "--format", "json"]);
    let lines: Vec<String> = stdout(&json).lines().map(String::from).collect();
    let trailer: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(trailer["pass"], serde_json::json!(true));

    let unknown = nckit(&["verify", "--identity", "no-such-identity"]);
    assert_eq!(exit_code(&unknown), 2);
    assert!(stderr(&unknown).contains("tree-counts"), "lists the valid names");
}

#[test]
fn count_evaluates_closed_forms_exactly() {
    assert_eq!(stdout(&nckit(&["count", "c", "--n", "8"])), "43263\n");
    assert_eq!(stdout(&nckit(&["count", "s", "--n", "7"])), "30\n");
    assert_eq!(stdout(&nckit(&["count", "d", "--n", "4", "--k", "2"])), "15\n");
    assert_eq!(stdout(&nckit(&["count", "n", "--n", "3", "--k", "5"])), "2\n");
    assert_eq!(
        stdout(&nckit(&["count", "c", "--n", "40"])),
        "1414282077098335379544565517191\n",
        "values well past machine width stay exact"
    );

    let table = nckit(&["count", "d", "--n", "3", "--table"]);
    assert_eq!(stdout(&table), "n,k,value\n0,0,1\n1,0,1\n2,0,2\n2,1,1\n3,0,5\n3,1,5\n3,2,2\n");

    let missing_k = nckit(&["count", "d", "--n", "4"]);
    assert_eq!(exit_code(&missing_k), 2);
}

#[test]
fn render_writes_identical_bytes_every_time() {
    let dir = std::env::temp_dir();
    let first = dir.join("nckit-cli-render-1.svg");
    let second = dir.join("nckit-cli-render-2.svg");
    let input = "ncg:7:1-3,1-4,2-3*,3-4,4-7,5-6,5-7,6-7";
    let a = nckit(&["render", "--input", input, "--out", first.to_str().unwrap()]);
    let b = nckit(&["render", "--input", input, "--out", second.to_str().unwrap()]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(exit_code(&b), 0);
    let bytes_a = std::fs::read(&first).expect("first file written");
    let bytes_b = std::fs::read(&second).expect("second file written");
    assert_eq!(bytes_a, bytes_b);
    assert!(String::from_utf8(bytes_a).unwrap().contains("<svg"));
    let _ = std::fs::remove_file(first);
    let _ = std::fs::remove_file(second);

    let unwritable = nckit(&["render", "--input", "nct:3:1-2,1-3", "--out", "/no-such-dir/x.svg"]);
    assert_eq!(exit_code(&unwritable), 5);

    let garbage = nckit(&["render", "--input", "circle", "--out", "/tmp/nckit-unused.svg"]);
    assert_eq!(exit_code(&garbage), 4);
}
