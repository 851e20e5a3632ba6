use std::io::Write;
use std::process::{Command, Output, Stdio};

fn drg(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_drg-resistance"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn phi_prints_exact_values_first() {
    let o = drg(&["phi", "3,2,2,2,1,1,1;1,1,1,1,1,1,3"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("101 49 23 10 7 4 1"));
    assert!(out.contains("phi6 = 1 ≈ 1.0"));
}

#[test]
fn check_exit_codes() {
    let o = drg(&["check", "3,2,2,1,1,1,1;1,1,1,1,1,1,3"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("ruled-out: main_bound violated, ratio 35/29 ≈ 1.206897\n"));

    let o = drg(&["check", "3,2,1,1,1;1,1,1,2,3"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("main_bound: 8 <= 8 [equality]"));

    let o = drg(&["check", "-"], "(3,2;1,1)\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("strongly regular parameters (10,3,0,1)"));
}

#[test]
fn array_from_file_and_json_text() {
    let dir = std::env::temp_dir().join(format!("drg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("petersen.json");
    std::fs::write(&path, r#"{"b":[3,2],"c":[1,1]}"#).unwrap();
    let o = drg(&["resist", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("d1 = 3/5 ≈ 0.6\nd2 = 4/5 ≈ 0.8\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn scan_file_with_comments() {
    let input = "# header\n\n3,2;1,1\n  # indented comment\n3,3;1,1\nnot an array\n";
    let o = drg(&["scan", "-"], input);
    assert_eq!(o.status.code(), Some(1));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "3,2;1,1\tfeasible-so-far");
    assert!(lines[1].starts_with("3,3;1,1\truled-out: structural"));
    assert!(lines[2].starts_with("not an array\tmalformed"));

    let o = drg(&["scan", "-"], "");
    assert_eq!((o.status.code(), o.stdout.len()), (Some(0), 0));
}

#[test]
fn json_mode_matches_table_mode() {
    let table = stdout(&drg(&["scan", "-"], "3,2;1,1\n4,3,2,1;1,2,3,4\n"));
    let json = stdout(&drg(&["--format", "json", "scan", "-"], "3,2;1,1\n4,3,2,1;1,2,3,4\n"));
    let table_arrays: Vec<&str> = table.lines().map(|l| l.split('\t').next().unwrap()).collect();
    let json_arrays: Vec<String> = json
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["array"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(table_arrays, json_arrays);
    // deterministic output
    assert_eq!(json, stdout(&drg(&["--format", "json", "scan", "-"], "3,2;1,1\n4,3,2,1;1,2,3,4\n")));
}

#[test]
fn oracle_flags() {
    let o = drg(&["oracle", "dodecahedron"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("harmonic potential verified on all 30 edges"));

    let o = drg(&["oracle", "hypercube", "5", "--max-n", "16"], "");
    assert_eq!(o.status.code(), Some(2));

    let o = drg(&["--format", "json", "--seed", "3", "oracle", "johnson(6,2)"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["array"], "8,3;1,4");
    assert_eq!(v["n"], 15);

    let o = drg(&["oracle", "cycle", "5", "--edges"], "");
    assert_eq!(stdout(&o), "0 1\n0 4\n1 2\n2 3\n3 4\n");
}

#[test]
fn catalog_listing_and_verify() {
    let o = drg(&["catalog", "--table", "k3"], "");
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 8);
    assert!(out.lines().next().unwrap().contains("Pappus graph"));

    let o = drg(&["--format", "json", "catalog", "--verify"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 22);

    assert_eq!(drg(&["catalog", "--table", "k9"], "").status.code(), Some(2));
}

#[test]
fn validate_reports_conditions() {
    let o = drg(&["validate", "5,4;1,3"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("layer size k2 is not an integer"));

    let o = drg(&["validate", "2,1,1;1,1,2"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("valency <= 2"));
}
