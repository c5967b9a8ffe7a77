use std::io::Write;
use std::process::{Command, Output};

fn minimal4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minimal4")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

/// `(degree, rank)` pairs from the leading numeric columns of a table.
fn rows(text: &str) -> Vec<(u32, u64)> {
    text.lines()
        .filter_map(|l| {
            let mut cols = l.split_whitespace();
            Some((cols.next()?.parse().ok()?, cols.next()?.parse().ok()?))
        })
        .collect()
}

fn form_file(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

#[test]
fn ranks_k3() {
    let o = minimal4(&["ranks", "--b2", "22"]);
    assert_eq!(code(&o), 0);
    assert_eq!(rows(&stdout(&o)), [(2, 22), (3, 252), (4, 3520)]);
}

#[test]
fn ranks_sphere_has_finite_tail() {
    let o = minimal4(&["ranks", "--b2", "0"]);
    let out = stdout(&o);
    assert_eq!(rows(&out), [(4, 1), (7, 1)]);
    assert!(out.contains("vanish"));
}

#[test]
fn ranks_engine_agrees_at_degree_five() {
    let o = minimal4(&["ranks", "--b2", "3", "--engine", "--max-degree", "5"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(rows(&out), [(2, 3), (3, 5), (4, 5), (5, 10)]);
    assert_eq!(out.matches("agree").count(), 4);
}

#[test]
fn ranks_json() {
    let o = minimal4(&["ranks", "--split", "2,1", "--engine", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sigma"], 1);
    assert_eq!(v["engine"]["5"], 10);
    assert_eq!(v["agree"], true);
}

#[test]
fn guard_exit_code_keeps_partial_table() {
    let o = minimal4(&["ranks", "--b2", "8", "--engine", "--guard", "1000"]);
    assert_eq!(code(&o), 3);
    let out = stdout(&o);
    assert!(out.contains("guard limit"), "{out}");
    assert_eq!(rows(&out)[0], (2, 8));
}

#[test]
fn model_cp2() {
    let out = stdout(&minimal4(&["model", "--b2", "1"]));
    assert!(out.contains("x    (2): dx = 0"), "{out}");
    assert!(out.contains("v5_1 (5): dv5_1 = x^3"), "{out}");
}

#[test]
fn model_s2_times_s2_signs_follow_split() {
    let out = stdout(&minimal4(&["model", "--b2", "2", "--split", "1,1"]));
    assert!(out.contains("dv3_1 = x1^2 + x2^2"), "{out}");
    assert!(out.contains("dv3_2 = x1*x2"), "{out}");
    let definite = stdout(&minimal4(&["model", "--b2", "2", "--split", "2,0"]));
    assert!(definite.contains("dv3_1 = x1^2 - x2^2"), "{definite}");
}

#[test]
fn model_sphere() {
    let out = stdout(&minimal4(&["model", "--b2", "0", "--max-degree", "7"]));
    assert!(out.contains("du4_1 = 0"));
    assert!(out.contains("dv7_1 = u4_1^2"));
}

#[test]
fn model_json_round_trips() {
    let o = minimal4(&["model", "--b2", "3", "--split", "1,2", "--max-degree", "4", "--format", "json"]);
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    assert_eq!(v["meta"]["sigma"], -1);
    assert_eq!(v["ranks"]["4"], 5);
    for g in v["generators"].as_array().unwrap() {
        for t in g["differential"].as_array().unwrap() {
            assert!(t["coeff"].as_str().unwrap().contains('/'));
        }
    }
    // identical on a second run
    assert_eq!(
        stdout(&minimal4(&["model", "--b2", "3", "--split", "1,2", "--max-degree", "4", "--format", "json"])),
        text
    );
}

#[test]
fn classify_examples() {
    let o = minimal4(&["classify", "diag:1,-1", "hyperbolic"]);
    let out = stdout(&o);
    assert!(out.contains("EQUIVALENT"));
    assert_eq!(out.matches("#1 CP² # 1 CP̄²").count(), 2);
    assert!(stdout(&minimal4(&["classify", "e8", "sum:8,0"])).contains("EQUIVALENT"));
    assert!(stdout(&minimal4(&["classify", "diag:1,1", "hyperbolic"])).contains("NOT equivalent"));
}

#[test]
fn classify_form_files() {
    let e8 = form_file(
        r#"{"name": "E8 lattice", "matrix": [
        [2,-1,0,0,0,0,0,0],[-1,2,-1,0,0,0,0,0],[0,-1,2,-1,0,0,0,0],[0,0,-1,2,-1,0,0,0],
        [0,0,0,-1,2,-1,0,-1],[0,0,0,0,-1,2,-1,0],[0,0,0,0,0,-1,2,0],[0,0,0,0,-1,0,0,2]]}"#,
    );
    let o = minimal4(&["classify", e8.path().to_str().unwrap(), "e8", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["forms"][0]["name"], "E8 lattice");
    let ranks = minimal4(&["ranks", "--form", e8.path().to_str().unwrap()]);
    assert_eq!(rows(&stdout(&ranks)), [(2, 8), (3, 35), (4, 160)]);
}

#[test]
fn bad_input_exits_two() {
    let not_unimodular = form_file(r#"{"matrix": [[2, 1], [1, 2]]}"#);
    let o = minimal4(&["ranks", "--form", not_unimodular.path().to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("unimodular"));
    let asymmetric = form_file(r#"{"matrix": [[1, 1], [0, 1]]}"#);
    assert_eq!(code(&minimal4(&["classify", asymmetric.path().to_str().unwrap(), "e8"])), 2);
    assert_eq!(code(&minimal4(&["ranks", "--form", "/nonexistent/form.json"])), 2);
    assert_eq!(code(&minimal4(&["ranks"])), 2);
    assert_eq!(code(&minimal4(&["ranks", "--b2", "3", "--split", "1,1"])), 2);
    assert_eq!(code(&minimal4(&["examples", "ci", "0,2"])), 2);
    assert_eq!(code(&minimal4(&["examples", "hypersurface"])), 2);
}

#[test]
fn examples_catalog() {
    let cubic = stdout(&minimal4(&["examples", "hypersurface", "3"]));
    assert!(cubic.contains("b₂ = 7"));
    assert_eq!(rows(&cubic), [(2, 7), (3, 27), (4, 105)]);
    let ci = stdout(&minimal4(&["examples", "ci", "2,2"]));
    assert!(ci.contains("b₂ = 6"));
    let k3 = stdout(&minimal4(&["examples", "k3"]));
    assert!(k3.contains("σ = -16"));
    assert_eq!(rows(&k3), [(2, 22), (3, 252), (4, 3520)]);
    let sum = stdout(&minimal4(&["examples", "connected-sum", "1,1", "--engine"]));
    assert_eq!(rows(&sum), [(2, 2), (3, 2), (4, 0), (5, 0)]);
}

#[test]
fn verify_default_range() {
    let o = minimal4(&["verify"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("7 of 7 jobs passed"));
}

#[test]
fn verify_all_splits_of_three() {
    let o = minimal4(&["verify", "--b2", "3", "--max-degree", "5", "--all-splits"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS") && l.contains("5:10")).count(), 4, "{out}");
}

#[test]
fn verify_fixture_reports_witness() {
    let doc = stdout(&minimal4(&["model", "--b2", "3", "--max-degree", "4", "--format", "json"]));
    let good = form_file(&doc);
    assert_eq!(code(&minimal4(&["verify", "--fixture", good.path().to_str().unwrap()])), 0);

    // flip the sign of one coefficient of d(v3_1)
    let mut v: serde_json::Value = serde_json::from_str(&doc).unwrap();
    let gens = v["generators"].as_array_mut().unwrap();
    let target = gens.iter_mut().find(|g| g["name"] == "v3_1").unwrap();
    let coeff = &mut target["differential"][0]["coeff"];
    let flipped = match coeff.as_str().unwrap().strip_prefix('-') {
        Some(rest) => rest.to_string(),
        None => format!("-{}", coeff.as_str().unwrap()),
    };
    *coeff = serde_json::Value::String(flipped);
    let bad = form_file(&serde_json::to_string(&v).unwrap());
    let o = minimal4(&["verify", "--fixture", bad.path().to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("FAIL") && out.contains("v3_1"), "{out}");
}
