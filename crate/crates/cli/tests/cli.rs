use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_leech-cusp"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

/// A decimal point between digits outside a string would be a float.
fn assert_no_floats(v: &Value) {
    match v {
        Value::Number(n) => assert!(n.is_i64() || n.is_u64(), "float {n} in output"),
        Value::Array(a) => a.iter().for_each(assert_no_floats),
        Value::Object(o) => o.values().for_each(assert_no_floats),
        _ => {}
    }
}

fn assert_no_float_text(text: &str) {
    let b = text.as_bytes();
    for i in 1..b.len().saturating_sub(1) {
        assert!(!(b[i] == b'.' && b[i - 1].is_ascii_digit() && b[i + 1].is_ascii_digit()), "decimal in output: {text}");
    }
}

fn sigma_zero() -> String {
    vec!["[0,0]"; 12].join(",")
}

fn sigma_lambda9() -> String {
    let mut s = vec!["[0,0]"; 12];
    s[0] = "[-3,3]";
    s.join(",")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn root_file(dir: &Path, name: &str, sigma: &str, y: [i64; 2], z: [i64; 2]) -> PathBuf {
    write(dir, name, &format!("{{\"sigma\":[{sigma}],\"y\":[{},{}],\"z\":[{},{}]}}", y[0], y[1], z[0], z[1]))
}

fn reduce(dir: &Path, input: &Path, name: &str) -> (Output, PathBuf) {
    let out = dir.join(name);
    let o = run(&["reduce", input.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    (o, out)
}

#[test]
fn verify_lattice_default() {
    let o = run(&["verify-lattice"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = stdout_json(&o);
    assert_no_floats(&v);
    assert_eq!(v["pass"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_lattice_full_enumeration() {
    let o = run(&["verify-lattice", "--full-enumeration"]);
    assert!(o.status.success());
    assert_eq!(stdout_json(&o)["results"]["norm6_count"], 196_560);
}

#[test]
fn corrupted_basis_fails() {
    let dir = tempfile::tempdir().unwrap();
    let export = leech_cusp::leech::standard().export();
    let mut basis = serde_json::to_value(&export.basis).unwrap();
    // doubling the first basis vector drops to an index-2 sublattice
    let first = basis[0].clone();
    let doubled: Vec<Value> = first
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            let a = c.as_array().unwrap();
            serde_json::json!([a[0].as_i64().unwrap() * 2, a[1].as_i64().unwrap() * 2])
        })
        .collect();
    basis[0] = Value::Array(doubled);
    let good = write(dir.path(), "good.json", &serde_json::to_string(&serde_json::json!({ "basis": export.basis })).unwrap());
    let bad = write(dir.path(), "bad.json", &serde_json::to_string(&basis).unwrap());
    let o = run(&["verify-lattice", "--basis", good.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["verify-lattice", "--basis", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("construction invalid"));
    let junk = write(dir.path(), "junk.json", "{\"basis\": 5}");
    assert_eq!(run(&["verify-lattice", "--basis", junk.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn reduce_zero_type_root_in_one_step() {
    let dir = tempfile::tempdir().unwrap();
    let input = root_file(dir.path(), "s.json", &sigma_zero(), [1, 2], [0, -1]);
    let (o, cert) = reduce(dir.path(), &input, "cert.json");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = stdout_json(&o);
    assert_no_floats(&v);
    assert_eq!(v["results"]["steps"], 1);
    assert_eq!(v["results"]["cases"][0], "P");
    let text = std::fs::read_to_string(&cert).unwrap();
    assert_no_float_text(&text);
    let o = run(&["verify-cert", cert.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout_json(&o)["pass"], true);
}

#[test]
fn reduce_norm_nine_root_uses_the_overlap_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let input = root_file(dir.path(), "s9.json", &sigma_lambda9(), [1, 2], [-1, 0]);
    let (o, cert) = reduce(dir.path(), &input, "cert.json");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout_json(&o)["results"]["cases"][0], "OVERLAP");
    let c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    // t = 2√3 - 2 encoded as [p_num, q_num, p_den, q_den]
    assert_eq!(c["steps"][0]["witnesses"]["overlap"]["t"], serde_json::json!([-2, 2, 1, 1]));
    assert_eq!(c["steps"][0]["case"], "OVERLAP");
    assert_eq!(c["steps"][0]["zeta"], "omega");
}

#[test]
fn reduce_leech_root_is_empty() {
    let dir = tempfile::tempdir().unwrap();
    let input = root_file(dir.path(), "l.json", &sigma_zero(), [1, 0], [0, -1]);
    let (o, cert) = reduce(dir.path(), &input, "cert.json");
    assert!(o.status.success());
    assert_eq!(stdout_json(&o)["results"]["steps"], 0);
    assert!(run(&["verify-cert", cert.to_str().unwrap()]).status.success());
}

#[test]
fn reduce_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let not_root = root_file(dir.path(), "n.json", &sigma_zero(), [2, 1], [0, 0]);
    assert_eq!(reduce(dir.path(), &not_root, "c.json").0.status.code(), Some(2));
    let garbage = write(dir.path(), "g.json", "{\"sigma\": 1.5}");
    assert_eq!(reduce(dir.path(), &garbage, "c.json").0.status.code(), Some(2));
}

fn sampled_certificate(dir: &Path) -> PathBuf {
    let roots = dir.join("roots.json");
    let o = run(&["sample-roots", "-n", "3", "-w", "6", "--seed", "5", "-o", roots.to_str().unwrap()]);
    assert!(o.status.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&roots).unwrap()).unwrap();
    // the longest reduction of the three
    let mut best = None;
    for (i, r) in doc["roots"].as_array().unwrap().iter().enumerate() {
        let input = write(dir, &format!("r{i}.json"), &r.to_string());
        let (o, cert) = reduce(dir, &input, &format!("c{i}.json"));
        assert!(o.status.success());
        let steps = stdout_json(&o)["results"]["steps"].as_u64().unwrap();
        if best.as_ref().map_or(true, |(s, _)| steps > *s) {
            best = Some((steps, cert));
        }
    }
    let (steps, cert) = best.unwrap();
    assert!(steps > 0);
    cert
}

#[test]
fn tampered_height_fails_at_that_step() {
    let dir = tempfile::tempdir().unwrap();
    let cert = sampled_certificate(dir.path());
    let mut c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let last = c["steps"].as_array().unwrap().len() - 1;
    c["steps"][last]["height_after"] = serde_json::json!([1, 0, 1, 1]);
    let bad = write(dir.path(), "bad.json", &c.to_string());
    let o = run(&["verify-cert", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let v = stdout_json(&o);
    assert_eq!(v["results"]["failure"]["step"], last);
}

#[test]
fn flipped_zeta_fails() {
    let dir = tempfile::tempdir().unwrap();
    let input = root_file(dir.path(), "s.json", &sigma_zero(), [1, 2], [0, -1]);
    let (_, cert) = reduce(dir.path(), &input, "cert.json");
    let mut c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let flipped = if c["steps"][0]["zeta"] == "omega" { "omega_bar" } else { "omega" };
    c["steps"][0]["zeta"] = Value::String(flipped.into());
    let bad = write(dir.path(), "bad.json", &c.to_string());
    let o = run(&["verify-cert", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout_json(&o)["results"]["failure"]["step"], 0);
}

#[test]
fn overlap_constants_command_prints_matching_values() {
    let o = run(&["lemma54"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_no_floats(&v);
    let constants = v["results"]["constants"].as_array().unwrap();
    let find = |name: &str| constants.iter().find(|c| c["name"] == name).unwrap_or_else(|| panic!("{name}"));
    assert_eq!(find("ht_rho(p)")["computed"], "3");
    assert_eq!(find("cosh^2 d(p, p')")["computed"], "4");
    assert_eq!(find("ht_R(rho)(x) < 3")["matches"], true);
    assert!(constants.iter().all(|c| c["matches"] == true));
    assert_no_float_text(&String::from_utf8_lossy(&o.stdout));
}

#[test]
fn corners_command() {
    let o = run(&["corners", "--m-sq", "4"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["results"]["excluded_disks"]["holds"], true);
    let o = run(&["corners", "--m-sq", "7"]);
    let v = stdout_json(&o);
    assert_eq!(v["results"]["corners"][4]["class"], "boundary");
}

#[test]
fn classify_reports_the_coset() {
    let dir = tempfile::tempdir().unwrap();
    let input = root_file(dir.path(), "s9.json", &sigma_lambda9(), [1, 2], [-1, 0]);
    let o = run(&["classify", input.to_str().unwrap()]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["results"]["coset_tag"], "NORM9");
    assert_eq!(v["results"]["height"], 9);
}

#[test]
fn sample_roots_is_seeded() {
    let a = run(&["sample-roots", "-n", "4", "-w", "5", "--seed", "9"]);
    let b = run(&["sample-roots", "-n", "4", "-w", "5", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let bare = stdout_json(&run(&["sample-roots", "-n", "1", "-w", "0", "--seed", "1"]));
    let root: leech_cusp::lorentz::Root = serde_json::from_value(bare["roots"][0].clone()).unwrap();
    assert!(leech_cusp::lorentz::is_leech_root(&root));
    for r in stdout_json(&a)["roots"].as_array().unwrap() {
        // Root deserialization checks integrality, Λ membership and norm 3
        serde_json::from_value::<leech_cusp::lorentz::Root>(r.clone()).unwrap();
    }
}
