use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use spinor_cli::gamma::{matrix_from_strings, GammaFileV1};
use spinor_core::RMatrix;
use tempfile::TempDir;

fn spinor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinor")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn generate_to(dir: &TempDir, name: &str, args: &[&str]) -> std::path::PathBuf {
    let path = dir.path().join(name);
    let mut all = vec!["generate"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let out = spinor(&all);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn load(path: &Path) -> GammaFileV1 {
    GammaFileV1::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn generators(file: &GammaFileV1) -> Vec<RMatrix> {
    file.generators.iter().map(|g| matrix_from_strings(g, "g").unwrap()).collect()
}

#[test]
fn generate_cl8_has_real_dim_16() {
    let dir = TempDir::new().unwrap();
    let file = load(&generate_to(&dir, "g.json", &["--sig", "0,8"]));
    assert_eq!(file.real_dim, 16);
    assert_eq!(file.field, "R");
    assert_eq!(file.generators.len(), 8);
    assert!(file.generators.iter().flatten().flatten().all(|s| s.parse::<spinor_core::Rational>().is_ok()));
}

#[test]
fn minus_variant_volume_is_identity() {
    let dir = TempDir::new().unwrap();
    for (variant, want) in [("minus", 1), ("plus", -1)] {
        let file = load(&generate_to(&dir, "g.json", &["--sig", "0,3", "--variant", variant]));
        let g = generators(&file);
        let vol = g[0].matmul(&g[1]).matmul(&g[2]);
        let d = vol.rows();
        assert_eq!(vol, RMatrix::scalar(d, spinor_core::Rational::from_int(want)), "{variant}");
    }
}

#[test]
fn generate_stdout_is_deterministic() {
    let a = spinor(&["generate", "--sig", "1,4"]);
    let b = spinor(&["generate", "--sig", "1,4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["format_version"], 1);
    assert_eq!(v["signature"], serde_json::json!([1, 4]));
}

#[test]
fn family_limits_exit_2() {
    for args in [
        &["generate", "--sig", "0,5", "--family", "sqrt-space"][..],
        &["generate", "--sig", "1,2", "--family", "sqrt-space"],
        &["generate", "--sig", "0,3", "--family", "octonion"],
        &["generate", "--sig", "0,4", "--variant", "minus"],
        &["generate", "--sig", "0,3", "--family", "spinor"],
        &["generate", "--sig", "three"],
    ] {
        let out = spinor(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn unwritable_output_exits_3() {
    let out = spinor(&["generate", "--sig", "0,2", "--out", "/nonexistent-dir/x/g.json"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn verify_round_trip_and_octonions() {
    let dir = TempDir::new().unwrap();
    for (name, args) in [
        ("a.json", &["--sig", "0,6"][..]),
        ("b.json", &["--sig", "0,8", "--family", "octonion"]),
        ("c.json", &["--sig", "0,4", "--family", "sqrt-space"]),
        ("d.json", &["--sig", "3,2"]),
    ] {
        let path = generate_to(&dir, name, args);
        let out = spinor(&["verify", "--in", path.to_str().unwrap()]);
        let text = String::from_utf8_lossy(&out.stdout);
        assert_eq!(code(&out), 0, "{args:?}\n{text}");
        assert!(text.lines().all(|l| l.starts_with("PASS")));
        assert!(text.contains("skew"));
    }
}

#[test]
fn corrupted_entry_names_the_pair() {
    let dir = TempDir::new().unwrap();
    let path = generate_to(&dir, "g.json", &["--sig", "0,3"]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let entry = &mut v["generators"][1][0][0];
    let old: spinor_core::Rational = entry.as_str().unwrap().parse().unwrap();
    *entry = Value::String((&old + &spinor_core::Rational::from_int(3)).to_pq_string());
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let out = spinor(&["verify", "--in", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let text = String::from_utf8_lossy(&out.stdout);
    let line = text.lines().find(|l| l.starts_with("FAIL Clifford")).expect("Clifford line");
    assert!(line.contains("(2,2)"), "{line}");
    assert!(!line.contains("(1,3)"), "{line}");
}

#[test]
fn malformed_files_exit_2() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    for body in [
        "not json",
        r#"{"format_version": 2}"#,
        r#"{"format_version":1,"signature":[0,1],"convention":"","field":"C","real_dim":2,"family":"recipe","variant":"plus","generators":[[["1/0","0"],["0","0"]]],"spin_metric":[["1","0"],["0","1"]]}"#,
    ] {
        std::fs::write(&path, body).unwrap();
        let out = spinor(&["verify", "--in", path.to_str().unwrap()]);
        assert_eq!(code(&out), 2, "{body}");
    }
    let out = spinor(&["verify", "--in", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(code(&out), 3);
}

#[test]
fn classify_rows_match() {
    let out = spinor(&["classify", "--max-n", "16"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 20);
    assert!(rows.iter().all(|r| r.ends_with("\tMATCH")));
    let row5 = rows.iter().find(|r| r.starts_with("5\t")).unwrap();
    assert!(row5.starts_with("5\tplus\t8\tC (2)\tH (4)"), "{row5}");
    let sevens: Vec<_> = rows.iter().filter(|r| r.starts_with("7\t")).collect();
    assert_eq!(sevens.len(), 2);
    assert!(sevens.iter().all(|r| r.contains("\tR (1)\t")));
    assert_eq!(code(&spinor(&["classify", "--max-n", "17"])), 2);
}

fn last_row(csv: &str) -> Vec<f64> {
    let line = csv.lines().last().unwrap();
    line.split(',').map(|x| x.parse().unwrap()).collect()
}

#[test]
fn transport_sphere_demo() {
    let a = spinor(&["transport", "--surface", "unit-sphere", "--curve", "great-circle", "--q0", "i"]);
    let b = spinor(&["transport"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let csv = String::from_utf8(a.stdout).unwrap();
    assert_eq!(csv.lines().next().unwrap(), spinor_cli::transport::CSV_HEADER);
    assert_eq!(csv.lines().count(), 10_002);
    let last = last_row(&csv);
    let q = &last[17..21];
    let want = [0.0, -1.0, 0.0, 0.0];
    assert!(q.iter().zip(want).all(|(x, y)| (x - y).abs() < 1e-6), "{q:?}");
    assert_eq!(last[21], 1.0);
    let neg = spinor(&["transport", "--sign", "-1", "--steps", "500"]);
    let last = last_row(&String::from_utf8(neg.stdout).unwrap());
    assert!((last[18] - 1.0).abs() < 1e-6);
}

#[test]
fn transport_degraded_mode_flags_breach() {
    let out = spinor(&["transport", "--steps", "2"]);
    assert_eq!(code(&out), 0);
    let csv = String::from_utf8(out.stdout).unwrap();
    let flags: Vec<&str> = csv.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(flags.len(), 3);
    assert!(flags[1..].iter().all(|f| *f == "0"), "{flags:?}");
}

#[test]
fn transport_other_specs() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("t.csv");
    let out = spinor(&[
        "transport",
        "--surface",
        "sphere:2",
        "--curve",
        "latitude:pi/6",
        "--q0",
        "1,0,0,0",
        "--steps",
        "400",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(&path).unwrap();
    let last = last_row(&csv);
    assert!((last[1].powi(2) + last[2].powi(2) + last[3].powi(2) - 4.0).abs() < 1e-9);
    let out = spinor(&["transport", "--surface", "plane", "--curve", "line:0,0,1,-2", "--steps", "10"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn transport_errors() {
    for args in [
        &["transport", "--surface", "torus"][..],
        &["transport", "--curve", "spiral"],
        &["transport", "--q0", "1,2"],
        &["transport", "--sign", "0"],
        &["transport", "--steps", "1"],
        &["transport", "--surface", "sphere:-1"],
    ] {
        assert_eq!(code(&spinor(args)), 2, "{args:?}");
    }
    // the curve runs through the pole, where the chart degenerates
    let out = spinor(&["transport", "--curve", "line:0,0,0,pi", "--steps", "2"]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("t = 0.5"));
}
