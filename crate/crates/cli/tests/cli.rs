use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn sunada(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sunada")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = sunada(&a);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn search_m8_lists_reference_rows() {
    let o = sunada(&["search", "--m", "8", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(4,1,1,1,1)  35"), "{out}");
    assert!(out.contains("(5,2,1)      64"), "{out}");
    let rows = json(&["search", "--m", "8"]);
    let ns: Vec<u64> = rows.as_array().unwrap().iter().map(|r| r["n"].as_u64().unwrap()).collect();
    assert_eq!(ns, vec![35, 64, 64]);
}

#[test]
fn char_value() {
    let o = sunada(&["char", "--lambda", "3,2,1", "--mu", "1,1,1,1,1,1", "--format", "csv"]);
    assert_eq!(stdout(&o), "lambda,mu,chi\n\"(3,2,1)\",\"(1,1,1,1,1,1)\",16\n");
    assert_eq!(json(&["char", "--lambda", "3,2,1", "--mu", "3,3"])["value"], "-2");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(sunada(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(sunada(&["search"]).status.code(), Some(1));
    assert_eq!(sunada(&["char", "--lambda", "3,x", "--mu", "1"]).status.code(), Some(1));
    assert_eq!(sunada(&["search", "--m", "20", "--max-m", "14"]).status.code(), Some(1));
    assert_eq!(sunada(&["volume", "--space", "S6"]).status.code(), Some(1));
    assert_eq!(sunada(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_independent_of_jobs() {
    for args in [["search", "--m", "10"], ["search", "--m", "12"]] {
        let one = sunada(&[&args[..], &["--jobs", "1", "--format", "json"]].concat());
        let four = sunada(&[&args[..], &["--jobs", "4", "--format", "json"]].concat());
        assert_eq!(one.stdout, four.stdout);
    }
    let a = sunada(&["goursat", "compare", "--first", "dihedral-1", "--second", "dihedral-2", "--witnesses", "2Ox2O", "--jobs", "1"]);
    let b = sunada(&["goursat", "compare", "--first", "dihedral-1", "--second", "dihedral-2", "--witnesses", "2Ox2O", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn manifest_on_stderr() {
    let o = sunada(&["search", "--m", "6", "--manifest"]);
    let line = String::from_utf8(o.stderr).unwrap();
    let m: Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(m["subcommand"], "search");
    assert_eq!(m["rows"], 1);
    assert_eq!(m["tool_version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn ade_commands() {
    let classes = json(&["ade", "classes", "--group", "2O"]);
    let sizes: Vec<u64> = classes.as_array().unwrap().iter().map(|c| c["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes.iter().sum::<u64>(), 48);
    assert_eq!(json(&["ade", "classes", "--group", "2D6"]).as_array().unwrap().len(), 6);
    assert_eq!(json(&["ade", "bd4-action"]).as_array().unwrap().len(), 24);
    let act = json(&["ade", "action", "--group", "2O"]);
    let t = act.as_array().unwrap().iter().find(|r| r["class"] == "t").unwrap();
    assert_eq!(t["image_class"], "t^3");
    assert_eq!(sunada(&["ade", "action", "--group", "2T"]).status.code(), Some(1));
}

#[test]
fn goursat_build_from_json() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"a": "Z3", "a0": "Z1", "b": ["(1+i)(1+j)/2", "(1+j)(1+i)/2"], "b0": "2D4",
            "theta": [["(-1+i+j+k)/2", "(1+i+j+k)/2"]]}}"#
    )
    .unwrap();
    let out = json(&["goursat", "build", "--quintuple", f.path().to_str().unwrap()]);
    assert_eq!(out["order"], 24);
    assert_eq!(out["quintuple"]["order_b0"], 8);
    let same = json(&["goursat", "compare", "--first", f.path().to_str().unwrap(), "--second", "tetrahedral-2"]);
    assert_eq!(same["equal"], true);
    let cmp = json(&["goursat", "compare", "--first", "tetrahedral-1", "--second", "tetrahedral-2"]);
    assert_eq!(cmp["almost_conjugate"], true);
    assert!(cmp["witness"].is_object());
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, r#"{{"a": "Z4", "a0": "Z1", "b": "Z4", "b0": "Z1", "theta": [["i", "-1"]]}}"#).unwrap();
    assert_eq!(sunada(&["goursat", "build", "--quintuple", bad.path().to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn codes_verify() {
    let out = json(&["codes", "verify"]);
    assert_eq!(out["almost_conjugate"], true);
    assert_eq!(out["search"]["permutations_tried"], 720);
    assert!(out["search"]["witness"].is_null());
    assert_eq!(out["weight_enumerator_1"], serde_json::json!({"0": 1, "2": 3, "4": 3, "6": 1}));
}

#[test]
fn volumes() {
    let f12 = json(&["volume", "--space", "F12"]);
    assert_eq!(f12["volume"]["canonical"], "1/2*pi^3");
    let s = json(&["volume", "--space", "S3xS3", "--kappa", "60"]);
    assert_eq!(s["volume"]["paper"], "32*pi^4/(81*sqrt(3))");
    assert_eq!(s["volume_at_kappa"]["paper"], "4*pi^4/(81*sqrt(3))");
    let t = json(&["volume", "--table"]);
    assert_eq!(t["rows"].as_array().unwrap().len(), 4);
    assert_eq!(sunada(&["volume", "--space", "Sp2", "--kappa", "30"]).status.code(), Some(1));
}

// Mismatches are exactly the documented disagreements with the reference values.
#[test]
fn paper_tables_reports_known_mismatches() {
    let o = sunada(&["paper-tables", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let failing: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        failing,
        [
            "search m=8",
            "search m=10",
            "search m=12",
            "(Z4,1,2D6,Z3) pair almost conjugate",
            "vol U(1)xSp(1)",
            "vol CP3",
            "vol Delta(SU(2))",
            "vol SU(2)^3 cube root",
        ]
    );
}
