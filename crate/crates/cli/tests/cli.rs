use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const D5: &str = r#"{"abelian":{"modulus":5,"rank":1},"k":{"table":[[0,1],[1,0]],"action":[[[1]],[[4]]]}}"#;
const Z2: &str = r#"{"abelian":{"modulus":2,"rank":1},"k":{"table":[[0]],"action":[[[1]]]}}"#;
const HALF_HALF: &str = r#"{"atoms":[{"a":[1],"k":0,"re":0.5,"im":0},{"a":[0],"k":1,"re":0.5,"im":0}]}"#;

fn uniform_d5() -> String {
    let atoms: Vec<String> = (0..5)
        .flat_map(|a| (0..2).map(move |k| format!(r#"{{"a":[{a}],"k":{k},"re":0.1,"im":0}}"#)))
        .collect();
    format!(r#"{{"atoms":[{}]}}"#, atoms.join(","))
}

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Self { dir: TempDir::new().unwrap() }
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

fn run(args: &[&str], group: &Path, measure: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motion-walks"))
        .args(args)
        .arg("--group")
        .arg(group)
        .arg("--measure")
        .arg(measure)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

#[test]
fn classify_uniform_all_hold() {
    let f = Files::new();
    let out = run(&["classify"], &f.write("g.json", D5), &f.write("m.json", &uniform_d5()));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let r = &v["result"];
    assert_eq!(r["sr"]["state"], "HOLDS");
    assert_eq!(r["s"]["state"], "HOLDS");
    assert_eq!(r["adapted"]["holds"], true);
    assert_eq!(r["strictly_aperiodic"]["holds"], true);
    assert_eq!(r["empirical_mixing"]["verdict"], "HOLDS");
    assert_eq!(r["empirical_ergodic"]["verdict"], "HOLDS");
    assert_eq!(r["weak_mixing_empirical"]["verdict"], "HOLDS");
    assert_eq!(r["consistency"].as_array().unwrap().len(), 0);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["config"]["n_max"], 1024);
}

#[test]
fn classify_identity_all_fail() {
    let f = Files::new();
    let m = r#"{"atoms":[{"a":[0],"k":0,"re":1,"im":0}]}"#;
    let out = run(&["classify"], &f.write("g.json", D5), &f.write("m.json", m));
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["result"];
    assert_eq!(r["sr"]["state"], "FAILS");
    assert_eq!(r["s"]["state"], "FAILS");
    assert_eq!(r["adapted"]["holds"], false);
    assert_eq!(r["empirical_mixing"]["verdict"], "FAILS");
    assert_eq!(r["empirical_ergodic"]["verdict"], "FAILS");
    assert_eq!(r["weak_mixing_empirical"]["verdict"], "FAILS");
    assert_eq!(r["consistency"].as_array().unwrap().len(), 0);
}

#[test]
fn classify_exit_codes_for_indeterminate_and_violations() {
    let f = Files::new();
    let g = f.write("g.json", D5);
    let m = f.write("m.json", HALF_HALF);
    // radius 0.809 and margin 0.47 both sit inside a 0.5 guard band
    let out = run(&["classify", "--tol", "0.5"], &g, &m);
    assert_eq!(out.status.code(), Some(3));
    let r = &json(&out)["result"];
    assert_eq!(r["sr"]["state"], "INDETERMINATE");
    // a tolerance of 2 forces (SR) to fail while the walk visibly mixes
    let out = run(&["classify", "--tol", "2"], &g, &m);
    assert_eq!(out.status.code(), Some(2));
    let r = &json(&out)["result"];
    assert!(r["consistency"].as_array().unwrap().iter().any(|s| s == "(M) <=> (SR)"));
}

#[test]
fn input_errors() {
    let f = Files::new();
    let g = f.write("g.json", D5);
    let out = run(&["classify"], &g, &f.write("bad.json", "{\"atoms\": [\n  {\"a\": [1],"));
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = run(&["classify"], &g, &f.write("half.json", r#"{"atoms":[{"a":[1],"k":0,"re":0.5}]}"#));
    assert_eq!(out.status.code(), Some(65));
    let out = Command::new(env!("CARGO_BIN_EXE_motion-walks")).arg("classify").output().unwrap();
    assert_eq!(out.status.code(), Some(64));
    let out = run(&["spectrum", "--tol", "-1"], &g, &f.write("m.json", HALF_HALF));
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn verify_srf_cases() {
    let f = Files::new();
    let z2 = f.write("z2.json", Z2);
    let diff = f.write("d.json", r#"{"atoms":[{"a":[1],"k":0,"re":1,"im":0},{"a":[0],"k":0,"re":-1,"im":0}]}"#);
    let out = run(&["verify-srf"], &z2, &diff);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["result"];
    assert!(r["formula_gap"].as_f64().unwrap() <= 1e-6);
    assert!((r["gelfand_radius_estimate"].as_f64().unwrap() - 2.0).abs() < 1e-6);
    assert!((r["sup_block_radius"].as_f64().unwrap() - 2.0).abs() < 1e-12);

    let d5 = f.write("g.json", D5);
    let complex = f.write(
        "c.json",
        r#"{"atoms":[{"a":[1],"k":0,"re":0.3,"im":-0.2},{"a":[2],"k":1,"re":-0.1,"im":0.7},{"a":[0],"k":1,"re":0.05,"im":0.0}]}"#,
    );
    let out = run(&["verify-srf", "--tol", "1e-6"], &d5, &complex);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["result"]["pass"], true);

    let out = run(&["verify-srf"], &d5, &f.write("m.json", HALF_HALF));
    assert_eq!(json(&out)["result"]["gelfand_radius_estimate"].as_f64().unwrap(), 1.0);
}

#[test]
fn spectrum_of_uniform_vanishes_off_the_trivial_orbit() {
    let f = Files::new();
    let out = run(&["spectrum", "--format", "csv"], &f.write("g.json", D5), &f.write("m.json", &uniform_d5()));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "block,radius,norm,margin,one_in_spectrum");
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        if fields[0] != "alpha=(0)" {
            assert!(fields[1].parse::<f64>().unwrap() < 1e-12, "{line}");
        }
    }
}

#[test]
fn simulate_is_reproducible_and_writes_files() {
    let f = Files::new();
    let g = f.write("g.json", D5);
    let m = f.write("m.json", HALF_HALF);
    let args = ["simulate", "--format", "csv", "--n-max", "16", "--trials", "2000", "--seed", "9"];
    let a = run(&args, &g, &m);
    let b = run(&args, &g, &m);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    let target = f.dir.path().join("out.csv");
    let mut with_out: Vec<&str> = args.to_vec();
    with_out.extend(["--out", target.to_str().unwrap()]);
    let c = run(&with_out, &g, &m);
    assert!(c.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(target).unwrap(), text);
}

#[test]
fn rosenblatt_rows_decrease() {
    let out = Command::new(env!("CARGO_BIN_EXE_motion-walks"))
        .args(["rosenblatt", "--n", "8,64,1024"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let direct: Vec<f64> = rows.iter().map(|r| r["direct"].as_f64().unwrap()).collect();
    assert!(direct[0] > direct[1] && direct[1] > direct[2]);
    for r in rows {
        assert!((r["direct"].as_f64().unwrap() - r["closed_form"].as_f64().unwrap()).abs() <= 1e-10);
    }
    assert_eq!(v["result"]["lambda"]["x"], "-2");
    assert_eq!(v["result"]["lambda"]["y"], "1");
    assert_eq!(v["result"]["t"][1]["y"], "1/2");
}
