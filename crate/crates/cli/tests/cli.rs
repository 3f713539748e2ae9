use std::fs;
use std::path::Path;
use std::process::Command;

use hirzebruch_cli::golden::{render_case, CASES};
use hirzebruch_cli::{exit, main_with_args};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = main_with_args(std::iter::once("hirzebruch").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn golden_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/golden/v1"))
}

#[test]
fn golden_files_match() {
    for (name, args) in CASES {
        let want = fs::read_to_string(golden_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(render_case(args).unwrap(), want, "{name} drifted; rerun `hirzebruch golden --force` if intended");
    }
}

#[test]
fn golden_refuses_overwrite() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(run(&["golden", "--dir", d]).0, exit::OK);
    let before = fs::read_to_string(dir.path().join(CASES[0].0)).unwrap();
    let (code, _, err) = run(&["golden", "--dir", d]);
    assert_eq!(code, exit::GOLDEN_EXISTS);
    assert!(err.contains("--force"));
    assert_eq!(run(&["golden", "--dir", d, "--force"]).0, exit::OK);
    assert_eq!(fs::read_to_string(dir.path().join(CASES[0].0)).unwrap(), before);
}

#[test]
fn headline_seshadri() {
    let v = run_json(&["seshadri", "--e", "3", "--r", "6", "--L", "6,19,4,4,4,4,4,4", "--json"]);
    assert_eq!(v["value"], "9/2");
    assert_eq!(v["witness"], "3,9,2,2,2,2,2,2");
    assert_eq!(v["mult_x"], 2);
    let (_, text, _) = run(&["seshadri", "--e", "3", "--r", "6", "--L", "6,19,4,4,4,4,4,4"]);
    assert!(text.contains("9/2 (≈ 4.5000)"), "{text}");
}

#[test]
fn methods_agree_where_both_apply() {
    let args = |m: &'static str| ["seshadri", "--e", "3", "--r", "3", "--L", "5,20,3,2,2", "--method", m, "--json"];
    let a = run_json(&args("r-e"));
    let b = run_json(&args("enumerative"));
    assert_eq!(a["value"], b["value"]);
    let f = run_json(&["seshadri", "--e", "2", "--L", "3,9", "--x-position", "on-ce", "--json"]);
    assert_eq!(f["method"], "closed_form_fe");
}

#[test]
fn enumerate_candidates_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("orbits.csv");
    let v = run_json(&[
        "enumerate", "--e", "3", "--r", "6", "--with-x", "--filter", "candidates", "--json", "--csv",
        csv_path.to_str().unwrap(),
    ]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 77);
    assert!(rows.iter().all(|r| r["family"].is_u64()));
    let mut rdr = csv::Reader::from_path(&csv_path).unwrap();
    let total: usize = rdr.records().map(|r| r.unwrap()[5].parse::<usize>().unwrap()).sum();
    assert_eq!(total, 77);
    let all = run_json(&["enumerate", "--e", "3", "--r", "6", "--with-x", "--json"]);
    assert_eq!(all.as_array().unwrap().len(), 480);
}

#[test]
fn nef_fiber() {
    let v = run_json(&["nef", "--e", "2", "--r", "0", "--D", "0,1", "--json"]);
    assert_eq!(v["nef"], true);
    let v = run_json(&["nef", "--e", "2", "--r", "0", "--D", "1,0", "--json"]);
    assert_eq!(v["nef"], false);
}

#[test]
fn configured_points() {
    let cfg = r#"{"configured":{"on_ce":[true],"fiber":[0]}}"#;
    let v = run_json(&["ample", "--e", "2", "--r", "1", "--config", cfg, "--L", "3,9,1", "--json"]);
    assert_eq!(v["closed_form"], Value::Null);
    assert!(v["ample"].is_boolean());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).0, exit::OK);
    assert_eq!(run(&["--version"]).0, exit::OK);
    assert_eq!(run(&["frobnicate"]).0, exit::USAGE);
    assert_eq!(run(&["seshadri", "--e", "3", "--L", "1,1", "--method", "magic"]).0, exit::USAGE);
    assert_eq!(run(&["seshadri", "--e", "1", "--r", "1", "--L", "3,4,2", "--x-position", "on-exc:0"]).0, exit::USAGE);
    assert_eq!(run(&["ample", "--e", "0", "--r", "6", "--L", "9,9,1,1,1,1,1,1"]).0, exit::UNSUPPORTED_RANGE);
    assert_eq!(run(&["enumerate", "--e", "5", "--r", "8"]).0, exit::BOUNDS);
    assert_eq!(run(&["enumerate", "--e", "5", "--r", "8", "--bounds", "2,12,2"]).0, exit::OK);
    assert_eq!(run(&["run", "--config", "/nonexistent/run.json"]).0, exit::IO);
    assert_eq!(run(&["ample", "--e", "0", "--L", "4000000000,4000000000"]).0, exit::OVERFLOW);
    assert_eq!(run(&["ample", "--e", "1", "--r", "2", "--L", "3,4,1"]).0, exit::STRUCTURE);
    assert_eq!(run(&["linsys", "--e", "1", "--a", "-1", "--b", "2"]).0, exit::USAGE);
}

#[test]
fn malformed_json_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("run.json");
    fs::write(&p, "{\n  \"command\": \"ample\",\n  \"surface\": {\"e\": 1 \"r\": 0}\n}\n").unwrap();
    let (code, _, err) = run(&["run", "--config", p.to_str().unwrap()]);
    assert_eq!(code, exit::MALFORMED_JSON);
    assert!(err.contains("line 3"), "{err}");
    let (code, _, _) = run(&["nef", "--e", "1", "--r", "1", "--config", "{oops", "--D", "1,1,0"]);
    assert_eq!(code, exit::MALFORMED_JSON);
}

#[test]
fn run_file_matches_flags() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sub/out.json");
    let cfg = serde_json::json!({
        "command": "seshadri",
        "surface": {"e": 1, "r": 3},
        "class": "3,5,2,2,2",
        "output": {"path": out, "format": "json"}
    });
    let p = dir.path().join("run.json");
    fs::write(&p, cfg.to_string()).unwrap();
    assert_eq!(run(&["run", "--config", p.to_str().unwrap()]).0, exit::OK);
    let from_file: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let direct = run_json(&["seshadri", "--e", "1", "--r", "3", "--L", "3,5,2,2,2", "--json"]);
    assert_eq!(from_file, direct);

    let cfg = serde_json::json!({
        "command": "linsys",
        "spec": {"e": 3, "a": 3, "b": 9, "mults": [2, 2, 2, 2, 2, 2]},
        "seeds": [1, 2, 3]
    });
    fs::write(&p, cfg.to_string()).unwrap();
    let (code, text, _) = run(&["run", "--config", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["actual_dim"], 3);

    fs::write(&p, r#"{"command": "linsys", "spec": {"e": 3, "a": 3, "b": 9, "mults": []}}"#).unwrap();
    assert_eq!(run(&["run", "--config", p.to_str().unwrap()]).0, exit::USAGE);
    fs::write(&p, r#"{"command": "ample", "bogus": 1}"#).unwrap();
    assert_eq!(run(&["run", "--config", p.to_str().unwrap()]).0, exit::MALFORMED_JSON);
}

const SMALL_GRID: &str = r#"{"e":[1,2],"r":[0,3],"a":[0,2],"b":[0,5],"m":[1,2],"seeds":[1,2,3]}"#;

#[test]
fn scan_writes_outputs_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.json");
    fs::write(&grid, SMALL_GRID).unwrap();
    let read = |d: &Path| (fs::read(d.join("scan.json")).unwrap(), fs::read(d.join("scan.csv")).unwrap());
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let (code, summary, err) = run(&["scan", "--config", grid.to_str().unwrap(), "--out", a.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0, "{err}");
    let summary: Value = serde_json::from_str(&summary).unwrap();
    assert!(summary["cells"].is_null());
    assert_eq!(summary["failures"].as_array().unwrap().len(), 0);
    assert_eq!(run(&["scan", "--config", grid.to_str().unwrap(), "--out", b.to_str().unwrap()]).0, 0);
    assert_eq!(read(&a), read(&b));
    let rep: Value = serde_json::from_slice(&read(&a).0).unwrap();
    let n = rep["cells"].as_array().unwrap().len();
    assert!(n > 0);
    assert_eq!(String::from_utf8(read(&a).1).unwrap().lines().count(), n + 1);
}

#[test]
fn binary_honours_thread_env() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.json");
    fs::write(&grid, SMALL_GRID).unwrap();
    let outs: Vec<Vec<u8>> = ["1", "3"]
        .iter()
        .map(|t| {
            let o = dir.path().join(format!("t{t}"));
            let st = Command::new(env!("CARGO_BIN_EXE_hirzebruch"))
                .env("HIRZ_THREADS", t)
                .args(["scan", "--config", grid.to_str().unwrap(), "--out", o.to_str().unwrap()])
                .status()
                .unwrap();
            assert!(st.success());
            fs::read(o.join("scan.json")).unwrap()
        })
        .collect();
    assert_eq!(outs[0], outs[1]);
    let st = Command::new(env!("CARGO_BIN_EXE_hirzebruch")).arg("nonsense").output().unwrap();
    assert_eq!(st.status.code(), Some(exit::USAGE));
}
