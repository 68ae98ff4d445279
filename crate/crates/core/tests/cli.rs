//! End-to-end runs of the command line interface.

use std::fs;
use std::path::Path;
use std::process::Command;

use energeia::cli::run;
use serde_json::Value;
use tempfile::TempDir;

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["energeia"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn k2(dir: &Path) -> String {
    write(
        dir,
        "k2.json",
        "{\"schema\": \"energeia/1\", \"sets\": [[1], [2], [1, 2]]}\n",
    )
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn gen_emits_a_versioned_geometry() {
    let (code, out, _) = call(&["gen", "--kind", "complete", "--n", "2"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["schema"], "energeia/1");
    assert_eq!(v["sets"], json("[[1],[2],[1,2]]"));
    let (_, out, _) = call(&["gen", "--kind", "whitney", "--edges", "1-2,1-3,2-3"]);
    assert_eq!(json(&out)["sets"].as_array().unwrap().len(), 7);
    let (_, a, _) = call(&["--seed", "7", "gen", "--kind", "random", "--vertices", "5"]);
    let (_, b, _) = call(&["--seed", "7", "gen", "--kind", "random", "--vertices", "5"]);
    assert_eq!(a, b);
}

#[test]
fn matrix_files_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let g = k2(dir.path());
    let mut seen = Vec::new();
    for run_dir in ["a", "b"] {
        let out_dir = dir.path().join(run_dir);
        fs::create_dir(&out_dir).unwrap();
        let (code, _, err) = call(&[
            "matrix",
            "--in",
            &g,
            "--sampler",
            "symbolic",
            "--vars",
            "x1,x2,x3",
            "--emit",
            "L,g,gstarL",
            "--out-dir",
            out_dir.to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{err}");
        seen.push(fs::read(out_dir.join("L.json")).unwrap());
    }
    assert_eq!(seen[0], seen[1]);
    let l = json(std::str::from_utf8(&seen[0]).unwrap());
    assert_eq!(l["name"], "L");
    assert_eq!(l["index"], json("[\"[1]\",\"[2]\",\"[1,2]\"]"));
    assert_eq!(l["entries"][2][2], "x1 + x2 + x3");
}

#[test]
fn energize_round_trips_through_files() {
    let dir = TempDir::new().unwrap();
    let g = k2(dir.path());
    let h = dir.path().join("h.json");
    let (code, _, _) = call(&[
        "--seed",
        "3",
        "energize",
        "--in",
        &g,
        "--sampler",
        "u1_exact",
        "--out",
        h.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let (code, out, err) = call(&[
        "verify",
        "--in",
        &g,
        "--h",
        h.to_str().unwrap(),
        "--suite",
        "T4",
    ]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(json(&out)["outcomes"][0]["status"], "pass");
}

#[test]
fn verify_reports_the_non_complex_failures() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "nc.json", "{\"sets\": [[1], [2], [1, 2, 3]]}");
    let verdicts = dir.path().join("verdicts.json");
    let (code, _, _) = call(&[
        "verify",
        "--in",
        &g,
        "--sampler",
        "symbolic",
        "--vars",
        "x,y,z",
        "--suite",
        "T1,T2,T3,T4",
        "--out",
        verdicts.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    let v = json(&fs::read_to_string(verdicts).unwrap());
    assert_eq!(v["schema"], "energeia/1");
    let list = v["outcomes"].as_array().unwrap();
    let ids: Vec<&str> = list.iter().map(|o| o["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["T1", "T2", "T3", "T4"]);
    assert_eq!(list[0]["status"], "fail");
    assert_eq!(list[0]["witness"]["actual"], "x + y + 9 z");
    assert_eq!(list[1]["status"], "fail");
    assert_eq!(list[2]["status"], "pass");
    assert_eq!(list[3]["status"], "inapplicable");
    assert!(list[3]["reason"].is_string());
}

#[test]
fn verify_passes_on_k2() {
    let dir = TempDir::new().unwrap();
    let g = k2(dir.path());
    let (code, out, _) = call(&[
        "verify",
        "--in",
        &g,
        "--sampler",
        "symbolic",
        "--suite",
        "T1,T2,T3",
    ]);
    assert_eq!(code, 0);
    assert!(json(&out)["outcomes"]
        .as_array()
        .unwrap()
        .iter()
        .all(|o| o["status"] == "pass"));
    let (code, out, _) = call(&["verify", "--in", &g, "--sampler", "pm1"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn spectral_writes_the_zeta_table() {
    let dir = TempDir::new().unwrap();
    let g = k2(dir.path());
    let csv = dir.path().join("zeta.csv");
    let (code, out, err) = call(&[
        "spectral",
        "--in",
        &g,
        "--sampler",
        "ones",
        "--zeta",
        "0,1,0.5+2i",
        "--flow-steps",
        "3",
        "--zeta-csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let table = fs::read_to_string(csv).unwrap();
    let mut lines = table.lines();
    assert_eq!(lines.next(), Some("re(s),im(s),re(ζ),im(ζ)"));
    assert_eq!(lines.count(), 3);
    let v = json(&out);
    assert_eq!(v["schema"], "energeia/1");
    assert!(v.get("zeta").is_some());
}

#[test]
fn energy_reports_named_quantities() {
    let dir = TempDir::new().unwrap();
    let g = k2(dir.path());
    let (code, out, _) = call(&[
        "energy",
        "--in",
        &g,
        "--sampler",
        "symbolic",
        "--report",
        "chi,omega3",
    ]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["chi"], "x1 + x2 + x3");
    assert!(v["omega3"].is_string());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["gen", "--kind", "complete", "--bogus"]).0, 2);
    let (code, _, err) = call(&["verify", "--in", "/nonexistent/g.json", "--sampler", "pm1"]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/g.json"), "{err}");
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn diagnostics_name_the_file_and_line() {
    let dir = TempDir::new().unwrap();
    let g = write(
        dir.path(),
        "bad.json",
        "{\n  \"sets\": [[1],\n    [2, -4]]\n}\n",
    );
    let (code, _, err) = call(&["verify", "--in", &g, "--sampler", "pm1"]);
    assert_eq!(code, 2);
    assert!(err.contains("bad.json:2:"), "{err}");
    let g = write(dir.path(), "cut.json", "{\"sets\": [[1]\n");
    let (code, _, err) = call(&["verify", "--in", &g, "--sampler", "pm1"]);
    assert_eq!(code, 2);
    assert!(err.contains("cut.json:2:"), "{err}");
}

#[test]
fn ring_mismatch_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let g = k2(dir.path());
    let h = write(
        dir.path(),
        "h.json",
        "{\"ring\": \"gaussian\", \"h\": {\"[1]\": \"1\", \"[2]\": \"1\", \"[1,2]\": [1, 2, 3]}}",
    );
    let (code, _, err) = call(&["verify", "--in", &g, "--h", &h]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn verify_is_identical_across_thread_counts() {
    let dir = TempDir::new().unwrap();
    let g = write(
        dir.path(),
        "g.json",
        "{\"sets\": [[1],[2],[3],[4],[1,2],[1,3],[2,3],[3,4],[1,2,3]]}",
    );
    let outputs: Vec<Vec<u8>> = ["1", "4"]
        .iter()
        .map(|t| {
            let o = Command::new(env!("CARGO_BIN_EXE_energeia"))
                .args([
                    "--threads",
                    t,
                    "--seed",
                    "11",
                    "verify",
                    "--in",
                    &g,
                    "--sampler",
                    "u1_exact",
                ])
                .output()
                .unwrap();
            assert_eq!(
                o.status.code(),
                Some(0),
                "{}",
                String::from_utf8_lossy(&o.stderr)
            );
            o.stdout
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
}
