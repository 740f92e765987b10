use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spintor"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn classify(name: &str) -> Value {
    let o = run(&["classify", "-i", fixture(name).to_str().unwrap()]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn classify_nilmanifold() {
    let v = classify("nilmanifold.json");
    assert_eq!(
        v["class"],
        serde_json::json!(["chi2", "chi2bar", "chi3", "chi4", "chi5"])
    );
    assert_eq!(v["class_label"], "χ₂₂̄₃₄₅");
    assert_eq!(v["dirac_zero"], true);
    assert_eq!(v["eta"][0], "-1/2");
    assert_eq!(v["s"][1][0], "1/2");
    assert_eq!(v["delta_omega"][0], "1");
    assert_eq!(v["characteristic"]["exists"], false);
    assert_eq!(v["lambda"], "0");
}

#[test]
fn classify_abelian_is_trivial() {
    let v = classify("abelian.json");
    assert_eq!(v["class"], serde_json::json!([]));
    assert_eq!(v["dirac_zero"], true);
    for key in ["eta", "delta_omega", "lee_form", "dirac"] {
        assert!(v[key].as_array().unwrap().iter().all(|x| x == "0"), "{key}");
    }
    assert_eq!(v["characteristic"]["exists"], true);
    assert_eq!(v["characteristic"]["torsion"], serde_json::json!({}));
}

#[test]
fn classify_nearly_parallel_g2() {
    let v = classify("nearly_parallel_g2.json");
    assert_eq!(v["dim"], 7);
    assert_eq!(v["class"], serde_json::json!(["W1"]));
    assert_eq!(v["lambda"], "1/2");
    assert_eq!(v["characteristic"]["exists"], true);
}

#[test]
fn classify_output_is_byte_stable_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("out{k}.json"));
        let o = run(&[
            "classify",
            "-i",
            fixture("nilmanifold.json").to_str().unwrap(),
            "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        outputs.push(std::fs::read(path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let text = String::from_utf8(outputs[0].clone()).unwrap();
    let keys: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    assert_eq!(keys, sorted);
}

#[test]
fn classify_float_mode() {
    let o = run(&[
        "classify",
        "-i",
        fixture("nilmanifold.json").to_str().unwrap(),
        "--float",
        "--eps",
        "1e-9",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["arithmetic"], "float");
    assert_eq!(v["eta"][0], -0.5);
    assert_eq!(
        v["class"],
        serde_json::json!(["chi2", "chi2bar", "chi3", "chi4", "chi5"])
    );
}

#[test]
fn classify_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("syntax.json", "{"),
        (
            "jacobi.json",
            r#"{"dim":6,"d":{"1":[{"idx":[2,3],"coef":"1"}],"2":[{"idx":[4,5],"coef":"1"}]},"spinor":["1","0","0","0","0","0","0","0"]}"#,
        ),
        (
            "zero.json",
            r#"{"dim":6,"d":{},"spinor":["0","0","0","0","0","0","0","0"]}"#,
        ),
        (
            "dim.json",
            r#"{"dim":5,"d":{},"spinor":["1","0","0","0","0","0","0","0"]}"#,
        ),
    ];
    for (name, body) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        let o = run(&["classify", "-i", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(
        run(&["classify", "-i", "/nonexistent/x.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["classify"]).status.code(), Some(2));
}

#[test]
fn cone_sine_is_w1_and_case_c_is_parallel() {
    let o = run(&["cone", "-i", fixture("sine_cone.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["constant_class"], "W1");
    let samples = v["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 50);
    for s in samples {
        let rows = s["sbar"].as_array().unwrap();
        for (r, row) in rows.iter().enumerate() {
            for (c, x) in row.as_array().unwrap().iter().enumerate() {
                let want = if r == c { 0.5 } else { 0.0 };
                assert!((x.as_f64().unwrap() - want).abs() < 1e-9);
            }
        }
    }

    let o = run(&["cone", "-i", fixture("case_c_cone.json").to_str().unwrap()]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["constant_class"], "parallel");
}

#[test]
fn cone_rejects_malformed_specs() {
    let dir = tempfile::tempdir().unwrap();
    let good: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("case_c_cone.json")).unwrap())
            .unwrap();
    let mut cases = Vec::new();
    let mut v = good.clone();
    v["f"] = serde_json::json!({"family": "cosh"});
    cases.push(v);
    let mut v = good.clone();
    v["samples"] = serde_json::json!([-1.0]);
    cases.push(v);
    let mut v = good.clone();
    v.as_object_mut().unwrap().remove("s");
    cases.push(v);
    let mut v = good;
    v["samples"] = serde_json::json!([]);
    cases.push(v);
    for (k, v) in cases.iter().enumerate() {
        let path = dir.path().join(format!("bad{k}.json"));
        std::fs::write(&path, v.to_string()).unwrap();
        assert_eq!(
            run(&["cone", "-i", path.to_str().unwrap()]).status.code(),
            Some(2),
            "case {k}"
        );
    }
}

#[test]
fn tables_print_the_stored_grids() {
    let su3 = stdout(&run(&["tables", "--su3"]));
    assert_eq!(su3.lines().count(), 21);
    assert_eq!(stdout(&run(&["tables", "--g2"])).lines().count(), 14);
    let embed = stdout(&run(&["tables", "--embed"]));
    assert_eq!(embed.lines().count(), 5);
    assert!(embed.lines().nth(1).unwrap().starts_with("0     W₁₃"));
    let restrict = stdout(&run(&["tables", "--restrict"]));
    assert!(restrict.contains("[χ₁̄₂̄₄₅]"));
    assert_eq!(run(&["tables"]).status.code(), Some(2));
    assert_eq!(run(&["tables", "--su3", "--g2"]).status.code(), Some(2));
}

#[test]
fn verify_single_suite_passes() {
    let o = run(&["verify", "--suite", "cone"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text
        .lines()
        .filter(|l| l.starts_with("PASS"))
        .all(|l| l.starts_with("PASS cone:")));
    assert!(text.contains("PASS cone:sine-cone"));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_reports_a_corrupted_fixture() {
    let dir = tempfile::tempdir().unwrap();
    for entry in std::fs::read_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")).unwrap()
    {
        let p = entry.unwrap().path();
        std::fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
    }
    let arg = dir.path().to_str().unwrap();
    assert_eq!(
        run(&["verify", "--suite", "example-u8", "--fixtures", arg])
            .status
            .code(),
        Some(0)
    );

    let golden = dir.path().join("psi_plus_u8.json");
    let text = std::fs::read_to_string(&golden)
        .unwrap()
        .replace("\"1,4,6\": \"-1\"", "\"1,4,6\": \"1\"");
    std::fs::write(&golden, text).unwrap();
    let o = run(&["verify", "--suite", "example-u8", "--fixtures", arg]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL example-u8:psi-plus"));

    let expected = dir.path().join("nilmanifold_expected.json");
    let text = std::fs::read_to_string(&expected)
        .unwrap()
        .replace("\"-1/2\"", "\"1/2\"");
    std::fs::write(&expected, text).unwrap();
    let o = run(&["verify", "--suite", "nilmanifold-anchor", "--fixtures", arg]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL nilmanifold-anchor:eta"));
}
