use std::path::PathBuf;
use std::process::{Command, Output};

use nnpoly::{NNPoly, ZPoly};
use serde_json::Value;

fn nnpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nnpoly"))
        .args(args)
        .env_remove("NNPOLY_OUTPUT")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--output", "json"];
    full.extend_from_slice(args);
    let out = nnpoly(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn text(args: &[&str]) -> String {
    let out = nnpoly(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

/// Every string under a polynomial-valued key must parse back to the same text.
fn assert_polys_roundtrip(v: &Value, key: Option<&str>) {
    const POLY_KEYS: &[&str] = &[
        "poly",
        "f",
        "g",
        "h",
        "z",
        "lambda",
        "cofactor",
        "product",
        "result",
        "num",
        "den",
        "atoms",
        "products",
        "factorizations",
        "factors",
        "divisors",
        "pairs",
        "covers",
        "chains",
        "ordered_factorizations",
        "generators",
    ];
    match v {
        Value::String(s) if key.is_some_and(|k| POLY_KEYS.contains(&k)) => {
            let z: ZPoly = s
                .parse()
                .unwrap_or_else(|e| panic!("{s:?} under {key:?}: {e}"));
            assert_eq!(z.to_string(), *s);
            if z.is_nonneg().unwrap() {
                assert_eq!(s.parse::<NNPoly>().unwrap().to_string(), *s);
            }
        }
        Value::Array(items) => items.iter().for_each(|i| assert_polys_roundtrip(i, key)),
        Value::Object(map) => {
            for (k, val) in map {
                let inherited = if POLY_KEYS.contains(&k.as_str()) {
                    Some(k.as_str())
                } else {
                    None
                };
                assert_polys_roundtrip(val, inherited);
            }
        }
        _ => {}
    }
}

#[test]
fn factor_lists_both_factorizations() {
    let v = json(&["factor", "x^5+x^4+x^3+x^2+x+1"]);
    let z = v["factorizations"].as_array().unwrap();
    assert_eq!(z.len(), 2);
    let sets: Vec<Vec<&str>> = z
        .iter()
        .map(|f| {
            f.as_array()
                .unwrap()
                .iter()
                .map(|s| s.as_str().unwrap())
                .collect()
        })
        .collect();
    assert!(sets.contains(&vec!["x^4+x^2+1", "x+1"]));
    assert!(sets.contains(&vec!["x^3+1", "x^2+x+1"]));
    assert_eq!(v["lengths"], serde_json::json!([2]));
    assert_eq!(v["elasticity"], serde_json::json!({"num": "1", "den": "1"}));
}

#[test]
fn g_family_invariants() {
    let v = json(&["factor", "x^6+5x^5+8x^4+5x^3+5x^2+8x+4"]);
    assert_eq!(v["factorizations"].as_array().unwrap().len(), 2);
    assert_eq!(v["lengths"], serde_json::json!([3, 4]));
    assert_eq!(v["catenary_degree"], 3);
}

#[test]
fn decode_and_eta() {
    assert_eq!(text(&["decode", "11", "18"]), "x+7");
    assert_eq!(text(&["eta", "11", "234"]), "2");
    let v = json(&["encode", "x^2+10x+3"]);
    assert_eq!(
        (v["a"].as_str(), v["b"].as_str()),
        (Some("11"), Some("234"))
    );
    let v = json(&["encode", "x^2+10x+3", "--base", "20"]);
    assert_eq!(v["b"], "603");
}

#[test]
fn prime_reports_witness() {
    let v = json(&["prime", "x+1"]);
    assert_eq!(v["prime"], false);
    assert_eq!(v["witness"]["kind"], "non_primality");
    assert_eq!(v["witness"]["verified"], true);
    assert_eq!(json(&["prime", "x"])["prime"], true);
    assert_eq!(json(&["prime", "6"])["witness"]["kind"], "factorization");
    assert_eq!(json(&["atom", "x^2+10x+3"])["atom"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(nnpoly(&["factor", "x^^2"]).status.code(), Some(2));
    assert_eq!(nnpoly(&["decode", "11", "-3"]).status.code(), Some(2));
    assert_eq!(nnpoly(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(nnpoly(&["factor", "1"]).status.code(), Some(1));
    let out = nnpoly(&["psi", "x^40+1"]);
    assert_eq!(
        out.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn config_file_and_environment() {
    let dir = std::env::temp_dir().join(format!("nnpoly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("config.json");
    std::fs::write(&cfg, r#"{"a_lambda_k_max": 1, "output": "json"}"#).unwrap();
    let cfg = cfg.to_str().unwrap();
    let out = nnpoly(&["--config", cfg, "a-lambda", "x^2-2x+2", "x+1"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["membership"]["status"], "unknown");
    let out = Command::new(env!("CARGO_BIN_EXE_nnpoly"))
        .args(["eta", "2", "63"])
        .env("NNPOLY_OUTPUT", "json")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["eta"], 5);
    let out = Command::new(env!("CARGO_BIN_EXE_nnpoly"))
        .args(["eta", "2", "63"])
        .env("NNPOLY_ROOT_CLOSURE_N_MAX", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn json_polynomials_reparse() {
    let commands: &[&[&str]] = &[
        &["factor", "x^6+2x^5+2x^4+2x^3+2x^2+2x+1"],
        &["atom", "4x^3+4"],
        &["prime", "x^2+x+1"],
        &["decode", "11", "234"],
        &["divisors", "x^5+x^4+x^3+x^2+x+1"],
        &["chains", "x^4+x^3+x+1", "--list"],
        &["lemma3", "x^2+x+1", "x+3"],
        &["psi", "x^4+x^3+x+1"],
        &["psi", "12x^2+24x+12"],
        &["valuations", "12x^2+5x+18"],
        &["vlambda", "x^4+x^3+x+1", "x+1"],
        &["valuations", "4x^2+3x+18"],
        &["in-e", "x^2-x+1"],
        &["a-lambda", "x^2-x+1", "x+1"],
        &["root-closure", "x^4+2x^3-x^2+4x+2", "1"],
        &["weyl", "apply", "x^2*z^2+z", "x^4-3x"],
        &["weyl", "mul", "z^3", "x^2"],
        &["prop-m", "x^3-x+1"],
        &["prop-m", "-x^3+x"],
        &["in-e", "-x^2+x"],
        &["root-closure", "-x^2+1", "-x+1"],
        &["weyl", "apply", "-z", "-x^2"],
        &["delta-map", "x^3-x+1"],
        &["ideal", "classify", "2", "x", "3"],
        &["ideal", "member", "x^2+3x+2", "x+1", "x+3"],
        &["ideal", "family", "2x^2+1", "lead_div_p:2"],
    ];
    for args in commands {
        assert_polys_roundtrip(&json(args), None);
    }
    let v = json(&["weyl", "mul", "z^3", "x^2"]);
    let again = json(&["weyl", "mul", v["normal_form"].as_str().unwrap(), "1"]);
    assert_eq!(again["normal_form"], v["normal_form"]);
}

#[test]
fn posets_from_files() {
    let dir = std::env::temp_dir().join(format!("nnpoly-posets-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, poly: &str| -> PathBuf {
        let out = nnpoly(&["--output", "json", "poset", "from-poly", poly]);
        assert!(out.status.success());
        let path = dir.join(name);
        std::fs::write(&path, &out.stdout).unwrap();
        path
    };
    let a = write("a.json", "x^3+x^2+x^4");
    let b = write("b.json", "x^4+x^3+x^2");
    let c = write("c.json", "x^4+2x^2");
    let (a, b, c) = (
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        c.to_str().unwrap(),
    );
    assert_eq!(text(&["poset", "iso", a, b]), "true");
    assert_eq!(text(&["poset", "iso", a, c]), "false");
    let l3 = write("l3.json", "x^3");
    assert_eq!(text(&["poset", "aut", l3.to_str().unwrap()]), "6");
    std::fs::write(
        dir.join("bad.json"),
        r#"{"size": 2, "covers": [[0,1],[1,0]]}"#,
    )
    .unwrap();
    let bad = dir.join("bad.json");
    assert_eq!(
        nnpoly(&["poset", "aut", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn demo_and_corpus() {
    let v = json(&["poset", "ks-demo"]);
    assert_eq!(v["products_isomorphic"], true);
    assert_eq!(v["left_product_size"], 63);
    let first = nnpoly(&["--output", "json", "corpus", "run"]);
    let second = nnpoly(&["--output", "json", "corpus", "run"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["passed"], true);
}
