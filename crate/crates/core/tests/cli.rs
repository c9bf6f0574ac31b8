use std::process::Command;

use nilcomplex::classify::{corpus, AlgebraClass};
use nilcomplex::cli::{parse_any, parse_complex, print_complex, Input};
use nilcomplex::liealg::RealStructureEquations;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nilcomplex")).args(args).output().expect("spawn");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, out, err) = run(&all);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/report.schema.json")).unwrap();
    jsonschema::JSONSchema::compile(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(schema: &jsonschema::JSONSchema, v: &Value) {
    if let Err(errors) = schema.validate(v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:?}\n{v}");
    }
}

#[test]
fn classify_three_step_h12() {
    let (code, out, _) = run(&["classify", "--family", "three-step", "--rho", "1", "--B", "1+1i", "--c", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("h12"), "{out}");
}

#[test]
fn frolicher_json_behaviour() {
    let v = json(&["frolicher", "--family", "three-step", "--rho", "0", "--B", "1", "--c", "1/4"]);
    assert_eq!(v["behaviour"], "E1≇E2≇E3≅E∞");
    assert_eq!(v["degeneration_step"], 3);
    assert_eq!(v["frolicher"]["E2"][0][2], 3);
}

#[test]
fn metrics_balanced_boundary() {
    let (code, out, _) = run(&["metrics", "--family", "two-step", "--rho", "1", "--lambda", "1", "--D", "1/4"]);
    assert_eq!(code, 0);
    assert!(out.contains("balanced-exists: false"), "{out}");
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        vec!["classify", "--family", "three-step", "--B", "1+", "--c", "1"],
        vec!["classify", "--equations", "(0,0,0,12,23,14-3)"],
        vec!["classify", "--equations", "dw1=0; dw2=0; dw3=w1^w4"],
        vec!["classify", "--equations", "dw1=0; dw3=0"],
        vec!["metrics", "--family", "two-step", "--metric", "1,1,1"],
        vec!["sweep", "--deformation", "h4_balanced_loss", "--grid", "0:1"],
    ] {
        let (code, _, err) = run(&args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(err.starts_with("error:"), "{err}");
    }
}

#[test]
fn domain_errors_exit_three() {
    for args in [
        vec!["classify", "--equations", "dw1=0; dw2=0; dw3=w1b^w2b"],
        vec!["classify", "--family", "two-step", "--rho", "2"],
        vec!["classify", "--family", "two-step", "--lambda", "-1"],
        vec!["equiv", "--lhs", "0,1,i", "--rhs", "1,1,i"],
        vec!["metrics", "--family", "two-step", "--metric", "1,1,1,2,0,0"],
    ] {
        let (code, _, err) = run(&args);
        assert_eq!(code, 3, "{args:?}: {err}");
    }
}

#[test]
fn usage_and_help_codes() {
    assert_eq!(run(&["bogus"]).0, 1);
    assert_eq!(run(&["classify", "--family", "four-step"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
}

#[test]
fn json_reports_match_schema_and_text_tables() {
    let schema = schema();
    for (f, class) in corpus() {
        let eqs = print_complex(&f.equations().unwrap());
        let v = json(&["frolicher", "--equations", &eqs]);
        assert_valid(&schema, &v);
        assert_eq!(v["algebra_class"], class.name());
        let c = json(&["cohomology", "--equations", &eqs]);
        assert_valid(&schema, &c);
        assert_eq!(c["hodge"], v["frolicher"]["E1"], "{f}");
    }
    let m = json(&["metrics", "--family", "two-step", "--rho", "1", "--lambda", "1", "--D", "1/16", "--metric", "1,1,1,0,0,0"]);
    assert_valid(&schema, &m);
    assert_eq!(m["metrics"]["balanced_exists"], true);
    assert_valid(&schema, &json(&["classify", "--family", "non-nilpotent", "--eps", "1", "--sign", "-"]));

    // text tables print rows q = 3..0
    let (_, text, _) = run(&["cohomology", "--family", "two-step", "--rho", "1", "--lambda", "1", "--D", "0"]);
    let c = json(&["cohomology", "--family", "two-step", "--rho", "1", "--lambda", "1", "--D", "0"]);
    for q in 0..4 {
        let line = text.lines().find(|l| l.trim_start().starts_with(&format!("q={q} |"))).unwrap();
        let nums: Vec<u64> = line.split('|').nth(1).unwrap().split_whitespace().map(|x| x.parse().unwrap()).collect();
        let expect: Vec<u64> = (0..4).map(|p| c["hodge"][p][q].as_u64().unwrap()).collect();
        assert_eq!(nums, expect);
    }
}

#[test]
fn dsl_round_trip_on_corpus() {
    for (f, _) in corpus() {
        let eqs = f.equations().unwrap();
        let text = print_complex(&eqs);
        assert_eq!(parse_complex(&text).unwrap(), eqs, "{text}");
    }
}

#[test]
fn salamon_round_trip_on_all_classes() {
    for class in AlgebraClass::ALL {
        let real = RealStructureEquations::from_salamon(class.salamon()).unwrap();
        let printed = real.to_salamon().unwrap();
        assert_eq!(RealStructureEquations::from_salamon(&printed).unwrap(), real, "{printed}");
        assert_eq!(RealStructureEquations::from_salamon(&printed).unwrap().to_salamon().unwrap(), printed);
        assert!(matches!(parse_any(class.salamon()).unwrap(), Input::Real(_)));
    }
}

#[test]
fn dsl_examples() {
    let (_, out, _) = run(&["classify", "--equations", "dw1=0; dw2=0; dw3=w1^w2 + w1^w1b + w1^w2b"]);
    assert!(out.starts_with("algebra: h6"), "{out}");
    let (_, out, _) = run(&["classify", "--equations", "dw1=0; dw2=w1^w1b; dw3=w1^w2 + (4/1)*w1^w2b + (1/2)*w2^w1b"]);
    assert!(out.starts_with("algebra: h15"), "{out}");
    let (code, _, err) = run(&["classify", "--equations", "dw1=0; dw2=0; dw3=w1b^w2b"]);
    assert_eq!(code, 3);
    assert!(err.contains("dω^3") && err.contains("(0,2)"), "{err}");
}

#[test]
fn input_file_in_both_notations() {
    let dir = std::env::temp_dir().join(format!("nilcomplex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let salamon = dir.join("h19.txt");
    std::fs::write(&salamon, "(0,0,0,12,23,14-35)\n").unwrap();
    let v = json(&["classify", "--input", salamon.to_str().unwrap()]);
    assert_eq!(v["algebra_class"], "h19-");
    let dsl = dir.join("h4.txt");
    std::fs::write(&dsl, "dw1 = 0\ndw2 = 0\ndw3 = w1^w2 + w1^w1b + w1^w2b + w2^w2b\n").unwrap();
    let out = dir.join("out.json");
    let (code, _, _) = run(&["frolicher", "--input", dsl.to_str().unwrap(), "--format", "json", "--output", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["algebra_class"], "h4");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn equiv_sweep_and_semicont() {
    let v = json(&["equiv", "--lhs", "1,1,1/4", "--rhs", "1,1,1/4"]);
    assert_eq!(v["equivalent"], true);
    let v = json(&["equiv", "--lhs", "1,1,i", "--rhs", "1,1,2i"]);
    assert_eq!(v["equivalent"], false);

    let rows = json(&["sweep", "--deformation", "h4_balanced_loss", "--params", "0,1/2,1/2i,3/5,4/5"]);
    let bal: Vec<bool> = rows.as_array().unwrap().iter().map(|r| r["balanced_exists"].as_bool().unwrap()).collect();
    assert_eq!(bal, [false, true, true, true, true]);

    let (code, csv, _) = run(&["sweep", "--deformation", "h15_behaviours", "--grid", "-1:1:1/2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(csv.lines().count(), 6);

    let v = json(&["semicont", "--deformation", "h5_degeneration:2", "--center", "0", "--nearby", "1/4,1/8"]);
    assert!(!v["cells"].as_array().unwrap().is_empty());
}
