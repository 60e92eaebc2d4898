use std::path::PathBuf;
use std::process::Command;

use serde_json::{Map, Value};

use towercalc::format::{complex_to_value, map_to_value, to_text};
use towercalc::report::flat_pairs;
use towercalc_core::models::*;
use towercalc_core::ChainMap;

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn fixture(name: &str) -> String {
    fixture_dir().join(name).to_string_lossy().into_owned()
}

fn sectioning(inclusion: &ChainMap, section: &ChainMap) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("boundary_inclusion".into(), map_to_value(inclusion));
    m.insert("section".into(), map_to_value(section));
    m
}

fn expected_fixtures() -> Vec<(&'static str, Value)> {
    let cyl = cylinder_pair();
    let disk = disk_pair(3);
    let normal = |degree: i64| {
        let mut m = sectioning(&disk.inclusion, &basepoint_section(3));
        m.insert("alpha".into(), map_to_value(&disk_sphere_map(3, degree)));
        Value::Object(m)
    };
    vec![
        ("rp2.json", complex_to_value(&projective_plane())),
        ("sphere2.json", complex_to_value(&sphere(2))),
        ("cylinder_boundary.json", map_to_value(&cyl.inclusion)),
        ("cylinder_section.json", map_to_value(&cylinder_section(1))),
        (
            "cylinder_sectioning.json",
            Value::Object(sectioning(&cyl.inclusion, &cylinder_section(1))),
        ),
        (
            "cylinder_sectioning_degree2.json",
            Value::Object(sectioning(&cyl.inclusion, &cylinder_section(2))),
        ),
        (
            "disk3_sectioning.json",
            Value::Object(sectioning(&disk.inclusion, &basepoint_section(3))),
        ),
        ("disk3_normal_degree1.json", normal(1)),
        ("disk3_normal_degree2.json", normal(2)),
    ]
}

/// Set `UPDATE_FIXTURES=1` to rewrite the files from the models.
#[test]
fn fixtures_match_models() {
    let update = std::env::var_os("UPDATE_FIXTURES").is_some();
    for (name, value) in expected_fixtures() {
        let path = fixture_dir().join(name);
        let text = to_text(&value);
        if update {
            std::fs::write(&path, &text).unwrap();
        }
        assert_eq!(std::fs::read_to_string(&path).unwrap(), text, "{name}");
    }
}

fn tower_calc(args: &[&str], envs: &[(&str, &str)]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tower-calc"))
        .args(args)
        .envs(envs.iter().copied())
        .env_remove(towercalc::MAX_DEGREE_VAR)
        .envs(envs.iter().copied())
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = tower_calc(args, &[]);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn suite() -> Vec<Vec<String>> {
    let raw: Vec<Vec<&str>> = vec![
        vec!["homology", "@rp2.json"],
        vec!["homology", "@sphere2.json", "--suspend"],
        vec!["homology", "@sphere2.json", "--reduced"],
        vec!["homology", "@cylinder_boundary.json", "--relative"],
        vec!["cone", "@cylinder_section.json"],
        vec!["desusp-check", "@cylinder_sectioning.json"],
        vec!["desusp-check", "@cylinder_sectioning_degree2.json"],
        vec!["desusp-check", "@disk3_sectioning.json"],
        vec!["normal-invariant", "@disk3_normal_degree1.json", "--n", "3"],
        vec!["normal-invariant", "@disk3_normal_degree2.json", "--n", "3"],
        vec!["lyndon", "--g", "2", "--len", "5"],
        vec!["witt", "--g", "3", "--len", "40"],
        vec!["pi-wedge", "--dims", "3,3", "--q-max", "9"],
        vec!["pi-wedge", "--dims", "2,3", "--q-max", "12", "--loop-t", "2"],
        vec!["tower", "--n", "9", "--k", "4", "--j", "2", "phi"],
        vec!["tower", "--n", "9", "--k", "4", "--j", "3", "stage"],
        vec!["tower", "--n", "9", "--k", "4", "--j", "2", "converge"],
        vec!["tower", "--n", "9", "--k", "4", "--j", "2", "codim", "--boundary-conn", "2", "--cw-dim", "4"],
        vec!["tower", "--n", "9", "--k", "6", "--j", "1", "all"],
        vec!["layer", "--n", "4", "--j", "3", "--points", "2"],
        vec!["layer", "--n", "9", "--j", "3", "--betti", "0:1,2:1", "--q-min", "-5", "--q-max", "20"],
        vec!["obstruction", "--n", "9", "--j", "3", "--betti", "0:1,2:1"],
        vec!["compare", "--n", "10", "--k", "3", "--j", "2"],
        vec!["compare", "--n", "10", "--k", "3", "--j", "1"],
        vec!["disk-links", "--n", "4", "--t", "3", "pi0"],
        vec!["disk-links", "--n", "4", "--t", "3", "pi1"],
        vec!["disk-links", "--n", "4", "--t", "2", "ses", "--m", "1"],
        vec!["disk-links", "--n", "5", "--t", "2", "ses", "--m", "1"],
    ];
    raw.into_iter()
        .map(|args| {
            args.into_iter()
                .map(|a| match a.strip_prefix('@') {
                    Some(name) => fixture(name),
                    None => a.to_string(),
                })
                .collect()
        })
        .collect()
}

#[test]
fn quoted_examples() {
    assert_eq!(ok(&["tower", "--n", "9", "--k", "4", "--j", "2", "phi"]), "2\n");
    assert_eq!(ok(&["witt", "--g", "2", "--len", "6"]), "9\n");
    assert_eq!(ok(&["disk-links", "--n", "4", "--t", "3", "pi0"]), "8\n");
}

#[test]
fn structured_output_round_trips() {
    for args in suite() {
        let mut full = vec!["--format".to_string(), "structured".to_string()];
        full.extend(args.iter().cloned());
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        let (_, out, _) = tower_calc(&refs, &[]);
        let v: Value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}"));
        assert_eq!(to_text(&v), out, "{args:?}");
    }
}

#[test]
fn text_and_structured_agree() {
    for args in suite() {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code_t, text, _) = tower_calc(&refs, &[]);
        let mut full = vec!["--format", "structured"];
        full.extend(refs.iter().copied());
        let (code_s, json, _) = tower_calc(&full, &[]);
        assert_eq!(code_t, code_s, "{args:?}");
        let v: Value = serde_json::from_str(&json).unwrap();
        let pairs = flat_pairs(&v);
        if pairs.len() == 1 && pairs[0].0.is_empty() {
            assert_eq!(text, format!("{}\n", pairs[0].1), "{args:?}");
            continue;
        }
        let from_text: Vec<(String, String)> = text
            .lines()
            .map(|l| {
                let (k, v) = l.split_once(": ").unwrap_or_else(|| panic!("{args:?}: {l}"));
                (k.to_string(), v.to_string())
            })
            .collect();
        assert_eq!(from_text, pairs, "{args:?}");
    }
}

#[test]
fn chain_results() {
    let out = ok(&["homology", &fixture("rp2.json")]);
    assert!(out.contains("degrees.1.group: Z/2\n"), "{out}");
    let out = ok(&["homology", &fixture("cylinder_boundary.json"), "--relative"]);
    assert!(out.contains("degrees.1.group: Z\n") && out.contains("degrees.2.group: Z\n"), "{out}");
    assert!(ok(&["desusp-check", &fixture("cylinder_sectioning.json")]).starts_with("verdict: PASS\n"));
    assert!(ok(&["desusp-check", &fixture("disk3_sectioning.json")]).starts_with("verdict: PASS\n"));
    assert!(ok(&["desusp-check", &fixture("cylinder_sectioning_degree2.json")])
        .starts_with("verdict: MISMATCH\n"));
    assert_eq!(
        ok(&["normal-invariant", &fixture("disk3_normal_degree1.json"), "--n", "3"]),
        "verdict: IS_NORMAL_INVARIANT\ndegree: 1\n"
    );
    assert_eq!(
        ok(&["normal-invariant", &fixture("disk3_normal_degree2.json"), "--n", "3"]),
        "verdict: NOT\ndegree: 2\n"
    );
}

#[test]
fn cone_output_is_a_complex_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = ok(&["--format", "structured", "cone", &fixture("cylinder_section.json")]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let path = dir.path().join("cone.json");
    std::fs::write(&path, to_text(&v["complex"])).unwrap();
    let h = ok(&["--format", "structured", "homology", path.to_str().unwrap()]);
    let h: Value = serde_json::from_str(&h).unwrap();
    assert_eq!(h, v["homology"]);
}

#[test]
fn input_errors_name_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"ranks": {"0": 1, "1": 1}, "boundaries": {"1": [[1, 2]]}}"#).unwrap();
    let (code, out, _) = tower_calc(&["homology", path.to_str().unwrap()], &[]);
    assert_eq!(code, 1);
    assert!(out.contains("MALFORMED_INPUT") && out.contains("complex.boundaries.1[0]"), "{out}");
    std::fs::write(&path, "{").unwrap();
    assert_eq!(tower_calc(&["homology", path.to_str().unwrap()], &[]).0, 1);
    let missing = dir.path().join("missing.json");
    let (code, out, _) = tower_calc(&["homology", missing.to_str().unwrap()], &[]);
    assert_eq!(code, 1);
    assert!(out.contains("IO_ERROR"));
}

#[test]
fn usage_errors_exit_two() {
    let (code, out, err) = tower_calc(&["nonsense"], &[]);
    assert_eq!(code, 2);
    assert!(out.is_empty() && !err.is_empty());
    assert_eq!(tower_calc(&["tower", "--n", "9", "--k", "4", "phi"], &[]).0, 2);
    assert_eq!(tower_calc(&["--format", "xml", "witt", "--g", "2", "--len", "3"], &[]).0, 2);
    assert_eq!(
        tower_calc(&["pi-wedge", "--dims", "3", "--q-max", "9"], &[("TOWER_CALC_MAX_DEGREE", "abc")]).0,
        2
    );
}

#[test]
fn degree_cap() {
    let (code, out, _) = tower_calc(&["pi-wedge", "--dims", "3,3", "--q-max", "65"], &[]);
    assert_eq!(code, 1);
    assert!(out.contains("DEGREE_CAP_EXCEEDED"));
    let (code, out, _) =
        tower_calc(&["pi-wedge", "--dims", "3,3", "--q-max", "9"], &[("TOWER_CALC_MAX_DEGREE", "8")]);
    assert_eq!(code, 1);
    assert!(out.contains("DEGREE_CAP_EXCEEDED"));
    let (code, _, _) =
        tower_calc(&["pi-wedge", "--dims", "3,3", "--q-max", "70"], &[("TOWER_CALC_MAX_DEGREE", "80")]);
    assert_eq!(code, 0);
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        vec!["disk-links", "--n", "5", "--t", "2", "ses", "--m", "1"],
        vec!["tower", "--n", "5", "--k", "3", "--j", "2", "phi"],
        vec!["pi-wedge", "--dims", "1,3", "--q-max", "9"],
        vec!["layer", "--n", "9", "--j", "1", "--points", "2"],
    ] {
        let (code, out, err) = tower_calc(&args, &[]);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.starts_with("error.code: "), "{args:?}: {out}");
        assert!(err.starts_with("error: "));
    }
}
