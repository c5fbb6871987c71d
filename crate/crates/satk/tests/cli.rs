use std::io::Write;
use std::process::Command;

use serde_json::{json, Value};

struct Run {
    code: i32,
    stdout: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn satk_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_satk"));
    cmd.args(args).env_remove("SATK_WEYL_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
    }
}

fn satk(args: &[&str]) -> Run {
    satk_env(args, &[])
}

fn ok(args: &[&str]) -> Value {
    let r = satk(args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stdout);
    r.json()
}

fn error_kind(r: &Run) -> String {
    assert_eq!(r.stdout.lines().count(), 1, "{}", r.stdout);
    r.json()["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn strata_example() {
    let v = ok(&["strata", "--group", "GL2", "--mu", "1,-1"]);
    assert_eq!(v["strata"], json!([[1, -1], [0, 0]]));
}

#[test]
fn dim_example() {
    assert_eq!(ok(&["dim", "--group", "GL2", "--mu", "1,0"]), json!(1));
    assert_eq!(ok(&["dim", "--group", "GL2", "--mu", "1,-1"]), json!(2));
}

#[test]
fn hecke_mul_example() {
    for via in ["satake", "k0"] {
        let v = ok(&[
            "hecke", "mul", "--group", "GL2", "--p", "2", "--lhs", "1,0", "--rhs", "1,0", "--via",
            via,
        ]);
        assert_eq!(
            v,
            json!({"p": 2, "terms": [
                {"coweight": [1, 1], "coeff": 1},
                {"coweight": [2, 0], "coeff": 1},
            ]})
        );
    }
}

#[test]
fn report_schema() {
    let v = ok(&["report", "--group", "GL2", "--mu", "1,-1"]);
    assert_eq!(
        v,
        json!({
            "mu": [1, -1],
            "dim": 2,
            "strata": [
                {"lambda": [1, -1], "dim": 2, "codim": 0},
                {"lambda": [0, 0], "dim": 0, "codim": 2},
            ],
            "component": [0, 0],
        })
    );
}

#[test]
fn satake_maps() {
    let s = ok(&["satake", "--group", "GL2", "--p", "3", "--elem", "1,-1"]);
    assert_eq!(
        s,
        json!({"p": 3, "terms": [
            {"coweight": [-1, 1], "coeff": 1},
            {"coweight": [0, 0], "coeff": 2},
        ]})
    );
    let back = ok(&["satake-inv", "--group", "GL2", "--elem", &s.to_string()]);
    assert_eq!(
        back,
        json!({"p": 3, "terms": [{"coweight": [1, -1], "coeff": 1}]})
    );
    let sl2 = ok(&["satake-inv", "--group", "SL2", "--p", "5", "--elem", "-2"]);
    assert_eq!(sl2["terms"].as_array().unwrap().len(), 3);
    let t = ok(&["tmap", "--group", "GL2", "--p", "3", "--elem", "1,-1"]);
    assert_eq!(
        t["terms"],
        json!([{"coweight": [0, 0], "coeff": 1}, {"coweight": [1, -1], "coeff": 1}])
    );
    let ti = ok(&[
        "tmap",
        "--group",
        "GL2",
        "--p",
        "3",
        "--elem",
        "1,-1",
        "--inverse",
    ]);
    assert_eq!(
        ti["terms"],
        json!([{"coweight": [0, 0], "coeff": 2}, {"coweight": [1, -1], "coeff": 1}])
    );
}

#[test]
fn k0_mul_adds_coweights() {
    let v = ok(&[
        "k0", "mul", "--group", "GL2", "--p", "5", "--lhs", "1,0", "--rhs", "1,-1",
    ]);
    assert_eq!(
        v,
        json!({"p": 5, "terms": [{"coweight": [2, -1], "coeff": 1}]})
    );
}

#[test]
fn mobius_and_ext1() {
    let m = ok(&["mobius", "--group", "SL2", "--nu", "1", "--lambda", "2"]);
    assert_eq!(m["value"], json!(-1));
    let m = ok(&[
        "mobius",
        "--group",
        "GL2",
        "--nu",
        "-2,2",
        "--lambda",
        "0,0",
        "--cone",
        "anti-dominant",
    ]);
    assert_eq!(m["value"], json!(0));
    let e = ok(&["ext1", "--group", "GL2", "--mu", "0,0", "--lambda", "1,-1"]);
    assert_eq!(e["case"], "not-guaranteed");
    assert_eq!(e["vanishing_guaranteed"], false);
    let e = ok(&["ext1", "--group", "GL2", "--mu", "1,-1", "--lambda", "0,0"]);
    assert_eq!(e["case"], "greater");
}

#[test]
fn monoid_commands() {
    assert_eq!(
        ok(&["monoid", "is-group", "--group", "GL1"])["is_group"],
        true
    );
    assert_eq!(
        ok(&["monoid", "is-group", "--group", "GL2"])["is_group"],
        false
    );
    let r = ok(&[
        "monoid", "repr", "--group", "SL2", "--set", "2;1;0", "--close", "--p", "3", "--elem", "1",
    ]);
    assert_eq!(r["basis"], json!([[2], [1], [0]]));
    assert_eq!(r["matrix"], json!([[0, 1, 0], [0, 0, 1], [0, 0, 0]]));
    assert_eq!(r["strictly_upper_triangular"], true);
    assert_eq!(r["nilpotency_index"], 3);
    let bad = satk(&[
        "monoid", "repr", "--group", "SL2", "--set", "2", "--p", "3", "--elem", "1",
    ]);
    assert_eq!(bad.code, 1);
    assert_eq!(error_kind(&bad), "domain");
}

#[test]
fn oracle_verify_report() {
    let r = satk(&[
        "oracle",
        "verify",
        "--n",
        "2",
        "--q",
        "3",
        "--max-entry",
        "2",
    ]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = r.json();
    assert_eq!(v["group"], "GL");
    assert_eq!(v["n"], 2);
    assert_eq!(v["q"], 3);
    assert_eq!(v["p"], 3);
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 36);
    assert!(cases.iter().all(|c| c["match"] == true));
    assert!(cases
        .iter()
        .all(|c| c["product_oracle"] == c["product_formula"]));
    // deterministic regardless of thread scheduling
    let again = satk(&[
        "oracle",
        "verify",
        "--n",
        "2",
        "--q",
        "3",
        "--max-entry",
        "2",
    ]);
    assert_eq!(again.stdout, r.stdout);
}

#[test]
fn oracle_verify_errors() {
    let caps = satk(&[
        "oracle",
        "verify",
        "--n",
        "2",
        "--q",
        "7",
        "--max-entry",
        "1",
    ]);
    assert_eq!((caps.code, error_kind(&caps)), (1, "domain".into()));
    let deep = satk(&[
        "oracle",
        "verify",
        "--n",
        "2",
        "--q",
        "2",
        "--max-entry",
        "5",
    ]);
    assert_eq!(deep.code, 1);
    let wrong_p = satk(&[
        "oracle",
        "verify",
        "--n",
        "2",
        "--q",
        "4",
        "--p",
        "3",
        "--max-entry",
        "1",
    ]);
    assert_eq!(wrong_p.code, 1);
    let raised = satk(&[
        "oracle",
        "verify",
        "--n",
        "2",
        "--q",
        "8",
        "--max-q",
        "8",
        "--max-entry",
        "1",
    ]);
    assert_eq!(raised.code, 0, "{}", raised.stdout);
}

#[test]
fn exit_codes() {
    let r = satk(&["strata", "--group", "GL2", "--mu", "0,1"]);
    assert_eq!((r.code, error_kind(&r)), (1, "domain".into()));
    let r = satk(&["strata", "--group", "GL2", "--mu", "a,b"]);
    assert_eq!((r.code, error_kind(&r)), (2, "usage".into()));
    let r = satk(&[
        "hecke", "mul", "--group", "GL2", "--p", "4", "--lhs", "1,0", "--rhs", "1,0",
    ]);
    assert_eq!((r.code, error_kind(&r)), (1, "domain".into()));
    let r = satk(&["strata", "--group", "XY9", "--mu", "0"]);
    assert_eq!((r.code, error_kind(&r)), (2, "usage".into()));
    let r = satk(&["frobnicate"]);
    assert_eq!((r.code, error_kind(&r)), (2, "usage".into()));
    let r = satk(&[
        "hecke", "mul", "--group", "GL2", "--lhs", "1,0", "--rhs", "1,0",
    ]);
    assert_eq!((r.code, error_kind(&r)), (2, "usage".into()));
    let r = satk(&["dim", "--group", "GL2", "--mu", "1,0,0"]);
    assert_eq!(r.code, 1);
}

#[test]
fn output_is_byte_identical() {
    let args = [
        "hecke", "mul", "--group", "Sp4", "--p", "5", "--lhs", "2,1", "--rhs", "1,1",
    ];
    let a = satk(&args);
    assert_eq!(a.code, 0);
    for _ in 0..3 {
        assert_eq!(satk(&args).stdout, a.stdout);
    }
}

#[test]
fn datum_files_and_json_arguments() {
    let group = ok(&["group", "--group", "Sp4"]);
    assert_eq!(
        group,
        json!({
            "rank": 2,
            "simple_roots": [[1, -1], [0, 2]],
            "simple_coroots": [[1, -1], [0, 1]],
            "label": "Sp4",
        })
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sp4.json");
    std::fs::File::create(&path)
        .unwrap()
        .write_all(group.to_string().as_bytes())
        .unwrap();
    let path = path.to_str().unwrap();
    let from_file = ok(&["strata", "--datum", path, "--mu", "2,0"]);
    let from_name = ok(&["strata", "--group", "Sp4", "--mu", "2,0"]);
    assert_eq!(from_file, from_name);

    let mu = dir.path().join("mu.json");
    std::fs::write(&mu, "[2, 0]").unwrap();
    let at = format!("@{}", mu.to_str().unwrap());
    assert_eq!(ok(&["strata", "--group", "Sp4", "--mu", &at]), from_name);
    assert_eq!(
        ok(&["strata", "--group", "Sp4", "--mu", "[2,0]"]),
        from_name
    );

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"rank": 1, "simple_roots": [[1]], "simple_coroots": [[1]]}"#,
    )
    .unwrap();
    let r = satk(&["group", "--datum", bad.to_str().unwrap()]);
    assert_eq!((r.code, error_kind(&r)), (1, "domain".into()));
    let r = satk(&["group", "--datum", "/nonexistent/datum.json"]);
    assert_eq!(r.code, 2);
    let r = satk(&["group"]);
    assert_eq!(r.code, 2);
}

#[test]
fn weyl_cap_from_environment() {
    let r = satk_env(&["group", "--group", "SC-G2"], &[("SATK_WEYL_CAP", "6")]);
    assert_eq!((r.code, error_kind(&r)), (1, "domain".into()));
    let r = satk_env(&["group", "--group", "SC-G2"], &[("SATK_WEYL_CAP", "12")]);
    assert_eq!(r.code, 0);
    let r = satk_env(&["group", "--group", "SC-G2"], &[("SATK_WEYL_CAP", "many")]);
    assert_eq!(r.code, 2);
}

#[test]
fn help_exits_cleanly() {
    let r = satk(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("oracle"));
}
