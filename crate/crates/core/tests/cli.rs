use std::path::PathBuf;
use std::process::Command;

use omega_primality::cli::{self, exit_code};
use omega_primality::Error;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn omega(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("omega").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = omega(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn element_omega_text() {
    let (code, out, _) = omega(&["omega-elem", "--numerical", "115,212,333,571", "--value", "10000"]);
    assert_eq!(code, 0);
    assert!(out.contains("omega: 109"), "{out}");
    assert!(out.contains("minimal elements: 203"), "{out}");
    assert!(out.contains("The expression of the element is ("), "{out}");
}

#[test]
fn semigroup_omega_text() {
    let (code, out, _) = omega(&["omega-sg", "--numerical", "10,11,12,13,14,15,16,17,18,19"]);
    assert_eq!(code, 0);
    assert!(out.contains("per generator: (2,3,3,3,3,3,3,3,3,3)"), "{out}");
    assert!(out.contains("omega: 3"), "{out}");
}

#[test]
fn asymptotic_of_torsion_presentation() {
    let (code, out, _) = omega(&["asymptotic-sg", "--twogen", "4,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("asymptotic omega: 2"), "{out}");

    let v = json(&[
        "asymptotic-elem",
        "--twogen",
        "7,5",
        "--expression",
        "6,7",
        "--json",
    ]);
    assert_eq!(v["value"], "79/5");
}

#[test]
fn json_output_has_the_documented_fields() {
    let v = json(&["omega-elem", "--twogen", "7,5", "--expression", "6,7", "--json"]);
    assert_eq!(v["value"], 20);
    assert_eq!(v["method"], "two-gen-closed");
    assert!(v["elapsed_ms"].is_number());
    assert_eq!(v["witnesses"], serde_json::json!([[20, 0]]));

    let v = json(&["minimals", "--numerical", "3,5,7", "--value", "12", "--json"]);
    let witnesses = v["witnesses"].as_array().unwrap();
    let mut sorted = witnesses.clone();
    sorted.sort_by_key(|w| w.to_string());
    assert_eq!(witnesses, &sorted);
    assert_eq!(
        v["minimals"].as_array().unwrap().len(),
        v["minimals_count"].as_u64().unwrap() as usize
    );

    // re-serializing and parsing again gives the same document
    let again: Value = serde_json::from_str(&v.to_string()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn semigroup_json_lists_generators() {
    let v = json(&["omega-sg", "--numerical", "115,212,333,571", "--json"]);
    assert_eq!(v["value"], 36);
    let per: Vec<u64> = v["per_generator"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["value"].as_u64().unwrap())
        .collect();
    assert_eq!(per, [15, 36, 36, 36]);
}

#[test]
fn spec_file_with_element() {
    let (code, out, err) = omega(&["omega-elem", "--spec", &data("affine.json")]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("omega: 68"), "{out}");
    assert!(out.contains("minimal elements: 40"), "{out}");
}

#[test]
fn expressions_refer_to_generators_as_given() {
    // 5,3 is sorted to 3,5 internally; (0,1) still means the element 3
    let v = json(&[
        "omega-elem",
        "--numerical",
        "5,3",
        "--expression",
        "0,1",
        "--json",
    ]);
    assert_eq!(v["value"], 3);
    // ⟨6,10,15⟩ is kept as is; ⟨12,20,30⟩ is the same monoid scaled by 2
    let a = json(&[
        "omega-elem",
        "--numerical",
        "6,10,15",
        "--expression",
        "1,1,0",
        "--json",
    ]);
    let b = json(&[
        "omega-elem",
        "--numerical",
        "12,20,30",
        "--expression",
        "1,1,0",
        "--json",
    ]);
    assert_eq!(a["value"], b["value"]);
}

#[test]
fn cross_check_shows_the_uncorrected_formula() {
    let (code, out, _) = omega(&[
        "omega-elem",
        "--numerical",
        "3,5",
        "--value",
        "3",
        "--cross-check",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("omega: 3"));
    assert!(
        out.contains("engine=3 oracle=3 two-gen-closed=3 uncorrected-two-gen-formula=6"),
        "{out}"
    );
}

#[test]
fn membership_and_factorize() {
    let v = json(&["membership", "--numerical", "3,5", "--value", "7", "--json"]);
    assert_eq!(v["member"], false);
    assert!(v["factorization"].is_null());
    let v = json(&[
        "factorize",
        "--affine",
        "5,3;5,11;2,7;11,4",
        "--vector",
        "154,118",
        "--json",
    ]);
    assert_eq!(v["member"], true);
    assert_eq!(v["factorization"].as_array().unwrap().len(), 4);
    assert_eq!(omega(&["factorize", "--numerical", "3,5", "--value", "7"]).0, 2);
}

#[test]
fn empirical_ratios() {
    let v = json(&[
        "empirical",
        "--numerical",
        "3,5",
        "--value",
        "3",
        "--nmax",
        "6",
        "--json",
    ]);
    let ratios: Vec<&str> = v["ratios"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["ratio"].as_str().unwrap())
        .collect();
    assert_eq!(ratios, ["3", "3/2", "1", "1", "1", "1"]);
    assert_eq!(v["limit"], "1");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| omega(args).0;
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["omega-elem", "--numerical", "3,5"]), 2, "missing element");
    assert_eq!(code(&["omega-elem", "--numerical", "3,x", "--value", "3"]), 2);
    assert_eq!(
        code(&[
            "omega-elem",
            "--numerical",
            "3,5",
            "--twogen",
            "2,3",
            "--value",
            "3"
        ]),
        2
    );
    assert_eq!(
        code(&["omega-elem", "--numerical", "3,5", "--value", "7"]),
        2,
        "not a member"
    );
    assert_eq!(code(&["omega-elem", "--twogen", "1,5", "--expression", "1,0"]), 2);
    assert_eq!(
        code(&["omega-elem", "--numerical", "3,5", "--expression", "1,0,0"]),
        2
    );
    assert_eq!(
        code(&["omega-elem", "--affine", "1,0;0,0", "--vector", "1,0"]),
        2,
        "not reduced"
    );
    assert_eq!(code(&["membership", "--twogen", "7,5", "--vector", "1,1"]), 3);
    assert_eq!(code(&["asymptotic-sg", "--affine", "1,0;0,1"]), 3);
    assert_eq!(
        code(&[
            "omega-elem",
            "--affine",
            "1,0;0,1",
            "--vector",
            "1,1",
            "--method",
            "oracle"
        ]),
        3
    );
    assert_eq!(
        code(&[
            "omega-elem",
            "--numerical",
            "115,212,333,571",
            "--value",
            "10000",
            "--limit",
            "50"
        ]),
        4
    );
    assert_eq!(exit_code(&Error::CrossCheckMismatch(String::new())), 5);
}

#[test]
fn bench_suite_csv() {
    let (code, out, err) = omega(&["bench", "--suite", &data("paper_suite.json")]);
    assert_eq!(code, 0, "{err}");
    let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(
        rows[0].join(","),
        "job_id,mode,command,method,value,minimals_count,elapsed_ms,agree"
    );
    let four: Vec<&str> = rows
        .iter()
        .filter(|r| r[0].starts_with("four-generators/"))
        .map(|r| r[4])
        .collect();
    assert_eq!(four, ["15", "36", "36", "36"]);
    let figure: Vec<(&str, &str)> = rows
        .iter()
        .filter(|r| r[0] == "figure")
        .map(|r| (r[3], r[4]))
        .collect();
    assert_eq!(figure, [("engine", "20"), ("two-gen-closed", "20")]);
    // no methods listed: every applicable one runs
    let three: Vec<&str> = rows
        .iter()
        .filter(|r| r[0] == "three-five")
        .map(|r| r[3])
        .collect();
    assert_eq!(three, ["engine", "two-gen-closed", "oracle"]);
    assert!(rows[1..].iter().all(|r| r[7] == "true"));
}

#[test]
fn bench_suite_json_and_empty_suite() {
    let v = json(&["bench", "--suite", &data("paper_suite.json"), "--json"]);
    assert_eq!(v["all_agree"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);

    let path = std::env::temp_dir().join(format!("omega-empty-suite-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"jobs": []}"#).unwrap();
    let (code, out, _) = omega(&["bench", "--suite", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_omega");
    let ok = Command::new(bin)
        .args(["omega-elem", "--numerical", "3,5", "--value", "3"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("omega: 3"));
    let bad = Command::new(bin)
        .args(["membership", "--lattice", "7,-5", "--vector", "1,1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(3));
}
