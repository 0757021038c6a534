use assert_cmd::Command;
use blobalg::diagram::DiagramJson;
use blobalg::symplectic::{enumerate_bphi, Strip, StripJson};
use blobalg::{Diagram, LaurentPoly};

fn blobalg() -> Command {
    let mut c = Command::cargo_bin("blobalg").unwrap();
    c.env_remove("BLOBALG_MAX_RANK");
    c
}

fn stdout(args: &[&str]) -> String {
    let out = blobalg().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    blobalg().args(args).output().unwrap().status.code().unwrap()
}

#[test]
fn dims_table_counts() {
    let csv = stdout(&["dims", "--m", "4", "--format", "csv"]);
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "m,l=-4,l=-3,l=-2,l=-1,l=0,l=1,l=2,l=3,total");
    assert_eq!(rows[4], "3,,1,1,4,8,1,1,,84");
    assert_eq!(rows[5], "4,1,1,5,5,16,5,1,1,335");
    let text = stdout(&["dims", "--m", "4"]);
    assert!(text.lines().last().unwrap().ends_with("| 335"));
}

#[test]
fn gram_minus_one_factors() {
    assert_eq!(stdout(&["gram", "--m", "3", "--weight", "-1"]), "kL * kR * K3\n");
}

#[test]
fn gram_json_round_trips() {
    let j: serde_json::Value = serde_json::from_str(&stdout(&["gram", "--m", "2", "--weight", "0", "--format", "json"])).unwrap();
    let det: LaurentPoly = j["determinant"].as_str().unwrap().parse().unwrap();
    assert_eq!(det, blobalg::rep::gram_matrix(2, 0).unwrap().determinant);
    assert_eq!(j["matrix"].as_array().unwrap().len(), 4);
}

#[test]
fn gram_rank_at_a_point() {
    let out = stdout(&["gram", "--m", "3", "--weight", "-1", "--set", "d=2,dL=1,dR=1,kL=3,kR=3,kLR=5"]);
    assert_eq!(out, "0\nrank 3 of 4\n");
}

#[test]
fn enumerate_tl_json() {
    let out = stdout(&["enumerate", "--family", "tl", "--n", "3", "--format", "json"]);
    let js: Vec<DiagramJson> = serde_json::from_str(&out).unwrap();
    assert_eq!(js.len(), 5);
    let ds: Vec<Diagram> = js.iter().map(|j| Diagram::from_json(j).unwrap()).collect();
    assert_eq!(ds, blobalg::diagram::enumerate_basis(blobalg::diagram::Family::TemperleyLieb, 3).unwrap());
}

#[test]
fn enumerate_phi_json() {
    let out = stdout(&["enumerate", "--family", "phi", "--m", "2", "--format", "json"]);
    let js: Vec<StripJson> = serde_json::from_str(&out).unwrap();
    let ss: Vec<Strip> = js.iter().map(|j| Strip::from_json(j).unwrap()).collect();
    assert_eq!(ss, enumerate_bphi(2));
}

#[test]
fn multiply_words() {
    assert_eq!(stdout(&["multiply", "--family", "tl", "--n", "3", "U1", "U1"]), "(d) {{1,2}, {3,3'}, {1',2'}}\n");
    assert_eq!(stdout(&["multiply", "--family", "tl", "--n", "3", "U1 U1", "--set", "d=1/2"]), "(1/2) {{1,2}, {3,3'}, {1',2'}}\n");
    assert_eq!(stdout(&["multiply", "--family", "phi", "--m", "2", "e", "e"]), "(dL) Lo/Lo\n");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["gram", "--m", "3", "--weight", "0", "--format", "json"][..],
        &["enumerate", "--family", "bx", "--n", "3"],
        &["verify", "confluence", "--samples", "50"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn verify_suites_pass() {
    let out = stdout(&["verify", "dims", "gram-paper-identities", "presentation"]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.ends_with("pass")), "{out}");
}

#[test]
fn scan_reports_k3_point() {
    let out = stdout(&["scan", "--m", "3", "--set", "d=2,dL=1,dR=1,kL=3,kR=3,kLR=5"]);
    assert!(out.contains("l=-1  dim 4    rank 3    det 0  vanishes"), "{out}");
    assert!(out.ends_with("not semisimple\n"));
    let generic = stdout(&["scan", "--m", "3", "--set", "d=7/3,dL=5/2,dR=11/7,kL=13/5,kR=17/4,kLR=19/6"]);
    assert!(generic.ends_with("\nsemisimple\n"));
}

#[test]
fn export_to_file() {
    let path = std::env::temp_dir().join(format!("blobalg-dims-{}.json", std::process::id()));
    blobalg().args(["export", "dims", "--m", "3", "--format", "json", "-o"]).arg(&path).assert().success();
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(v[3]["algebra_dim"], 84);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["gram", "--m", "3"]), 2);
    assert_eq!(code(&["verify", "no-such-suite"]), 2);
    assert_eq!(code(&["scan", "--m", "2", "--set", "d=2"]), 2);
    assert_eq!(code(&["multiply", "--family", "tl", "--n", "3", "e"]), 2);
    assert_eq!(code(&["multiply", "--family", "blob", "--n", "3", "U3"]), 2);
    assert_eq!(code(&["enumerate", "--family", "contour", "--n", "2"]), 2);
    assert_eq!(code(&["export", "gram", "--m", "2"]), 2);
}

#[test]
fn data_errors_exit_one() {
    assert_eq!(code(&["gram", "--m", "2", "--weight", "2"]), 1);
    assert_eq!(code(&["scan", "--m", "2", "--set", "d=0,dL=1,dR=1,kL=1,kR=1,kLR=1"]), 1);
    assert_eq!(code(&["enumerate", "--family", "tl", "--n", "9"]), 1);
}

#[test]
fn rank_guard_is_configurable() {
    let out = blobalg().env("BLOBALG_MAX_RANK", "2").args(["gram", "--m", "3", "--weight", "-1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("BLOBALG_MAX_RANK"));
    let out = blobalg().env("BLOBALG_MAX_RANK", "7").args(["enumerate", "--family", "tl", "--n", "7"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 429);
}
