use assert_cmd::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::cargo_bin("bottcalc").unwrap().arg("-q").args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn tangent_bundle_exception_on_g24() {
    let (code, out, _) = run(&["bott", "--n", "4", "--r", "2", "--bundle", "theta", "--twist", "-2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "H^1 = S_(-1^4), dim 1");
}

#[test]
fn structure_sheaf_sections() {
    let (code, out, _) = run(&["bott", "--n", "5", "--r", "2", "--bundle", "O", "--twist", "1"]);
    assert_eq!(code, 0);
    // Degree-one sections of O(1) are the ten Pluecker coordinates.
    assert_eq!(out.trim(), "H^0 = S_(1^3,0^2), dim 10");
}

#[test]
fn generic_weights_and_sweep() {
    let (code, out, _) = run(&["bott", "--n", "4", "--r", "2", "--alpha", "0,-1", "--beta", "0,-1", "--twist", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "vanishes");
    let (code, out, _) =
        run(&["--format", "csv", "bott", "--n", "4", "--r", "2", "--bundle", "O", "--twist", "-5", "--to", "1"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,r,alpha,beta,twist,degree,weight,dim");
    assert_eq!(lines.len(), 8);
    // Serre duality: H^4(O(-5)) is dual to H^0(O(1)), and O(-1..-3) is acyclic.
    assert_eq!(lines[1], "4,2,0^2,0^2,-5,4,\"-2^2,-3^2\",6");
    assert_eq!(lines[2], "4,2,0^2,0^2,-4,4,-2^4,1");
    assert!(lines[3..6].iter().all(|l| l.ends_with(",,,0")));
}

#[test]
fn errors_name_module_and_use_exit_two() {
    let (code, _, err) = run(&["bott", "--n", "4", "--r", "2", "--alpha", "0,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("[bott_grassmannian]") && err.contains("not dominant"), "{err}");
    let (code, _, err) = run(&["bott", "--n", "4", "--r", "2", "--alpha", "0,1x"]);
    assert_eq!(code, 2);
    assert!(err.contains("position 3"), "{err}");
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["iso", "--family", "OG_even", "--r", "2", "--n", "3", "--bundle", "quot"]);
    assert_eq!(code, 2);
    assert!(err.contains("[bott_isotropic]"), "{err}");
}

#[test]
fn isotropic_index() {
    let (code, out, _) = run(&["iso", "--family", "LG", "--r", "2", "--n", "2", "--bundle", "d2", "--m", "-5"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last().unwrap(), "index 2");
    let (code, out, _) = run(&["iso", "--space", "OG(2,8)", "--bundle", "quot"]);
    assert_eq!(code, 0);
    assert!(out.contains("m = -2: index 1"), "{out}");
}

#[test]
fn isotropic_claims() {
    let (code, out, _) = run(&["iso", "--space", "LG(3,6)", "--check"]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("all claims hold"));
}

#[test]
fn table_rows() {
    let (code, out, _) = run(&["table", "--g", "sp", "--r-case", "2=r=n"]);
    assert_eq!(code, 0);
    assert!(out.contains("sp | D2(R*) | 2=r=n | m+1,m+4,m+7 | - | -"), "{out}");
    // The one row whose listed values disagree with the root data.
    let (code, out, _) = run(&["table", "--g", "so_even", "--r-case", "r=2,n>=4"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL OG(2,8)"), "{out}");
    let (code, _, _) = run(&["table", "--g", "so_even", "--r-case", "r=2,n>=4", "--no-check"]);
    assert_eq!(code, 0);
}

#[test]
fn oracle_top_degree() {
    let (code, out, _) = run(&["oracle", "--r", "3", "--n", "6", "--deg", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("dim H0_m(Omega)_2 = 1\ndim H1_m(Omega)_2 = 0\n"), "{out}");
}

#[test]
fn oracle_check_witness_and_truncation() {
    let (code, out, _) = run(&["oracle", "--r", "2", "--n", "4", "--max-deg", "2", "--check", "--witness", "1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("degree 2: predictions match"));
    assert!(out.contains("witnesses at m=1: ok"));
    let (code, out, _) = run(&["oracle", "--r", "2", "--n", "4", "--max-deg", "4", "--max-block", "100"]);
    assert_eq!(code, 3);
    assert!(out.contains("TRUNCATED"));
}

#[test]
fn json_is_deterministic() {
    let args = ["--format", "json", "oracle", "--r", "2", "--n", "4", "--max-deg", "2", "--check"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], "bottcalc.oracle/1");
    assert_eq!(v["status"], "ok");
    assert!(v["result"]["rows"][0].get("elapsed_ms").is_none());
}

#[test]
fn thread_count_from_environment() {
    let out = Command::cargo_bin("bottcalc")
        .unwrap()
        .env("BOTTCALC_THREADS", "1")
        .args(["-q", "oracle", "--r", "2", "--n", "5", "--deg", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("dim H0_m(Omega)_2 = 0"));
}

#[test]
fn progress_goes_to_stderr() {
    let out = Command::cargo_bin("bottcalc").unwrap().args(["scan", "--n", "5", "--r", "2"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stderr).unwrap().contains("scanning G(2,5)"));
    assert!(!String::from_utf8(out.stdout).unwrap().contains("scanning"));
}

#[test]
fn verify_subset() {
    let (code, out, _) = run(&["verify-paper", "--only", "2,euler-hilbert"]);
    assert_eq!(code, 0);
    assert!(out.contains("[PASS] 2 g24-exception"));
    assert!(out.trim_end().ends_with("2 of 2 criteria passed"));
    let (code, out, _) = run(&["verify-paper", "--only", "iso-tables", "--json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"][0]["passed"], false);
    assert_eq!(v["status"], "failed");
    let (code, _, err) = run(&["verify-paper", "--only", "12"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown criterion"));
}
