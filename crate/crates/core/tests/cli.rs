use std::process::Command;

fn copol(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_copol"));
    cmd.args(args).env_remove("COPOL_SCAN_BOUND");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn single_case_passes() {
    let (code, out, _) = copol(&["verify", "--case", "c7-disc-conj", "--mode", "paper"], &[]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["survivors"][0]["params"], serde_json::json!([2, 3]));
}

#[test]
fn trivial_weight_diagram() {
    let (code, out, _) = copol(&["mult", "A2", "0", "0"], &[]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().nth(1), Some("(0,0) 1"));
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn markdown_lists_every_case() {
    let (_, out, _) = copol(&["verify", "--format", "md"], &[]);
    for id in copol_core::cases::CaseId::ALL {
        assert!(out.contains(&format!("## {id} (")), "{id}");
    }
    assert!(out.contains("### Axioms used"));
}

#[test]
fn exit_codes() {
    // The copolarity 9 connected case keeps extra survivors in both modes.
    assert_eq!(copol(&["verify", "--mode", "paper"], &[]).0, 2);
    assert_eq!(copol(&["verify", "--mode", "exact"], &[]).0, 3);
    assert_eq!(
        copol(&["verify", "--mode", "exact", "--allow-discrepancies"], &[]).0,
        0
    );
    assert_eq!(copol(&["verify", "--frobnicate"], &[]).0, 1);
}

#[test]
fn baseline_override() {
    let dir = std::env::temp_dir().join(format!("copol-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut baseline: serde_json::Value = serde_json::from_str(include_str!("../baseline/survivors.json")).unwrap();
    baseline["cases"]["C9-CONN"] = serde_json::json!([
        {"family": "u3", "params": [1, 0], "real_dim": 6, "tag": "POLAR-BY-AXIOM"},
        {"family": "u3", "params": [1, 1], "real_dim": 16, "tag": "SURVIVOR"},
        {"family": "u3", "params": [2, 0], "real_dim": 12, "tag": "POLAR-BY-AXIOM"}
    ]);
    let path = dir.join("baseline.json");
    std::fs::write(&path, baseline.to_string()).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(copol(&["verify", "--case", "C9-CONN", "--baseline", p], &[]).0, 0);
    assert_eq!(copol(&["verify", "--case", "C9-CONN"], &[]).0, 2);

    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"cases\": 3}").unwrap();
    let (code, _, err) = copol(&["verify", "--baseline", bad.to_str().unwrap()], &[]);
    assert_eq!(code, 1);
    assert!(err.contains("malformed baseline"));
}

#[test]
fn scan_bound_precedence() {
    // Too small a box leaves the certificate unproved.
    let (code, _, err) = copol(&["verify", "--case", "C7-DISC-CONJ"], &[("COPOL_SCAN_BOUND", "3")]);
    assert_eq!(code, 1);
    assert!(err.contains("certificate"));
    let (code, _, _) = copol(
        &["verify", "--case", "C7-DISC-CONJ", "--scan-bound", "20"],
        &[("COPOL_SCAN_BOUND", "3")],
    );
    assert_eq!(code, 0);
}

#[test]
fn fixdim_queries() {
    let (code, out, _) = copol(&["fixdim", "max-circle", "T1xA1xA1", "1", "2"], &[]);
    assert_eq!(code, 0);
    assert!(out.starts_with("real_dim 6 "), "{out}");
    let (_, out, _) = copol(&["fixdim", "annihilator", "T1xA1xA1", "1", "2", "--dir", "1,0,-1"], &[]);
    assert!(out.starts_with("real_dim 6 "), "{out}");
    let (_, out, _) = copol(
        &["fixdim", "element", "A2", "1", "1", "--dir", "2,5,5", "--order", "6", "--diagonal"],
        &[],
    );
    assert!(out.starts_with("real_dim 4 "), "{out}");
    let (_, out, _) = copol(&["axioms"], &[]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 9);
}
