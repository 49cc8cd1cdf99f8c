use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_superjm"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn fusion_first_identity() {
    let (code, out, _) = run(&[
        "fusion", "--family", "ga11", "--left", "2", "--right", "2", "--format", "text",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "M0 ⊕ ΠM2 ⊕ M4");
}

#[test]
fn triple_json_shape() {
    let (code, out, _) = run(&[
        "jm-triple",
        "--preset",
        "osp12-adjoint",
        "--element",
        r#"{"coeffs":{"X":"1"}}"#,
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["h"]["coeffs"]["h"], "1");
    assert_eq!(v["Y"]["coeffs"]["Y"], "1");
    assert_eq!(v["certificates"]["relations"], true);
}

#[test]
fn refusals_and_input_errors() {
    let (code, _, err) = run(&[
        "jm-triple",
        "--preset",
        "gl11",
        "--element",
        r#"{"coeffs":{"E12":"1"}}"#,
    ]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: not_neat:"), "{err}");
    let (code, _, err) = run(&[
        "neat",
        "--preset",
        "gl12",
        "--element",
        r#"{"coeffs":{"E99":"1"}}"#,
    ]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: unknown_basis:"), "{err}");
    let (code, _, _) = run(&["scan", "--preset", "gl12-neat-cone"]);
    assert_eq!(code, 2);
}

#[test]
fn representation_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("superjm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (_, v) = superjm::liesuper::gl_superalgebra(1, 2).unwrap();
    let path = dir.join("v.json");
    std::fs::write(&path, superjm::json::representation_to_json(&v).to_string()).unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&[
        "phi",
        "--rep",
        p,
        "--element",
        r#"{"coeffs":{"E12":"1","E31":"1"}}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r#"{"summands":[{"k":1,"shift":"odd","mult":1}]}"#
    );
    let (code, out, _) = run(&[
        "neat",
        "--rep",
        p,
        "--element",
        r#"{"coeffs":{"E12":"1","E31":"1"}}"#,
    ]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""quasi_reductive":false"#));
    std::fs::remove_dir_all(&dir).unwrap();
}
