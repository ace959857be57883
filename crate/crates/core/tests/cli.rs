//! End-to-end tests of the `tqft2d` binary.

use std::path::PathBuf;
use std::process::Command;

use tqft2d::catalog::ENTRIES;

fn tqft2d(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tqft2d"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn catalog_files_round_trip_through_the_binary() {
    for e in ENTRIES {
        let (code, text, _) = tqft2d(&["catalog", e.name]);
        assert_eq!(code, 0, "{}", e.name);
        let path = scratch(&format!("{}.json", e.name));
        std::fs::write(&path, &text).unwrap();
        let (code, out, err) = tqft2d(&["--format", "machine", "validate", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{}: {err}", e.name);
        assert!(out.contains("status=valid"), "{out}");
        let file_rp = tqft2d(&["--format", "machine", "check-rp", path.to_str().unwrap()]);
        let catalog_rp = tqft2d(&["--format", "machine", "check-rp", &format!("catalog:{}", e.name)]);
        assert_eq!(file_rp.0, catalog_rp.0, "{}", e.name);
        let strip = |s: &str| s.split(' ').filter(|f| !f.starts_with("theory=")).collect::<Vec<_>>().join(" ");
        assert_eq!(strip(&file_rp.1), strip(&catalog_rp.1), "{}", e.name);
    }
}

#[test]
fn check_rp_golden_lines() {
    let (code, out, _) = tqft2d(&["--format", "machine", "check-rp", "catalog:cliff1-spinstats"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "verdict=positive gram=[[2]] theory=catalog:cliff1-spinstats kind=hermitian-spin-statistics \
         route=spinstats-hermitian tag=hermitian circle_signature=(1,0,0) real_signature=(2,0,0)\n"
    );
    let (code, out, _) = tqft2d(&["--format", "machine", "check-rp", "catalog:spin-phi-minus-one"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("verdict=not-positive gram=[[0,1],[1,0]]"));
    assert!(out.contains(" witness=["));
}

#[test]
fn machine_output_is_byte_identical_across_runs() {
    let commands: [&[&str]; 4] = [
        &["--format", "machine", "catalog", "--sweep"],
        &["--format", "machine", "classify-structures"],
        &["--format", "machine", "hilbert", "catalog:cliff2-spinstats"],
        &["--format", "machine", "partition", "--genus", "3", "catalog:oriented-z3"],
    ];
    for args in commands {
        assert_eq!(tqft2d(args), tqft2d(args), "{args:?}");
    }
}

#[test]
fn classify_structures_lists_eight_classes() {
    let (code, out, _) = tqft2d(&["--format", "machine", "classify-structures"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[0], "class=(0,0,0) kind=oriented-spin distinguished=false");
    assert_eq!(lines[6], "class=(1,1,0) kind=hermitian-spin-statistics distinguished=true");
}

#[test]
fn partition_and_hilbert_values() {
    let (code, out, _) = tqft2d(&["--format", "machine", "partition", "--genus", "1", "catalog:oriented-x2"]);
    assert_eq!(code, 0);
    assert!(out.contains("value=2 "), "{out}");
    let (_, out, _) = tqft2d(&["--format", "machine", "partition", "--genus", "0", "catalog:oriented-mat2"]);
    assert!(out.contains("value=2 restricted_to_center=true"), "{out}");
    let (_, out, _) = tqft2d(&["--format", "machine", "hilbert", "catalog:cliff2-super"]);
    assert!(out.contains("dim=2 tag=hermitian gram=[[0,0+2*i],[0-2*i,0]]"), "{out}");
}

#[test]
fn integrate_reports_invariants() {
    let (code, out, _) = tqft2d(&["--format", "machine", "integrate", "catalog:cliff3-spinstats"]);
    assert_eq!(code, 0);
    assert!(out.contains("dim=16 center_dim=1 semisimple=true"), "{out}");
    assert!(out.contains("unit_trace=4"), "{out}");
}

#[test]
fn exit_codes_for_bad_input() {
    let bad_parity = scratch("bad-parity.json");
    std::fs::write(&bad_parity, r#"{"dim": 2, "parity": [0, 0, 0], "structure": [], "unit": []}"#).unwrap();
    let (code, _, err) = tqft2d(&["validate", bad_parity.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("\"parity\""), "{err}");

    let syntax = scratch("syntax.json");
    std::fs::write(&syntax, "{\n  \"dim\": 1,\n  oops\n}").unwrap();
    let (code, _, err) = tqft2d(&["validate", syntax.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");

    assert_eq!(tqft2d(&["check-rp", "catalog:missing"]).0, 2);
    assert_eq!(tqft2d(&["hilbert"]).0, 2);
}

#[test]
fn invalid_data_exits_with_one() {
    // e_1 e_0 = e_0, so e_0 is not a right unit
    let path = scratch("bad-unit.json");
    let text = r#"{
  "dim": 2,
  "parity": [0, 0],
  "structure": [[["1", "0"], ["0", "1"]], [["1", "0"], ["0", "1"]]],
  "unit": ["1", "0"]
}"#;
    std::fs::write(&path, text).unwrap();
    let (code, out, _) = tqft2d(&["--format", "machine", "validate", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("status=invalid") && out.contains("right-unit"), "{out}");

    // a degenerate trace on an oriented theory
    let degenerate = scratch("degenerate.json");
    let (_, file, _) = tqft2d(&["catalog", "oriented-split2"]);
    std::fs::write(&degenerate, file.replace("\"2\"\n  ]", "\"0\"\n  ]")).unwrap();
    let (code, out, _) = tqft2d(&["--format", "machine", "validate", degenerate.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    let (code, _, err) = tqft2d(&["check-rp", degenerate.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("degenerate"), "{err}");
}
