use super::format::*;
use super::*;
use crate::scalars::GaussianRational;
use crate::theories::{Kind, Payload};

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["tqft2d"];
    full.extend_from_slice(args);
    let code = main_with_args(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn cliff2_file() -> String {
    print_theory(&catalog::theory("cliff2-super").unwrap())
}

#[test]
fn print_parse_round_trip_on_catalog() {
    for e in catalog::ENTRIES {
        let t = catalog::theory(e.name).unwrap();
        let text = print_theory(&t);
        let back = parse_theory_file(&text).unwrap_or_else(|err| panic!("{}: {err}", e.name));
        assert_eq!(back.kind(), t.kind());
        assert_eq!(back.algebra(), t.algebra());
        assert_eq!(back.star(), t.star());
        match (back.payload(), t.payload()) {
            (Payload::Frobenius { frobenius: a, .. }, Payload::Frobenius { frobenius: b, .. }) => assert_eq!(a, b),
            (Payload::Spin { trivialization: a, reality: ra, .. }, Payload::Spin { trivialization: b, reality: rb, .. }) => {
                assert_eq!(a.phi(), b.phi());
                assert_eq!(ra, rb);
            }
            (
                Payload::SpinStat { trivialization: a, reality: ra, .. },
                Payload::SpinStat { trivialization: b, reality: rb, .. },
            ) => {
                assert_eq!(a.phi(), b.phi());
                assert_eq!(ra, rb);
            }
            _ => panic!("{}: payload changed shape", e.name),
        }
        assert_eq!(print_theory(&back), text, "{}", e.name);
    }
}

#[test]
fn cliff2_file_parses_to_hermitian_super() {
    let t = parse_theory_file(&cliff2_file()).unwrap();
    assert_eq!(t.kind(), Kind::HermitianSuper);
    assert_eq!(t.algebra().dim(), 4);
}

#[test]
fn parity_length_mismatch_is_a_schema_error() {
    let text = cliff2_file().replacen("\"dim\": 4", "\"dim\": 3", 1);
    match parse_document(&text) {
        Err(ParseError::Schema { field, .. }) => assert_eq!(field, "parity"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn unknown_keys_are_rejected() {
    let text = cliff2_file().replacen('{', "{\n  \"comment\": \"x\",", 1);
    match parse_document(&text) {
        Err(ParseError::Schema { field, .. }) => assert_eq!(field, "comment"),
        other => panic!("{other:?}"),
    }
    let text = cliff2_file().replacen("\"flavor\"", "\"extra\": 1, \"flavor\"", 1);
    assert!(matches!(parse_document(&text), Err(ParseError::Schema { field, .. }) if field == "star.extra"));
}

#[test]
fn syntax_errors_carry_positions() {
    match parse_document("{\n  \"dim\": 1,\n  \"parity\": [0,,]\n}") {
        Err(ParseError::Syntax { line, column, .. }) => {
            assert_eq!(line, 3);
            assert!(column > 10);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn scalar_format_in_files() {
    let text = r#"{"dim": 1, "parity": [0], "structure": [[["1"]]], "unit": ["1"], "trace": ["1/2+-1/3*i"]}"#;
    let doc = parse_document(text).unwrap();
    assert_eq!(doc.trace.unwrap()[0], GaussianRational::from_parts((1, 2), (-1, 3)));
    let bad = text.replace("1/2+-1/3*i", "1/0");
    assert!(matches!(parse_document(&bad), Err(ParseError::Scalar { field, .. }) if field == "trace"));
    let number = text.replace("\"1/2+-1/3*i\"", "0.5");
    assert!(matches!(parse_document(&number), Err(ParseError::Schema { field, .. }) if field == "trace"));
}

#[test]
fn oversized_dimension_is_rejected() {
    let text = r#"{"dim": 100000, "parity": [], "structure": [], "unit": []}"#;
    assert!(matches!(parse_document(text), Err(ParseError::Schema { field, .. }) if field == "dim"));
}

#[test]
fn kind_specific_fields() {
    let text = cliff2_file().replacen("\"kind\": \"hermitian-super\"", "\"kind\": \"hermitian-spin\"", 1);
    assert!(matches!(
        parse_theory_file(&text),
        Err(FileError::Document(DocumentError::UnexpectedField { field: "trace", .. }))
    ));
    let text = cliff2_file().replacen("\"kind\": \"hermitian-super\",", "", 1);
    assert!(matches!(parse_theory_file(&text), Err(FileError::Document(DocumentError::MissingKind))));
}

#[test]
fn check_rp_examples() {
    let (code, out, _) = run_args(&["--format", "machine", "check-rp", "catalog:cliff1-spinstats"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("verdict=positive gram=[[2]]"), "{out}");
    let (code, out, _) = run_args(&["--format", "machine", "check-rp", "catalog:spin-phi-minus-one"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("verdict=not-positive"));
    assert!(out.contains("witness=["));
    let (code, out, _) = run_args(&["--format", "machine", "check-rp", "catalog:spin-zero"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("verdict=vacuous-zero"));
}

#[test]
fn classify_structures_prints_eight_lines() {
    for format in ["human", "machine"] {
        let (code, out, _) = run_args(&["--format", format, "classify-structures"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 8);
        assert_eq!(out.lines().filter(|l| l.contains("distinguished")).count(), if format == "human" { 1 } else { 8 });
    }
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(run_args(&["check-rp", "catalog:no-such-theory"]).0, 2);
    assert_eq!(run_args(&["check-rp", "/nonexistent/file.json"]).0, 2);
    assert_eq!(run_args(&["partition", "catalog:oriented-cplx"]).0, 2);
    assert_eq!(run_args(&["frobnicate"]).0, 2);
    let (code, _, err) = run_args(&["check-rp", "--route", "hermitian", "catalog:oriented-cplx"]);
    assert_eq!(code, 2);
    assert!(err.contains("not available"));
}

#[test]
fn route_override() {
    let (code, out, _) = run_args(&["--format", "machine", "check-rp", "--route", "oriented", "catalog:hermitian-cplx"]);
    assert_eq!(code, 1);
    assert!(out.contains("route=oriented"));
}

#[test]
fn machine_output_is_deterministic() {
    let a = run_args(&["--format", "machine", "catalog", "--sweep"]);
    let b = run_args(&["--format", "machine", "catalog", "--sweep"]);
    assert_eq!(a, b);
    assert_eq!(a.1.lines().count(), catalog::ENTRIES.len());
}
