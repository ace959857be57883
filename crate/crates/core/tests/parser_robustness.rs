//! Replays the checked-in fuzz corpus and random inputs through the parsers
//! with the same round-trip assertions the fuzz targets make.

use std::path::Path;

use proptest::prelude::*;
use tqft2d::cli::format::{parse_document, print_theory};
use tqft2d::scalars::GaussianRational;

fn check_scalar(text: &str) {
    if let Ok(x) = text.parse::<GaussianRational>() {
        let printed = x.to_string();
        let back: GaussianRational = printed.parse().expect("canonical form parses");
        assert_eq!(back, x);
        assert_eq!(back.to_string(), printed);
    }
}

fn check_theory(text: &str) -> bool {
    let Ok(doc) = parse_document(text) else {
        return false;
    };
    match doc.into_theory() {
        Ok(theory) => {
            let printed = print_theory(&theory);
            let again = parse_document(&printed)
                .expect("printed theory parses")
                .into_theory()
                .expect("printed theory validates");
            assert_eq!(print_theory(&again), printed);
            true
        }
        Err(_) => false,
    }
}

fn corpus(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut seeds: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            (path.display().to_string(), std::fs::read(&path).unwrap())
        })
        .collect();
    seeds.sort();
    seeds
}

#[test]
fn scalar_corpus_replays() {
    let seeds = corpus("parse_scalar");
    assert!(seeds.len() >= 10);
    for (_, bytes) in seeds {
        if let Ok(text) = std::str::from_utf8(&bytes) {
            check_scalar(text);
        }
    }
}

#[test]
fn theory_corpus_replays() {
    let seeds = corpus("parse_theory");
    let mut valid = 0;
    for (name, bytes) in &seeds {
        let text = std::str::from_utf8(bytes).unwrap_or_else(|_| panic!("{name} is not UTF-8"));
        valid += usize::from(check_theory(text));
    }
    assert!(valid >= 8, "only {valid} valid theory seeds");
}

proptest! {
    #[test]
    fn arbitrary_scalar_text_never_panics(s in "[-+0-9/*i ]{0,24}") {
        check_scalar(&s);
    }

    #[test]
    fn arbitrary_bytes_never_panic(bytes in proptest::collection::vec(any::<u8>(), 0..256)) {
        if let Ok(text) = std::str::from_utf8(&bytes) {
            check_theory(text);
        }
    }

    #[test]
    fn truncated_catalog_files_never_panic(cut in 0usize..2000, flip in 0usize..2000) {
        let text = print_theory(&tqft2d::catalog::theory("cliff2-super").unwrap());
        let mut bytes = text.into_bytes();
        if flip < bytes.len() {
            bytes[flip] = b'1';
        }
        bytes.truncate(cut.min(bytes.len()));
        if let Ok(text) = std::str::from_utf8(&bytes) {
            check_theory(text);
        }
    }
}
