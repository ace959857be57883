#![no_main]

use libfuzzer_sys::fuzz_target;
use tqft2d::cli::format::{parse_document, print_theory};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = parse_document(text) else {
        return;
    };
    if let Ok(theory) = doc.into_theory() {
        let printed = print_theory(&theory);
        let again = parse_document(&printed)
            .expect("printed theory parses")
            .into_theory()
            .expect("printed theory validates");
        assert_eq!(print_theory(&again), printed);
    }
});
