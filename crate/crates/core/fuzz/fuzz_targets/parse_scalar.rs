#![no_main]

use libfuzzer_sys::fuzz_target;
use tqft2d::scalars::GaussianRational;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = text.parse::<GaussianRational>() {
        // canonical printing must parse back to the same value
        let printed = x.to_string();
        let back: GaussianRational = printed.parse().expect("canonical form parses");
        assert_eq!(back, x);
        assert_eq!(back.to_string(), printed);
    }
});
