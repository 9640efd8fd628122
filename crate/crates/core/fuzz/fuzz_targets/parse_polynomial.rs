#![no_main]

use libfuzzer_sys::fuzz_target;
use weilmot::variety::parse_polynomial;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    if let Ok(src) = std::str::from_utf8(rest) {
        if let Ok(f) = parse_polynomial(src, 1 + n as usize % 6) {
            // the printed form must parse back to the same polynomial
            let again = parse_polynomial(&f.to_string(), f.nvars()).expect("display reparses");
            assert_eq!(again, f);
        }
    }
});
