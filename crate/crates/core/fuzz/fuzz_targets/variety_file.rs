#![no_main]

use libfuzzer_sys::fuzz_target;
use weilmot::variety::{count_sequence, parse_variety_file, CountOptions};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = parse_variety_file(text) {
        let opts = CountOptions {
            point_cap: 1 << 12,
            field_cap: 1 << 8,
            ..CountOptions::default()
        };
        let _ = count_sequence(&v.combinator, 2, 1, &opts);
    }
});
