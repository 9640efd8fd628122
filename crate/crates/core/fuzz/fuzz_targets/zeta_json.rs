#![no_main]

use libfuzzer_sys::fuzz_target;
use weilmot::motive::RationalZeta;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(z) = RationalZeta::from_json(text) {
        let again = RationalZeta::from_json(&z.to_json().to_string()).expect("reparses");
        assert_eq!(again, z);
        let _ = z.series(8);
    }
});
