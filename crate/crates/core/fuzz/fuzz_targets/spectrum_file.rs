#![no_main]

use libfuzzer_sys::fuzz_target;
use weilmot::motive::{parse_spectrum_file, SpectrumFile};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(m) = parse_spectrum_file(text) {
        let again = parse_spectrum_file(&SpectrumFile::from_motive(&m).to_json()).expect("reparses");
        assert_eq!(again, m);
        let _ = m.sharp_upto(4);
    }
});
