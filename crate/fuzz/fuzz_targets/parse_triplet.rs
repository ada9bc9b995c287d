#![no_main]

use bottcalc::linalg::TripletMatrix;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = TripletMatrix::parse(s) {
        let again = TripletMatrix::parse(&m.to_text("")).expect("written matrix parses");
        assert_eq!(m, again);
    }
});
