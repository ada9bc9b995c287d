#![no_main]

use bottcalc::weights::parse_weight;
use libfuzzer_sys::fuzz_target;

// Accepted input must survive a render/parse round trip.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = parse_weight(s) {
        let again = parse_weight(&w.render()).expect("rendered weight parses");
        assert_eq!(w, again);
    }
});
