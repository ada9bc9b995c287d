#![no_main]

use bottcalc::bott_isotropic::expr::parse_condition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = parse_condition(s) {
        for n in 0..6 {
            for r in 0..=n {
                let _ = c.holds(n, r);
            }
        }
    }
});
