#![no_main]

use bottcalc::bott_isotropic::expr::parse_expr;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(e) = parse_expr(s) {
        for n in [-3, 0, 4, i64::MAX] {
            let _ = e.at(n, 2);
        }
    }
});
