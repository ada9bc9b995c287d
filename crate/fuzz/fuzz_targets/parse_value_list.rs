#![no_main]

use bottcalc::bott_isotropic::expr::{parse_value_list, EllipsisStep};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(list) = parse_value_list(s) {
        for (n, r) in [(2, 2), (5, 3), (9, 1)] {
            let _ = list.expand(n, r, EllipsisStep::Unit);
            let _ = list.expand(n, r, EllipsisStep::Inferred);
        }
    }
});
