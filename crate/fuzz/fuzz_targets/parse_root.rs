#![no_main]

use bottcalc::root_systems::parse_root;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&rank, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let rank = usize::from(rank % 12);
    if let Ok(v) = parse_root(s, rank) {
        assert_eq!(v.len(), rank);
    }
});
