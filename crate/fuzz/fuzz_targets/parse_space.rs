#![no_main]

use bottcalc::bott_isotropic::IsoGrassmannian;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(x) = IsoGrassmannian::parse(s) {
        assert_eq!(IsoGrassmannian::parse(&x.to_string()).expect("display parses"), x);
    }
});
