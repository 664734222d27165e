//! Resolution documents carry discrepancies and stratum classes; size
//! limits in the document layer keep the stringy weighting from building
//! huge projective-space classes. Both algebraic forms of the stringy
//! product must stay total (value or typed error) on anything that parses.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(resolution) = kequiv::docs::snc_from_json(text) {
            let _ = resolution.stringy_class();
            let _ = resolution.stringy_class_via_lminus1();
        }
    }
});
