//! Flop-pair documents bundle two fans over shared rays; both sides are
//! validated, and degenerate (identical) pairs are rejected. Arbitrary
//! bytes must never panic the validator.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(pair) = kequiv::docs::flop_pair_from_json(text) {
            let _ = pair.twin_a.point_count_coeffs();
            let _ = pair.twin_b.point_count_coeffs();
        }
    }
});
