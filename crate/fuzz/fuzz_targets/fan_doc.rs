//! Fan documents are the main untrusted input: arbitrary bytes must either
//! parse into a validated fan or come back as a typed error, never panic,
//! overflow, or allocate unboundedly. On success, the cheap derived
//! computation is exercised too, since validation promises it is total.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(fan) = kequiv::docs::fan_from_json(text) {
            let _ = fan.point_count_coeffs();
        }
    }
});
