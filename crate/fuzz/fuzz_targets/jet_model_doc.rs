//! Jet-model documents declare polynomial self-maps plus an optional
//! claimed Jacobian; the validator must bound determinant expansion and
//! cross-check the claim without panicking on any input. Enumeration
//! itself is not fuzzed — it is budgeted separately — so success here
//! stops at model construction.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = kequiv::docs::jet_models_from_json(text);
    }
});
