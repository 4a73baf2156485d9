#![no_main]

use libfuzzer_sys::fuzz_target;
use sbcw::approx::best_approximation;
use sbcw::{BigInt, Ratio};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 64 {
        return;
    }
    if let Ok(r) = Ratio::from_decimal_str(s) {
        assert!(!r.is_infinite());
        let best = best_approximation(&r, &BigInt::from(1000)).expect("finite target");
        assert!(*best.denom() <= BigInt::from(1000));
    }
});
