#![no_main]

use libfuzzer_sys::fuzz_target;
use sbcw::{BigInt, Ratio};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = s.parse::<Ratio>() {
        assert!(*r.denom() >= BigInt::from(0));
        let again: Ratio = r.to_string().parse().expect("display output parses");
        assert_eq!(again, r);
    }
});
