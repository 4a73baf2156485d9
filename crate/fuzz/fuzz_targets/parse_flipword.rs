#![no_main]

use libfuzzer_sys::fuzz_target;
use sbcw::{address_to_flipword, flipword_to_address, FlipWord};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = s.parse::<FlipWord>() {
        assert_eq!(w.to_string(), s);
        let a = flipword_to_address(&w).expect("valid words have addresses");
        assert_eq!(address_to_flipword(&a), w);
    }
});
