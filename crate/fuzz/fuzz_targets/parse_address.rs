#![no_main]

use libfuzzer_sys::fuzz_target;
use sbcw::{address_to_flipword, flipword_to_address, TreeAddress};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(a) = s.parse::<TreeAddress>() {
        assert_eq!(a.to_string(), s);
        let w = address_to_flipword(&a);
        assert_eq!(flipword_to_address(&w).expect("automaton words invert"), a);
    }
});
