#![no_main]

use libfuzzer_sys::fuzz_target;
use sbcw::words::{christoffel_word, counts, is_christoffel};
use sbcw::{BWord, Ratio};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = s.parse::<BWord>() {
        assert_eq!(w.to_string(), s);
        if is_christoffel(&w) {
            let (na, nb, _) = counts(&w);
            let slope = Ratio::from_ints(nb as i64, na as i64).expect("nonempty word");
            assert_eq!(christoffel_word(&slope).expect("nonnegative slope"), w);
        }
    }
});
