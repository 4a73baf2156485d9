#![no_main]

use libfuzzer_sys::fuzz_target;
use sbcw::dump::TreeDump;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(d) = TreeDump::from_json(s) {
        let json = d.to_json();
        assert_eq!(TreeDump::from_json(&json).expect("own output parses"), d);
    }
});
