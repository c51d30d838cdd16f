#![no_main]

use homhopf::cli::{emit_structure, parse_structure};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_structure(text) {
        // anything accepted must survive a round trip
        let again = parse_structure(&emit_structure(&s)).expect("re-parse");
        assert_eq!(again, s);
    }
});
