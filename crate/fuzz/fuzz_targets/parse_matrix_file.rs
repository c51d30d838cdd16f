#![no_main]

use homhopf::cli::{emit_matrix_file, parse_matrix_file};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((field, m)) = parse_matrix_file(text) {
        let (f2, m2) = parse_matrix_file(&emit_matrix_file(&m)).expect("re-parse");
        assert_eq!((f2, m2), (field, m));
    }
});
