#![no_main]

use homhopf::exactlin::Field;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = Field::parse_spec(text) {
        assert_eq!(Field::parse_spec(&f.to_string()).unwrap(), f);
    }
});
