#![no_main]

use homhopf::exactlin::Field;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for f in [Field::Rational, Field::prime(10007).unwrap(), Field::prime(2).unwrap()] {
        if let Ok(x) = f.parse_scalar(text) {
            assert_eq!(f.parse_scalar(&x.to_string()).unwrap(), x);
        }
    }
});
