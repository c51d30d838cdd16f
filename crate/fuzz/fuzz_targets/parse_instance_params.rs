#![no_main]

use homhopf::catalog::{parse_instance_params, InstanceDescriptor, FAMILIES};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&pick, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let _ = parse_instance_params(text);
    let name = FAMILIES[pick as usize % FAMILIES.len()].name;
    // building is bounded by the descriptor limits
    if let Ok(d) = InstanceDescriptor::parse(name, text) {
        let _ = d.build();
    }
});
