#![no_main]

use libfuzzer_sys::fuzz_target;
use mgraph::multigraph::{parse_mgf, serialize_mgf};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = parse_mgf(text) else {
        return;
    };
    let out = serialize_mgf(&g);
    let back = parse_mgf(&out).expect("serialized graph must parse");
    assert_eq!(back, g);
    assert_eq!(serialize_mgf(&back), out);
});
