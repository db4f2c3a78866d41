#![no_main]

use libfuzzer_sys::fuzz_target;
use mgraph::VertexLabel;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(label) = text.parse::<VertexLabel>() {
        assert!(label.validate().is_ok());
        if let Some(body) = label.to_mgf() {
            assert_eq!(body.parse::<VertexLabel>(), Ok(label));
        }
    }
});
