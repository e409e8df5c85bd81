#![no_main]

use genproj::{apply_mapping, MappingFunction};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(m) = text.parse::<MappingFunction>() else { return };
    assert_eq!(m.to_string().parse::<MappingFunction>().unwrap(), m);
    match apply_mapping(m, 0.5) {
        Ok(q) => assert!(m.is_valid() && (0.0..=1.0).contains(&q)),
        Err(_) => assert!(!m.is_valid()),
    }
});
