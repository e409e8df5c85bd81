#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(scene) = genproj::render::parse_scene(text) {
            for prim in scene.primitives {
                assert!(prim.checked().is_ok());
            }
        }
    }
});
