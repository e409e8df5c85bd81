#![no_main]

use genproj_cli::far::FarArg;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(FarArg::Finite(f)) = text.parse::<FarArg>() {
        assert!(!f.is_nan());
    }
});
