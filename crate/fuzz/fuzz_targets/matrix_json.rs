#![no_main]

use genproj_cli::doc::MatrixDocument;
use libfuzzer_sys::fuzz_target;

// Accepted documents yield parameters; valid parameters re-serialize to a
// document that parses back to the same parameters.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = MatrixDocument::from_json(text) else { return };
    let Ok(params) = doc.params.to_params() else { return };
    let Ok(m) = genproj::generalized(&params) else { return };
    let again = MatrixDocument::from_json(&MatrixDocument::new(&m, &params).to_json()).unwrap();
    assert_eq!(again.params.to_params().unwrap(), params);
});
