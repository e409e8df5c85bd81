#![no_main]

use genproj::render::Image;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(img) = Image::from_ppm(data) {
        assert_eq!(img.pixels().len(), img.width() * img.height());
        assert_eq!(Image::from_ppm(&img.to_ppm()).unwrap(), img);
    }
});
