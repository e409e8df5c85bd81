#![no_main]

use genproj::render::{parse_scene, render_svg, render_with, RenderMode, RenderOptions};
use genproj::{FarMode, ProjectionParams};
use libfuzzer_sys::fuzz_target;

// Parsed scenes must render without panicking, whatever their geometry.
fuzz_target!(|data: &[u8]| {
    let Some((&knob, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let Ok(scene) = parse_scene(text) else { return };
    if scene.primitives.len() > 64 {
        return;
    }
    let p = f64::from(knob & 0x7f) / 127.0;
    let mode = if knob & 0x80 == 0 { RenderMode::Wireframe } else { RenderMode::Filled };
    let far = if knob & 1 == 0 { FarMode::Finite(100.0) } else { FarMode::Infinite { epsilon: 0.0 } };
    let params = ProjectionParams::new(1.0, 4.0 / 3.0, 0.1, far, 5.0).with_p(p).with_shear(0.3, -0.2);
    let opts = RenderOptions::new(24, 18).with_mode(mode);
    let a = render_with(&scene, &params, &opts).expect("valid params render");
    let b = render_with(&scene, &params, &opts).expect("valid params render");
    assert_eq!(a, b);
    let _ = render_svg(&scene, &params, &RenderOptions::new(24, 18));
});
