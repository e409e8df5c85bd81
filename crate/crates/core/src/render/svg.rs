use std::fmt::Write;

use crate::error::{Error, Result};
use crate::projection::{generalized, ProjectionParams};

use super::{project_scene, RenderMode, RenderOptions, Scene, ScreenItem};

/// Wireframe render as SVG: one `<line>` per clipped segment, in paint
/// order, over a background `<rect>`. The viewBox is the pixel size.
pub fn render_svg(scene: &Scene, params: &ProjectionParams, opts: &RenderOptions) -> Result<String> {
    if opts.mode != RenderMode::Wireframe {
        return Err(Error::InvalidScene("SVG output supports wireframe mode only".into()));
    }
    opts.check()?;
    let m = generalized(params)?;
    let (w, h) = (opts.width, opts.height);
    let bg = opts.background;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(out, r#"<rect width="{w}" height="{h}" fill="rgb({},{},{})"/>"#, bg.0, bg.1, bg.2);
    for item in project_scene(scene, &m, opts) {
        if let ScreenItem::Line { a, b, color } = item {
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="rgb({},{},{})" stroke-width="1"/>"#,
                a[0], a[1], b[0], b[1], color.0, color.1, color.2
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vec3;
    use crate::projection::FarMode;
    use crate::render::{Primitive, Rgb};

    #[test]
    fn one_line_per_visible_edge() {
        let params = ProjectionParams::new(1.0, 1.0, 0.5, FarMode::Finite(30.0), 5.0);
        let scene = Scene::default()
            .with(Primitive::Box {
                center: Vec3::new(0.0, 0.0, -6.0),
                half_extents: Vec3::new(1.0, 1.0, 1.0),
                color: Rgb(255, 0, 0),
            })
            .with(Primitive::Segment { a: Vec3::new(0.0, 0.0, 5.0), b: Vec3::new(0.0, 0.0, 10.0), color: Rgb::BLACK });
        let svg = render_svg(&scene, &params, &RenderOptions::new(100, 80)).unwrap();
        assert!(svg.starts_with("<svg "));
        assert!(svg.contains(r#"viewBox="0 0 100 80""#));
        assert_eq!(svg.matches("<line ").count(), 12);
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn filled_mode_is_refused() {
        let params = ProjectionParams::new(1.0, 1.0, 0.5, FarMode::Finite(30.0), 5.0);
        let opts = RenderOptions::new(10, 10).with_mode(RenderMode::Filled);
        assert!(render_svg(&Scene::default(), &params, &opts).is_err());
    }
}
