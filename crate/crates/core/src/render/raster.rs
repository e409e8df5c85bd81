//! Integer rasterization onto an [`Image`]. No antialiasing.

use super::image::{Image, Rgb};

/// Pixel containing a screen-space coordinate, clamped into the image.
fn pixel(v: f64, size: usize) -> i64 {
    (v.floor() as i64).clamp(0, size as i64 - 1)
}

/// Bresenham line between the pixels containing `a` and `b`.
pub fn draw_line(img: &mut Image, a: [f64; 2], b: [f64; 2], color: Rgb) {
    if !a.iter().chain(&b).all(|v| v.is_finite()) {
        return;
    }
    let (w, h) = (img.width(), img.height());
    let (mut x0, mut y0) = (pixel(a[0], w), pixel(a[1], h));
    let (x1, y1) = (pixel(b[0], w), pixel(b[1], h));

    let dx = (x1 - x0).abs();
    let dy = -(y1 - y0).abs();
    let sx = if x0 < x1 { 1 } else { -1 };
    let sy = if y0 < y1 { 1 } else { -1 };
    let mut err = dx + dy;
    loop {
        img.set(x0 as usize, y0 as usize, color);
        if x0 == x1 && y0 == y1 {
            break;
        }
        let e2 = 2 * err;
        if e2 >= dy {
            err += dy;
            x0 += sx;
        }
        if e2 <= dx {
            err += dx;
            y0 += sy;
        }
    }
}

fn edge(a: [f64; 2], b: [f64; 2], p: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
}

/// Twice-area below which a triangle is considered to cover nothing.
pub const DEGENERATE_AREA: f64 = 1e-9;

/// Fills every pixel whose center lies inside (or on the edge of) the
/// triangle. Degenerate triangles draw nothing.
pub fn fill_triangle(img: &mut Image, v: [[f64; 2]; 3], color: Rgb) {
    if !v.iter().flatten().all(|c| c.is_finite()) {
        return;
    }
    let area = edge(v[0], v[1], v[2]);
    if area.abs() <= DEGENERATE_AREA {
        return;
    }
    let v = if area < 0.0 { [v[0], v[2], v[1]] } else { v };

    let (w, h) = (img.width() as f64, img.height() as f64);
    let min_x = v.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min).max(0.0);
    let max_x = v.iter().map(|p| p[0]).fold(f64::NEG_INFINITY, f64::max).min(w);
    let min_y = v.iter().map(|p| p[1]).fold(f64::INFINITY, f64::min).max(0.0);
    let max_y = v.iter().map(|p| p[1]).fold(f64::NEG_INFINITY, f64::max).min(h);
    if min_x > max_x || min_y > max_y {
        return;
    }

    for y in (min_y.floor() as usize)..(max_y.ceil() as usize).min(img.height()) {
        for x in (min_x.floor() as usize)..(max_x.ceil() as usize).min(img.width()) {
            let p = [x as f64 + 0.5, y as f64 + 0.5];
            if edge(v[0], v[1], p) >= 0.0 && edge(v[1], v[2], p) >= 0.0 && edge(v[2], v[0], p) >= 0.0 {
                img.set(x, y, color);
            }
        }
    }
}
