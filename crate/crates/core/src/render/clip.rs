//! Homogeneous clipping against `|x|, |y|, |z| <= w`, `w > 0`.
//!
//! Works before the divide, so it holds for every blend of the projection:
//! the clip volume is the same in clip space no matter how w varies.

use crate::linalg::Vec4;

/// Points with `w` below this are treated as behind the eye.
pub const MIN_W: f64 = 1e-9;

/// Plane coefficients `k` with inside meaning `k · v >= 0`.
const PLANES: [[f64; 4]; 7] = [
    [1.0, 0.0, 0.0, 1.0],  // x >= -w
    [-1.0, 0.0, 0.0, 1.0], // x <= w
    [0.0, 1.0, 0.0, 1.0],
    [0.0, -1.0, 0.0, 1.0],
    [0.0, 0.0, 1.0, 1.0],
    [0.0, 0.0, -1.0, 1.0],
    [0.0, 0.0, 0.0, 1.0], // w >= MIN_W, offset applied in `dist`
];

fn dist(plane: usize, v: Vec4) -> f64 {
    let k = Vec4::from_array(PLANES[plane]);
    let d = k.dot(v);
    if plane == 6 {
        d - MIN_W
    } else {
        d
    }
}

fn finite(v: Vec4) -> bool {
    v.to_array().iter().all(|c| c.is_finite())
}

/// Clips the segment `a → b` to the clip volume (Liang–Barsky in
/// homogeneous coordinates).
///
/// Returns `None` when nothing remains. Endpoints already inside are
/// returned bit-for-bit; new endpoints sit on the crossed plane.
pub fn clip_segment(a: Vec4, b: Vec4) -> Option<(Vec4, Vec4)> {
    if !finite(a) || !finite(b) {
        return None;
    }
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    for plane in 0..PLANES.len() {
        let da = dist(plane, a);
        let db = dist(plane, b);
        if da < 0.0 && db < 0.0 {
            return None;
        }
        if da < 0.0 {
            t0 = t0.max(da / (da - db));
        } else if db < 0.0 {
            t1 = t1.min(da / (da - db));
        }
        if t0 > t1 {
            return None;
        }
    }
    let a2 = if t0 > 0.0 { a.lerp(b, t0) } else { a };
    let b2 = if t1 < 1.0 { a.lerp(b, t1) } else { b };
    Some((a2, b2))
}

/// Clips a convex polygon to the clip volume (Sutherland–Hodgman).
///
/// The result has either zero or at least three vertices.
pub fn clip_polygon(poly: &[Vec4]) -> Vec<Vec4> {
    if poly.iter().any(|v| !finite(*v)) {
        return Vec::new();
    }
    let mut current: Vec<Vec4> = poly.to_vec();
    let mut next = Vec::with_capacity(poly.len() + PLANES.len());
    for plane in 0..PLANES.len() {
        if current.is_empty() {
            break;
        }
        next.clear();
        for i in 0..current.len() {
            let a = current[i];
            let b = current[(i + 1) % current.len()];
            let da = dist(plane, a);
            let db = dist(plane, b);
            if da >= 0.0 {
                next.push(a);
            }
            if (da >= 0.0) != (db >= 0.0) {
                next.push(a.lerp(b, da / (da - db)));
            }
        }
        std::mem::swap(&mut current, &mut next);
    }
    if current.len() < 3 {
        current.clear();
    }
    current
}
