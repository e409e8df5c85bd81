//! Geometric checks that do not trust the closed-form builders.
//!
//! Corners come from inverting the matrix and unprojecting the NDC cube;
//! containment is tested in clip space so it works for any blend.

use crate::error::{Error, Result};
use crate::linalg::{Mat4, NdcPoint, Vec3, Vec4};

/// |w| below this cannot be divided through.
pub const DEGENERATE_W: f64 = 1e-12;

/// Eight eye-space corners of a view volume.
///
/// Index bits: `4·far + 2·top + right`, so the order is near-bottom-left,
/// near-bottom-right, near-top-left, near-top-right, then the far face in
/// the same order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frustum {
    pub corners: [Vec3; 8],
}

impl Frustum {
    /// The NDC cube corner that maps to `corners[i]`.
    pub fn ndc_corner(i: usize) -> NdcPoint {
        let s = |bit: usize| if i & bit != 0 { 1.0 } else { -1.0 };
        Vec3::new(s(1), s(2), s(4))
    }

    pub fn near_face(&self) -> &[Vec3] {
        &self.corners[..4]
    }

    pub fn far_face(&self) -> &[Vec3] {
        &self.corners[4..]
    }

    pub fn centroid(&self) -> Vec3 {
        self.corners.iter().fold(Vec3::ZERO, |acc, c| acc + *c) * (1.0 / 8.0)
    }

    /// Half-height of the cross-section at eye depth `z`, interpolated
    /// along the top-left and bottom-left edges.
    pub fn half_height_at(&self, z: f64) -> f64 {
        let along = |a: Vec3, b: Vec3| {
            let s = (z - a.z) / (b.z - a.z);
            a.y + (b.y - a.y) * s
        };
        let top = along(self.corners[2], self.corners[6]);
        let bottom = along(self.corners[0], self.corners[4]);
        (top - bottom) / 2.0
    }
}

/// Clip coordinates and their perspective divide.
pub fn project_point(m: &Mat4, eye: Vec3) -> Result<(NdcPoint, f64)> {
    let clip = *m * eye.extend(1.0);
    if !(clip.w.abs() >= DEGENERATE_W) {
        return Err(Error::DegenerateW { w: clip.w });
    }
    Ok((clip.xyz() * (1.0 / clip.w), clip.w))
}

/// Eye-space point that projects to `ndc`, through an already inverted
/// matrix.
pub fn unproject_with(inverse: &Mat4, ndc: NdcPoint) -> Result<Vec3> {
    let h = *inverse * ndc.extend(1.0);
    if !(h.w.abs() >= DEGENERATE_W) {
        return Err(Error::DegenerateW { w: h.w });
    }
    Ok(h.xyz() * (1.0 / h.w))
}

pub fn unproject(m: &Mat4, ndc: NdcPoint) -> Result<Vec3> {
    unproject_with(&m.inverse()?, ndc)
}

/// Corners of the volume that `m` maps onto the NDC cube.
///
/// Fails with [`Error::Singular`] for matrices without an inverse, which
/// includes every infinite-far matrix at `q = 1`.
pub fn frustum_corners(m: &Mat4) -> Result<Frustum> {
    let inv = m.inverse()?;
    let mut corners = [Vec3::ZERO; 8];
    for (i, c) in corners.iter_mut().enumerate() {
        *c = unproject_with(&inv, Frustum::ndc_corner(i))?;
    }
    Ok(Frustum { corners })
}

/// `|x|, |y|, |z| <= w` with `w > 0` in clip space.
pub fn clip_contains(clip: Vec4) -> bool {
    clip.w > 0.0 && clip.x.abs() <= clip.w && clip.y.abs() <= clip.w && clip.z.abs() <= clip.w
}

pub fn contains(m: &Mat4, eye: Vec3) -> bool {
    clip_contains(*m * eye.extend(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projection::{
        generalized, orthographic, perspective, FarMode, OrthoExtents, ProjectionParams,
    };
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    fn close(a: Vec3, b: Vec3, tol: f64) -> bool {
        (a - b).to_array().iter().all(|c| c.abs() <= tol)
    }

    #[test]
    fn orthographic_corners() {
        let m = orthographic(OrthoExtents { r: 2.0, t: 1.0 }, 1.0, 3.0).unwrap();
        let fr = frustum_corners(&m).unwrap();
        for (i, c) in fr.corners.iter().enumerate() {
            let u = Frustum::ndc_corner(i);
            let z = if u.z < 0.0 { -1.0 } else { -3.0 };
            assert!(close(*c, Vec3::new(2.0 * u.x, u.y, z), 1e-12), "{i}: {c:?}");
        }
    }

    #[test]
    fn perspective_corners() {
        let m = perspective(FRAC_PI_2, 1.0, 1.0, 3.0).unwrap();
        let fr = frustum_corners(&m).unwrap();
        for c in fr.near_face() {
            assert!(close(*c, Vec3::new(c.x.signum(), c.y.signum(), -1.0), 1e-12), "{c:?}");
        }
        for c in fr.far_face() {
            assert!(close(*c, Vec3::new(3.0 * c.x.signum(), 3.0 * c.y.signum(), -3.0), 1e-12), "{c:?}");
        }
        assert!(close(fr.corners[7], Vec3::new(3.0, 3.0, -3.0), 1e-12));
    }

    #[test]
    fn w_clip_by_projection_kind() {
        let o = orthographic(OrthoExtents { r: 2.0, t: 1.0 }, 1.0, 3.0).unwrap();
        let p = perspective(FRAC_PI_2, 1.0, 1.0, 3.0).unwrap();
        for z in [-1.0, -2.0, -2.75] {
            let eye = Vec3::new(0.3, -0.2, z);
            assert_eq!(project_point(&o, eye).unwrap().1, 1.0);
            assert_eq!(project_point(&p, eye).unwrap().1, -z);
            let q = 0.3;
            let g = generalized(
                &ProjectionParams::new(FRAC_PI_2, 1.0, 1.0, FarMode::Finite(3.0), 2.0).with_p(q),
            )
            .unwrap();
            let w = project_point(&g, eye).unwrap().1;
            assert!((w - ((1.0 - q) * -z + q)).abs() < 1e-15);
        }
    }

    #[test]
    fn degenerate_w() {
        let p = perspective(FRAC_PI_2, 1.0, 1.0, 3.0).unwrap();
        assert!(matches!(project_point(&p, Vec3::new(1.0, 1.0, 0.0)), Err(Error::DegenerateW { .. })));
    }

    #[test]
    fn infinite_orthographic_is_refused() {
        let params = ProjectionParams::new(FRAC_PI_2, 1.0, 1.0, FarMode::Infinite { epsilon: 0.0 }, 2.0)
            .with_p(1.0);
        let m = generalized(&params).unwrap();
        assert!(matches!(frustum_corners(&m), Err(Error::Singular { .. })));
    }

    #[test]
    fn containment_examples() {
        let params = ProjectionParams::new(1.1, 1.6, 1.0, FarMode::Finite(9.0), 4.0);
        for q in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let params = params.with_p(q);
            let m = generalized(&params).unwrap();
            assert!(contains(&m, Vec3::new(0.0, 0.0, -5.0)));
            assert!(!contains(&m, Vec3::new(0.0, 0.0, -10.0)));
            let t = (params.theta / 2.0).tan() * params.d;
            assert!(!contains(&m, Vec3::new(0.0, t * (1.0 + 1e-6), -params.d)), "q={q}");
            assert!(contains(&m, Vec3::new(0.0, t * (1.0 - 1e-6), -params.d)), "q={q}");
        }
    }

    #[test]
    fn equal_size_point_is_on_top_plane() {
        let params = ProjectionParams::new(0.9, 1.2, 0.5, FarMode::Finite(20.0), 6.0);
        let t = (params.theta / 2.0).tan() * params.d;
        for i in 0..=10 {
            let m = generalized(&params.with_p(i as f64 / 10.0)).unwrap();
            let fr = frustum_corners(&m).unwrap();
            assert!((fr.half_height_at(-params.d) - t).abs() < 1e-9);
            let (ndc, _) = project_point(&m, Vec3::new(0.0, t, -params.d)).unwrap();
            assert!((ndc.y - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn far_cross_section_shrinks_toward_equal_size() {
        let params = ProjectionParams::new(1.0, 1.0, 1.0, FarMode::Finite(30.0), 5.0);
        let tan = (params.theta / 2.0).tan();
        let mut prev = f64::INFINITY;
        for i in 0..=20 {
            let q = i as f64 / 20.0;
            let fr = frustum_corners(&generalized(&params.with_p(q)).unwrap()).unwrap();
            let h = fr.half_height_at(-30.0);
            if i == 0 {
                assert!((h - tan * 30.0).abs() < 1e-9);
            }
            if i == 20 {
                assert!((h - tan * 5.0).abs() < 1e-9);
            }
            assert!(h < prev);
            prev = h;
        }
    }

    #[test]
    fn vertical_shear_moves_far_center_up_half_a_height() {
        let params = ProjectionParams::new(0.8, 1.4, 0.5, FarMode::Finite(12.0), 3.0).with_shear(0.0, 1.0);
        let tan = (params.theta / 2.0).tan();
        for q in [0.0, 1.0] {
            let m = generalized(&params.with_p(q)).unwrap();
            let c = unproject(&m, Vec3::new(0.0, 0.0, 1.0)).unwrap();
            assert!((c.z + 12.0).abs() < 1e-9);
            assert!((c.y - tan * 12.0).abs() < 1e-7, "q={q} y={}", c.y);
            assert!(c.x.abs() < 1e-9);
        }
    }

    fn valid_finite() -> impl Strategy<Value = ProjectionParams> {
        (0.1..2.8f64, 0.3..3.0f64, 0.05..5.0f64, 0.5..200.0f64, 0.0..=1.0f64, 0.1..100.0f64, -1.0..1.0f64, -1.0..1.0f64)
            .prop_map(|(theta, alpha, n, span, p, d, sh, sv)| {
                ProjectionParams::new(theta, alpha, n, FarMode::Finite(n + span), d)
                    .with_p(p)
                    .with_shear(sh, sv)
            })
    }

    proptest! {
        #[test]
        fn ndc_cube_round_trip(params in valid_finite()) {
            let m = generalized(&params).unwrap();
            let fr = frustum_corners(&m).unwrap();
            for (i, c) in fr.corners.iter().enumerate() {
                let (ndc, w) = project_point(&m, *c).unwrap();
                prop_assert!(w > 0.0);
                prop_assert!(close(ndc, Frustum::ndc_corner(i), 1e-7), "{:?} vs {:?}", ndc, Frustum::ndc_corner(i));
            }
            for (near, far) in fr.near_face().iter().zip(fr.far_face()) {
                prop_assert!(near.z > far.z);
            }
        }

        #[test]
        fn containment_matches_corners(params in valid_finite()) {
            let m = generalized(&params).unwrap();
            let fr = frustum_corners(&m).unwrap();
            let center = fr.centroid();
            prop_assert!(contains(&m, center));
            for c in fr.corners {
                let inward = c + (center - c) * 1e-6;
                let outward = c - (center - c) * 1e-6;
                prop_assert!(contains(&m, inward));
                prop_assert!(!contains(&m, outward));
            }
        }
    }
}
