//! Projection matrix builders.
//!
//! [`generalized`] is the blended matrix: every entry is a linear
//! interpolation between the perspective and orthographic entry, driven by
//! `q = m(p)`. The orthographic half is sized so both projections agree on
//! the cross-section at eye depth `−d`.

mod mapping;
mod validate;

pub use mapping::{apply_mapping, MappingFunction, ParseMappingError};
pub use validate::{validate, Issue, Param, ValidationReport, EPSILON_RECOMMENDED_MIN};

use crate::error::{Error, Result};
use crate::linalg::{lerp, Mat4};

/// Far plane handling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FarMode {
    /// Far plane at eye-space distance `f`.
    Finite(f64),
    /// Far plane at infinity. `epsilon = 0` is the exact limit; a small
    /// positive value pulls the far depth slightly inside NDC z = 1.
    Infinite { epsilon: f64 },
}

impl FarMode {
    pub fn finite(self) -> Option<f64> {
        match self {
            FarMode::Finite(f) => Some(f),
            FarMode::Infinite { .. } => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, FarMode::Infinite { .. })
    }
}

/// Half-extents of an orthographic view volume.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthoExtents {
    /// Center to right edge.
    pub r: f64,
    /// Center to top edge.
    pub t: f64,
}

/// Everything the generalized builder needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionParams {
    /// Vertical field of view, radians.
    pub theta: f64,
    /// Aspect ratio, width over height.
    pub alpha: f64,
    pub near: f64,
    pub far: FarMode,
    /// Orthographic fraction before mapping: 0 perspective, 1 orthographic.
    pub p: f64,
    /// Eye distance at which perspective and orthographic agree in size.
    pub d: f64,
    pub shear_h: f64,
    pub shear_v: f64,
    pub mapping: MappingFunction,
}

impl ProjectionParams {
    /// Unsheared, fully perspective parameters with identity mapping.
    pub fn new(theta: f64, alpha: f64, near: f64, far: FarMode, d: f64) -> Self {
        Self {
            theta,
            alpha,
            near,
            far,
            p: 0.0,
            d,
            shear_h: 0.0,
            shear_v: 0.0,
            mapping: MappingFunction::Identity,
        }
    }

    pub fn with_p(self, p: f64) -> Self {
        Self { p, ..self }
    }

    pub fn with_d(self, d: f64) -> Self {
        Self { d, ..self }
    }

    pub fn with_shear(self, shear_h: f64, shear_v: f64) -> Self {
        Self { shear_h, shear_v, ..self }
    }

    pub fn with_mapping(self, mapping: MappingFunction) -> Self {
        Self { mapping, ..self }
    }

    pub fn with_far(self, far: FarMode) -> Self {
        Self { far, ..self }
    }

    /// Effective blend parameter `m(p)`.
    pub fn q(&self) -> Result<f64> {
        apply_mapping(self.mapping, self.p)
    }

    pub fn extents(&self) -> Result<OrthoExtents> {
        ortho_extents_from_fov(self.theta, self.alpha, self.d)
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }
}

fn cot_half(theta: f64) -> f64 {
    1.0 / (theta / 2.0).tan()
}

/// Classical GL perspective matrix.
///
/// `m[2][3]` is `−2fn/(f − n)`, the value whose `f → ∞` limit is `−2n` and
/// which sends eye depth `−n` to NDC −1 and `−f` to +1.
pub fn perspective(theta: f64, alpha: f64, near: f64, far: f64) -> Result<Mat4> {
    let mut r = ValidationReport::default();
    r.check_theta(Param::Theta, theta);
    r.check_positive(Param::Alpha, alpha);
    r.check_depth_range(near, far);
    r.into_result()?;

    let cot = cot_half(theta);
    let mut m = Mat4::ZERO;
    m[0][0] = cot / alpha;
    m[1][1] = cot;
    m[2][2] = -(far + near) / (far - near);
    m[2][3] = -2.0 * far * near / (far - near);
    m[3][2] = -1.0;
    Ok(m)
}

/// Classical GL orthographic matrix for a symmetric box `[−r, r] × [−t, t]`.
pub fn orthographic(extents: OrthoExtents, near: f64, far: f64) -> Result<Mat4> {
    let mut r = ValidationReport::default();
    r.check_positive(Param::Right, extents.r);
    r.check_positive(Param::Top, extents.t);
    r.check_depth_range(near, far);
    r.into_result()?;

    let mut m = Mat4::ZERO;
    m[0][0] = 1.0 / extents.r;
    m[1][1] = 1.0 / extents.t;
    m[2][2] = -2.0 / (far - near);
    m[2][3] = -(far + near) / (far - near);
    m[3][3] = 1.0;
    Ok(m)
}

/// Orthographic half-extents matching the perspective frustum at depth `d`:
/// `t = tan(θ/2)·d`, `r = α·t`.
pub fn ortho_extents_from_fov(theta: f64, alpha: f64, d: f64) -> Result<OrthoExtents> {
    let mut r = ValidationReport::default();
    r.check_theta(Param::Theta, theta);
    r.check_positive(Param::Alpha, alpha);
    r.check_positive(Param::D, d);
    r.into_result()?;

    let t = (theta / 2.0).tan() * d;
    Ok(OrthoExtents { r: alpha * t, t })
}

/// Aspect ratio implied by a vertical and a horizontal FOV: `θ′/θ`.
pub fn alpha_from_fovs(theta: f64, theta_h: f64) -> Result<f64> {
    let mut r = ValidationReport::default();
    r.check_theta(Param::Theta, theta);
    r.check_theta(Param::ThetaH, theta_h);
    r.into_result()?;
    Ok(theta_h / theta)
}

/// Vertical FOV implied by a horizontal FOV and aspect ratio: `θ′/α`.
pub fn theta_from_horizontal(theta_h: f64, alpha: f64) -> Result<f64> {
    let mut r = ValidationReport::default();
    let inputs_ok = r.check_theta(Param::ThetaH, theta_h) & r.check_positive(Param::Alpha, alpha);
    if inputs_ok {
        let theta = theta_h / alpha;
        if !(theta > 0.0 && theta < std::f64::consts::PI) {
            r.violation(Param::Theta, "derived vertical FOV theta_h / alpha must lie in (0, pi)");
        }
    }
    r.into_result()?;
    Ok(theta_h / alpha)
}

/// The blended projection.
///
/// With `q = m(p)` and `(r, t)` from [`ortho_extents_from_fov`], each entry
/// is `lerp(perspective, orthographic, q)`; shear entries blend `s` with
/// `s/d`; the bottom row is `[0, 0, q − 1, q]`. In infinite mode the depth
/// row is `lerp(ε − 1, 0, q)`, `lerp((ε − 2)n, ε − 1, q)`.
pub fn generalized(params: &ProjectionParams) -> Result<Mat4> {
    validate(params).into_result()?;
    Ok(generalized_unchecked(params))
}

/// [`generalized`] without validation. Output is unspecified (possibly
/// non-finite) for invalid parameters.
pub fn generalized_unchecked(params: &ProjectionParams) -> Mat4 {
    let ProjectionParams { theta, alpha, near: n, far, d, shear_h, shear_v, mapping, .. } = *params;
    let q = mapping.eval(params.p);
    let cot = cot_half(theta);
    let t = (theta / 2.0).tan() * d;
    let r = alpha * t;

    let mut m = Mat4::ZERO;
    m[0][0] = lerp(cot / alpha, 1.0 / r, q);
    m[1][1] = lerp(cot, 1.0 / t, q);
    m[0][2] = lerp(shear_h, shear_h / d, q);
    m[1][2] = lerp(shear_v, shear_v / d, q);
    match far {
        FarMode::Finite(f) => {
            m[2][2] = lerp(-(f + n) / (f - n), -2.0 / (f - n), q);
            m[2][3] = lerp(-2.0 * f * n / (f - n), -(f + n) / (f - n), q);
        }
        FarMode::Infinite { epsilon } => {
            m[2][2] = lerp(epsilon - 1.0, 0.0, q);
            m[2][3] = lerp((epsilon - 2.0) * n, epsilon - 1.0, q);
        }
    }
    m[3][2] = q - 1.0;
    m[3][3] = q;
    m
}

impl From<ValidationReport> for Error {
    fn from(r: ValidationReport) -> Self {
        Error::InvalidParams(r)
    }
}
