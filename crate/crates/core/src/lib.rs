//! Generalized projection matrices.
//!
//! A single 4×4 projection that blends a perspective frustum into an
//! orthographic box through one parameter `p`, with shear, an infinite far
//! plane, and remapping of `p`. Around the builders sit a brute-force
//! frustum oracle and a small software renderer that projects scenes through
//! the blended matrix.
//!
//! Conventions: right-handed eye space looking down −z, GL-style clip space
//! with NDC z ∈ [−1, 1], row-major matrices indexed `m[row][col]`.

pub mod error;
pub mod frustum;
pub mod linalg;
pub mod projection;
pub mod render;

pub use error::{Error, Result};
pub use frustum::{contains, frustum_corners, project_point, Frustum};
pub use linalg::{lerp, Mat4, Vec3, Vec4};
pub use projection::{
    alpha_from_fovs, apply_mapping, generalized, ortho_extents_from_fov, orthographic,
    perspective, theta_from_horizontal, validate, FarMode, MappingFunction, OrthoExtents,
    ProjectionParams, ValidationReport,
};
