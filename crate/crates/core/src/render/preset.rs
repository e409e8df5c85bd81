//! Built-in scenes.

use crate::linalg::Vec3;
use crate::projection::{FarMode, ProjectionParams};

use super::scene::{Camera, Primitive, Scene};
use super::{RenderOptions, Rgb};

pub const BUILTIN_NAMES: &[&str] = &["paper-fig1"];

/// A scene with the view it is meant to be rendered with.
#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub scene: Scene,
    pub params: ProjectionParams,
    pub panel: RenderOptions,
}

pub fn builtin(name: &str) -> Option<Preset> {
    match name {
        "paper-fig1" => Some(checkerboard_with_boxes()),
        _ => None,
    }
}

/// Checkerboard ground with boxes resting on it, seen from 1.5 units above
/// the ground looking horizontally, so the ground is parallel to the view
/// direction.
fn checkerboard_with_boxes() -> Preset {
    let camera = Camera::look(Vec3::new(0.0, 1.5, 0.0), Vec3::new(0.0, 0.0, -1.0), Vec3::new(0.0, 1.0, 0.0))
        .expect("fixed camera basis is valid");
    let cube = |x: f64, z: f64, h: f64, color: Rgb| Primitive::Box {
        center: Vec3::new(x, h, z),
        half_extents: Vec3::new(h, h, h),
        color,
    };
    let scene = Scene::new(camera)
        .with(Primitive::CheckerPlane {
            origin: Vec3::new(-8.0, 0.0, -2.0),
            u: Vec3::new(16.0, 0.0, 0.0),
            v: Vec3::new(0.0, 0.0, -32.0),
            cells: 8,
            colors: [Rgb(70, 70, 70), Rgb(215, 215, 215)],
        })
        .with(cube(-2.5, -7.0, 0.75, Rgb(200, 40, 40)))
        .with(cube(0.5, -5.0, 0.5, Rgb(40, 80, 200)))
        .with(cube(2.0, -12.0, 1.0, Rgb(40, 160, 60)))
        .with(cube(-1.0, -18.0, 1.25, Rgb(220, 160, 30)))
        .with(cube(4.5, -24.0, 1.5, Rgb(140, 60, 170)));

    let (width, height) = (240, 180);
    let params = ProjectionParams::new(
        50f64.to_radians(),
        width as f64 / height as f64,
        0.5,
        FarMode::Finite(60.0),
        10.0,
    );
    Preset { scene, params, panel: RenderOptions::new(width, height) }
}
