//! Software projection pipeline.
//!
//! World → eye (camera) → clip (generalized matrix) → homogeneous clip →
//! divide → viewport. Drawables are painted back to front by eye-space
//! centroid depth; there is no z-buffer.

pub mod clip;
pub mod image;
pub mod raster;
pub mod scene;
mod preset;
mod svg;

pub use self::image::{Image, Rgb};
pub use clip::{clip_polygon, clip_segment};
pub use preset::{builtin, Preset, BUILTIN_NAMES};
pub use scene::{parse_scene, Camera, Primitive, Scene};
pub use svg::render_svg;

use crate::error::{Error, Result};
use crate::linalg::{Mat4, Vec3, Vec4};
use crate::projection::{generalized, MappingFunction, ProjectionParams};

/// Black gutter between sweep panels, in pixels.
pub const GUTTER: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenderMode {
    /// Edges only: box edges, checkerboard grid lines, segments.
    #[default]
    Wireframe,
    /// Flat-filled faces and checker cells; segments stay lines.
    Filled,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    pub width: usize,
    pub height: usize,
    pub mode: RenderMode,
    pub background: Rgb,
}

impl RenderOptions {
    pub fn new(width: usize, height: usize) -> Self {
        Self { width, height, mode: RenderMode::Wireframe, background: Rgb::WHITE }
    }

    pub fn with_mode(self, mode: RenderMode) -> Self {
        Self { mode, ..self }
    }

    fn check(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidScene("image dimensions must be at least 1x1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Shape {
    Line(Vec3, Vec3),
    Polygon(Vec<Vec3>),
}

#[derive(Debug, Clone, PartialEq)]
struct Drawable {
    shape: Shape,
    color: Rgb,
    depth: f64,
}

impl Drawable {
    fn new(shape: Shape, color: Rgb) -> Self {
        let pts: &[Vec3] = match &shape {
            Shape::Line(a, b) => &[*a, *b],
            Shape::Polygon(p) => p,
        };
        let depth = pts.iter().map(|p| p.z).sum::<f64>() / pts.len() as f64;
        Drawable { shape, color, depth }
    }
}

/// A primitive broken into eye-space drawables.
fn tessellate(prim: &Primitive, cam: &Camera, mode: RenderMode, out: &mut Vec<Drawable>) {
    let eye = |p: Vec3| cam.to_eye(p);
    match (*prim, mode) {
        (Primitive::Segment { a, b, color }, _) => {
            out.push(Drawable::new(Shape::Line(eye(a), eye(b)), color));
        }
        (Primitive::Box { center, half_extents, color }, RenderMode::Wireframe) => {
            let c = Primitive::box_corners(center, half_extents).map(eye);
            for i in 0..8 {
                for bit in [1, 2, 4] {
                    if i & bit == 0 {
                        out.push(Drawable::new(Shape::Line(c[i], c[i | bit]), color));
                    }
                }
            }
        }
        (Primitive::Box { center, half_extents, color }, RenderMode::Filled) => {
            let c = Primitive::box_corners(center, half_extents).map(eye);
            const FACES: [[usize; 4]; 6] = [
                [0, 2, 6, 4], // x−
                [1, 5, 7, 3], // x+
                [0, 4, 5, 1], // y−
                [2, 3, 7, 6], // y+
                [0, 1, 3, 2], // z−
                [4, 6, 7, 5], // z+
            ];
            for f in FACES {
                out.push(Drawable::new(Shape::Polygon(f.iter().map(|&i| c[i]).collect()), color));
            }
        }
        (Primitive::CheckerPlane { origin, u, v, cells, colors }, RenderMode::Wireframe) => {
            let n = cells as f64;
            for i in 0..=cells {
                let s = i as f64 / n;
                out.push(Drawable::new(Shape::Line(eye(origin + u * s), eye(origin + u * s + v)), colors[0]));
                out.push(Drawable::new(Shape::Line(eye(origin + v * s), eye(origin + v * s + u)), colors[0]));
            }
        }
        (Primitive::CheckerPlane { origin, u, v, cells, colors }, RenderMode::Filled) => {
            let n = cells as f64;
            let at = |i: u32, j: u32| eye(origin + u * (i as f64 / n) + v * (j as f64 / n));
            for j in 0..cells {
                for i in 0..cells {
                    let quad = vec![at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)];
                    out.push(Drawable::new(Shape::Polygon(quad), colors[((i + j) % 2) as usize]));
                }
            }
        }
    }
}

/// Screen-space output of the pipeline, in paint order.
#[derive(Debug, Clone, PartialEq)]
pub enum ScreenItem {
    Line { a: [f64; 2], b: [f64; 2], color: Rgb },
    Triangle { v: [[f64; 2]; 3], color: Rgb },
}

fn viewport(clip: Vec4, width: usize, height: usize) -> [f64; 2] {
    let (x, y) = (clip.x / clip.w, clip.y / clip.w);
    [(x + 1.0) / 2.0 * width as f64, (1.0 - (y + 1.0) / 2.0) * height as f64]
}

/// Runs the pipeline up to screen space with an explicit projection
/// matrix.
pub fn project_scene(scene: &Scene, projection: &Mat4, opts: &RenderOptions) -> Vec<ScreenItem> {
    let mut drawables = Vec::new();
    for prim in &scene.primitives {
        tessellate(prim, &scene.camera, opts.mode, &mut drawables);
    }
    // most negative z (farthest) first; stable for ties
    drawables.sort_by(|a, b| a.depth.total_cmp(&b.depth));

    let to_clip = |p: Vec3| *projection * p.extend(1.0);
    let mut items = Vec::new();
    for d in drawables {
        match d.shape {
            Shape::Line(a, b) => {
                if let Some((a, b)) = clip_segment(to_clip(a), to_clip(b)) {
                    items.push(ScreenItem::Line {
                        a: viewport(a, opts.width, opts.height),
                        b: viewport(b, opts.width, opts.height),
                        color: d.color,
                    });
                }
            }
            Shape::Polygon(pts) => {
                let clip: Vec<Vec4> = pts.into_iter().map(to_clip).collect();
                let poly: Vec<[f64; 2]> =
                    clip_polygon(&clip).into_iter().map(|c| viewport(c, opts.width, opts.height)).collect();
                for i in 1..poly.len().saturating_sub(1) {
                    items.push(ScreenItem::Triangle { v: [poly[0], poly[i], poly[i + 1]], color: d.color });
                }
            }
        }
    }
    items
}

/// Rasterizes `scene` through the generalized projection of `params`.
pub fn render_with(scene: &Scene, params: &ProjectionParams, opts: &RenderOptions) -> Result<Image> {
    opts.check()?;
    let m = generalized(params)?;
    let mut img = Image::new(opts.width, opts.height, opts.background);
    for item in project_scene(scene, &m, opts) {
        match item {
            ScreenItem::Line { a, b, color } => raster::draw_line(&mut img, a, b, color),
            ScreenItem::Triangle { v, color } => raster::fill_triangle(&mut img, v, color),
        }
    }
    Ok(img)
}

/// Wireframe render on a white background.
pub fn render(scene: &Scene, params: &ProjectionParams, width: usize, height: usize) -> Result<Image> {
    render_with(scene, params, &RenderOptions::new(width, height))
}

/// A grid of renders: one row per mapping, one column per `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub mappings: Vec<MappingFunction>,
    pub p_values: Vec<f64>,
    /// Everything but `p` and the mapping.
    pub base: ProjectionParams,
    pub scene: Scene,
    /// Per-panel size and style.
    pub panel: RenderOptions,
}

impl SweepSpec {
    /// Rows `x^(1/c)` for `c ∈ {1, 3, 5, 7, 9}`, columns `p ∈ {0.25, 0.5, 0.75}`.
    pub fn mapping_comparison(base: ProjectionParams, scene: Scene, panel: RenderOptions) -> Self {
        SweepSpec {
            mappings: [1.0, 3.0, 5.0, 7.0, 9.0].map(MappingFunction::Power).to_vec(),
            p_values: vec![0.25, 0.5, 0.75],
            base,
            scene,
            panel,
        }
    }

    pub fn panel_params(&self, row: usize, col: usize) -> ProjectionParams {
        self.base.with_mapping(self.mappings[row]).with_p(self.p_values[col])
    }

    /// Top-left pixel of panel `(row, col)` in the grid image.
    pub fn panel_origin(&self, row: usize, col: usize) -> (usize, usize) {
        (col * (self.panel.width + GUTTER), row * (self.panel.height + GUTTER))
    }

    pub fn grid_size(&self) -> (usize, usize) {
        let cols = self.p_values.len();
        let rows = self.mappings.len();
        (
            cols * self.panel.width + cols.saturating_sub(1) * GUTTER,
            rows * self.panel.height + rows.saturating_sub(1) * GUTTER,
        )
    }
}

/// Renders every panel of `spec` into one image separated by black gutters.
pub fn render_sweep(spec: &SweepSpec) -> Result<Image> {
    if spec.mappings.is_empty() || spec.p_values.is_empty() {
        return Err(Error::InvalidScene("sweep needs at least one mapping and one p value".into()));
    }
    spec.panel.check()?;
    let (w, h) = spec.grid_size();
    let mut grid = Image::new(w, h, Rgb::BLACK);
    for row in 0..spec.mappings.len() {
        for col in 0..spec.p_values.len() {
            let panel = render_with(&spec.scene, &spec.panel_params(row, col), &spec.panel)?;
            let (x, y) = spec.panel_origin(row, col);
            grid.blit(&panel, x, y);
        }
    }
    Ok(grid)
}
