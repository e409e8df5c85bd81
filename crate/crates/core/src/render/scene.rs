//! Scenes and their line-oriented text format.
//!
//! ```text
//! # comment
//! box     cx cy cz  hx hy hz  r g b
//! plane   ox oy oz  ux uy uz  vx vy vz  cells  r1 g1 b1  r2 g2 b2
//! segment ax ay az  bx by bz  r g b
//! camera  px py pz  fx fy fz  ux uy uz
//! ```
//!
//! Coordinates are decimals, colors are integers in `0..=255`. `camera` is
//! optional and may appear once; without it the eye sits at the origin
//! looking down −z with +y up.

use crate::error::{Error, Result};
use crate::linalg::Vec3;

use super::image::Rgb;

/// Upper bound on checkerboard cells per side.
pub const MAX_CELLS: u32 = 512;

/// Rigid world-to-eye transform with an orthonormal basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Camera {
    position: Vec3,
    forward: Vec3,
    up: Vec3,
    right: Vec3,
}

impl Camera {
    /// Builds a camera looking along `forward`. `up` only needs to be
    /// non-parallel to `forward`; it is re-orthogonalized.
    pub fn look(position: Vec3, forward: Vec3, up: Vec3) -> Result<Camera> {
        let bad = |m: &str| Error::InvalidScene(format!("camera: {m}"));
        if !position.is_finite() {
            return Err(bad("position must be finite"));
        }
        let forward = forward.normalized().ok_or_else(|| bad("forward must be a non-zero finite vector"))?;
        let right = forward
            .cross(up)
            .normalized()
            .filter(|_| up.is_finite())
            .ok_or_else(|| bad("up must be finite and not parallel to forward"))?;
        let up = right.cross(forward);
        Ok(Camera { position, forward, up, right })
    }

    pub fn position(&self) -> Vec3 {
        self.position
    }

    pub fn forward(&self) -> Vec3 {
        self.forward
    }

    pub fn up(&self) -> Vec3 {
        self.up
    }

    pub fn right(&self) -> Vec3 {
        self.right
    }

    /// World point in eye coordinates (camera looks down −z).
    pub fn to_eye(&self, p: Vec3) -> Vec3 {
        let d = p - self.position;
        Vec3::new(self.right.dot(d), self.up.dot(d), -self.forward.dot(d))
    }
}

impl Default for Camera {
    fn default() -> Self {
        Camera {
            position: Vec3::ZERO,
            forward: Vec3::new(0.0, 0.0, -1.0),
            up: Vec3::new(0.0, 1.0, 0.0),
            right: Vec3::new(1.0, 0.0, 0.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Primitive {
    /// Axis-aligned box.
    Box { center: Vec3, half_extents: Vec3, color: Rgb },
    /// Parallelogram `origin + s·u + t·v`, `s, t ∈ [0, 1]`, split into
    /// `cells × cells` alternating squares.
    CheckerPlane { origin: Vec3, u: Vec3, v: Vec3, cells: u32, colors: [Rgb; 2] },
    Segment { a: Vec3, b: Vec3, color: Rgb },
}

impl Primitive {
    pub fn checked(self) -> Result<Primitive> {
        match self {
            Primitive::Box { center, half_extents: h, .. } => {
                if !center.is_finite() || !h.is_finite() {
                    return Err(Error::InvalidScene("box coordinates must be finite".into()));
                }
                if h.x <= 0.0 || h.y <= 0.0 || h.z <= 0.0 {
                    return Err(Error::InvalidScene("box half-extents must be > 0".into()));
                }
            }
            Primitive::CheckerPlane { origin, u, v, cells, .. } => {
                if !(origin.is_finite() && u.is_finite() && v.is_finite()) {
                    return Err(Error::InvalidScene("plane coordinates must be finite".into()));
                }
                if !(1..=MAX_CELLS).contains(&cells) {
                    return Err(Error::InvalidScene(format!("plane cells must be in 1..={MAX_CELLS}")));
                }
            }
            Primitive::Segment { a, b, .. } => {
                if !(a.is_finite() && b.is_finite()) {
                    return Err(Error::InvalidScene("segment coordinates must be finite".into()));
                }
            }
        }
        Ok(self)
    }

    /// Corners `[x−, x+] × [y−, y+] × [z−, z+]` indexed by bits `4z + 2y + x`.
    pub(crate) fn box_corners(center: Vec3, h: Vec3) -> [Vec3; 8] {
        std::array::from_fn(|i| {
            let s = |bit: usize| if i & bit != 0 { 1.0 } else { -1.0 };
            center + Vec3::new(s(1) * h.x, s(2) * h.y, s(4) * h.z)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Scene {
    pub primitives: Vec<Primitive>,
    pub camera: Camera,
}

impl Scene {
    pub fn new(camera: Camera) -> Self {
        Scene { primitives: Vec::new(), camera }
    }

    pub fn with(mut self, prim: Primitive) -> Self {
        self.primitives.push(prim);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.primitives.is_empty()
    }
}

struct Fields<'a> {
    line: usize,
    it: std::str::SplitWhitespace<'a>,
}

impl Fields<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, message: message.into() }
    }

    fn next(&mut self, what: &str) -> Result<&str> {
        let line = self.line;
        self.it.next().ok_or_else(|| Error::Parse { line, message: format!("missing {what}") })
    }

    fn num(&mut self, what: &str) -> Result<f64> {
        let line = self.line;
        let tok = self.next(what)?;
        match tok.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(Error::Parse { line, message: format!("{what}: expected a finite decimal, got `{tok}`") }),
        }
    }

    fn vec3(&mut self, what: &str) -> Result<Vec3> {
        Ok(Vec3::new(self.num(what)?, self.num(what)?, self.num(what)?))
    }

    fn channel(&mut self, what: &str) -> Result<u8> {
        let line = self.line;
        let tok = self.next(what)?;
        tok.parse::<u8>().map_err(|_| Error::Parse {
            line,
            message: format!("{what}: expected an integer in 0..=255, got `{tok}`"),
        })
    }

    fn rgb(&mut self, what: &str) -> Result<Rgb> {
        Ok(Rgb(self.channel(what)?, self.channel(what)?, self.channel(what)?))
    }

    fn cells(&mut self) -> Result<u32> {
        let line = self.line;
        let tok = self.next("cells")?;
        match tok.parse::<u32>() {
            Ok(c) if (1..=MAX_CELLS).contains(&c) => Ok(c),
            _ => Err(Error::Parse {
                line,
                message: format!("cells: expected an integer in 1..={MAX_CELLS}, got `{tok}`"),
            }),
        }
    }

    fn finish(mut self) -> Result<()> {
        match self.it.next() {
            None => Ok(()),
            Some(extra) => Err(self.err(format!("unexpected trailing field `{extra}`"))),
        }
    }
}

/// Parses the scene text format. Errors carry 1-based line numbers.
pub fn parse_scene(text: &str) -> Result<Scene> {
    let mut scene = Scene::default();
    let mut camera_seen = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut f = Fields { line, it: body.split_whitespace() };
        let Some(kind) = f.it.next() else { continue };

        let located = |e: Error| match e {
            Error::InvalidScene(m) => Error::Parse { line, message: m },
            other => other,
        };
        match kind {
            "box" => {
                let center = f.vec3("box center")?;
                let half_extents = f.vec3("box half-extents")?;
                let color = f.rgb("box color")?;
                f.finish()?;
                let prim = Primitive::Box { center, half_extents, color };
                scene.primitives.push(prim.checked().map_err(located)?);
            }
            "plane" => {
                let origin = f.vec3("plane origin")?;
                let u = f.vec3("plane u-axis")?;
                let v = f.vec3("plane v-axis")?;
                let cells = f.cells()?;
                let colors = [f.rgb("plane color 1")?, f.rgb("plane color 2")?];
                f.finish()?;
                let prim = Primitive::CheckerPlane { origin, u, v, cells, colors };
                scene.primitives.push(prim.checked().map_err(located)?);
            }
            "segment" => {
                let a = f.vec3("segment start")?;
                let b = f.vec3("segment end")?;
                let color = f.rgb("segment color")?;
                f.finish()?;
                scene.primitives.push(Primitive::Segment { a, b, color });
            }
            "camera" => {
                if camera_seen {
                    return Err(f.err("camera given more than once"));
                }
                let position = f.vec3("camera position")?;
                let forward = f.vec3("camera forward")?;
                let up = f.vec3("camera up")?;
                f.finish()?;
                scene.camera = Camera::look(position, forward, up).map_err(located)?;
                camera_seen = true;
            }
            other => return Err(f.err(format!("unknown primitive `{other}`"))),
        }
    }
    Ok(scene)
}
