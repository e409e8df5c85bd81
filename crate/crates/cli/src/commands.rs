use std::fs;
use std::io::Write;
use std::path::Path;

use genproj::projection::ValidationReport;
use genproj::render::{
    self, builtin, parse_scene, render_svg, render_sweep, render_with, RenderMode, RenderOptions,
    Scene, SweepSpec,
};
use genproj::{
    alpha_from_fovs, frustum_corners, generalized, theta_from_horizontal, FarMode,
    MappingFunction, ProjectionParams,
};

use crate::args::{ImageFormat, MatrixArgs, MatrixFormat, Mode, RenderArgs, SweepArgs, ViewArgs};
use crate::doc::MatrixDocument;
use crate::far::FarArg;
use crate::numfmt;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

const DEFAULT_SIZE: (usize, usize) = (320, 240);

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Invalid(ValidationReport),
    #[error("{0}")]
    Refused(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Invalid(_) | CliError::Refused(_) => EXIT_INVALID,
        }
    }
}

impl From<genproj::Error> for CliError {
    fn from(e: genproj::Error) -> Self {
        match e {
            genproj::Error::InvalidParams(r) => CliError::Invalid(r),
            genproj::Error::Parse { .. } | genproj::Error::InvalidScene(_) => CliError::Usage(e.to_string()),
            genproj::Error::Singular { .. } | genproj::Error::DegenerateW { .. } => CliError::Refused(e.to_string()),
        }
    }
}

type CmdResult = Result<i32, CliError>;

/// Values used when a flag is absent.
#[derive(Debug, Clone, Default)]
pub struct Defaults {
    pub theta: Option<f64>,
    pub alpha: Option<f64>,
    pub near: Option<f64>,
    pub far: Option<FarMode>,
    pub d: Option<f64>,
}

impl Defaults {
    fn from_params(p: &ProjectionParams) -> Self {
        Defaults { theta: Some(p.theta), alpha: Some(p.alpha), near: Some(p.near), far: Some(p.far), d: Some(p.d) }
    }
}

fn missing(flag: &str) -> CliError {
    CliError::Usage(format!("missing required flag {flag}"))
}

/// Distance used for `d` when nothing is blended in.
fn neutral_d(near: f64, far: FarMode) -> f64 {
    match far {
        FarMode::Finite(f) if near > 0.0 && f > near => (near + f) / 2.0,
        _ if near > 0.0 && near.is_finite() => 2.0 * near,
        _ => 1.0,
    }
}

/// Merges flags over `defaults` into a parameter set. Does not validate
/// the result; notes for standard error are appended to `notes`.
pub fn resolve(view: &ViewArgs, defaults: &Defaults, notes: &mut Vec<String>) -> Result<ProjectionParams, CliError> {
    let fov = view.fov_deg.map(f64::to_radians).or(view.fov_rad);
    let hfov = view.hfov_deg.map(f64::to_radians).or(view.hfov_rad);
    let aspect = view.aspect;

    let (theta, alpha) = match (fov, hfov, aspect) {
        (Some(_), Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "give at most two of vertical FOV, horizontal FOV and --aspect".into(),
            ))
        }
        (Some(t), Some(h), None) => (t, alpha_from_fovs(t, h)?),
        (None, Some(h), a) => {
            let a = a.or(defaults.alpha).ok_or_else(|| missing("--aspect"))?;
            (theta_from_horizontal(h, a)?, a)
        }
        (t, None, a) => (
            t.or(defaults.theta).ok_or_else(|| missing("--fov-deg or --fov-rad"))?,
            a.or(defaults.alpha).ok_or_else(|| missing("--aspect"))?,
        ),
    };

    let near = view.near.or(defaults.near).ok_or_else(|| missing("--near"))?;
    let epsilon = view.epsilon.unwrap_or(match defaults.far {
        Some(FarMode::Infinite { epsilon }) => epsilon,
        _ => 0.0,
    });
    let far = match view.far {
        Some(FarArg::Finite(f)) => FarMode::Finite(f),
        Some(FarArg::Infinite) => FarMode::Infinite { epsilon },
        Some(FarArg::Sentinel) => {
            notes.push("note: --far -1 is a deprecated alias for --far inf".into());
            FarMode::Infinite { epsilon }
        }
        None => match defaults.far.ok_or_else(|| missing("--far"))? {
            FarMode::Infinite { .. } => FarMode::Infinite { epsilon },
            finite => finite,
        },
    };
    if view.epsilon.is_some() && !far.is_infinite() {
        notes.push("note: --epsilon only applies to an infinite far plane; ignored".into());
    }

    let p = view.p.unwrap_or(0.0);
    let d = match view.d.or(defaults.d) {
        Some(d) => d,
        None if p == 0.0 => neutral_d(near, far),
        None => return Err(CliError::Usage("--d is required when --p > 0".into())),
    };

    Ok(ProjectionParams {
        theta,
        alpha,
        near,
        far,
        p,
        d,
        shear_h: view.shear_h.unwrap_or(0.0),
        shear_v: view.shear_v.unwrap_or(0.0),
        mapping: view.mapping.unwrap_or(MappingFunction::Identity),
    })
}

fn flush_notes(err: &mut dyn Write, notes: &[String]) {
    for n in notes {
        let _ = writeln!(err, "{n}");
    }
}

fn checked(params: &ProjectionParams, err: &mut dyn Write) -> Result<(), CliError> {
    let report = params.validate();
    if !report.is_ok() {
        return Err(CliError::Invalid(report));
    }
    for line in report.lines() {
        let _ = writeln!(err, "{line}");
    }
    Ok(())
}

pub fn matrix(args: &MatrixArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let mut notes = Vec::new();
    let params = match &args.from_json {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let doc = MatrixDocument::from_json(&text).map_err(|e| CliError::Usage(e.to_string()))?;
            doc.params.to_params().map_err(|e| CliError::Usage(e.to_string()))?
        }
        None => resolve(&args.view, &Defaults::default(), &mut notes)?,
    };
    flush_notes(err, &notes);
    checked(&params, err)?;
    let m = generalized(&params)?;

    let text = match args.format {
        MatrixFormat::Text => {
            let rows: Vec<String> = m.rows().iter().map(|r| numfmt::row(r, numfmt::exact)).collect();
            rows.join("\n") + "\n"
        }
        MatrixFormat::Json => MatrixDocument::new(&m, &params).to_json() + "\n",
    };
    out.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))?;
    Ok(EXIT_OK)
}

pub fn validate(view: &ViewArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let mut notes = Vec::new();
    let report = match resolve(view, &Defaults::default(), &mut notes) {
        Ok(params) => params.validate(),
        Err(CliError::Invalid(report)) => report,
        Err(e) => return Err(e),
    };
    flush_notes(err, &notes);
    writeln!(out, "{report}").map_err(|e| CliError::Io(e.to_string()))?;
    Ok(if report.is_ok() { EXIT_OK } else { EXIT_INVALID })
}

pub fn frustum(view: &ViewArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let mut notes = Vec::new();
    let params = resolve(view, &Defaults::default(), &mut notes)?;
    flush_notes(err, &notes);
    checked(&params, err)?;
    if params.far.is_infinite() {
        return Err(CliError::Refused("frustum corners undefined for infinite far plane".into()));
    }
    let corners = frustum_corners(&generalized(&params)?)?;
    for c in corners.corners {
        writeln!(out, "{}", numfmt::row(&c.to_array(), numfmt::rounded)).map_err(|e| CliError::Io(e.to_string()))?;
    }
    Ok(EXIT_OK)
}

struct LoadedScene {
    scene: Scene,
    defaults: Defaults,
    size: (usize, usize),
}

fn load_scene(name: &str) -> Result<LoadedScene, CliError> {
    if let Some(preset) = builtin(name) {
        return Ok(LoadedScene {
            scene: preset.scene,
            defaults: Defaults::from_params(&preset.params),
            size: (preset.panel.width, preset.panel.height),
        });
    }
    let text = fs::read_to_string(name).map_err(|e| {
        CliError::Io(format!(
            "{name}: {e} (built-in scenes: {})",
            render::BUILTIN_NAMES.join(", ")
        ))
    })?;
    let scene = parse_scene(&text).map_err(|e| CliError::Usage(format!("{name}: {e}")))?;
    let defaults = Defaults {
        theta: Some(60f64.to_radians()),
        alpha: None,
        near: Some(0.1),
        far: Some(FarMode::Finite(100.0)),
        d: None,
    };
    Ok(LoadedScene { scene, defaults, size: DEFAULT_SIZE })
}

fn mode(m: Mode) -> RenderMode {
    match m {
        Mode::Wireframe => RenderMode::Wireframe,
        Mode::Filled => RenderMode::Filled,
    }
}

fn has_extension(path: &Path, ext: &str) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case(ext))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn check_size(w: usize, h: usize) -> Result<(), CliError> {
    if w == 0 || h == 0 {
        return Err(CliError::Usage("image width and height must be at least 1".into()));
    }
    Ok(())
}

pub fn render_cmd(args: &RenderArgs, err: &mut dyn Write) -> CmdResult {
    let loaded = load_scene(&args.scene)?;
    let width = args.width.unwrap_or(loaded.size.0);
    let height = args.height.unwrap_or(loaded.size.1);
    check_size(width, height)?;
    let defaults = Defaults { alpha: Some(width as f64 / height as f64), ..loaded.defaults };

    let mut notes = Vec::new();
    let params = resolve(&args.view, &defaults, &mut notes)?;
    flush_notes(err, &notes);
    checked(&params, err)?;

    let opts = RenderOptions::new(width, height).with_mode(mode(args.mode));
    let format = args.format.unwrap_or(if has_extension(&args.out, "svg") { ImageFormat::Svg } else { ImageFormat::Ppm });
    let bytes = match format {
        ImageFormat::Ppm => render_with(&loaded.scene, &params, &opts)?.to_ppm(),
        ImageFormat::Svg => render_svg(&loaded.scene, &params, &opts)?.into_bytes(),
    };
    write_file(&args.out, &bytes)?;
    Ok(EXIT_OK)
}

pub fn sweep_cmd(args: &SweepArgs, err: &mut dyn Write) -> CmdResult {
    if args.view.p.is_some() || args.view.mapping.is_some() {
        return Err(CliError::Usage("sweep takes --p-values and --mappings instead of --p and --mapping".into()));
    }
    if has_extension(&args.out, "svg") {
        return Err(CliError::Usage("sweep writes PPM only".into()));
    }
    if args.mappings.is_empty() || args.p_values.is_empty() {
        return Err(CliError::Usage("sweep needs at least one mapping and one p value".into()));
    }
    let loaded = load_scene(&args.scene)?;
    let width = args.panel_width.unwrap_or(loaded.size.0);
    let height = args.panel_height.unwrap_or(loaded.size.1);
    check_size(width, height)?;
    let defaults = Defaults { alpha: Some(width as f64 / height as f64), ..loaded.defaults };

    // resolve against the largest p so a missing --d is caught up front
    let max_p = args.p_values.iter().copied().fold(0.0, f64::max);
    let view = ViewArgs { p: Some(max_p), ..args.view.clone() };
    let mut notes = Vec::new();
    let base = resolve(&view, &defaults, &mut notes)?;
    flush_notes(err, &notes);

    let spec = SweepSpec {
        mappings: args.mappings.clone(),
        p_values: args.p_values.clone(),
        base,
        scene: loaded.scene,
        panel: RenderOptions::new(width, height).with_mode(mode(args.mode)),
    };
    for row in 0..spec.mappings.len() {
        for col in 0..spec.p_values.len() {
            checked(&spec.panel_params(row, col), err)?;
        }
    }
    let grid = render_sweep(&spec)?;
    write_file(&args.out, &grid.to_ppm())?;
    Ok(EXIT_OK)
}
