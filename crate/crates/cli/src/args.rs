use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genproj::MappingFunction;

use crate::far::FarArg;

#[derive(Debug, Parser)]
#[command(
    name = "genproj",
    version,
    about = "Generalized perspective/orthographic projection matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the generalized projection matrix.
    Matrix(MatrixArgs),
    /// Check parameters against the projection restrictions.
    Validate(ViewArgs),
    /// Print the eight eye-space frustum corners.
    Frustum(ViewArgs),
    /// Render a scene to PPM or SVG.
    Render(RenderArgs),
    /// Render a mapping × p grid of panels to PPM.
    Sweep(SweepArgs),
}

/// Projection parameters shared by every subcommand.
#[derive(Debug, Clone, Default, Args)]
pub struct ViewArgs {
    /// Vertical field of view in degrees.
    #[arg(long = "fov-deg", conflicts_with = "fov_rad", allow_negative_numbers = true)]
    pub fov_deg: Option<f64>,
    /// Vertical field of view in radians.
    #[arg(long = "fov-rad", allow_negative_numbers = true)]
    pub fov_rad: Option<f64>,
    /// Horizontal field of view in degrees; combined with the vertical FOV
    /// it implies the aspect ratio, combined with --aspect the vertical FOV.
    #[arg(long = "hfov-deg", conflicts_with = "hfov_rad", allow_negative_numbers = true)]
    pub hfov_deg: Option<f64>,
    #[arg(long = "hfov-rad", allow_negative_numbers = true)]
    pub hfov_rad: Option<f64>,
    /// Aspect ratio, width over height.
    #[arg(long, allow_negative_numbers = true)]
    pub aspect: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub near: Option<f64>,
    /// Far distance, or `inf` for an infinite far plane (`-1` is an alias).
    #[arg(long, allow_negative_numbers = true)]
    pub far: Option<FarArg>,
    /// Depth tweak for the infinite far plane.
    #[arg(long, allow_negative_numbers = true)]
    pub epsilon: Option<f64>,
    /// Orthographic fraction in [0, 1].
    #[arg(long, allow_negative_numbers = true)]
    pub p: Option<f64>,
    /// Distance at which perspective and orthographic sizes agree.
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<f64>,
    #[arg(long = "shear-h", allow_negative_numbers = true)]
    pub shear_h: Option<f64>,
    #[arg(long = "shear-v", allow_negative_numbers = true)]
    pub shear_v: Option<f64>,
    /// `identity` or `pow:<c>` for x^(1/c).
    #[arg(long, allow_negative_numbers = true)]
    pub mapping: Option<MappingFunction>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub view: ViewArgs,
    #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
    pub format: MatrixFormat,
    /// Take parameters from a JSON document printed by `matrix --format json`.
    #[arg(long = "from-json", conflicts_with_all = [
        "fov_deg", "fov_rad", "hfov_deg", "hfov_rad", "aspect", "near", "far",
        "epsilon", "p", "d", "shear_h", "shear_v", "mapping",
    ])]
    pub from_json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ImageFormat {
    Ppm,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Wireframe,
    Filled,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Scene file, or a built-in scene name such as `paper-fig1`.
    #[arg(long)]
    pub scene: String,
    #[arg(long)]
    pub out: PathBuf,
    /// Defaults to the output file extension, else PPM.
    #[arg(long, value_enum)]
    pub format: Option<ImageFormat>,
    #[arg(long)]
    pub width: Option<usize>,
    #[arg(long)]
    pub height: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Wireframe)]
    pub mode: Mode,
    #[command(flatten)]
    pub view: ViewArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Scene file, or a built-in scene name such as `paper-fig1`.
    #[arg(long)]
    pub scene: String,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long = "panel-width")]
    pub panel_width: Option<usize>,
    #[arg(long = "panel-height")]
    pub panel_height: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Wireframe)]
    pub mode: Mode,
    /// Comma-separated row mappings.
    #[arg(long, value_delimiter = ',', default_value = "pow:1,pow:3,pow:5,pow:7,pow:9")]
    pub mappings: Vec<MappingFunction>,
    /// Comma-separated column p values.
    #[arg(long = "p-values", allow_negative_numbers = true, value_delimiter = ',', default_value = "0.25,0.5,0.75")]
    pub p_values: Vec<f64>,
    #[command(flatten)]
    pub view: ViewArgs,
}
