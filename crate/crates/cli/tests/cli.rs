use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use genproj::render::{Image, Rgb};

fn genproj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genproj")).args(args).output().expect("spawn genproj")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<String> {
    stdout(o).lines().map(str::to_owned).collect()
}

const PERSP: &[&str] = &["--fov-deg", "90", "--aspect", "1", "--near", "1", "--far", "3"];

fn with(base: &[&str], extra: &[&str]) -> Vec<String> {
    base.iter().chain(extra).map(|s| s.to_string()).collect()
}

fn run(cmd: &str, args: &[String]) -> Output {
    let mut all = vec![cmd];
    all.extend(args.iter().map(String::as_str));
    genproj(&all)
}

#[test]
fn matrix_perspective_example() {
    let o = run("matrix", &with(PERSP, &["--p", "0", "--d", "2"]));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let l = lines(&o);
    assert_eq!(l.len(), 4);
    assert_eq!(l[0], "1.0000000000000002 0 0 0");
    assert_eq!(l[2], "0 0 -2 -3");
    assert_eq!(l[3], "0 0 -1 0");
}

#[test]
fn matrix_half_blend_bottom_row() {
    let o = run("matrix", &with(PERSP, &["--p", "0.5", "--d", "2"]));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(lines(&o)[3], "0 0 -0.5 0.5");
}

#[test]
fn matrix_infinite_far() {
    let o = genproj(&["matrix", "--fov-deg", "90", "--aspect", "1", "--near", "1", "--far", "inf", "--p", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(lines(&o)[2], "0 0 -1 -2");
    assert!(stderr(&o).is_empty());
}

#[test]
fn far_sentinel_is_a_deprecated_alias() {
    let inf = genproj(&["matrix", "--fov-deg", "90", "--aspect", "1", "--near", "1", "--far", "inf"]);
    let alias = genproj(&["matrix", "--fov-deg", "90", "--aspect", "1", "--near", "1", "--far", "-1"]);
    assert_eq!(alias.status.code(), Some(0), "{}", stderr(&alias));
    assert_eq!(inf.stdout, alias.stdout);
    assert!(stderr(&alias).contains("deprecated"));
}

#[test]
fn negative_shear_is_accepted() {
    let o = run("matrix", &with(PERSP, &["--shear-v", "-0.5"]));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(lines(&o)[1], "0 1.0000000000000002 -0.5 0");
}

#[test]
fn matrix_output_uses_period_decimals() {
    let o = run("matrix", &with(PERSP, &["--p", "0.3", "--d", "2", "--mapping", "pow:3"]));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    for line in lines(&o) {
        assert_eq!(line.split(' ').count(), 4);
        assert!(!line.contains(','));
        for v in line.split(' ') {
            v.parse::<f64>().unwrap();
        }
    }
}

#[test]
fn missing_d_with_blend_is_a_usage_error() {
    let o = run("matrix", &with(PERSP, &["--p", "0.5"]));
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--d"));
}

#[test]
fn json_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let args = with(PERSP, &["--p", "0.3", "--d", "2.5", "--mapping", "pow:3", "--shear-h", "0.1", "--format", "json"]);
    let first = run("matrix", &args);
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    let doc: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 4);
    assert_eq!(doc["params"]["mapping"], "pow:3");

    let path = dir.path().join("m.json");
    fs::write(&path, &first.stdout).unwrap();
    let p = path.to_str().unwrap();
    let second = genproj(&["matrix", "--from-json", p, "--format", "json"]);
    assert_eq!(second.status.code(), Some(0), "{}", stderr(&second));
    assert_eq!(first.stdout, second.stdout);

    let text_direct = run("matrix", &with(PERSP, &["--p", "0.3", "--d", "2.5", "--mapping", "pow:3", "--shear-h", "0.1"]));
    let text_json = genproj(&["matrix", "--from-json", p]);
    assert_eq!(text_direct.stdout, text_json.stdout);
}

#[test]
fn from_json_rejects_garbage() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\"rows\": 3}").unwrap();
    let o = genproj(&["matrix", "--from-json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = genproj(&["matrix", "--from-json", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn from_json_conflicts_with_view_flags() {
    let o = genproj(&["matrix", "--from-json", "x.json", "--near", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_ok() {
    let o = run("validate", &with(PERSP, &[]));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "OK\n");
}

#[test]
fn validate_reports_theta() {
    let o = genproj(&["validate", "--fov-deg", "200", "--aspect", "1", "--near", "1", "--far", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let l = lines(&o);
    assert_eq!(l.len(), 1);
    assert!(l[0].starts_with("VIOLATION theta: "), "{l:?}");
}

#[test]
fn validate_warns_on_distant_d() {
    let o = run("validate", &with(PERSP, &["--d", "100"]));
    assert_eq!(o.status.code(), Some(0));
    let l = lines(&o);
    assert_eq!(l.len(), 1);
    assert!(l[0].starts_with("WARNING d: "), "{l:?}");
}

#[test]
fn matrix_refuses_invalid_params_on_stderr() {
    let o = genproj(&["matrix", "--fov-deg", "90", "--aspect", "1", "--near", "3", "--far", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(stderr(&o).contains("VIOLATION far: "));
}

#[test]
fn frustum_endpoints() {
    let ortho = genproj(&["frustum", "--fov-deg", "90", "--aspect", "2", "--near", "1", "--far", "3", "--p", "1", "--d", "1"]);
    assert_eq!(ortho.status.code(), Some(0), "{}", stderr(&ortho));
    let l = lines(&ortho);
    assert_eq!(l.len(), 8);
    assert!(l.contains(&"-2 -1 -1".to_string()), "{l:?}");
    assert!(l.contains(&"2 1 -3".to_string()), "{l:?}");

    let persp = run("frustum", &with(PERSP, &[]));
    assert!(lines(&persp).contains(&"3 3 -3".to_string()), "{}", stdout(&persp));
}

#[test]
fn frustum_refuses_infinite_far() {
    let o = genproj(&["frustum", "--fov-deg", "90", "--aspect", "1", "--near", "1", "--far", "inf"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("frustum corners undefined for infinite far plane"));
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        vec!["matrix", "--bogus"],
        vec![],
        vec!["nonsense"],
        vec!["matrix", "--fov-deg", "abc", "--aspect", "1", "--near", "1", "--far", "3"],
        vec!["matrix", "--aspect", "1", "--near", "1", "--far", "3"],
        vec!["render", "--scene", "/definitely/not/here.scene", "--out", "x.ppm"],
    ] {
        let o = genproj(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(genproj(&["--help"]).status.code(), Some(0));
    assert_eq!(genproj(&["--version"]).status.code(), Some(0));
}

fn read_ppm(path: &Path) -> Image {
    Image::from_ppm(&fs::read(path).unwrap()).unwrap()
}

#[test]
fn render_perspective_and_orthographic_differ() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("p0.ppm");
    let b = dir.path().join("p1.ppm");
    for (out, p) in [(&a, "0"), (&b, "1")] {
        let o = genproj(&["render", "--scene", "paper-fig1", "--p", p, "--d", "10", "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    let (a, b) = (read_ppm(&a), read_ppm(&b));
    assert_eq!((a.width(), a.height()), (240, 180));
    let diff = a.pixels().iter().zip(b.pixels()).filter(|(x, y)| x != y).count();
    assert!(diff > 0);
}

#[test]
fn render_empty_scene_is_solid_background() {
    let dir = tempfile::tempdir().unwrap();
    let scene = dir.path().join("empty.scene");
    fs::write(&scene, "# nothing here\n\n").unwrap();
    let out = dir.path().join("e.ppm");
    let o = genproj(&[
        "render", "--scene", scene.to_str().unwrap(), "--out", out.to_str().unwrap(), "--width", "40", "--height", "30",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let img = read_ppm(&out);
    assert_eq!((img.width(), img.height()), (40, 30));
    assert_eq!(img.count_not(Rgb::WHITE), 0);
}

#[test]
fn render_scene_file_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let scene = dir.path().join("s.scene");
    fs::write(&scene, "box 0 0 -5 1 1 1 255 0 0\nsegment -1 -1 -3 1 1 -3 0 0 255\n").unwrap();
    let out = dir.path().join("s.svg");
    let o = genproj(&["render", "--scene", scene.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let svg = fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg"), "{svg}");
    assert_eq!(svg.matches("<line").count(), 13);
}

#[test]
fn render_reports_scene_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let scene = dir.path().join("bad.scene");
    fs::write(&scene, "box 0 0 -5 1 1 1 255 0 0\nteapot 1 2 3\n").unwrap();
    let o = genproj(&["render", "--scene", scene.to_str().unwrap(), "--out", dir.path().join("x.ppm").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn render_invalid_params_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let o = genproj(&["render", "--scene", "paper-fig1", "--p", "2", "--d", "1", "--out", dir.path().join("x.ppm").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_small_custom_grid() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.ppm");
    let o = genproj(&[
        "sweep", "--scene", "paper-fig1", "--out", out.to_str().unwrap(), "--panel-width", "30", "--panel-height", "20",
        "--mappings", "identity,pow:2", "--p-values", "0,1",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let img = read_ppm(&out);
    assert_eq!((img.width(), img.height()), (62, 42));
}

#[test]
fn sweep_rejects_single_panel_flags() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.ppm");
    let o = genproj(&["sweep", "--scene", "paper-fig1", "--out", out.to_str().unwrap(), "--p", "0.5"]);
    assert_eq!(o.status.code(), Some(1));
}
