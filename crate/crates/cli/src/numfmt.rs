//! Locale-independent number formatting for standard output.

/// Shortest decimal that round-trips to the same `f64` (at most 17
/// significant digits). Plain notation in `[1e-5, 1e16)`, exponent
/// notation outside it. Negative zero prints as `0`.
pub fn exact(v: f64) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    let a = v.abs();
    if (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// `v` rounded to 12 significant digits, trailing zeros dropped.
pub fn rounded(v: f64) -> String {
    if !v.is_finite() {
        return exact(v);
    }
    let r: f64 = format!("{v:.11e}").parse().unwrap_or(v);
    exact(r)
}

pub fn row(values: &[f64], f: fn(f64) -> String) -> String {
    values.iter().map(|&v| f(v)).collect::<Vec<_>>().join(" ")
}
