use std::fmt;
use std::str::FromStr;

/// `--far` as typed on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FarArg {
    Finite(f64),
    Infinite,
    /// `-1`, accepted as an alias of `inf`.
    Sentinel,
}

impl FarArg {
    pub fn is_infinite(self) -> bool {
        !matches!(self, FarArg::Finite(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid far plane `{0}` (expected a distance, `inf`, or -1)")]
pub struct ParseFarError(pub String);

impl FromStr for FarArg {
    type Err = ParseFarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if ["inf", "infinite", "infinity"].iter().any(|k| t.eq_ignore_ascii_case(k)) {
            return Ok(FarArg::Infinite);
        }
        match t.parse::<f64>() {
            Ok(-1.0) => Ok(FarArg::Sentinel),
            // non-finite numerals other than the keywords above stay literal
            // so validation reports them
            Ok(v) if !v.is_nan() => Ok(FarArg::Finite(v)),
            _ => Err(ParseFarError(s.to_owned())),
        }
    }
}

impl fmt::Display for FarArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FarArg::Finite(v) => write!(f, "{v}"),
            FarArg::Infinite => f.write_str("inf"),
            FarArg::Sentinel => f.write_str("-1"),
        }
    }
}
