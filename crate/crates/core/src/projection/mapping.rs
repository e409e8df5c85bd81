use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::validate::{Param, ValidationReport};

/// Reparameterization of the orthographic fraction `p`.
///
/// Every mapping fixes the endpoints: `m(0) = 0`, `m(1) = 1`. The power
/// family `x^(1/c)` pushes mid-range values toward orthographic for `c > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum MappingFunction {
    #[default]
    Identity,
    /// `m(x) = x^(1/c)`, `c > 0`.
    Power(f64),
}

impl MappingFunction {
    /// Evaluates the mapping without range checks.
    pub fn eval(self, x: f64) -> f64 {
        match self {
            MappingFunction::Identity => x,
            MappingFunction::Power(c) => x.powf(1.0 / c),
        }
    }

    pub fn is_valid(self) -> bool {
        match self {
            MappingFunction::Identity => true,
            MappingFunction::Power(c) => c.is_finite() && c > 0.0,
        }
    }
}

/// Maps `p ∈ [0, 1]` through `m`. The result stays in `[0, 1]`.
pub fn apply_mapping(m: MappingFunction, p: f64) -> Result<f64> {
    let mut report = ValidationReport::default();
    if !(0.0..=1.0).contains(&p) {
        report.violation(Param::P, "must satisfy 0 <= p <= 1");
    }
    if !m.is_valid() {
        report.violation(Param::Mapping, "power mapping requires a finite c > 0");
    }
    if !report.is_ok() {
        return Err(Error::InvalidParams(report));
    }
    Ok(m.eval(p).clamp(0.0, 1.0))
}

impl fmt::Display for MappingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MappingFunction::Identity => f.write_str("identity"),
            MappingFunction::Power(c) => write!(f, "pow:{c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid mapping `{0}` (expected `identity` or `pow:<c>`)")]
pub struct ParseMappingError(pub String);

impl FromStr for MappingFunction {
    type Err = ParseMappingError;

    /// Accepts `identity` or `pow:<c>`. Range checks on `c` are left to
    /// validation so they surface as parameter violations.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("identity") {
            return Ok(MappingFunction::Identity);
        }
        let err = || ParseMappingError(s.to_owned());
        let (kind, c) = s.split_once(':').ok_or_else(err)?;
        if !kind.eq_ignore_ascii_case("pow") {
            return Err(err());
        }
        let c: f64 = c.trim().parse().map_err(|_| err())?;
        if c.is_nan() {
            return Err(err());
        }
        Ok(MappingFunction::Power(c))
    }
}
