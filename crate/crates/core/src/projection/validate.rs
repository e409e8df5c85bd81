use std::fmt;

use super::{FarMode, ProjectionParams};

/// Smallest recommended nonzero ε for the infinite far plane (2⁻²¹).
pub const EPSILON_RECOMMENDED_MIN: f64 = 4.76837158203125e-7;

/// Parameter named by a report entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    Theta,
    ThetaH,
    Alpha,
    Near,
    Far,
    Epsilon,
    P,
    D,
    ShearH,
    ShearV,
    Mapping,
    Right,
    Top,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::Theta => "theta",
            Param::ThetaH => "theta_h",
            Param::Alpha => "alpha",
            Param::Near => "near",
            Param::Far => "far",
            Param::Epsilon => "epsilon",
            Param::P => "p",
            Param::D => "d",
            Param::ShearH => "shear_h",
            Param::ShearV => "shear_v",
            Param::Mapping => "mapping",
            Param::Right => "r",
            Param::Top => "t",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Issue {
    pub param: Param,
    pub message: String,
}

/// Outcome of checking parameters against the projection restrictions.
///
/// Violations make a parameter set unusable; warnings are advisory.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Issue>,
    pub warnings: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&mut self, param: Param, message: impl Into<String>) {
        self.violations.push(Issue { param, message: message.into() });
    }

    pub fn warning(&mut self, param: Param, message: impl Into<String>) {
        self.warnings.push(Issue { param, message: message.into() });
    }

    pub fn violated(&self, param: Param) -> bool {
        self.violations.iter().any(|i| i.param == param)
    }

    pub fn warned(&self, param: Param) -> bool {
        self.warnings.iter().any(|i| i.param == param)
    }

    pub(crate) fn into_result(self) -> crate::Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(crate::Error::InvalidParams(self))
        }
    }

    pub(crate) fn check_theta(&mut self, param: Param, theta: f64) -> bool {
        let ok = theta.is_finite() && theta > 0.0 && theta < std::f64::consts::PI;
        if !ok {
            self.violation(param, "must satisfy 0 < theta < pi radians (0 < theta < 180 degrees)");
        }
        ok
    }

    pub(crate) fn check_positive(&mut self, param: Param, value: f64) -> bool {
        let ok = value.is_finite() && value > 0.0;
        if !ok {
            self.violation(param, "must be finite and greater than 0");
        }
        ok
    }

    pub(crate) fn check_finite(&mut self, param: Param, value: f64) -> bool {
        let ok = value.is_finite();
        if !ok {
            self.violation(param, "must be finite");
        }
        ok
    }

    pub(crate) fn check_p(&mut self, p: f64) -> bool {
        let ok = (0.0..=1.0).contains(&p);
        if !ok {
            self.violation(Param::P, "must satisfy 0 <= p <= 1");
        }
        ok
    }

    /// `n > 0` and, for a finite far plane, `0 < f` and `n < f`.
    ///
    /// A non-positive `f` reports only on `far`, so each restriction broken
    /// on its own yields a single entry.
    pub(crate) fn check_depth_range(&mut self, near: f64, far: f64) -> bool {
        let near_ok = self.check_positive(Param::Near, near);
        if !(far.is_finite() && far > 0.0) {
            self.violation(
                Param::Far,
                "must be finite and greater than 0 (use the infinite far mode instead of -1)",
            );
            return false;
        }
        if near_ok && near >= far {
            self.violation(Param::Far, "must be greater than near (0 < n < f)");
            return false;
        }
        near_ok
    }

    /// One line per entry: `VIOLATION <param>: <constraint>` then
    /// `WARNING <param>: <note>`.
    pub fn lines(&self) -> Vec<String> {
        let v = self.violations.iter().map(|i| format!("VIOLATION {}: {}", i.param, i.message));
        let w = self.warnings.iter().map(|i| format!("WARNING {}: {}", i.param, i.message));
        v.chain(w).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines = self.lines();
        if lines.is_empty() {
            return f.write_str("OK");
        }
        f.write_str(&lines.join("\n"))
    }
}

/// Checks a full parameter set. Never fails; the report is the result.
pub fn validate(params: &ProjectionParams) -> ValidationReport {
    let mut r = ValidationReport::default();

    r.check_theta(Param::Theta, params.theta);
    r.check_positive(Param::Alpha, params.alpha);
    r.check_p(params.p);
    let d_ok = r.check_positive(Param::D, params.d);
    r.check_finite(Param::ShearH, params.shear_h);
    r.check_finite(Param::ShearV, params.shear_v);
    if !params.mapping.is_valid() {
        r.violation(Param::Mapping, "power mapping requires a finite c > 0");
    }

    match params.far {
        FarMode::Finite(far) => {
            let range_ok = r.check_depth_range(params.near, far);
            if range_ok && d_ok && (params.d < params.near || params.d > far) {
                r.warning(Param::D, "lies outside [near, far]; allowed, but the equal-size plane is not visible");
            }
        }
        FarMode::Infinite { epsilon } => {
            let near_ok = r.check_positive(Param::Near, params.near);
            if !(epsilon.is_finite() && epsilon >= 0.0) {
                r.violation(Param::Epsilon, "must be finite and >= 0");
            } else if epsilon > 0.0 && epsilon < EPSILON_RECOMMENDED_MIN {
                r.warning(Param::Epsilon, "nonzero epsilon below 2^-21 (~4.8e-7) may not survive depth precision");
            } else if epsilon >= 1.0 {
                r.warning(Param::Epsilon, "epsilon >= 1 inverts the depth mapping; it should be very small");
            }
            if near_ok && d_ok && params.d < params.near {
                r.warning(Param::D, "lies in front of the near plane; allowed, but the equal-size plane is not visible");
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projection::MappingFunction;
    use std::f64::consts::FRAC_PI_2;

    fn base() -> ProjectionParams {
        ProjectionParams::new(FRAC_PI_2, 1.5, 1.0, FarMode::Finite(10.0), 4.0)
            .with_p(0.5)
            .with_shear(0.25, -0.5)
            .with_mapping(MappingFunction::Power(3.0))
    }

    fn only_violation(p: &ProjectionParams, param: Param) {
        let r = validate(p);
        assert_eq!(r.violations.len(), 1, "{r}");
        assert_eq!(r.violations[0].param, param, "{r}");
    }

    #[test]
    fn base_is_clean() {
        let r = validate(&base());
        assert!(r.violations.is_empty() && r.warnings.is_empty(), "{r}");
        assert_eq!(r.to_string(), "OK");
    }

    #[test]
    fn each_restriction_in_isolation() {
        only_violation(&ProjectionParams { theta: 0.0, ..base() }, Param::Theta);
        only_violation(&ProjectionParams { theta: std::f64::consts::PI, ..base() }, Param::Theta);
        only_violation(&ProjectionParams { alpha: 0.0, ..base() }, Param::Alpha);
        only_violation(&ProjectionParams { p: 1.5, ..base() }, Param::P);
        only_violation(&ProjectionParams { p: -0.01, ..base() }, Param::P);
        only_violation(&ProjectionParams { d: 0.0, ..base() }, Param::D);
        only_violation(&ProjectionParams { near: 0.0, ..base() }, Param::Near);
        only_violation(&ProjectionParams { far: FarMode::Finite(-1.0), ..base() }, Param::Far);
        only_violation(&ProjectionParams { far: FarMode::Finite(0.5), ..base() }, Param::Far);
        only_violation(&ProjectionParams { mapping: MappingFunction::Power(0.0), ..base() }, Param::Mapping);
        only_violation(
            &ProjectionParams { far: FarMode::Infinite { epsilon: -1e-3 }, ..base() },
            Param::Epsilon,
        );
    }

    #[test]
    fn non_finite_values_are_violations() {
        only_violation(&ProjectionParams { theta: f64::NAN, ..base() }, Param::Theta);
        only_violation(&ProjectionParams { alpha: f64::INFINITY, ..base() }, Param::Alpha);
        only_violation(&ProjectionParams { p: f64::NAN, ..base() }, Param::P);
        only_violation(&ProjectionParams { shear_v: f64::NAN, ..base() }, Param::ShearV);
        only_violation(&ProjectionParams { far: FarMode::Finite(f64::INFINITY), ..base() }, Param::Far);
    }

    #[test]
    fn d_outside_depth_range_warns() {
        let p = ProjectionParams { near: 1.0, far: FarMode::Finite(3.0), d: 5.0, ..base() };
        let r = validate(&p);
        assert!(r.violations.is_empty(), "{r}");
        assert_eq!(r.warnings.len(), 1);
        assert_eq!(r.warnings[0].param, Param::D);
    }

    #[test]
    fn tiny_epsilon_warns() {
        let p = ProjectionParams { far: FarMode::Infinite { epsilon: 2f64.powi(-30) }, ..base() };
        let r = validate(&p);
        assert!(r.violations.is_empty(), "{r}");
        assert!(r.warned(Param::Epsilon));

        let at_bound = ProjectionParams { far: FarMode::Infinite { epsilon: 2f64.powi(-21) }, ..base() };
        assert!(validate(&at_bound).warnings.is_empty());
        let exact_limit = ProjectionParams { far: FarMode::Infinite { epsilon: 0.0 }, ..base() };
        assert!(validate(&exact_limit).warnings.is_empty());
    }

    #[test]
    fn recommended_epsilon_constant() {
        assert_eq!(EPSILON_RECOMMENDED_MIN, 2f64.powi(-21));
    }

    #[test]
    fn report_lines() {
        let p = ProjectionParams { theta: 0.0, d: 50.0, ..base() };
        let lines = validate(&p).lines();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("VIOLATION theta: "));
        assert!(lines[1].starts_with("WARNING d: "));
    }
}
