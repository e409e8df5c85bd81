//! JSON form of `matrix --format json`.

use genproj::{FarMode, Mat4, MappingFunction, ProjectionParams};
use serde::{Deserialize, Serialize};

/// Parameters echoed next to the matrix. Angles are radians; `far` is
/// `null` for an infinite far plane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsDoc {
    pub theta: f64,
    pub alpha: f64,
    pub near: f64,
    pub far: Option<f64>,
    pub epsilon: f64,
    pub p: f64,
    pub d: f64,
    pub shear_h: f64,
    pub shear_v: f64,
    pub mapping: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub rows: [[f64; 4]; 4],
    pub params: ParamsDoc,
}

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("matrix document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("matrix document: {0}")]
    Mapping(#[from] genproj::projection::ParseMappingError),
}

impl From<&ProjectionParams> for ParamsDoc {
    fn from(p: &ProjectionParams) -> Self {
        let (far, epsilon) = match p.far {
            FarMode::Finite(f) => (Some(f), 0.0),
            FarMode::Infinite { epsilon } => (None, epsilon),
        };
        ParamsDoc {
            theta: p.theta,
            alpha: p.alpha,
            near: p.near,
            far,
            epsilon,
            p: p.p,
            d: p.d,
            shear_h: p.shear_h,
            shear_v: p.shear_v,
            mapping: p.mapping.to_string(),
        }
    }
}

impl ParamsDoc {
    pub fn to_params(&self) -> Result<ProjectionParams, DocError> {
        let far = match self.far {
            Some(f) => FarMode::Finite(f),
            None => FarMode::Infinite { epsilon: self.epsilon },
        };
        Ok(ProjectionParams {
            theta: self.theta,
            alpha: self.alpha,
            near: self.near,
            far,
            p: self.p,
            d: self.d,
            shear_h: self.shear_h,
            shear_v: self.shear_v,
            mapping: self.mapping.parse::<MappingFunction>()?,
        })
    }
}

impl MatrixDocument {
    pub fn new(m: &Mat4, params: &ProjectionParams) -> Self {
        // drop negative zeros so output does not depend on how a zero arose
        let rows = m.rows().map(|r| r.map(|v| v + 0.0));
        MatrixDocument { rows, params: params.into() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("finite floats always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use genproj::generalized;

    #[test]
    fn round_trips_params() {
        let params = ProjectionParams::new(1.1, 1.7, 0.3, FarMode::Infinite { epsilon: 1e-6 }, 4.0)
            .with_p(0.35)
            .with_shear(-0.25, 0.5)
            .with_mapping(MappingFunction::Power(3.0));
        let doc = MatrixDocument::new(&generalized(&params).unwrap(), &params);
        let back = MatrixDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.params.to_params().unwrap(), params);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(MatrixDocument::from_json("{}").is_err());
        assert!(MatrixDocument::from_json("[1,2,3]").is_err());
        let params = ProjectionParams::new(1.0, 1.0, 1.0, FarMode::Finite(3.0), 2.0);
        let mut doc = MatrixDocument::new(&generalized(&params).unwrap(), &params);
        doc.params.mapping = "cubic".into();
        let parsed = MatrixDocument::from_json(&doc.to_json()).unwrap();
        assert!(parsed.params.to_params().is_err());
    }
}
