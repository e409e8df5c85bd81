//! 4×4 and 4-vector arithmetic plus the interpolation primitive.
//!
//! Matrices are row-major and indexed `m[row][col]`, so a displayed matrix
//! reads off the source row by row. Vectors are columns: `M · v`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative singularity threshold: a matrix is treated as non-invertible
/// when `|det|` falls below this fraction of the product of its row norms
/// (Hadamard's bound on `|det|`). Scale-invariant, so small-but-regular
/// matrices such as wide orthographic projections still invert.
pub const SINGULAR_DET: f64 = 1e-12;

/// Linear interpolation `x(1 − z) + yz`, evaluated exactly in that form.
///
/// The two-product form returns `x` bit-for-bit at `z = 0` and `y` at
/// `z = 1`, which the single-multiply `x + (y − x)z` does not.
#[inline]
pub fn lerp(x: f64, y: f64, z: f64) -> f64 {
    x * (1.0 - z) + y * z
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// A point after the perspective divide.
pub type NdcPoint = Vec3;

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn length(self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Unit vector in the same direction, or `None` for (near-)zero input.
    pub fn normalized(self) -> Option<Vec3> {
        let len = self.length();
        (len > 1e-300 && len.is_finite()).then(|| self * (1.0 / len))
    }

    /// Homogeneous point `(x, y, z, 1)`.
    pub fn extend(self, w: f64) -> Vec4 {
        Vec4::new(self.x, self.y, self.z, w)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec4 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub w: f64,
}

impl Vec4 {
    pub const fn new(x: f64, y: f64, z: f64, w: f64) -> Self {
        Self { x, y, z, w }
    }

    pub fn from_array([x, y, z, w]: [f64; 4]) -> Self {
        Self { x, y, z, w }
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x, self.y, self.z, self.w]
    }

    pub fn dot(self, o: Vec4) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z + self.w * o.w
    }

    /// Componentwise `lerp(self, other, t)`.
    pub fn lerp(self, o: Vec4, t: f64) -> Vec4 {
        Vec4::new(
            lerp(self.x, o.x, t),
            lerp(self.y, o.y, t),
            lerp(self.z, o.z, t),
            lerp(self.w, o.w, t),
        )
    }

    /// Drops w without dividing.
    pub fn xyz(self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }
}

impl Add for Vec4 {
    type Output = Vec4;
    fn add(self, o: Vec4) -> Vec4 {
        Vec4::new(self.x + o.x, self.y + o.y, self.z + o.z, self.w + o.w)
    }
}

impl Sub for Vec4 {
    type Output = Vec4;
    fn sub(self, o: Vec4) -> Vec4 {
        Vec4::new(self.x - o.x, self.y - o.y, self.z - o.z, self.w - o.w)
    }
}

impl Mul<f64> for Vec4 {
    type Output = Vec4;
    fn mul(self, s: f64) -> Vec4 {
        Vec4::new(self.x * s, self.y * s, self.z * s, self.w * s)
    }
}

/// 4×4 real matrix, row-major.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Mat4 {
    pub m: [[f64; 4]; 4],
}

impl Mat4 {
    pub const ZERO: Mat4 = Mat4 { m: [[0.0; 4]; 4] };

    pub const IDENTITY: Mat4 = Mat4 {
        m: [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ],
    };

    pub const fn from_rows(m: [[f64; 4]; 4]) -> Self {
        Self { m }
    }

    pub fn diagonal(d: [f64; 4]) -> Self {
        let mut out = Mat4::ZERO;
        for (i, v) in d.into_iter().enumerate() {
            out.m[i][i] = v;
        }
        out
    }

    pub fn rows(&self) -> [[f64; 4]; 4] {
        self.m
    }

    pub fn row(&self, r: usize) -> Vec4 {
        Vec4::from_array(self.m[r])
    }

    pub fn transpose(&self) -> Mat4 {
        let mut out = Mat4::ZERO;
        for r in 0..4 {
            for c in 0..4 {
                out.m[c][r] = self.m[r][c];
            }
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|v| v.is_finite())
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Mat4) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec4(&self, v: Vec4) -> Vec4 {
        Vec4::new(
            self.row(0).dot(v),
            self.row(1).dot(v),
            self.row(2).dot(v),
            self.row(3).dot(v),
        )
    }

    pub fn mul_mat(&self, o: &Mat4) -> Mat4 {
        let mut out = Mat4::ZERO;
        for r in 0..4 {
            for c in 0..4 {
                out.m[r][c] = (0..4).map(|k| self.m[r][k] * o.m[k][c]).sum();
            }
        }
        out
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> f64 {
        let mut a = self.m;
        let mut det = 1.0;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
                .unwrap_or(col);
            if a[pivot][col] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for r in col + 1..4 {
                let f = a[r][col] / a[col][col];
                for c in col..4 {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
        det
    }

    /// Inverse by Gauss–Jordan elimination with partial pivoting.
    ///
    /// Fails with [`Error::Singular`] when `|det|` is below
    /// [`SINGULAR_DET`] times the product of the row norms.
    pub fn inverse(&self) -> Result<Mat4> {
        let det = self.determinant();
        let bound: f64 = self.m.iter().map(|r| r.iter().map(|v| v * v).sum::<f64>().sqrt()).product();
        if !(bound > 0.0 && det.abs() >= SINGULAR_DET * bound) {
            return Err(Error::Singular { det });
        }

        let mut a = self.m;
        let mut inv = Mat4::IDENTITY.m;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
                .unwrap_or(col);
            a.swap(pivot, col);
            inv.swap(pivot, col);

            let p = a[col][col];
            for c in 0..4 {
                a[col][c] /= p;
                inv[col][c] /= p;
            }
            for r in 0..4 {
                if r == col {
                    continue;
                }
                let f = a[r][col];
                if f == 0.0 {
                    continue;
                }
                for c in 0..4 {
                    a[r][c] -= f * a[col][c];
                    inv[r][c] -= f * inv[col][c];
                }
            }
        }
        Ok(Mat4 { m: inv })
    }
}

/// Standard matrix–vector product `M · v`.
pub fn mat4_mul_vec4(m: &Mat4, v: Vec4) -> Vec4 {
    m.mul_vec4(v)
}

pub fn mat4_inverse(m: &Mat4) -> Result<Mat4> {
    m.inverse()
}

impl Index<usize> for Mat4 {
    type Output = [f64; 4];
    fn index(&self, row: usize) -> &[f64; 4] {
        &self.m[row]
    }
}

impl IndexMut<usize> for Mat4 {
    fn index_mut(&mut self, row: usize) -> &mut [f64; 4] {
        &mut self.m[row]
    }
}

impl Mul<Vec4> for Mat4 {
    type Output = Vec4;
    fn mul(self, v: Vec4) -> Vec4 {
        self.mul_vec4(v)
    }
}

impl Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, o: Mat4) -> Mat4 {
        self.mul_mat(&o)
    }
}

impl fmt::Debug for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat4 [")?;
        for row in &self.m {
            writeln!(f, "  {:?},", row)?;
        }
        write!(f, "]")
    }
}
