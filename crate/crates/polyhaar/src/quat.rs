//! Quaternion algebra and the Hopf maps that convert model-space
//! coordinates into polygon edge vectors.
//!
//! We identify R^3 with the imaginary quaternions, so a quaternion
//! `q = w + x i + y j + z k` acts on vectors by conjugation `v -> q̄ v q`.
//! The Hopf map `hopf(q) = q̄ i q` squares norms: `|hopf(q)| = |q|^2`, which
//! is what lets a point on a radius-sqrt(2) sphere become a polygon of total
//! length exactly 2, one edge per quaternionic coordinate.

use num_complex::Complex64;

/// 2D vector (coordinates of the i ⊕ k plane for planar polygon edges).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }
}

/// 3D vector, identified with the imaginary quaternions (i, j, k axes).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    /// Embed a planar vector as (x, 0, z): the i and k coefficients of an
    /// imaginary quaternion in the i ⊕ k plane.
    pub const fn from_planar(v: Vec2) -> Self {
        Vec3::new(v.x, 0.0, v.y)
    }

    pub fn dot(self, rhs: Vec3) -> f64 {
        self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    pub fn cross(self, rhs: Vec3) -> Vec3 {
        Vec3::new(
            self.y * rhs.z - self.z * rhs.y,
            self.z * rhs.x - self.x * rhs.z,
            self.x * rhs.y - self.y * rhs.x,
        )
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl std::ops::Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl std::ops::Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl std::ops::Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl std::ops::Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl std::ops::AddAssign for Vec3 {
    fn add_assign(&mut self, rhs: Vec3) {
        *self = *self + rhs;
    }
}

/// Quaternion `w + x i + y j + z k` (scalar first, dimensionless).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Build `q = a + b j` from the complex pair (a, b).
    ///
    /// Since `(y + z i) j = y j + z k`, the pair maps to
    /// `(w, x, y, z) = (Re a, Im a, Re b, Im b)`.
    pub fn from_complex_pair(a: Complex64, b: Complex64) -> Self {
        Quaternion::new(a.re, a.im, b.re, b.im)
    }

    /// Decompose as `q = a + b j` with complex a, b.
    pub fn complex_pair(self) -> (Complex64, Complex64) {
        (
            Complex64::new(self.w, self.x),
            Complex64::new(self.y, self.z),
        )
    }

    pub fn norm_sq(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Imaginary part as a vector in R^3.
    pub fn imag(self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }
}

impl std::ops::Mul for Quaternion {
    type Output = Quaternion;

    /// Hamilton product with ij = k, jk = i, ki = j.
    fn mul(self, r: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        )
    }
}

/// Hamilton product as a free function.
pub fn quat_mul(p: Quaternion, q: Quaternion) -> Quaternion {
    p * q
}

/// Quaternion conjugation as a free function.
pub fn quat_conj(q: Quaternion) -> Quaternion {
    q.conj()
}

/// The Hopf map `q ↦ q̄ i q` in coordinates:
///
/// ```text
/// hopf(w + x i + y j + z k)
///   = (w² + x² − y² − z²) i + (2xy − 2wz) j + (2wy + 2xz) k
/// ```
///
/// Components are returned in (i, j, k) order. `|hopf(q)| = |q|²` exactly in
/// real arithmetic, so norm-sq-ℓ model coordinates become length-ℓ edges.
pub fn hopf(q: Quaternion) -> Vec3 {
    let Quaternion { w, x, y, z } = q;
    Vec3::new(
        w * w + x * x - y * y - z * z,
        2.0 * (x * y - w * z),
        2.0 * (w * y + x * z),
    )
}

/// The Hopf map on the complex pair `q = a + b j`:
/// `(|a|² − |b|², 2 Im(a b̄), 2 Re(a b̄))`.
///
/// Agrees componentwise with [`hopf`] applied to the reassembled quaternion.
pub fn hopf_complex(a: Complex64, b: Complex64) -> Vec3 {
    let ab = a * b.conj();
    Vec3::new(a.norm_sqr() - b.norm_sqr(), 2.0 * ab.im, 2.0 * ab.re)
}

/// The Hopf map restricted to the 1 ⊕ j plane (a, b real):
/// `hopf(a + b j) = (a² − b²) i + 2ab k`, returned as the 2D coordinates
/// (i-coefficient, k-coefficient) of the i ⊕ k plane. `|output| = a² + b²`.
pub fn hopf_planar(a: f64, b: f64) -> Vec2 {
    Vec2::new(a * a - b * b, 2.0 * a * b)
}

/// 3×3 real matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rot3(pub [[f64; 3]; 3]);

impl Rot3 {
    pub const IDENTITY: Rot3 = Rot3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    pub fn column(&self, j: usize) -> Vec3 {
        Vec3::new(self.0[0][j], self.0[1][j], self.0[2][j])
    }

    pub fn apply(&self, v: Vec3) -> Vec3 {
        let m = &self.0;
        Vec3::new(
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        )
    }
}

/// The frame Hopf map: the matrix with columns `q̄ i q`, `q̄ j q`, `q̄ k q`.
///
/// For unit q this is the rotation matrix realizing conjugation,
/// `frame_hopf(q) v = q̄ v q`, and `frame_hopf(q) = frame_hopf(-q)`. For
/// general q the columns stay pairwise orthogonal with common norm `|q|²`.
pub fn frame_hopf(q: Quaternion) -> Rot3 {
    let Quaternion { w, x, y, z } = q;
    let (ww, xx, yy, zz) = (w * w, x * x, y * y, z * z);
    Rot3([
        [
            ww + xx - yy - zz,
            2.0 * (x * y + w * z),
            2.0 * (x * z - w * y),
        ],
        [
            2.0 * (x * y - w * z),
            ww - xx + yy - zz,
            2.0 * (w * x + y * z),
        ],
        [
            2.0 * (w * y + x * z),
            2.0 * (y * z - w * x),
            ww - xx - yy + zz,
        ],
    ])
}
