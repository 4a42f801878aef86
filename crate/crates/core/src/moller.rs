//! Møller's vector formula for relativistic velocity composition, the collinear
//! Poincaré formula, and the embeddings of Euclidean velocities into the
//! division algebras.
//!
//! This module works on plain coordinate vectors and never calls into the
//! loop code, so it can serve as an independent check of [`relativistic_add`].
//!
//! [`relativistic_add`]: crate::deformation::relativistic_add

use core::fmt;

use crate::algebra::{Algebra, Element};
use crate::disk::DiskPoint;
use crate::error::{Error, Result};

/// `|v|` below this takes the `v = 0` branch of [`moller_add`].
pub const ZERO_VELOCITY: f64 = 1e-14;

/// Largest scalar part tolerated when projecting onto a pure-imaginary space.
pub const SCALAR_TOLERANCE: f64 = 1e-10;

/// Supported velocity dimensions.
pub const DIMS: [usize; 6] = [1, 2, 3, 4, 7, 8];

/// A subluminal velocity in units of c.
#[derive(Clone, Copy, PartialEq)]
pub struct Velocity {
    n: usize,
    comps: [f64; 8],
}

impl Velocity {
    pub fn new(components: &[f64]) -> Result<Self> {
        let n = components.len();
        if !DIMS.contains(&n) {
            return Err(Error::UnsupportedDimension(n));
        }
        if components.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut comps = [0.0; 8];
        comps[..n].copy_from_slice(components);
        let v = Self { n, comps };
        let norm = v.speed();
        if norm >= 1.0 {
            return Err(Error::OutsideDisk { norm });
        }
        Ok(v)
    }

    pub fn zero(n: usize) -> Result<Self> {
        if !DIMS.contains(&n) {
            return Err(Error::UnsupportedDimension(n));
        }
        Ok(Self { n, comps: [0.0; 8] })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[f64] {
        &self.comps[..self.n]
    }

    pub fn speed(&self) -> f64 {
        libm::sqrt(dot(self.components(), self.components()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(self
            .components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| libm::fabs(a - b))
            .fold(0.0, f64::max))
    }
}

impl fmt::Debug for Velocity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Velocity{:?}", self.components())
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Møller's composition `v ⊕ u`, evaluated term by term.
pub fn moller_add(v: &Velocity, u: &Velocity) -> Result<Velocity> {
    if v.n != u.n {
        return Err(Error::DimensionMismatch { left: v.n, right: u.n });
    }
    let (vs, us) = (v.components(), u.components());
    let v2 = dot(vs, vs);
    if libm::sqrt(v2) < ZERO_VELOCITY {
        return Ok(*u);
    }
    let vu = dot(vs, us);
    let root = libm::sqrt(1.0 - v2);
    let along_v = (1.0 - root) * vu / v2 + 1.0;
    let den = 1.0 + vu;
    let mut out = [0.0; 8];
    for i in 0..v.n {
        out[i] = (root * us[i] + along_v * vs[i]) / den;
    }
    Velocity::new(&out[..v.n])
}

/// Collinear composition `(x + y) / (1 + xy)`.
pub fn poincare_add(x: f64, y: f64) -> f64 {
    (x + y) / (1.0 + x * y)
}

/// Velocity → algebra element: ℝ, ℂ, pure-imaginary ℍ, ℍ, pure-imaginary 𝕆, 𝕆
/// for `n` = 1, 2, 3, 4, 7, 8.
pub fn embed(v: &Velocity) -> Result<DiskPoint> {
    let (alg, offset) = layout(v.n)?;
    let mut coeffs = [0.0; 8];
    coeffs[offset..offset + v.n].copy_from_slice(v.components());
    DiskPoint::new(Element::new(alg, &coeffs[..alg.dim()])?)
}

/// Inverse of [`embed`].
pub fn project(a: &DiskPoint, n: usize) -> Result<Velocity> {
    let (alg, offset) = layout(n)?;
    if a.algebra() != alg {
        return Err(Error::DimensionMismatch { left: alg.dim(), right: a.algebra().dim() });
    }
    if offset == 1 {
        let s = a.coeffs()[0];
        if libm::fabs(s) > SCALAR_TOLERANCE {
            return Err(Error::NonZeroScalarPart(s));
        }
    }
    Velocity::new(&a.coeffs()[offset..offset + n])
}

/// Target algebra and first used coefficient for an `n`-vector.
pub fn layout(n: usize) -> Result<(Algebra, usize)> {
    match n {
        1 => Ok((Algebra::Real, 0)),
        2 => Ok((Algebra::Complex, 0)),
        3 => Ok((Algebra::Quaternion, 1)),
        4 => Ok((Algebra::Quaternion, 0)),
        7 => Ok((Algebra::Octonion, 1)),
        8 => Ok((Algebra::Octonion, 0)),
        _ => Err(Error::UnsupportedDimension(n)),
    }
}
