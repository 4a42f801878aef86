//! Box scaling: `k ⊡ a = a ⊞ a ⊞ ⋯ ⊞ a` and its inverse.
//!
//! Every ⊞-power of `a` stays on the ray through `a`, where ⊞ reduces to
//! `tanh` addition of the rapidity `artanh |a|`. The closed forms below use
//! that; the iterated products serve as the test oracle.

use core::ops::Add;

use crate::algebra::{Algebra, Element};
use crate::disk::DiskPoint;
use crate::error::{Error, Result};

/// Inputs with `|a|` above `1 − NEAR_LIGHTLIKE` are refused by the rapidity maps.
pub const NEAR_LIGHTLIKE: f64 = 1e-12;

/// `artanh(|a|) · a/|a|`, the additive coordinate along a ray.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rapidity(Element);

impl Rapidity {
    pub fn new(vec: Element) -> Self {
        Self(vec)
    }

    pub fn zero(algebra: Algebra) -> Self {
        Self(Element::zero(algebra))
    }

    pub fn vec(&self) -> &Element {
        &self.0
    }

    pub fn magnitude(&self) -> f64 {
        self.0.norm()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.try_add(&other.0)?))
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self(self.0.scale(factor))
    }
}

impl Add for Rapidity {
    type Output = Rapidity;
    fn add(self, rhs: Rapidity) -> Rapidity {
        Rapidity(self.0 + rhs.0)
    }
}

/// `2 ⊡ a = a ⊞ a = 2a / (1 + |a|²)`.
pub fn box_double(a: &DiskPoint) -> DiskPoint {
    let v = a.value();
    DiskPoint::trusted(v.scale(2.0 / (1.0 + v.norm_sq())))
}

/// `½ ⊡ a = a / (1 + √(1 − |a|²))`.
pub fn box_half(a: &DiskPoint) -> DiskPoint {
    let v = a.value();
    DiskPoint::trusted(v.scale(1.0 / (1.0 + libm::sqrt(1.0 - v.norm_sq()))))
}

pub fn to_rapidity(a: &DiskPoint) -> Result<Rapidity> {
    let r = a.norm();
    if r == 0.0 {
        return Ok(Rapidity::zero(a.algebra()));
    }
    check_speed(r)?;
    Ok(Rapidity(a.value().scale(libm::atanh(r) / r)))
}

/// Inverse of [`to_rapidity`]; errors if `tanh` saturates to the boundary.
pub fn from_rapidity(rho: &Rapidity) -> Result<DiskPoint> {
    let m = rho.magnitude();
    if m == 0.0 {
        return Ok(DiskPoint::zero(rho.0.algebra()));
    }
    let speed = libm::tanh(m);
    DiskPoint::new(rho.0.scale(speed / m)).map_err(|_| Error::NearLightlike { norm: speed })
}

/// `k ⊡ a`, in closed form `tanh(k · artanh |a|) · a/|a|`.
pub fn box_scale(k: u32, a: &DiskPoint) -> Result<DiskPoint> {
    rescale(k, a, k as f64)
}

/// `(1/k) ⊡ a`, the inverse of [`box_scale`].
pub fn box_unscale(k: u32, a: &DiskPoint) -> Result<DiskPoint> {
    rescale(k, a, 1.0 / k as f64)
}

fn rescale(k: u32, a: &DiskPoint, factor: f64) -> Result<DiskPoint> {
    match k {
        0 => Err(Error::ZeroScale),
        1 => Ok(*a),
        _ => {
            let r = a.norm();
            if r == 0.0 {
                return Ok(*a);
            }
            check_speed(r)?;
            let speed = libm::tanh(factor * libm::atanh(r));
            DiskPoint::new(a.value().scale(speed / r)).map_err(|_| Error::NearLightlike { norm: speed })
        }
    }
}

fn check_speed(r: f64) -> Result<()> {
    if r > 1.0 - NEAR_LIGHTLIKE {
        Err(Error::NearLightlike { norm: r })
    } else {
        Ok(())
    }
}
