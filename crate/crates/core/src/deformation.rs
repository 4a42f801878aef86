//! The k-deformations `a ⊞ₖ b = k ⊡ (a/k ⊞ b/k)` of the menhir loop.
//!
//! `k = 1` is the menhir loop itself and `k = 2` is relativistic velocity
//! composition. The halving map [`mu`] is an isomorphism from the `k = 2`
//! loop onto the menhir loop: `μ(a ⊕ b) = μ(a) ⊞ μ(b)`.

use core::fmt;

use crate::disk::{boxplus, DiskPoint};
use crate::error::{Error, Result};
use crate::scaling::{box_double, box_half, box_scale, box_unscale, from_rapidity, to_rapidity};

/// `μ = ½ ⊡ ·`, taking velocities to menhir points.
pub fn mu(a: &DiskPoint) -> DiskPoint {
    box_half(a)
}

/// `μ⁻¹ = 2 ⊡ ·`.
pub fn mu_inv(a: &DiskPoint) -> DiskPoint {
    box_double(a)
}

/// Relativistic composition `a ⊕ b = μ⁻¹(μ(a) ⊞ μ(b))`.
pub fn relativistic_add(a: &DiskPoint, b: &DiskPoint) -> Result<DiskPoint> {
    Ok(mu_inv(&boxplus(&mu(a), &mu(b))?))
}

/// The k-deformed product. `k_add(1, ..)` is exactly [`boxplus`].
pub fn k_add(k: u32, a: &DiskPoint, b: &DiskPoint) -> Result<DiskPoint> {
    match k {
        0 => Err(Error::ZeroScale),
        1 => boxplus(a, b),
        _ => box_scale(k, &boxplus(&box_unscale(k, a)?, &box_unscale(k, b)?)?),
    }
}

/// Candidate `k → ∞` limit of [`k_add`]: addition of rapidity vectors.
///
/// Not a closed-form result of the deformation family; it is the first-order
/// expansion of `k ⊡ (a/k ⊞ b/k)` and is checked numerically against large `k`.
/// Commutative and associative.
pub fn limit_add(a: &DiskPoint, b: &DiskPoint) -> Result<DiskPoint> {
    from_rapidity(&to_rapidity(a)?.try_add(&to_rapidity(b)?)?)
}

/// Selects one of the loop products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Product {
    /// `⊞`
    Menhir,
    /// `⊕`
    Relativistic,
    /// `⊞ₖ` for `k ≥ 1`
    Deformed(u32),
    /// `⊞∞`
    Limit,
}

impl Product {
    /// `k` as a product: 1 → menhir, 2 → relativistic, `None` → limit.
    pub fn from_k(k: Option<u32>) -> Result<Self> {
        match k {
            None => Ok(Product::Limit),
            Some(0) => Err(Error::ZeroScale),
            Some(1) => Ok(Product::Menhir),
            Some(2) => Ok(Product::Relativistic),
            Some(k) => Ok(Product::Deformed(k)),
        }
    }

    pub fn apply(&self, a: &DiskPoint, b: &DiskPoint) -> Result<DiskPoint> {
        match *self {
            Product::Menhir => boxplus(a, b),
            Product::Relativistic => relativistic_add(a, b),
            Product::Deformed(k) => k_add(k, a, b),
            Product::Limit => limit_add(a, b),
        }
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Product::Menhir => f.write_str("menhir"),
            Product::Relativistic => f.write_str("relativistic"),
            Product::Deformed(k) => write!(f, "k={k}"),
            Product::Limit => f.write_str("limit"),
        }
    }
}
