//! The menhir loop on the open unit ball.
//!
//! `a ⊞ b = (a + b)(1 + āb)⁻¹`, with the inverse applied on the right. The
//! product has identity `0` and two-sided negatives `−a`; it is neither
//! commutative nor associative outside ℝ. Left and right division are
//! solved as real-linear systems in the unknown's coefficients.

use core::fmt;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg;

/// Points with `|x| ≥ 1 − BOUNDARY_MARGIN` are rejected at construction.
pub const BOUNDARY_MARGIN: f64 = 1e-15;

/// An element strictly inside the open unit ball.
#[derive(Clone, Copy, PartialEq)]
pub struct DiskPoint(Element);

impl DiskPoint {
    pub fn new(value: Element) -> Result<Self> {
        let norm = value.norm();
        if norm < 1.0 - BOUNDARY_MARGIN {
            Ok(Self(value))
        } else {
            Err(Error::OutsideDisk { norm })
        }
    }

    /// Builds a point whose algebra is inferred from the slice length.
    pub fn from_slice(coeffs: &[f64]) -> Result<Self> {
        Self::new(Element::from_slice(coeffs)?)
    }

    pub fn zero(algebra: Algebra) -> Self {
        Self(Element::zero(algebra))
    }

    /// Wraps a value known to lie in the ball (closure of the loop operations).
    pub(crate) fn trusted(value: Element) -> Self {
        debug_assert!(value.norm_sq() < 1.0 + 1e-9, "left the ball: {value:?}");
        Self(value)
    }

    pub fn value(&self) -> &Element {
        &self.0
    }

    pub fn into_inner(self) -> Element {
        self.0
    }

    pub fn algebra(&self) -> Algebra {
        self.0.algebra()
    }

    pub fn coeffs(&self) -> &[f64] {
        self.0.coeffs()
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.norm_sq()
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.0.max_abs_diff(&other.0)
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.0.approx_eq(&other.0, eps)
    }
}

impl fmt::Debug for DiskPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for DiskPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl TryFrom<Element> for DiskPoint {
    type Error = Error;
    fn try_from(value: Element) -> Result<Self> {
        Self::new(value)
    }
}

/// The menhir product `(a + b)(1 + āb)⁻¹`.
pub fn boxplus(a: &DiskPoint, b: &DiskPoint) -> Result<DiskPoint> {
    let (a, b) = (&a.0, &b.0);
    let num = a.try_add(b)?;
    let den = Element::one(a.algebra()) + a.conj() * *b;
    // |āb| < 1 inside the ball, so the denominator never vanishes.
    let den_inv = den.inverse()?;
    Ok(DiskPoint::trusted(num * den_inv))
}

pub fn neg(a: &DiskPoint) -> DiskPoint {
    DiskPoint(-a.0)
}

/// The unique `x` with `a ⊞ x = b`.
///
/// Multiplying out gives `x − b(āx) = b − a`, which is real-linear in `x`.
pub fn left_divide(a: &DiskPoint, b: &DiskPoint) -> Result<DiskPoint> {
    let a_bar = a.0.conj();
    let b = b.0;
    solve_linear(&a.0, &b, |x| x - b * (a_bar * x))
}

/// The unique `x` with `x ⊞ a = b`, from `x − b(x̄a) = b − a`.
pub fn right_divide(a: &DiskPoint, b: &DiskPoint) -> Result<DiskPoint> {
    let a_val = a.0;
    let b = b.0;
    solve_linear(&a.0, &b, |x| x - b * (x.conj() * a_val))
}

fn solve_linear(a: &Element, b: &Element, op: impl Fn(Element) -> Element) -> Result<DiskPoint> {
    let rhs_el = b.try_sub(a)?;
    let alg = a.algebra();
    let n = alg.dim();
    let mut m = [[0.0; linalg::MAX]; linalg::MAX];
    for j in 0..n {
        let col = op(Element::basis(alg, j));
        for (i, c) in col.coeffs().iter().enumerate() {
            m[i][j] = *c;
        }
    }
    let mut rhs = [0.0; linalg::MAX];
    rhs[..n].copy_from_slice(rhs_el.coeffs());
    let x = linalg::solve(n, m, rhs).ok_or(Error::DivisionUndefined)?;
    let x = Element::new(alg, &x[..n])?;
    DiskPoint::new(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[f64]) -> DiskPoint {
        DiskPoint::from_slice(c).unwrap()
    }

    #[test]
    fn constructor_rejects_boundary() {
        assert!(DiskPoint::from_slice(&[1.0]).is_err());
        assert!(DiskPoint::from_slice(&[0.6, 0.8]).is_err());
        assert!(DiskPoint::from_slice(&[1.0 - 1e-16]).is_err());
        assert!(DiskPoint::from_slice(&[0.999_999]).is_ok());
    }

    #[test]
    fn zero_is_two_sided_identity() {
        let a = pt(&[0.1, -0.4, 0.2, 0.3]);
        let z = DiskPoint::zero(Algebra::Quaternion);
        assert_eq!(boxplus(&z, &a).unwrap(), a);
        assert_eq!(boxplus(&a, &z).unwrap(), a);
    }

    #[test]
    fn worked_example_menhir_step() {
        let got = boxplus(&pt(&[1.0 / 3.0, 0.0]), &pt(&[0.2, 0.4])).unwrap();
        assert!(got.approx_eq(&pt(&[7.0 / 13.0, 4.0 / 13.0]), 1e-15));
    }

    #[test]
    fn real_half_plus_half() {
        // (0.5 + 0.5) / (1 + 0.25)
        let got = boxplus(&pt(&[0.5]), &pt(&[0.5])).unwrap();
        assert!((got.coeffs()[0] - 0.8).abs() < 1e-16);
    }

    #[test]
    fn negatives() {
        let z = DiskPoint::zero(Algebra::Octonion);
        assert_eq!(neg(&z), z);
        let a = pt(&[0.2, 0.1, -0.3, 0.4]);
        assert_eq!(neg(&neg(&a)), a);
        assert!(boxplus(&a, &neg(&a)).unwrap().approx_eq(&DiskPoint::zero(Algebra::Quaternion), 1e-15));
        assert!(boxplus(&neg(&a), &a).unwrap().approx_eq(&DiskPoint::zero(Algebra::Quaternion), 1e-15));
    }

    #[test]
    fn trivial_divisions() {
        let a = pt(&[0.3, 0.2, -0.1, 0.05, 0.0, 0.1, -0.2, 0.3]);
        let z = DiskPoint::zero(Algebra::Octonion);
        assert!(left_divide(&a, &a).unwrap().approx_eq(&z, 1e-15));
        assert!(right_divide(&a, &a).unwrap().approx_eq(&z, 1e-15));
        assert!(left_divide(&z, &a).unwrap().approx_eq(&a, 1e-15));
        assert!(right_divide(&z, &a).unwrap().approx_eq(&a, 1e-15));
    }

    #[test]
    fn complex_left_division_matches_closed_form() {
        // x = (b − a)(1 − bā)⁻¹ in a commutative algebra
        let a = pt(&[0.3, -0.5]);
        let b = pt(&[-0.2, 0.6]);
        let (ae, be) = (*a.value(), *b.value());
        let closed = (be - ae) * (Element::one(Algebra::Complex) - be * ae.conj()).inverse().unwrap();
        let x = left_divide(&a, &b).unwrap();
        assert!(x.value().approx_eq(&closed, 1e-14));
    }

    #[test]
    fn mixed_algebras_rejected() {
        let a = pt(&[0.1, 0.2]);
        let b = pt(&[0.1]);
        assert!(matches!(boxplus(&a, &b), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(left_divide(&a, &b), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(right_divide(&a, &b), Err(Error::DimensionMismatch { .. })));
    }
}
