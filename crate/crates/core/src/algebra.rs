//! The normed division algebras ℝ, ℂ, ℍ and 𝕆 built by Cayley–Dickson doubling.
//!
//! Elements carry their algebra at runtime and store coefficients scalar-first:
//! index 0 is the real part, indices `1..dim` span the imaginary part. Doubling
//! writes an element as a pair `(p, q)` of half-dimension elements and multiplies
//! with `(p, q)(r, s) = (pr − s̄q, sp + qr̄)`, which gives `ij = k` in ℍ.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Default absolute tolerance used by [`Element::approx_eq`] callers.
pub const DEFAULT_EPS: f64 = 1e-10;

/// One of the four normed division algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    Real,
    Complex,
    Quaternion,
    Octonion,
}

impl Algebra {
    pub const ALL: [Algebra; 4] = [
        Algebra::Real,
        Algebra::Complex,
        Algebra::Quaternion,
        Algebra::Octonion,
    ];

    pub const fn dim(self) -> usize {
        match self {
            Algebra::Real => 1,
            Algebra::Complex => 2,
            Algebra::Quaternion => 4,
            Algebra::Octonion => 8,
        }
    }

    pub fn from_dim(dim: usize) -> Result<Self> {
        match dim {
            1 => Ok(Algebra::Real),
            2 => Ok(Algebra::Complex),
            4 => Ok(Algebra::Quaternion),
            8 => Ok(Algebra::Octonion),
            n => Err(Error::UnsupportedDimension(n)),
        }
    }

    /// Single-letter code: `r`, `c`, `h`, `o`.
    pub const fn code(self) -> char {
        match self {
            Algebra::Real => 'r',
            Algebra::Complex => 'c',
            Algebra::Quaternion => 'h',
            Algebra::Octonion => 'o',
        }
    }

    pub fn from_code(code: char) -> Option<Self> {
        match code.to_ascii_lowercase() {
            'r' => Some(Algebra::Real),
            'c' => Some(Algebra::Complex),
            'h' => Some(Algebra::Quaternion),
            'o' => Some(Algebra::Octonion),
            _ => None,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Algebra::Real => "R",
            Algebra::Complex => "C",
            Algebra::Quaternion => "H",
            Algebra::Octonion => "O",
        };
        f.write_str(name)
    }
}

/// A value in one of the four algebras.
///
/// Coefficients past `dim` are kept at zero, so derived equality is exact
/// coefficientwise equality.
#[derive(Clone, Copy, PartialEq)]
pub struct Element {
    algebra: Algebra,
    coeffs: [f64; 8],
}

impl Element {
    /// Builds an element from exactly `algebra.dim()` finite coefficients.
    pub fn new(algebra: Algebra, coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                left: algebra.dim(),
                right: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut buf = [0.0; 8];
        buf[..coeffs.len()].copy_from_slice(coeffs);
        Ok(Self { algebra, coeffs: buf })
    }

    /// Builds an element whose dimension is the slice length.
    pub fn from_slice(coeffs: &[f64]) -> Result<Self> {
        Self::new(Algebra::from_dim(coeffs.len())?, coeffs)
    }

    pub fn zero(algebra: Algebra) -> Self {
        Self { algebra, coeffs: [0.0; 8] }
    }

    pub fn one(algebra: Algebra) -> Self {
        Self::real(algebra, 1.0)
    }

    pub fn real(algebra: Algebra, x: f64) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[0] = x;
        Self { algebra, coeffs }
    }

    /// The `i`-th basis unit (`e0 = 1`).
    ///
    /// # Panics
    /// If `i >= algebra.dim()`.
    pub fn basis(algebra: Algebra, i: usize) -> Self {
        assert!(i < algebra.dim(), "basis index {i} out of range for {algebra}");
        let mut coeffs = [0.0; 8];
        coeffs[i] = 1.0;
        Self { algebra, coeffs }
    }

    pub(crate) fn from_array(algebra: Algebra, coeffs: [f64; 8]) -> Self {
        debug_assert!(coeffs[algebra.dim()..].iter().all(|&c| c == 0.0));
        Self { algebra, coeffs }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs[..self.dim()]
    }

    pub fn scalar(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&c| c == 0.0)
    }

    /// Negates every imaginary coefficient.
    pub fn conj(&self) -> Self {
        let mut out = *self;
        for c in &mut out.coeffs[1..self.dim()] {
            *c = -*c;
        }
        out
    }

    /// Sum of squared coefficients.
    pub fn norm_sq(&self) -> f64 {
        self.coeffs().iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sq())
    }

    /// Euclidean inner product of the coefficient vectors.
    pub fn try_dot(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self.coeffs().iter().zip(other.coeffs()).map(|(a, b)| a * b).sum())
    }

    pub fn scale(&self, lambda: f64) -> Self {
        let mut out = *self;
        for c in &mut out.coeffs[..self.dim()] {
            *c *= lambda;
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Cayley–Dickson product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim();
        let mut out = [0.0; 8];
        cd_mul(&self.coeffs[..n], &other.coeffs[..n], &mut out[..n]);
        Ok(Self::from_array(self.algebra, out))
    }

    /// `conj(self) / |self|²`, the two-sided multiplicative inverse.
    pub fn inverse(&self) -> Result<Self> {
        let n2 = self.norm_sq();
        if n2 == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .coeffs()
            .iter()
            .zip(other.coeffs())
            .map(|(a, b)| libm::fabs(a - b))
            .fold(0.0, f64::max))
    }

    /// Coefficientwise absolute comparison; `false` when dimensions differ.
    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.max_abs_diff(other).is_ok_and(|d| d <= eps)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = [0.0; 8];
        for i in 0..self.dim() {
            out[i] = f(self.coeffs[i], other.coeffs[i]);
        }
        Ok(Self::from_array(self.algebra, out))
    }
}

fn cd_conj(src: &[f64], dst: &mut [f64]) {
    dst[0] = src[0];
    for i in 1..src.len() {
        dst[i] = -src[i];
    }
}

fn cd_mul(a: &[f64], b: &[f64], out: &mut [f64]) {
    let n = a.len();
    if n == 1 {
        out[0] = a[0] * b[0];
        return;
    }
    let h = n / 2;
    let (p, q) = a.split_at(h);
    let (r, s) = b.split_at(h);

    let mut s_bar = [0.0; 4];
    let mut r_bar = [0.0; 4];
    cd_conj(s, &mut s_bar[..h]);
    cd_conj(r, &mut r_bar[..h]);

    let mut t1 = [0.0; 4];
    let mut t2 = [0.0; 4];
    // pr − s̄q
    cd_mul(p, r, &mut t1[..h]);
    cd_mul(&s_bar[..h], q, &mut t2[..h]);
    for i in 0..h {
        out[i] = t1[i] - t2[i];
    }
    // sp + qr̄
    cd_mul(s, p, &mut t1[..h]);
    cd_mul(q, &r_bar[..h], &mut t2[..h]);
    for i in 0..h {
        out[h + i] = t1[i] + t2[i];
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.algebra, self.coeffs())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coeffs().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

// Operator forms panic on mismatched algebras; use the `try_*` methods where
// the algebras are not known to agree.

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        self.try_add(&rhs).expect("algebra mismatch in add")
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        self.try_sub(&rhs).expect("algebra mismatch in sub")
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        self.try_mul(&rhs).expect("algebra mismatch in mul")
    }
}

impl Mul<f64> for Element {
    type Output = Element;
    fn mul(self, rhs: f64) -> Element {
        self.scale(rhs)
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(c: &[f64]) -> Element {
        Element::from_slice(c).unwrap()
    }

    #[test]
    fn complex_unit_squares_to_minus_one() {
        let i = Element::basis(Algebra::Complex, 1);
        assert_eq!(i * i, el(&[-1.0, 0.0]));
    }

    #[test]
    fn quaternion_units() {
        let q = Algebra::Quaternion;
        let (i, j, k) = (Element::basis(q, 1), Element::basis(q, 2), Element::basis(q, 3));
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(j * i, -k);
        assert_eq!(i * j * k, Element::real(q, -1.0));
    }

    #[test]
    fn complex_schoolbook_product() {
        // (1+2i)(3+4i) = 3 + 4i + 6i + 8i² = −5 + 10i
        assert_eq!(el(&[1.0, 2.0]) * el(&[3.0, 4.0]), el(&[-5.0, 10.0]));
    }

    #[test]
    fn conjugation() {
        assert_eq!(el(&[3.0, 4.0]).conj(), el(&[3.0, -4.0]));
        for alg in Algebra::ALL {
            let x = Element::real(alg, 0.7);
            assert_eq!(x.conj(), x);
        }
    }

    #[test]
    fn norms() {
        assert_eq!(Element::zero(Algebra::Octonion).norm_sq(), 0.0);
        assert!((el(&[0.6]).norm_sq() - 9.0 / 25.0).abs() < 1e-16);
        assert!((el(&[1.0 / 3.0, 2.0 / 3.0]).norm_sq() - 5.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn norm_sq_is_scalar_part_of_a_abar() {
        let a = el(&[0.1, -0.2, 0.3, 0.4, -0.5, 0.6, 0.7, -0.8]);
        let p = a * a.conj();
        assert!((p.scalar() - a.norm_sq()).abs() < 1e-15);
        assert!(p.coeffs()[1..].iter().all(|c| c.abs() < 1e-15));
    }

    #[test]
    fn inverses() {
        assert_eq!(el(&[2.0]).inverse().unwrap(), el(&[0.5]));
        let i = Element::basis(Algebra::Complex, 1);
        assert_eq!(i.inverse().unwrap(), -i);
        assert_eq!(
            Element::zero(Algebra::Quaternion).inverse(),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn vector_space_ops() {
        let a = el(&[0.3, -0.1, 0.2, 0.9]);
        assert_eq!(a + Element::zero(Algebra::Quaternion), a);
        assert_eq!(a.scale(1.0), a);
        assert!((a - a).is_zero());
    }

    #[test]
    fn mismatched_dims_are_rejected() {
        let a = el(&[1.0, 2.0]);
        let b = el(&[1.0, 2.0, 3.0, 4.0]);
        let err = Err(Error::DimensionMismatch { left: 2, right: 4 });
        assert_eq!(a.try_mul(&b), err);
        assert_eq!(a.try_add(&b), err);
        assert_eq!(a.try_sub(&b), err);
        assert!(Element::from_slice(&[1.0, 2.0, 3.0]).is_err());
        assert_eq!(Element::new(Algebra::Real, &[f64::NAN]), Err(Error::NonFinite));
    }
}
