//! The menhir loop `a ⊞ b = (a + b)(1 + āb)⁻¹` on the open unit ball of ℝ, ℂ,
//! ℍ and 𝕆, its k-deformations `k ⊡ (a/k ⊞ b/k)`, and relativistic velocity
//! composition as the `k = 2` member of that family.
//!
//! ```
//! use menhir_core::{deformation::relativistic_add, DiskPoint};
//!
//! let a = DiskPoint::from_slice(&[0.6, 0.0]).unwrap();
//! let b = DiskPoint::from_slice(&[1.0 / 3.0, 2.0 / 3.0]).unwrap();
//! let c = relativistic_add(&a, &b).unwrap();
//! assert!((c.coeffs()[0] - 7.0 / 9.0).abs() < 1e-15);
//! assert!((c.coeffs()[1] - 4.0 / 9.0).abs() < 1e-15);
//! ```
//!
//! The crate is `no_std` and needs only `alloc` (for the identity lab).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod deformation;
pub mod disk;
mod error;
pub mod lab;
mod linalg;
pub mod moller;
pub mod sample;
pub mod scaling;

pub use algebra::{Algebra, Element};
pub use deformation::Product;
pub use disk::DiskPoint;
pub use error::{Error, Result};
pub use moller::Velocity;
