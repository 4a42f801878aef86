//! Deterministic random points in the open ball.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::{Algebra, Element};
use crate::disk::DiskPoint;

/// Default cap on sampled radii; keeps residuals well-conditioned.
pub const DEFAULT_MAX_RADIUS: f64 = 0.9;

/// A generator for sample `index` under `seed`. Streams are independent, so
/// results do not depend on the order in which samples are drawn.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform direction times a radius drawn uniformly in `[0, max_radius)`.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, algebra: Algebra, max_radius: f64) -> Element {
    let n = algebra.dim();
    let mut coeffs = [0.0; 8];
    let norm = loop {
        for c in &mut coeffs[..n] {
            *c = rng.sample(StandardNormal);
        }
        let norm = libm::sqrt(coeffs[..n].iter().map(|c| c * c).sum::<f64>());
        if norm > 1e-300 {
            break norm;
        }
    };
    let radius = rng.random::<f64>() * max_radius;
    let e = Element::new(algebra, &coeffs[..n]).expect("finite normal samples");
    e.scale(radius / norm)
}

/// A random point with `|x| < max_radius` (`max_radius ≤ 1`).
pub fn random_point<R: Rng + ?Sized>(rng: &mut R, algebra: Algebra, max_radius: f64) -> DiskPoint {
    DiskPoint::trusted(random_element(rng, algebra, max_radius))
}
