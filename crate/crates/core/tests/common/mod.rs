#![allow(dead_code)]

use menhir_core::{Algebra, DiskPoint, Element};
use proptest::prelude::*;

pub fn algebra() -> impl Strategy<Value = Algebra> {
    prop::sample::select(Algebra::ALL.to_vec())
}

pub fn element(alg: Algebra) -> impl Strategy<Value = Element> {
    prop::collection::vec(-2.0..2.0f64, alg.dim()).prop_map(move |c| Element::new(alg, &c).unwrap())
}

/// A point with norm below `max_radius`.
pub fn point(alg: Algebra, max_radius: f64) -> impl Strategy<Value = DiskPoint> {
    (prop::collection::vec(-1.0..1.0f64, alg.dim()), 0.0..max_radius).prop_map(move |(c, r)| {
        let e = Element::new(alg, &c).unwrap();
        let n = e.norm();
        let e = if n > 1e-9 { e.scale(r / n) } else { Element::zero(alg) };
        DiskPoint::new(e).unwrap()
    })
}

pub fn points(n: usize, max_radius: f64) -> impl Strategy<Value = Vec<DiskPoint>> {
    algebra().prop_flat_map(move |alg| prop::collection::vec(point(alg, max_radius), n))
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}
