use alloc::vec::Vec;

use super::candidate::IdentityCandidate;
use super::pattern::WordPattern;
use super::tree::{enumerate_trees, BracketTree};
use crate::algebra::Algebra;
use crate::deformation::Product;
use crate::disk::DiskPoint;
use crate::error::{Error, Result};
use crate::sample::{random_point, sample_rng, DEFAULT_MAX_RADIUS};

/// Residual below which a candidate is reported as holding.
pub const DEFAULT_HOLD_TOL: f64 = 1e-9;

/// Residual a witness must exceed to count as a genuine counterexample.
pub const WITNESS_THRESHOLD: f64 = 1e-3;

/// Outcome of sampling one candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct TestReport {
    /// `max_residual < tol`.
    pub holds: bool,
    pub max_residual: f64,
    pub samples: usize,
    /// The first argument tuple whose residual reached `tol`.
    pub witness: Option<Vec<DiskPoint>>,
    /// Residual at the witness.
    pub witness_residual: Option<f64>,
    pub seed: u64,
}

/// Sampling configuration shared by [`test_identity`] and [`survey_identities`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trial {
    pub algebra: Algebra,
    pub product: Product,
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
}

impl Trial {
    pub fn new(algebra: Algebra, product: Product) -> Self {
        Self {
            algebra,
            product,
            samples: 1000,
            tol: DEFAULT_HOLD_TOL,
            seed: 0,
        }
    }

    pub fn samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Folds `tree` bottom-up, placing `args[pattern[i]]` at leaf `i`.
pub fn evaluate(tree: &BracketTree, pattern: &WordPattern, args: &[DiskPoint], product: Product) -> Result<DiskPoint> {
    if tree.leaves() != pattern.len() {
        return Err(Error::InvalidCandidate("tree and pattern lengths differ"));
    }
    if args.len() != pattern.arity() {
        return Err(Error::Arity { expected: pattern.arity(), got: args.len() });
    }
    let p = pattern.as_slice();
    tree.fold(&mut |pos| Ok(args[p[pos]]), &mut |l, r| product.apply(&l, &r))
}

/// Largest coefficient difference between the two sides at `args`.
pub fn residual(candidate: &IdentityCandidate, args: &[DiskPoint], product: Product) -> Result<f64> {
    let l = evaluate(&candidate.lhs, &candidate.pattern, args, product)?;
    let r = evaluate(&candidate.rhs, &candidate.pattern, args, product)?;
    l.max_abs_diff(&r)
}

/// Evaluates both sides of `candidate` on `trial.samples` random argument
/// tuples. Sample `i` draws from its own stream, so the report depends only on
/// the configuration.
pub fn test_identity(candidate: &IdentityCandidate, trial: &Trial) -> Result<TestReport> {
    let arity = candidate.arity();
    let mut max_residual = 0.0f64;
    let mut witness = None;
    let mut witness_residual = None;
    let mut args = Vec::with_capacity(arity);
    for i in 0..trial.samples {
        let mut rng = sample_rng(trial.seed, i as u64);
        args.clear();
        args.extend((0..arity).map(|_| random_point(&mut rng, trial.algebra, DEFAULT_MAX_RADIUS)));
        let r = residual(candidate, &args, trial.product)?;
        max_residual = max_residual.max(r);
        if witness.is_none() && !(r < trial.tol) {
            witness = Some(args.clone());
            witness_residual = Some(r);
        }
    }
    Ok(TestReport {
        holds: max_residual < trial.tol,
        max_residual,
        samples: trial.samples,
        witness,
        witness_residual,
        seed: trial.seed,
    })
}

/// Every unordered pair of distinct `n`-leaf trees crossed with every pattern
/// of length `n` up to renaming.
pub fn survey_candidates(n: usize) -> Result<Vec<IdentityCandidate>> {
    let trees = enumerate_trees(n)?;
    let patterns = WordPattern::all_up_to_renaming(n);
    let mut out = Vec::with_capacity(trees.len() * (trees.len() - 1) / 2 * patterns.len());
    for pattern in &patterns {
        for (i, lhs) in trees.iter().enumerate() {
            for rhs in &trees[i + 1..] {
                out.push(IdentityCandidate::new(lhs.clone(), rhs.clone(), pattern.clone())?);
            }
        }
    }
    Ok(out)
}

/// Tests every candidate from [`survey_candidates`].
pub fn survey_all(n: usize, trial: &Trial) -> Result<Vec<(IdentityCandidate, TestReport)>> {
    if !(3..=4).contains(&n) {
        return Err(Error::TreeSize(n));
    }
    survey_candidates(n)?
        .into_iter()
        .map(|c| {
            let report = test_identity(&c, trial)?;
            Ok((c, report))
        })
        .collect()
}

/// The candidates that hold, with their reports.
pub fn survey_identities(n: usize, trial: &Trial) -> Result<Vec<(IdentityCandidate, TestReport)>> {
    Ok(survey_all(n, trial)?.into_iter().filter(|(_, r)| r.holds).collect())
}
