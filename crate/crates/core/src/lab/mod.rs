//! Bracketing enumeration and numerical testing of loop identities.
//!
//! Words are bracketed by full binary trees. A [`WordPattern`] says which
//! variable sits at each position (repeated letters), and an
//! [`IdentityCandidate`] pairs two bracketings of the same word.

mod candidate;
mod pattern;
pub mod rewrite;
mod survey;
mod tree;

pub use candidate::{
    builtin, builtin_candidates, render_tree, IdentityCandidate, LEFT_ALTERNATIVE, LEFT_BOL, MOUFANG_LEFT,
    MOUFANG_MIDDLE, MOUFANG_RIGHT, POWER_ASSOCIATIVE, RIGHT_ALTERNATIVE,
};
pub use pattern::WordPattern;
pub use rewrite::is_consequence;
pub use survey::{
    evaluate, residual, survey_all, survey_candidates, survey_identities, test_identity, TestReport, Trial,
    DEFAULT_HOLD_TOL, WITNESS_THRESHOLD,
};
pub use tree::{enumerate_trees, BracketTree, MAX_LEAVES};
