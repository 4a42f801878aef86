use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Which variable sits at each word position, e.g. `[0, 1, 0, 2]` is `a b a c`.
///
/// The variables used always form `0..arity`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordPattern(Vec<usize>);

impl WordPattern {
    pub fn new(assignment: Vec<usize>) -> Result<Self> {
        if assignment.is_empty() {
            return Err(Error::InvalidPattern("empty"));
        }
        let arity = assignment.iter().max().map_or(0, |m| m + 1);
        if arity > 26 {
            return Err(Error::InvalidPattern("more than 26 variables"));
        }
        let mut seen = vec![false; arity];
        for &v in &assignment {
            seen[v] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidPattern("variables are not contiguous from 0"));
        }
        Ok(Self(assignment))
    }

    /// All variables distinct: `0, 1, …, n−1`.
    pub fn distinct(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.0.iter().max().map_or(0, |m| m + 1)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Renames variables in order of first appearance.
    pub fn canonical(&self) -> Self {
        let mut map = vec![usize::MAX; self.arity()];
        let mut next = 0;
        let out = self
            .0
            .iter()
            .map(|&v| {
                if map[v] == usize::MAX {
                    map[v] = next;
                    next += 1;
                }
                map[v]
            })
            .collect();
        Self(out)
    }

    /// Every pattern of length `n` up to renaming (restricted growth strings),
    /// in lexicographic order. There are Bell(n) of them.
    pub fn all_up_to_renaming(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        grow(n, 0, &mut cur, &mut out);
        out
    }
}

fn grow(n: usize, next: usize, cur: &mut Vec<usize>, out: &mut Vec<WordPattern>) {
    if cur.len() == n {
        out.push(WordPattern(cur.clone()));
        return;
    }
    for v in 0..=next {
        cur.push(v);
        grow(n, next.max(v + 1), cur, out);
        cur.pop();
    }
}
