//! Which candidates follow from known laws by substitution and replacement
//! at subterms.
//!
//! A law is applied by matching one of its sides against a subterm, binding
//! each variable to a whole subterm, and replacing the match with the other
//! side. Both sides of a law spell the same word, so rewriting never changes
//! the word of a term and the reachable set is finite.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::candidate::IdentityCandidate;
use super::tree::BracketTree;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Term {
    Var(usize),
    Op(Box<Term>, Box<Term>),
}

impl Term {
    /// Labels the leaves of `tree` with `pattern`.
    pub fn from_tree(tree: &BracketTree, pattern: &[usize]) -> Term {
        tree.fold::<Term, core::convert::Infallible>(
            &mut |pos| Ok(Term::Var(pattern[pos])),
            &mut |l, r| Ok(Term::Op(Box::new(l), Box::new(r))),
        )
        .unwrap_or_else(|e| match e {})
    }

    fn arity(&self) -> usize {
        match self {
            Term::Var(v) => v + 1,
            Term::Op(l, r) => l.arity().max(r.arity()),
        }
    }
}

struct Law {
    lhs: Term,
    rhs: Term,
    arity: usize,
}

impl Law {
    fn from_candidate(c: &IdentityCandidate) -> Self {
        let p = c.pattern.as_slice();
        let lhs = Term::from_tree(&c.lhs, p);
        let rhs = Term::from_tree(&c.rhs, p);
        let arity = lhs.arity().max(rhs.arity());
        Law { lhs, rhs, arity }
    }
}

fn matches<'t>(pat: &Term, t: &'t Term, binds: &mut [Option<&'t Term>]) -> bool {
    match pat {
        Term::Var(v) => match binds[*v] {
            Some(bound) => bound == t,
            None => {
                binds[*v] = Some(t);
                true
            }
        },
        Term::Op(pl, pr) => match t {
            Term::Op(tl, tr) => matches(pl, tl, binds) && matches(pr, tr, binds),
            Term::Var(_) => false,
        },
    }
}

fn substitute(pat: &Term, binds: &[Option<&Term>]) -> Term {
    match pat {
        Term::Var(v) => binds[*v].expect("every variable of a law occurs on both sides").clone(),
        Term::Op(l, r) => Term::Op(Box::new(substitute(l, binds)), Box::new(substitute(r, binds))),
    }
}

/// All terms one law application away from `t`.
fn neighbours(t: &Term, laws: &[Law], out: &mut Vec<Term>) {
    for law in laws {
        for (from, to) in [(&law.lhs, &law.rhs), (&law.rhs, &law.lhs)] {
            let mut binds = vec![None; law.arity];
            if matches(from, t, &mut binds) {
                out.push(substitute(to, &binds));
            }
        }
    }
    if let Term::Op(l, r) = t {
        let mut inner = Vec::new();
        neighbours(l, laws, &mut inner);
        out.extend(inner.drain(..).map(|nl| Term::Op(Box::new(nl), r.clone())));
        neighbours(r, laws, &mut inner);
        out.extend(inner.into_iter().map(|nr| Term::Op(l.clone(), Box::new(nr))));
    }
}

/// Whether `candidate` is derivable from `laws` by repeated substitution
/// instances applied at arbitrary subterms, in either direction.
pub fn is_consequence(candidate: &IdentityCandidate, laws: &[IdentityCandidate]) -> bool {
    let laws: Vec<Law> = laws.iter().map(Law::from_candidate).collect();
    let p = candidate.pattern.as_slice();
    let start = Term::from_tree(&candidate.lhs, p);
    let goal = Term::from_tree(&candidate.rhs, p);

    let mut seen = BTreeSet::new();
    let mut frontier = vec![start.clone()];
    seen.insert(start);
    while let Some(t) = frontier.pop() {
        if t == goal {
            return true;
        }
        let mut next = Vec::new();
        neighbours(&t, &laws, &mut next);
        for n in next {
            if seen.insert(n.clone()) {
                frontier.push(n);
            }
        }
    }
    false
}
