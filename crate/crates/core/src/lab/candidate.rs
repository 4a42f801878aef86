use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::pattern::WordPattern;
use super::tree::BracketTree;
use crate::error::{Error, Result};

/// A proposed law `lhs = rhs`, both sides bracketing the same word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdentityCandidate {
    pub lhs: BracketTree,
    pub rhs: BracketTree,
    pub pattern: WordPattern,
    pub name: Option<String>,
}

impl IdentityCandidate {
    pub fn new(lhs: BracketTree, rhs: BracketTree, pattern: WordPattern) -> Result<Self> {
        if lhs.leaves() != pattern.len() || rhs.leaves() != pattern.len() {
            return Err(Error::InvalidCandidate("leaf counts differ from pattern length"));
        }
        if lhs.leaves() < 2 {
            return Err(Error::InvalidCandidate("fewer than two leaves"));
        }
        if lhs == rhs {
            return Err(Error::InvalidCandidate("both sides are the same tree"));
        }
        Ok(Self { lhs, rhs, pattern, name: None })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Parses the form produced by [`render_text`](Self::render_text), e.g.
    /// `"a(b(ac)) = (a(ba))c"`. Whitespace is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let compact: Vec<(usize, u8)> = text
            .bytes()
            .enumerate()
            .filter(|(_, b)| !b.is_ascii_whitespace())
            .collect();
        let eq = compact
            .iter()
            .position(|&(_, b)| b == b'=')
            .ok_or(Error::Parse(text.len()))?;
        let (lhs, lword) = parse_side(&compact[..eq], text.len())?;
        let (rhs, rword) = parse_side(&compact[eq + 1..], text.len())?;
        if lword != rword {
            return Err(Error::InvalidCandidate("sides use different words"));
        }
        Self::new(lhs, rhs, WordPattern::new(lword)?)
    }

    /// `"(aa)b = a(ab)"`: letters `a, b, c, …` stand for pattern variables.
    pub fn render_text(&self) -> String {
        let p = self.pattern.as_slice();
        let mut s = render_tree(&self.lhs, p);
        s.push_str(" = ");
        s.push_str(&render_tree(&self.rhs, p));
        s
    }

    pub fn arity(&self) -> usize {
        self.pattern.arity()
    }

    /// Sides in tree order and variables renamed by first appearance, so that
    /// two candidates stating the same law compare equal.
    pub fn canonical_form(&self) -> (BracketTree, BracketTree, WordPattern) {
        let (a, b) = if self.lhs <= self.rhs {
            (self.lhs.clone(), self.rhs.clone())
        } else {
            (self.rhs.clone(), self.lhs.clone())
        };
        (a, b, self.pattern.canonical())
    }

    /// Same law up to swapping sides and renaming variables.
    pub fn same_law(&self, other: &Self) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

impl fmt::Display for IdentityCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// Renders one side with the given variable assignment.
pub fn render_tree(tree: &BracketTree, pattern: &[usize]) -> String {
    let mut pos = 0;
    let mut out = String::new();
    write_side(tree, pattern, &mut pos, &mut out);
    out
}

fn write_side(tree: &BracketTree, pattern: &[usize], pos: &mut usize, out: &mut String) {
    match tree {
        BracketTree::Leaf => {
            out.push((b'a' + pattern[*pos] as u8) as char);
            *pos += 1;
        }
        BracketTree::Node(l, r) => {
            for child in [l, r] {
                if child.is_leaf() {
                    write_side(child, pattern, pos, out);
                } else {
                    out.push('(');
                    write_side(child, pattern, pos, out);
                    out.push(')');
                }
            }
        }
    }
}

// side   := factor factor
// factor := letter | '(' factor factor ')'
fn parse_side(tokens: &[(usize, u8)], end: usize) -> Result<(BracketTree, Vec<usize>)> {
    let mut word = Vec::new();
    let mut i = 0;
    let l = parse_factor(tokens, &mut i, &mut word, end)?;
    let r = parse_factor(tokens, &mut i, &mut word, end)?;
    if i != tokens.len() {
        return Err(Error::Parse(tokens[i].0));
    }
    Ok((BracketTree::node(l, r), word))
}

fn parse_factor(tokens: &[(usize, u8)], i: &mut usize, word: &mut Vec<usize>, end: usize) -> Result<BracketTree> {
    let &(at, b) = tokens.get(*i).ok_or(Error::Parse(end))?;
    *i += 1;
    match b {
        b'a'..=b'z' => {
            word.push((b - b'a') as usize);
            Ok(BracketTree::Leaf)
        }
        b'(' => {
            let l = parse_factor(tokens, i, word, end)?;
            let r = parse_factor(tokens, i, word, end)?;
            match tokens.get(*i) {
                Some(&(_, b')')) => {
                    *i += 1;
                    Ok(BracketTree::node(l, r))
                }
                Some(&(at, _)) => Err(Error::Parse(at)),
                None => Err(Error::Parse(end)),
            }
        }
        _ => Err(Error::Parse(at)),
    }
}

pub const POWER_ASSOCIATIVE: &str = "power-associative";
pub const LEFT_ALTERNATIVE: &str = "left-alternative";
pub const RIGHT_ALTERNATIVE: &str = "right-alternative";
pub const LEFT_BOL: &str = "unnamed-iii";
pub const MOUFANG_LEFT: &str = "moufang-left";
pub const MOUFANG_RIGHT: &str = "moufang-right";
pub const MOUFANG_MIDDLE: &str = "moufang-middle";

/// The named laws: (i) power associativity, (ii) left alternativity, right
/// alternativity, (iii) `a(b(ac)) = (a(ba))c`, and the three Moufang laws.
pub fn builtin_candidates() -> Vec<IdentityCandidate> {
    [
        (POWER_ASSOCIATIVE, "(aa)a = a(aa)"),
        (LEFT_ALTERNATIVE, "(aa)b = a(ab)"),
        (RIGHT_ALTERNATIVE, "(ab)b = a(bb)"),
        (LEFT_BOL, "a(b(ac)) = (a(ba))c"),
        (MOUFANG_LEFT, "a(b(ac)) = ((ab)a)c"),
        (MOUFANG_RIGHT, "((ca)b)a = c(a(ba))"),
        (MOUFANG_MIDDLE, "(ab)(ca) = (a(bc))a"),
    ]
    .into_iter()
    .map(|(name, text)| {
        IdentityCandidate::parse(text)
            .expect("builtin identities parse")
            .named(name.to_owned())
    })
    .collect()
}

/// Looks up a builtin law by name.
pub fn builtin(name: &str) -> Option<IdentityCandidate> {
    builtin_candidates().into_iter().find(|c| c.name.as_deref() == Some(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn seven_builtins_render_as_written() {
        let all = builtin_candidates();
        assert_eq!(all.len(), 7);
        assert_eq!(builtin(POWER_ASSOCIATIVE).unwrap().render_text(), "(aa)a = a(aa)");
        assert_eq!(builtin(LEFT_BOL).unwrap().render_text(), "a(b(ac)) = (a(ba))c");
        assert_eq!(builtin(MOUFANG_LEFT).unwrap().render_text(), "a(b(ac)) = ((ab)a)c");
        for c in &all {
            assert_eq!(&IdentityCandidate::parse(&c.render_text()).unwrap().named(c.name.clone().unwrap()), c);
        }
    }

    #[test]
    fn moufang_right_keeps_noncanonical_letters() {
        let c = builtin(MOUFANG_RIGHT).unwrap();
        assert_eq!(c.pattern.as_slice(), &[2, 0, 1, 0]);
        assert_eq!(c.pattern.canonical().as_slice(), &[0, 1, 2, 1]);
    }

    #[test]
    fn parse_errors() {
        assert!(IdentityCandidate::parse("(aa)a").is_err());
        assert!(IdentityCandidate::parse("(aa)a = a(ab)").is_err());
        assert!(IdentityCandidate::parse("(aa)a = (aa)a").is_err());
        assert!(IdentityCandidate::parse("(aa = a(aa)").is_err());
        assert!(IdentityCandidate::parse("(aa)a) = a(aa)").is_err());
        assert!(IdentityCandidate::parse("(ac)c = a(cc)").is_err());
        assert!(IdentityCandidate::parse("(a1)a = a(a1)").is_err());
    }

    #[test]
    fn same_law_up_to_renaming_and_sides() {
        let a = IdentityCandidate::parse("(bb)a = b(ba)").unwrap();
        let b = IdentityCandidate::parse("a(ab) = (aa)b").unwrap();
        assert!(a.same_law(&b));
        assert!(a.same_law(&builtin(LEFT_ALTERNATIVE).unwrap()));
        assert!(!a.same_law(&builtin(RIGHT_ALTERNATIVE).unwrap()));
    }

    #[test]
    fn constructor_checks() {
        let t = BracketTree::node(BracketTree::Leaf, BracketTree::Leaf);
        let u = BracketTree::node(t.clone(), BracketTree::Leaf);
        assert!(IdentityCandidate::new(t.clone(), u.clone(), WordPattern::new(vec![0, 1]).unwrap()).is_err());
        assert!(IdentityCandidate::new(u.clone(), u, WordPattern::distinct(3)).is_err());
    }
}
