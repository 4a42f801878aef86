use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest leaf count accepted by [`enumerate_trees`].
pub const MAX_LEAVES: usize = 6;

/// A full binary tree; its leaves, read left to right, are word positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BracketTree {
    Leaf,
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn node(left: BracketTree, right: BracketTree) -> Self {
        BracketTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            BracketTree::Leaf => 1,
            BracketTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BracketTree::Leaf)
    }

    /// Bottom-up fold; `leaf` receives the position of each leaf.
    pub fn fold<T, E>(
        &self,
        leaf: &mut impl FnMut(usize) -> core::result::Result<T, E>,
        node: &mut impl FnMut(T, T) -> core::result::Result<T, E>,
    ) -> core::result::Result<T, E> {
        let mut pos = 0;
        self.fold_at(&mut pos, leaf, node)
    }

    fn fold_at<T, E>(
        &self,
        pos: &mut usize,
        leaf: &mut impl FnMut(usize) -> core::result::Result<T, E>,
        node: &mut impl FnMut(T, T) -> core::result::Result<T, E>,
    ) -> core::result::Result<T, E> {
        match self {
            BracketTree::Leaf => {
                let p = *pos;
                *pos += 1;
                leaf(p)
            }
            BracketTree::Node(l, r) => {
                let lv = l.fold_at(pos, leaf, node)?;
                let rv = r.fold_at(pos, leaf, node)?;
                node(lv, rv)
            }
        }
    }

    /// Diagram name built from the innermost pair outwards: `R` when the
    /// right operand is a single letter (`(ab)c`), `L` when the left one is
    /// (`a(bc)`), `S` for a product of two pairs (`(ab)(cd)`). Trees with
    /// other shapes have no such name.
    pub fn diagram_name(&self) -> Option<String> {
        match self {
            BracketTree::Leaf => None,
            BracketTree::Node(l, r) => match (l.is_leaf(), r.is_leaf()) {
                (true, true) => Some(String::new()),
                (false, true) => l.diagram_name().map(|mut s| {
                    s.push('R');
                    s
                }),
                (true, false) => r.diagram_name().map(|mut s| {
                    s.push('L');
                    s
                }),
                (false, false) if l.leaves() == 2 && r.leaves() == 2 => Some(String::from("S")),
                (false, false) => None,
            },
        }
    }
}

/// Every full binary tree with `n` leaves (`2 ≤ n ≤ 6`), ordered by the
/// size of the left subtree, then recursively.
pub fn enumerate_trees(n: usize) -> Result<Vec<BracketTree>> {
    if !(2..=MAX_LEAVES).contains(&n) {
        return Err(Error::TreeSize(n));
    }
    Ok(all_trees(n))
}

fn all_trees(n: usize) -> Vec<BracketTree> {
    if n == 1 {
        return alloc::vec![BracketTree::Leaf];
    }
    let mut out = Vec::new();
    for left in 1..n {
        let lefts = all_trees(left);
        let rights = all_trees(n - left);
        for l in &lefts {
            for r in &rights {
                out.push(BracketTree::node(l.clone(), r.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::render_tree;

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (2..=6).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 5, 14, 42]);
        assert!(enumerate_trees(1).is_err());
        assert!(enumerate_trees(7).is_err());
    }

    #[test]
    fn three_and_four_leaf_shapes() {
        let three: Vec<String> = enumerate_trees(3).unwrap().iter().map(|t| render_tree(t, &[0, 1, 2])).collect();
        assert_eq!(three, ["a(bc)", "(ab)c"]);
        let four: Vec<String> = enumerate_trees(4).unwrap().iter().map(|t| render_tree(t, &[0, 1, 2, 3])).collect();
        assert!(four.contains(&String::from("(ab)(cd)")));
        assert!(four.contains(&String::from("(a(bc))d")));
        assert_eq!(four.len(), 5);
    }

    #[test]
    fn diagram_names() {
        let names: Vec<(String, Option<String>)> = enumerate_trees(4)
            .unwrap()
            .iter()
            .map(|t| (render_tree(t, &[0, 1, 2, 3]), t.diagram_name()))
            .collect();
        let lookup = |s: &str| names.iter().find(|(r, _)| r == s).unwrap().1.clone().unwrap();
        assert_eq!(lookup("(ab)(cd)"), "S");
        assert_eq!(lookup("(a(bc))d"), "LR");
        assert_eq!(lookup("((ab)c)d"), "RR");
        assert_eq!(lookup("a(b(cd))"), "LL");
        let three = enumerate_trees(3).unwrap();
        assert_eq!(three[1].diagram_name().unwrap(), "R");
        assert_eq!(three[0].diagram_name().unwrap(), "L");
    }
}
