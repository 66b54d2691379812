//! Descent parity, proper/improper vertex classification, and the
//! parity-reversing involution on improper noncrossing trees.
//!
//! A tree is even or odd according to its number of descents. A non-root
//! vertex is proper when its child labels sit entirely on the side
//! prescribed by the tree's parity, with even multiplicity: in an even tree
//! an even number of `L` children and no `R` child, in an odd tree an even
//! number of `R` children and no `L` child. A tree is proper when every
//! non-root vertex is; odd trees are never proper, since an odd tree with
//! no `L` child below any non-root vertex would have no descents at all.
//!
//! The involution [`phi`] pairs up improper trees of opposite parity,
//! which shows that the signed count of all noncrossing trees by descent
//! parity equals the number of proper trees.

use crate::model::{LRNode, LRTree, Label, NodePath, NoncrossingTree};
use crate::represent::{descent_count, from_lr_tree, to_lr_tree};
use std::fmt;

/// Parity of the descent count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_count(count: usize) -> Parity {
        if count % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flipped(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// Classification of a non-root vertex relative to the tree's parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexClass {
    Proper,
    Improper,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParityError {
    /// The root carries no label and is never classified.
    RootNotClassifiable,
    /// No improper vertex exists, so there is nothing to locate.
    TreeIsProper,
    /// The involution is only defined on improper trees.
    ProperTreeInput,
}

impl fmt::Display for ParityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityError::RootNotClassifiable => f.write_str("the root vertex is not classified"),
            ParityError::TreeIsProper => f.write_str("tree is proper: no improper vertex exists"),
            ParityError::ProperTreeInput => {
                f.write_str("the involution is defined on improper trees only")
            }
        }
    }
}

impl std::error::Error for ParityError {}

/// Parity of the descent count of a noncrossing tree.
pub fn tree_parity(t: &NoncrossingTree) -> Parity {
    Parity::of_count(t.descent_count())
}

/// Parity read off the L/R form: descents are exactly the `L` nodes.
pub fn lr_tree_parity(l: &LRTree) -> Parity {
    Parity::of_count(descent_count(l))
}

fn classify_children(parity: Parity, children: &[LRNode]) -> VertexClass {
    let l_count = children.iter().filter(|c| c.label == Label::L).count();
    let r_count = children.len() - l_count;
    let proper = match parity {
        Parity::Even => r_count == 0 && l_count % 2 == 0,
        Parity::Odd => l_count == 0 && r_count % 2 == 0,
    };
    if proper {
        VertexClass::Proper
    } else {
        VertexClass::Improper
    }
}

/// Classifies the non-root vertex at `path` relative to the whole tree's
/// parity. Leaves are always proper: an empty child list satisfies both
/// clauses vacuously.
///
/// # Errors
/// [`ParityError::RootNotClassifiable`] for the empty path.
///
/// # Panics
/// Panics if `path` does not address a node of `l`.
pub fn classify_vertex(l: &LRTree, path: &[usize]) -> Result<VertexClass, ParityError> {
    if path.is_empty() {
        return Err(ParityError::RootNotClassifiable);
    }
    let node = l.node_at(path).expect("path addresses a node of the tree");
    Ok(classify_children(lr_tree_parity(l), &node.children))
}

/// True iff every non-root vertex is proper. Implies even parity.
pub fn is_proper(t: &NoncrossingTree) -> bool {
    lr_is_proper(&to_lr_tree(t))
}

/// [`is_proper`] on the L/R form directly.
pub fn lr_is_proper(l: &LRTree) -> bool {
    if lr_tree_parity(l) == Parity::Odd {
        return false;
    }
    fn all_proper(node: &LRNode) -> bool {
        classify_children(Parity::Even, &node.children) == VertexClass::Proper
            && node.children.iter().all(all_proper)
    }
    l.children.iter().all(all_proper)
}

/// Path of the preorder-first improper vertex (preorder: node, then its
/// subtrees left to right; the root is skipped).
///
/// # Errors
/// [`ParityError::TreeIsProper`] if every non-root vertex is proper.
pub fn first_improper(l: &LRTree) -> Result<NodePath, ParityError> {
    let parity = lr_tree_parity(l);
    fn scan(node: &LRNode, path: &mut NodePath, parity: Parity) -> Option<NodePath> {
        if classify_children(parity, &node.children) == VertexClass::Improper {
            return Some(path.clone());
        }
        for (i, child) in node.children.iter().enumerate() {
            path.push(i);
            if let Some(found) = scan(child, path, parity) {
                return Some(found);
            }
            path.pop();
        }
        None
    }
    let mut path = Vec::new();
    for (i, child) in l.children.iter().enumerate() {
        path.push(i);
        if let Some(found) = scan(child, &mut path, parity) {
            return Ok(found);
        }
        path.pop();
    }
    Err(ParityError::TreeIsProper)
}

/// The parity-reversing involution on improper trees, on the L/R form.
///
/// Let `v` be the preorder-first improper vertex. Every non-root vertex
/// strictly before `v` is proper, hence has uniformly labeled children;
/// all those labels are flipped. Then `v`'s own children are adjusted:
/// in an odd tree the rightmost `L` child becomes `R`, or if no `L` child
/// exists (the `R` count is then odd) every child becomes `L`; in an even
/// tree the mirror surgery applies. Either way exactly one block boundary
/// moves or one uniform block flips, so sibling ordering survives and the
/// descent count changes by an odd amount.
///
/// # Errors
/// [`ParityError::ProperTreeInput`] if the tree has no improper vertex.
pub fn phi_lr(l: &LRTree) -> Result<LRTree, ParityError> {
    let parity = lr_tree_parity(l);
    let v_path = match first_improper(l) {
        Ok(path) => path,
        Err(ParityError::TreeIsProper) => return Err(ParityError::ProperTreeInput),
        Err(other) => return Err(other),
    };
    let mut out = l.clone();

    // Flip the children of every non-root vertex strictly before v.
    fn flip_before(children: &mut [LRNode], prefix: &mut NodePath, v_path: &[usize]) {
        for (i, child) in children.iter_mut().enumerate() {
            prefix.push(i);
            // Nodes at or after v have no descendants before v: prune.
            if prefix.as_slice() < v_path {
                if let Some(first) = child.children.first() {
                    let label = first.label;
                    assert!(
                        child.children.iter().all(|c| c.label == label),
                        "proper vertex before the pivot must have uniform child labels"
                    );
                    for c in &mut child.children {
                        c.label = label.flipped();
                    }
                }
                flip_before(&mut child.children, prefix, v_path);
            }
            prefix.pop();
        }
    }
    let mut prefix = Vec::new();
    flip_before(&mut out.children, &mut prefix, &v_path);

    // Surgery at v itself.
    let v = node_at_mut(&mut out, &v_path);
    match parity {
        Parity::Odd => match v.children.iter().rposition(|c| c.label == Label::L) {
            Some(i) => v.children[i].label = Label::R,
            None => {
                debug_assert!(v.children.len() % 2 == 1, "improper with no L means odd R count");
                for c in &mut v.children {
                    c.label = Label::L;
                }
            }
        },
        Parity::Even => match v.children.iter().position(|c| c.label == Label::R) {
            Some(i) => v.children[i].label = Label::L,
            None => {
                debug_assert!(v.children.len() % 2 == 1, "improper with no R means odd L count");
                for c in &mut v.children {
                    c.label = Label::R;
                }
            }
        },
    }
    Ok(out)
}

fn node_at_mut<'a>(tree: &'a mut LRTree, path: &[usize]) -> &'a mut LRNode {
    let mut node = &mut tree.children[path[0]];
    for &i in &path[1..] {
        node = &mut node.children[i];
    }
    node
}

/// [`phi_lr`] conjugated by the L/R representation: acts directly on
/// noncrossing trees.
///
/// # Errors
/// [`ParityError::ProperTreeInput`] if `t` is proper.
pub fn phi(t: &NoncrossingTree) -> Result<NoncrossingTree, ParityError> {
    let image = phi_lr(&to_lr_tree(t))?;
    Ok(from_lr_tree(&image).expect("the involution preserves sibling label ordering"))
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::noncrossing_trees;

    fn tree(text: &str) -> NoncrossingTree {
        text.parse().unwrap()
    }

    fn lr(text: &str) -> LRTree {
        text.parse().unwrap()
    }

    #[test]
    fn parity_of_known_trees() {
        assert_eq!(tree_parity(&tree("nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8")), Parity::Odd);
        assert_eq!(tree_parity(&tree("nct:4:1-2,1-3,1-4")), Parity::Even);
        assert_eq!(tree_parity(&tree("nct:3:1-3,2-3")), Parity::Odd);
    }

    #[test]
    fn classification_follows_tree_parity() {
        // Even tree: [L, L] children proper, a single R child improper.
        let even = lr("(R(L()L())R())");
        assert_eq!(classify_vertex(&even, &[0]), Ok(VertexClass::Proper));
        let even_bad = lr("(R(R())R(L()L()))");
        assert_eq!(classify_vertex(&even_bad, &[0]), Ok(VertexClass::Improper));
        // Odd tree: leaves are proper.
        let odd = lr("(R(L()))");
        assert_eq!(classify_vertex(&odd, &[0, 0]), Ok(VertexClass::Proper));
        assert_eq!(classify_vertex(&odd, &[]), Err(ParityError::RootNotClassifiable));
    }

    #[test]
    fn proper_trees_recognized() {
        assert!(is_proper(&tree("nct:3:1-2,1-3")));
        assert!(!is_proper(&tree("nct:3:1-2,2-3")));
        // Odd trees are never proper.
        for t in noncrossing_trees(4) {
            if tree_parity(&t) == Parity::Odd {
                assert!(!is_proper(&t), "odd tree {t} classified proper");
            }
        }
    }

    #[test]
    fn first_improper_examples() {
        assert_eq!(first_improper(&lr("(R(R()))")), Ok(vec![0]));
        assert_eq!(first_improper(&lr("(R(L()))")), Ok(vec![0]));
        assert_eq!(first_improper(&lr("(R(R()R())R(L()))")), Ok(vec![1]));
        assert_eq!(first_improper(&lr("(R()R())")), Err(ParityError::TreeIsProper));
    }

    #[test]
    fn involution_on_worked_examples() {
        let pairs = [
            ("(R(L()))", "(R(R()))"),
            ("(R(R())R(L()))", "(R(L())R(L()))"),
            ("(R(R()R())R(L()))", "(R(L()L())R(R()))"),
        ];
        for (a, b) in pairs {
            assert_eq!(phi_lr(&lr(a)).unwrap().to_string(), b, "image of {a}");
            assert_eq!(phi_lr(&lr(b)).unwrap().to_string(), a, "image of {b}");
        }
    }

    #[test]
    fn phi_rejects_proper_trees() {
        assert_eq!(phi(&tree("nct:3:1-2,1-3")), Err(ParityError::ProperTreeInput));
    }

    #[test]
    fn involution_properties_exhaustive_small() {
        for n in 1..=5 {
            let mut proper = 0usize;
            let mut signed: i64 = 0;
            for t in noncrossing_trees(n) {
                let sign = match tree_parity(&t) {
                    Parity::Even => 1,
                    Parity::Odd => -1,
                };
                signed += sign;
                if is_proper(&t) {
                    proper += 1;
                    continue;
                }
                let image = phi(&t).unwrap();
                assert_ne!(image, t, "fixed point at n={n}: {t}");
                assert_eq!(tree_parity(&image), tree_parity(&t).flipped(), "parity kept: {t}");
                assert_eq!(phi(&image).unwrap(), t, "not an involution at {t}");
            }
            let expected = [1usize, 1, 2, 3, 7][n - 1];
            assert_eq!(proper, expected, "proper count at n={n}");
            assert_eq!(signed, expected as i64, "signed count at n={n}");
        }
    }
}
