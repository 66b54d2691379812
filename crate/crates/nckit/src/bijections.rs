//! Structure-preserving correspondences: even plane trees with ternary
//! trees, and proper noncrossing trees with symmetric ternary trees.
//!
//! The first map peels subtrees off a root two at a time. The second wraps
//! the first: a proper tree, viewed as a plane tree of even subtrees, is
//! folded into a ternary tree whose outer subtrees mirror each other. Both
//! maps come with explicit inverses, and round-trip identities are pinned
//! by the test suite here and exercised exhaustively by the acceptance run.

use crate::model::{LRNode, LRTree, Label, NodePath, NoncrossingTree, PlaneTree, TernaryTree, Vertex};
use crate::parity::{first_improper, ParityError};
use crate::represent::{from_lr_tree, to_lr_tree, vertex_at_path};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BijectionError {
    /// A node on the given path has an odd number of children.
    NotEvenTree(NodePath),
    /// The named circle vertex is improper, so the folding map is undefined.
    NotProperTree(Vertex),
    /// The ternary tree is not its own reflection.
    NotSymmetric,
}

impl fmt::Display for BijectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectionError::NotEvenTree(path) => {
                write!(f, "node at path {path:?} has an odd number of children")
            }
            BijectionError::NotProperTree(v) => {
                write!(f, "vertex {v} is improper")
            }
            BijectionError::NotSymmetric => f.write_str("ternary tree is not symmetric"),
        }
    }
}

impl std::error::Error for BijectionError {}

// ============================================================================
// Even plane trees <-> ternary trees
// ============================================================================

/// Maps an even plane tree with `2n` edges to a ternary tree with `n`
/// internal nodes: a leaf maps to a leaf, and a root with subtrees
/// `S1, S2, ..., S2k` maps to `node(psi(S1), psi(S2), psi(root with S3..))`.
///
/// # Errors
/// [`BijectionError::NotEvenTree`] with the path of the preorder-first node
/// whose child count is odd.
pub fn psi(e: &PlaneTree) -> Result<TernaryTree, BijectionError> {
    if let Some(path) = first_odd_node(e) {
        return Err(BijectionError::NotEvenTree(path));
    }
    Ok(psi_even(&e.children))
}

fn first_odd_node(t: &PlaneTree) -> Option<NodePath> {
    fn scan(node: &PlaneTree, path: &mut NodePath) -> Option<NodePath> {
        if node.children.len() % 2 != 0 {
            return Some(path.clone());
        }
        for (i, child) in node.children.iter().enumerate() {
            path.push(i);
            if let Some(found) = scan(child, path) {
                return Some(found);
            }
            path.pop();
        }
        None
    }
    scan(t, &mut Vec::new())
}

/// Recursion on a root's child list, all child counts already even.
fn psi_even(subtrees: &[PlaneTree]) -> TernaryTree {
    if subtrees.is_empty() {
        return TernaryTree::Leaf;
    }
    TernaryTree::node(
        psi_even(&subtrees[0].children),
        psi_even(&subtrees[1].children),
        psi_even(&subtrees[2..]),
    )
}

/// Inverse of [`psi`]: a leaf becomes a single node; `node(X, Y, Z)` becomes
/// a root whose child list is `psi_inverse(X), psi_inverse(Y)` followed by
/// the root children of `psi_inverse(Z)`.
pub fn psi_inverse(t: &TernaryTree) -> PlaneTree {
    match t {
        TernaryTree::Leaf => PlaneTree::leaf(),
        TernaryTree::Node(kids) => {
            let [x, y, z] = &**kids;
            let mut children = vec![psi_inverse(x), psi_inverse(y)];
            children.extend(psi_inverse(z).children);
            PlaneTree::node(children)
        }
    }
}

// ============================================================================
// Reflection and symmetry
// ============================================================================

/// Mirror image: `node(A, B, C)` becomes `node(reflect(C), reflect(B),
/// reflect(A))`; an involution.
pub fn reflect(t: &TernaryTree) -> TernaryTree {
    match t {
        TernaryTree::Leaf => TernaryTree::Leaf,
        TernaryTree::Node(kids) => {
            let [a, b, c] = &**kids;
            TernaryTree::node(reflect(c), reflect(b), reflect(a))
        }
    }
}

/// True iff the tree equals its own reflection.
pub fn is_symmetric(t: &TernaryTree) -> bool {
    fn mirror_of(x: &TernaryTree, y: &TernaryTree) -> bool {
        match (x, y) {
            (TernaryTree::Leaf, TernaryTree::Leaf) => true,
            (TernaryTree::Node(p), TernaryTree::Node(q)) => {
                mirror_of(&p[0], &q[2]) && mirror_of(&p[1], &q[1]) && mirror_of(&p[2], &q[0])
            }
            _ => false,
        }
    }
    mirror_of(t, t)
}

/// A ternary tree checked to equal its own reflection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricTernaryTree(TernaryTree);

impl SymmetricTernaryTree {
    /// # Errors
    /// [`BijectionError::NotSymmetric`] if the tree is not its own mirror.
    pub fn new(tree: TernaryTree) -> Result<SymmetricTernaryTree, BijectionError> {
        if is_symmetric(&tree) {
            Ok(SymmetricTernaryTree(tree))
        } else {
            Err(BijectionError::NotSymmetric)
        }
    }

    pub fn inner(&self) -> &TernaryTree {
        &self.0
    }

    pub fn into_inner(self) -> TernaryTree {
        self.0
    }

    pub fn internal_count(&self) -> usize {
        self.0.internal_count()
    }
}

impl fmt::Display for SymmetricTernaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

// ============================================================================
// Proper noncrossing trees <-> symmetric ternary trees
// ============================================================================

/// Folds a proper noncrossing tree with `n` edges into a symmetric ternary
/// tree with `n` internal nodes.
///
/// Every non-root vertex of a proper tree has an even number of children,
/// all on the descent side, so the labels can be discarded and the tree
/// read as a plane tree whose root subtrees are even trees. With `T1` the
/// first root subtree and `T2` the rest, the image is
/// `node(psi(T1), sigma(T2), reflect(psi(T1)))`; a single vertex maps to a
/// leaf.
///
/// # Errors
/// [`BijectionError::NotProperTree`] naming the preorder-first improper
/// vertex.
pub fn sigma(t: &NoncrossingTree) -> Result<SymmetricTernaryTree, BijectionError> {
    let lr = to_lr_tree(t);
    match first_improper(&lr) {
        Ok(path) => return Err(BijectionError::NotProperTree(vertex_at_path(t, &path))),
        Err(ParityError::TreeIsProper) => {}
        Err(other) => unreachable!("first_improper reports only properness: {other}"),
    }
    let subtrees: Vec<PlaneTree> = lr.children.iter().map(strip_labels).collect();
    let tree = sigma_plane(&subtrees);
    Ok(SymmetricTernaryTree::new(tree).expect("folded image is symmetric by construction"))
}

fn strip_labels(node: &LRNode) -> PlaneTree {
    PlaneTree::node(node.children.iter().map(strip_labels).collect())
}

fn sigma_plane(subtrees: &[PlaneTree]) -> TernaryTree {
    match subtrees.split_first() {
        None => TernaryTree::Leaf,
        Some((first, rest)) => {
            let folded = psi_even(&first.children);
            let mirrored = reflect(&folded);
            TernaryTree::node(folded, sigma_plane(rest), mirrored)
        }
    }
}

/// Inverse of [`sigma`]. A leaf becomes the single-vertex tree; for
/// `node(A, B, reflect(A))`, the first root subtree is `psi_inverse(A)` and
/// the remaining root subtrees are those of `sigma_inverse(B)`. The forced
/// labels (root children on the ascent side, everything deeper on the
/// descent side) are re-attached before converting back to circle labels.
pub fn sigma_inverse(s: &SymmetricTernaryTree) -> NoncrossingTree {
    fn subtree_list(t: &TernaryTree) -> Vec<PlaneTree> {
        match t {
            TernaryTree::Leaf => Vec::new(),
            TernaryTree::Node(kids) => {
                let mut out = vec![psi_inverse(&kids[0])];
                out.extend(subtree_list(&kids[1]));
                out
            }
        }
    }
    fn attach(node: &PlaneTree, label: Label) -> LRNode {
        LRNode::new(label, node.children.iter().map(|c| attach(c, Label::L)).collect())
    }
    let children = subtree_list(s.inner())
        .iter()
        .map(|p| attach(p, Label::R))
        .collect();
    from_lr_tree(&LRTree::new(children)).expect("uniform descent labels form a valid tree")
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{even_plane_trees, noncrossing_trees, symmetric_ternary_trees};
    use crate::parity::is_proper;
    use std::collections::BTreeSet;

    fn plane(text: &str) -> PlaneTree {
        text.parse().unwrap()
    }

    fn ternary(text: &str) -> TernaryTree {
        text.parse().unwrap()
    }

    #[test]
    fn peel_map_worked_examples() {
        let cases = [
            ("(()())", "(()()())"),
            ("(()()()())", "(()()(()()()))"),
            ("((()())())", "((()()())()())"),
            ("()", "()"),
        ];
        for (input, expected) in cases {
            assert_eq!(psi(&plane(input)).unwrap().to_string(), expected, "image of {input}");
            assert_eq!(psi_inverse(&ternary(expected)).to_string(), input, "preimage of {expected}");
        }
    }

    #[test]
    fn odd_nodes_are_located_precisely() {
        assert_eq!(psi(&plane("(())")), Err(BijectionError::NotEvenTree(vec![])));
        assert_eq!(psi(&plane("(()(()))")), Err(BijectionError::NotEvenTree(vec![1])));
        assert_eq!(
            psi(&plane("(()()((())())())")),
            Err(BijectionError::NotEvenTree(vec![2, 0]))
        );
    }

    #[test]
    fn peel_map_round_trips_and_counts_nodes() {
        for n in 0..=5 {
            let mut images = BTreeSet::new();
            for e in even_plane_trees(2 * n) {
                let t = psi(&e).unwrap();
                assert_eq!(t.internal_count(), n, "internal count for {e}");
                assert_eq!(psi_inverse(&t), e, "round trip for {e}");
                images.insert(t);
            }
            let expected = [1usize, 1, 3, 12, 55, 273][n];
            assert_eq!(images.len(), expected, "distinct images at n={n}");
        }
    }

    #[test]
    fn reflection_is_an_involution_and_swaps_outer_subtrees() {
        assert_eq!(reflect(&ternary("(()()())")), ternary("(()()())"));
        assert_eq!(reflect(&ternary("((()()())()())")), ternary("(()()(()()()))"));
        for e in even_plane_trees(8) {
            let t = psi(&e).unwrap();
            assert_eq!(reflect(&reflect(&t)), t, "double reflection of {t}");
            assert_eq!(is_symmetric(&t), reflect(&t) == t, "symmetry predicate on {t}");
        }
    }

    #[test]
    fn symmetry_examples() {
        assert!(is_symmetric(&ternary("()")));
        assert!(is_symmetric(&ternary("(()()())")));
        assert!(!is_symmetric(&ternary("((()()())()())")));
        assert!(SymmetricTernaryTree::new(ternary("((()()())()())")).is_err());
    }

    #[test]
    fn folding_map_worked_examples() {
        let star: NoncrossingTree = "nct:3:1-2,1-3".parse().unwrap();
        assert_eq!(sigma(&star).unwrap().to_string(), "(()(()()())())");

        let single = NoncrossingTree::trivial();
        assert_eq!(sigma(&single).unwrap().to_string(), "()");

        let eight_edge: NoncrossingTree = "nct:9:1-4,1-9,2-4,3-4,5-9,6-8,7-8,8-9".parse().unwrap();
        let image = sigma(&eight_edge).unwrap();
        assert_eq!(
            image.to_string(),
            "((()()())(((()()())()())()(()()(()()())))(()()()))"
        );
        assert_eq!(image.internal_count(), 8);
        assert_eq!(sigma_inverse(&image), eight_edge);
    }

    #[test]
    fn folding_map_rejects_improper_trees_with_witness() {
        let path: NoncrossingTree = "nct:3:1-2,2-3".parse().unwrap();
        assert_eq!(sigma(&path), Err(BijectionError::NotProperTree(Vertex(2))));
        let odd: NoncrossingTree = "nct:3:1-3,2-3".parse().unwrap();
        assert!(matches!(sigma(&odd), Err(BijectionError::NotProperTree(_))));
    }

    #[test]
    fn inverse_of_leaf_and_singleton() {
        let leaf = SymmetricTernaryTree::new(TernaryTree::Leaf).unwrap();
        assert_eq!(sigma_inverse(&leaf), NoncrossingTree::trivial());
        let one = SymmetricTernaryTree::new(ternary("(()()())")).unwrap();
        assert_eq!(sigma_inverse(&one).to_string(), "nct:2:1-2");
    }

    #[test]
    fn folding_map_is_a_bijection_small() {
        for n in 0..=5 {
            let mut images = BTreeSet::new();
            let mut proper = 0usize;
            for t in noncrossing_trees(n) {
                if !is_proper(&t) {
                    assert!(sigma(&t).is_err(), "{t} accepted though improper");
                    continue;
                }
                proper += 1;
                let s = sigma(&t).unwrap();
                assert_eq!(s.internal_count(), n, "internal count for {t}");
                assert_eq!(sigma_inverse(&s), t, "round trip for {t}");
                images.insert(s);
            }
            assert_eq!(images.len(), proper, "injectivity at n={n}");
            let all: BTreeSet<SymmetricTernaryTree> = symmetric_ternary_trees(n).collect();
            assert_eq!(images, all, "image is not all symmetric trees at n={n}");
        }
    }
}
