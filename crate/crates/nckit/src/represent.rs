//! The L/R plane-tree representation of noncrossing trees.
//!
//! Rooting a noncrossing tree at vertex 1 and recording, for every non-root
//! vertex, whether its parent edge descends (`L`, parent label larger) or
//! ascends (`R`) turns the tree into a labelled plane tree. Circle geometry
//! forces two facts that the conversion relies on and its inverse restores:
//!
//! * every root child is labelled `R` (the root has the smallest label);
//! * within one sibling list all `L` children precede all `R` children, with
//!   `L` children ordered by decreasing circle label and `R` children by
//!   increasing circle label.
//!
//! Each subtree occupies a contiguous arc of circle labels, so a vertex's
//! label inside its interval `[lo, hi]` is `lo` plus the total size of its
//! `L`-side subtrees. That formula drives [`from_lr_tree`], which rebuilds
//! circle labels interval by interval.

use crate::model::{Chord, LRNode, LRTree, Label, NoncrossingTree, Vertex};
use std::fmt;

/// Structural defect that stops an [`LRTree`] from describing a noncrossing
/// tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentError {
    /// A root child is labelled `L`, or an `R` sibling precedes an `L`
    /// sibling somewhere in the tree.
    InvalidLRTree(&'static str),
}

impl fmt::Display for RepresentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepresentError::InvalidLRTree(why) => write!(f, "invalid L/R tree: {why}"),
        }
    }
}

impl std::error::Error for RepresentError {}

// ============================================================================
// NoncrossingTree -> LRTree
// ============================================================================

/// Converts a noncrossing tree to its L/R representation.
///
/// Children appear in the canonical plane order: `L` children by decreasing
/// circle label, then `R` children by increasing circle label.
pub fn to_lr_tree(t: &NoncrossingTree) -> LRTree {
    LRTree::new(lr_children(t, NoncrossingTree::root()))
}

fn lr_children(t: &NoncrossingTree, x: Vertex) -> Vec<LRNode> {
    let kids = t.children_of(x);
    let mut out = Vec::with_capacity(kids.len());
    // children_of is ascending, so smaller-labelled children form a prefix.
    let split = kids.partition_point(|&c| c < x);
    for &c in kids[..split].iter().rev() {
        out.push(LRNode::new(Label::L, lr_children(t, c)));
    }
    for &c in &kids[split..] {
        out.push(LRNode::new(Label::R, lr_children(t, c)));
    }
    out
}

/// Number of descents recorded in the representation: the count of `L`
/// labels.
pub fn descent_count(l: &LRTree) -> usize {
    fn count(nodes: &[LRNode]) -> usize {
        nodes
            .iter()
            .map(|n| usize::from(n.label == Label::L) + count(&n.children))
            .sum()
    }
    count(&l.children)
}

/// Circle label of the node addressed by `path` in the tree's L/R plane
/// order. The empty path addresses the root (vertex 1).
///
/// # Panics
/// Panics if `path` leaves the tree.
pub fn vertex_at_path(t: &NoncrossingTree, path: &[usize]) -> Vertex {
    let mut x = NoncrossingTree::root();
    for &idx in path {
        let kids = t.children_of(x);
        let split = kids.partition_point(|&c| c < x);
        let ordered: Vec<Vertex> = kids[..split]
            .iter()
            .rev()
            .chain(kids[split..].iter())
            .copied()
            .collect();
        x = *ordered.get(idx).expect("node path stays inside the tree");
    }
    x
}

// ============================================================================
// LRTree -> NoncrossingTree
// ============================================================================

/// Reconstructs the noncrossing tree from its L/R representation.
///
/// # Errors
/// [`RepresentError::InvalidLRTree`] if a root child is labelled `L` or if
/// some sibling list has an `R` child before an `L` child.
pub fn from_lr_tree(l: &LRTree) -> Result<NoncrossingTree, RepresentError> {
    if l.children.iter().any(|c| c.label == Label::L) {
        return Err(RepresentError::InvalidLRTree("root child labelled L"));
    }
    check_sibling_blocks(&l.children)?;
    let n = l.node_count() as u32;
    let mut edges = Vec::with_capacity(n as usize);
    let root_label = place(&l.children, 1, n + 1, &mut edges);
    debug_assert_eq!(root_label, Vertex(1), "root has no L children, so it takes the low end");
    Ok(NoncrossingTree::new(n + 1, edges)
        .expect("interval placement always yields a valid noncrossing tree"))
}

fn check_sibling_blocks(nodes: &[LRNode]) -> Result<(), RepresentError> {
    let mut seen_r = false;
    for node in nodes {
        match node.label {
            Label::R => seen_r = true,
            Label::L if seen_r => {
                return Err(RepresentError::InvalidLRTree("R sibling precedes an L sibling"))
            }
            Label::L => {}
        }
        check_sibling_blocks(&node.children)?;
    }
    Ok(())
}

/// Assigns circle labels to a node's subtree, which occupies `[lo, hi]`.
/// Returns the node's own label and records edges to its children.
///
/// `L` subtrees fill consecutive sub-intervals below the node's label,
/// stacking downward in plane order; `R` subtrees fill sub-intervals above,
/// stacking upward.
fn place(children: &[LRNode], lo: u32, hi: u32, edges: &mut Vec<Chord>) -> Vertex {
    let split = children.partition_point(|c| c.label == Label::L);
    let (l_kids, r_kids) = children.split_at(split);
    let l_total: usize = l_kids.iter().map(LRNode::node_count).sum();
    let label = lo + l_total as u32;

    let mut top = label - 1;
    for child in l_kids {
        let size = child.node_count() as u32;
        let child_lo = top + 1 - size;
        let child_label = place(&child.children, child_lo, top, edges);
        edges.push(Chord::new(Vertex(label), child_label));
        top = child_lo - 1;
    }
    debug_assert_eq!(top + 1, lo, "L subtrees exactly fill [lo, label-1]");

    let mut bottom = label + 1;
    for child in r_kids {
        let size = child.node_count() as u32;
        let child_hi = bottom + size - 1;
        let child_label = place(&child.children, bottom, child_hi, edges);
        edges.push(Chord::new(Vertex(label), child_label));
        bottom = child_hi + 1;
    }
    debug_assert_eq!(bottom - 1, hi, "R subtrees exactly fill [label+1, hi]");

    Vertex(label)
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate;
    use std::collections::BTreeSet;

    #[test]
    fn reference_tree_to_lr() {
        let t: NoncrossingTree = "nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8".parse().unwrap();
        let lr = to_lr_tree(&t);
        assert_eq!(lr.to_string(), "(R(L(R()))R(L()L()R()))");
        assert_eq!(descent_count(&lr), 3);
    }

    #[test]
    fn reference_tree_from_lr() {
        let lr: LRTree = "(R(L(R()))R(L()L()R()))".parse().unwrap();
        let t = from_lr_tree(&lr).unwrap();
        assert_eq!(t.to_string(), "nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8");
    }

    #[test]
    fn trivial_tree_round_trip() {
        let t = NoncrossingTree::trivial();
        let lr = to_lr_tree(&t);
        assert_eq!(lr.to_string(), "()");
        assert_eq!(from_lr_tree(&lr).unwrap(), t);
    }

    #[test]
    fn invalid_label_patterns_rejected() {
        let lr: LRTree = "(L())".parse().unwrap();
        assert_eq!(
            from_lr_tree(&lr),
            Err(RepresentError::InvalidLRTree("root child labelled L"))
        );
        let lr: LRTree = "(R(R()L()))".parse().unwrap();
        assert_eq!(
            from_lr_tree(&lr),
            Err(RepresentError::InvalidLRTree("R sibling precedes an L sibling"))
        );
    }

    #[test]
    fn round_trip_is_identity_for_all_small_trees() {
        for n in 0..=6 {
            for t in enumerate::noncrossing_trees(n) {
                let lr = to_lr_tree(&t);
                assert_eq!(from_lr_tree(&lr).unwrap(), t, "round trip failed for {t}");
                assert_eq!(descent_count(&lr), t.descent_count());
            }
        }
    }

    #[test]
    fn vertex_at_path_matches_lr_order() {
        let t: NoncrossingTree = "nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8".parse().unwrap();
        assert_eq!(vertex_at_path(&t, &[]), Vertex(1));
        assert_eq!(vertex_at_path(&t, &[0]), Vertex(4));
        assert_eq!(vertex_at_path(&t, &[1]), Vertex(7));
        // Children of 7 in plane order: L children 6, 5 then R child 8.
        assert_eq!(vertex_at_path(&t, &[1, 0]), Vertex(6));
        assert_eq!(vertex_at_path(&t, &[1, 1]), Vertex(5));
        assert_eq!(vertex_at_path(&t, &[1, 2]), Vertex(8));
    }

    /// Circle geometry: the vertex set of every subtree is a contiguous run
    /// of labels. The reconstruction assumes this, so it is pinned here.
    #[test]
    fn subtrees_occupy_contiguous_intervals() {
        fn subtree_vertices(t: &NoncrossingTree, x: Vertex, out: &mut BTreeSet<u32>) {
            out.insert(x.0);
            for &c in t.children_of(x) {
                subtree_vertices(t, c, out);
            }
        }
        for n in 1..=6 {
            for t in enumerate::noncrossing_trees(n) {
                for x in 1..=t.vertex_count() {
                    let mut set = BTreeSet::new();
                    subtree_vertices(&t, Vertex(x), &mut set);
                    let lo = *set.iter().next().unwrap();
                    let hi = *set.iter().last().unwrap();
                    assert_eq!(
                        (hi - lo + 1) as usize,
                        set.len(),
                        "subtree of {x} in {t} is not contiguous"
                    );
                }
            }
        }
    }
}
