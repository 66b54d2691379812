//! Exhaustive, lazily-produced streams of every combinatorial family in the
//! crate, plus an independent brute-force oracle for noncrossing trees.
//!
//! All streams are deterministic: two runs yield identical sequences. Plane
//! trees are emitted in lexicographic order of their serialization; derived
//! streams inherit that order. Memory stays bounded by the size of one
//! object beyond whatever the consumer retains.
//!
//! The primary noncrossing-tree stream goes through the L/R representation
//! (plane tree shape times a per-parent label pattern), while the oracle
//! filters raw chord subsets; the two constructions share no code, which is
//! what makes their agreement meaningful.

use crate::bijections::{reflect, SymmetricTernaryTree};
use crate::graphs;
use crate::model::{
    Chord, LRNode, LRTree, Label, MarkedNCGraph, NoncrossingGraph, NoncrossingTree, PlaneTree,
    TernaryTree, Vertex,
};
use crate::represent::from_lr_tree;
use itertools::Itertools;
use std::collections::BTreeSet;
use std::fmt;

/// Largest `n` accepted by [`noncrossing_trees_oracle`]; the oracle scans all
/// `C(C(n+1,2), n)` chord subsets, which passes 10^6 already at 7.
pub const ORACLE_MAX: usize = 7;

/// Largest vertex count accepted by the graph streams; chords are tracked in
/// a 128-bit mask and enumeration far below this bound is already infeasible.
pub const GRAPH_ENUM_MAX: u32 = 16;

/// Refusal to start an enumeration that cannot finish in reasonable time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    GuardExceeded { requested: usize, max: usize },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::GuardExceeded { requested, max } => {
                write!(f, "size {requested} exceeds enumeration guard {max}")
            }
        }
    }
}

impl std::error::Error for EnumerateError {}

// ============================================================================
// Plane trees
// ============================================================================

/// All plane trees with `edges` edges, in lexicographic order of their
/// parenthesis serialization (`'('` sorts before `')'`).
pub fn plane_trees(edges: usize) -> PlaneTrees {
    let mut word = vec![b'('; edges];
    word.extend(std::iter::repeat(b')').take(edges));
    PlaneTrees { word: Some(word) }
}

/// Iterator state: the balanced word listing the root's child subtrees of
/// the next tree, or `None` when exhausted.
pub struct PlaneTrees {
    word: Option<Vec<u8>>,
}

impl Iterator for PlaneTrees {
    type Item = PlaneTree;

    fn next(&mut self) -> Option<PlaneTree> {
        let word = self.word.take()?;
        let tree = tree_from_word(&word);
        self.word = next_balanced_word(&word);
        Some(tree)
    }
}

fn tree_from_word(word: &[u8]) -> PlaneTree {
    let mut stack = vec![PlaneTree::leaf()];
    for &b in word {
        if b == b'(' {
            stack.push(PlaneTree::leaf());
        } else {
            let done = stack.pop().expect("word is balanced");
            stack.last_mut().expect("word is balanced").children.push(done);
        }
    }
    debug_assert_eq!(stack.len(), 1);
    stack.pop().unwrap()
}

/// Successor of a balanced word in lexicographic order with `'(' < ')'`:
/// flip the rightmost `'('` whose prefix stays balanced, then refill the
/// tail with the smallest completion (all opens, then all closes).
fn next_balanced_word(word: &[u8]) -> Option<Vec<u8>> {
    let pairs = word.len() / 2;
    let mut suffix_balance: i64 = 0;
    for i in (0..word.len()).rev() {
        if word[i] == b'(' {
            suffix_balance += 1;
            // Balance of word[..i] is the negated suffix balance; flipping
            // needs it to stay positive after the flip.
            if suffix_balance <= -1 {
                let mut out = word[..i].to_vec();
                out.push(b')');
                let opens = out.iter().filter(|&&b| b == b'(').count();
                let closes = out.len() - opens;
                out.extend(std::iter::repeat(b'(').take(pairs - opens));
                out.extend(std::iter::repeat(b')').take(pairs - closes));
                return Some(out);
            }
        } else {
            suffix_balance -= 1;
        }
    }
    None
}

/// Plane trees with the given edge count in which every node has an even
/// number of children. Empty for odd `edges` (child counts sum to the edge
/// count, so an all-even tree has even size).
pub fn even_plane_trees(edges: usize) -> impl Iterator<Item = PlaneTree> {
    plane_trees(edges).filter(PlaneTree::is_even_tree)
}

// ============================================================================
// L/R trees and noncrossing trees
// ============================================================================

/// All well-formed L/R trees with `n` non-root nodes: every plane-tree shape
/// combined with every per-parent label pattern. A non-root parent with `c`
/// children admits `c + 1` patterns (the length of its `L` block); the root's
/// children are always all `R`.
pub fn lr_trees(n: usize) -> impl Iterator<Item = LRTree> {
    plane_trees(n).flat_map(LabelPatterns::new)
}

/// Odometer over the L-block lengths of one plane-tree shape.
struct LabelPatterns {
    shape: PlaneTree,
    /// Capacity (children + 1) of each non-root internal node in preorder.
    capacities: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl LabelPatterns {
    fn new(shape: PlaneTree) -> LabelPatterns {
        fn collect(node: &PlaneTree, is_root: bool, out: &mut Vec<usize>) {
            if !is_root && !node.children.is_empty() {
                out.push(node.children.len() + 1);
            }
            for child in &node.children {
                collect(child, false, out);
            }
        }
        let mut capacities = Vec::new();
        collect(&shape, true, &mut capacities);
        let current = Some(vec![0; capacities.len()]);
        LabelPatterns { shape, capacities, current }
    }

    fn build(&self, blocks: &[usize]) -> LRTree {
        fn build_children(
            node: &PlaneTree,
            is_root: bool,
            blocks: &[usize],
            pos: &mut usize,
        ) -> Vec<LRNode> {
            let l_block = if is_root || node.children.is_empty() {
                0
            } else {
                let value = blocks[*pos];
                *pos += 1;
                value
            };
            node.children
                .iter()
                .enumerate()
                .map(|(i, child)| {
                    let label = if i < l_block { Label::L } else { Label::R };
                    LRNode::new(label, build_children(child, false, blocks, pos))
                })
                .collect()
        }
        let mut pos = 0;
        let children = build_children(&self.shape, true, blocks, &mut pos);
        debug_assert_eq!(pos, blocks.len());
        LRTree::new(children)
    }
}

impl Iterator for LabelPatterns {
    type Item = LRTree;

    fn next(&mut self) -> Option<LRTree> {
        let blocks = self.current.take()?;
        let tree = self.build(&blocks);
        // Tick the odometer, rightmost digit fastest.
        let mut next = blocks;
        for i in (0..next.len()).rev() {
            next[i] += 1;
            if next[i] < self.capacities[i] {
                self.current = Some(next);
                return Some(tree);
            }
            next[i] = 0;
        }
        // All digits wrapped: this was the last pattern.
        Some(tree)
    }
}

/// All noncrossing trees with `n` edges, reconstructed from [`lr_trees`].
pub fn noncrossing_trees(n: usize) -> impl Iterator<Item = NoncrossingTree> {
    lr_trees(n).map(|lr| from_lr_tree(&lr).expect("generated L/R trees are well formed"))
}

/// Independent oracle: filters all `n`-subsets of the `C(n+1, 2)` chords
/// down to noncrossing spanning trees. Shares no code with the primary
/// stream beyond chord validation.
///
/// # Errors
/// [`EnumerateError::GuardExceeded`] for `n > ORACLE_MAX`.
pub fn noncrossing_trees_oracle(n: usize) -> Result<BTreeSet<NoncrossingTree>, EnumerateError> {
    if n > ORACLE_MAX {
        return Err(EnumerateError::GuardExceeded { requested: n, max: ORACLE_MAX });
    }
    let v = (n + 1) as u32;
    let chords: Vec<Chord> = all_chords(v);
    let mut found = BTreeSet::new();
    for combo in (0..chords.len()).combinations(n) {
        if !combo
            .iter()
            .enumerate()
            .all(|(i, &x)| combo[..i].iter().all(|&y| !crate::model::crosses(chords[x], chords[y])))
        {
            continue;
        }
        if !spans_all(v, combo.iter().map(|&i| chords[i])) {
            continue;
        }
        let tree = NoncrossingTree::new(v, combo.iter().map(|&i| chords[i]))
            .expect("noncrossing spanning subset is a valid tree");
        found.insert(tree);
    }
    Ok(found)
}

fn all_chords(v: u32) -> Vec<Chord> {
    let mut chords = Vec::new();
    for a in 1..=v {
        for b in a + 1..=v {
            chords.push(Chord::of(a, b));
        }
    }
    chords
}

/// Union-find connectivity: true if the edges join all of `1..=v`.
fn spans_all(v: u32, edges: impl Iterator<Item = Chord>) -> bool {
    let mut parent: Vec<u32> = (0..=v).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let mut components = v;
    for e in edges {
        let ra = find(&mut parent, e.a().0);
        let rb = find(&mut parent, e.b().0);
        if ra != rb {
            parent[ra as usize] = rb;
            components -= 1;
        }
    }
    components == 1
}

// ============================================================================
// Ternary trees
// ============================================================================

/// All ternary trees with `internal` internal nodes, ordered by the subtree
/// size split `(a, b, c)` of the root and recursively within each part.
pub fn ternary_trees(internal: usize) -> Box<dyn Iterator<Item = TernaryTree>> {
    if internal == 0 {
        return Box::new(std::iter::once(TernaryTree::Leaf));
    }
    let n = internal;
    Box::new((0..n).flat_map(move |a| {
        (0..n - a).flat_map(move |b| {
            let c = n - 1 - a - b;
            ternary_trees(a).flat_map(move |ta| {
                ternary_trees(b).flat_map(move |tb| {
                    let ta = ta.clone();
                    ternary_trees(c)
                        .map(move |tc| TernaryTree::node(ta.clone(), tb.clone(), tc))
                })
            })
        })
    }))
}

/// All mirror-symmetric ternary trees with `internal` internal nodes, built
/// directly as `node(A, B, mirror(A))` with `B` symmetric.
pub fn symmetric_ternary_trees(
    internal: usize,
) -> Box<dyn Iterator<Item = SymmetricTernaryTree>> {
    if internal == 0 {
        return Box::new(std::iter::once(
            SymmetricTernaryTree::new(TernaryTree::Leaf).expect("a leaf is symmetric"),
        ));
    }
    let n = internal;
    Box::new((0..=(n - 1) / 2).flat_map(move |a| {
        let b = n - 1 - 2 * a;
        ternary_trees(a).flat_map(move |ta| {
            symmetric_ternary_trees(b).map(move |sb| {
                let tree = TernaryTree::node(ta.clone(), sb.into_inner(), reflect(&ta));
                SymmetricTernaryTree::new(tree).expect("node(A, B, mirror(A)) is symmetric")
            })
        })
    }))
}

// ============================================================================
// Connected noncrossing graphs
// ============================================================================

/// All connected noncrossing graphs on `vertex_count` circle points,
/// optionally restricted to a fixed edge count. Backtracks over chords in
/// lexicographic order, keeping only pairwise-noncrossing partial sets and
/// testing connectivity on completion.
///
/// # Panics
/// Panics if `vertex_count` is 0 or exceeds [`GRAPH_ENUM_MAX`].
pub fn connected_nc_graphs(
    vertex_count: u32,
    edge_count: Option<usize>,
) -> ConnectedGraphs {
    assert!(vertex_count >= 1, "need at least one vertex");
    assert!(
        vertex_count <= GRAPH_ENUM_MAX,
        "graph enumeration beyond {GRAPH_ENUM_MAX} vertices is infeasible"
    );
    let chords = all_chords(vertex_count);
    let cross_masks = chords
        .iter()
        .map(|&c| {
            chords
                .iter()
                .enumerate()
                .filter(|&(_, &d)| crate::model::crosses(c, d))
                .fold(0u128, |mask, (j, _)| mask | (1 << j))
        })
        .collect();
    ConnectedGraphs {
        vertex_count,
        chords,
        cross_masks,
        edge_count,
        stack: vec![(0, 0, 0)],
    }
}

/// Depth-first chord-subset search; frames are `(next index, chosen mask,
/// chosen count)` and the include branch is explored first.
pub struct ConnectedGraphs {
    vertex_count: u32,
    chords: Vec<Chord>,
    cross_masks: Vec<u128>,
    edge_count: Option<usize>,
    stack: Vec<(usize, u128, usize)>,
}

impl Iterator for ConnectedGraphs {
    type Item = NoncrossingGraph;

    fn next(&mut self) -> Option<NoncrossingGraph> {
        let n = self.vertex_count as usize - 1;
        let lower = self.edge_count.unwrap_or(n);
        let upper = self.edge_count.unwrap_or_else(|| (2 * n).saturating_sub(1).max(n));
        while let Some((idx, mask, count)) = self.stack.pop() {
            if count > upper || count + (self.chords.len() - idx) < lower {
                continue;
            }
            if idx == self.chords.len() {
                if self.connected(mask) {
                    let edges = self
                        .chords
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &c)| c);
                    let graph = NoncrossingGraph::new(self.vertex_count, edges)
                        .expect("noncrossing connected subset is a valid graph");
                    return Some(graph);
                }
                continue;
            }
            self.stack.push((idx + 1, mask, count));
            if self.cross_masks[idx] & mask == 0 {
                self.stack.push((idx + 1, mask | (1 << idx), count + 1));
            }
        }
        None
    }
}

impl ConnectedGraphs {
    fn connected(&self, mask: u128) -> bool {
        spans_all(
            self.vertex_count,
            self.chords
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &c)| c),
        )
    }
}

/// All connected noncrossing graphs on `vertex_count` points carrying
/// exactly `marks` marked free edges (edges outside the canonical spanning
/// tree), over all edge counts.
pub fn marked_graphs(vertex_count: u32, marks: usize) -> impl Iterator<Item = MarkedNCGraph> {
    connected_nc_graphs(vertex_count, None).flat_map(move |g| {
        let free: Vec<Chord> = graphs::free_edges(&g).into_iter().collect();
        free.into_iter()
            .combinations(marks)
            .map(move |chosen| {
                MarkedNCGraph::new(g.clone(), chosen).expect("free edges are graph edges")
            })
            .collect::<Vec<_>>()
    })
}

/// Convenience: vertex labels `1..=v` as a vector, used by renderers and
/// examples.
pub fn vertex_range(vertex_count: u32) -> Vec<Vertex> {
    (1..=vertex_count).map(Vertex).collect()
}

// ============================================================================
// Tests
// ============================================================================
