//! Connected noncrossing graphs as trees plus companion edges: canonical
//! spanning trees, the companion edge of a descent, graph assembly from a
//! tree and a descent subset, and the mark-respecting involution that
//! toggles one companion edge.
//!
//! Every simple cycle of a noncrossing graph, listed with sorted vertices
//! `i1 < i2 < ... < ik`, has each consecutive pair (and the closing pair)
//! adjacent; the canonical spanning tree arises by repeatedly deleting the
//! edge `(i1, i2)` of any cycle. The result does not depend on which cycle
//! is picked first; [`canonical_spanning_tree_randomized`] exists so the
//! test suite can confirm that empirically.

use crate::model::{Chord, Descent, MarkedNCGraph, NoncrossingGraph, NoncrossingTree, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphsError {
    /// Every descent of the canonical tree has a marked companion: the
    /// graph is a fixed point and the toggling map is undefined on it.
    AllDescentsMarked,
    /// A marked edge lies in the canonical spanning tree; marks must sit
    /// on free edges only.
    MarkedEdgeNotFree(Chord),
}

impl fmt::Display for GraphsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphsError::AllDescentsMarked => {
                f.write_str("every descent is marked; the graph is a fixed point")
            }
            GraphsError::MarkedEdgeNotFree(c) => {
                write!(f, "marked edge {c} lies in the canonical spanning tree")
            }
        }
    }
}

impl std::error::Error for GraphsError {}

// ============================================================================
// Cycles and the canonical spanning tree
// ============================================================================

/// A simple cycle held as its sorted vertex sequence. Construction checks
/// the defining property of cycles in noncrossing graphs: after sorting,
/// consecutive vertices (and the first/last pair) are adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleRep {
    vertices: Vec<Vertex>,
}

impl CycleRep {
    /// # Panics
    /// Panics if the sorted sequence has fewer than three distinct vertices
    /// or is not consecutively adjacent in `g`.
    pub fn new(mut vertices: Vec<Vertex>, g: &NoncrossingGraph) -> CycleRep {
        vertices.sort();
        assert!(vertices.len() >= 3, "a cycle visits at least three vertices");
        assert!(
            vertices.windows(2).all(|w| w[0] != w[1]),
            "cycle vertices must be distinct"
        );
        for i in 0..vertices.len() {
            let a = vertices[i];
            let b = vertices[(i + 1) % vertices.len()];
            assert!(
                g.contains_edge(Chord::new(a, b)),
                "sorted cycle {vertices:?} is not consecutively adjacent at {a}-{b}"
            );
        }
        CycleRep { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// The edge joining the two smallest vertices; the one deleted during
    /// spanning-tree reduction.
    pub fn smallest_edge(&self) -> Chord {
        Chord::new(self.vertices[0], self.vertices[1])
    }
}

/// Finds one simple cycle by depth-first search, or `None` in a tree.
/// Returns the cycle as an unsorted vertex path. In an undirected DFS every
/// non-tree edge closes back to an ancestor of the current vertex, so the
/// parent chain between the two endpoints is exactly the cycle.
fn find_cycle(adjacency: &[Vec<Vertex>], start: Vertex) -> Option<Vec<Vertex>> {
    let size = adjacency.len();
    let mut visited = vec![false; size];
    let mut on_stack = vec![false; size];
    let mut parent = vec![Vertex(0); size];
    let mut stack: Vec<(Vertex, usize)> = vec![(start, 0)];
    visited[start.0 as usize] = true;
    on_stack[start.0 as usize] = true;
    while let Some(&(u, i)) = stack.last() {
        if i >= adjacency[u.0 as usize].len() {
            on_stack[u.0 as usize] = false;
            stack.pop();
            continue;
        }
        stack.last_mut().expect("stack is nonempty").1 += 1;
        let w = adjacency[u.0 as usize][i];
        if w == parent[u.0 as usize] {
            continue;
        }
        if !visited[w.0 as usize] {
            visited[w.0 as usize] = true;
            on_stack[w.0 as usize] = true;
            parent[w.0 as usize] = u;
            stack.push((w, 0));
        } else {
            debug_assert!(on_stack[w.0 as usize], "undirected DFS closes only to ancestors");
            let mut cycle = vec![u];
            let mut x = u;
            while x != w {
                x = parent[x.0 as usize];
                cycle.push(x);
            }
            return Some(cycle);
        }
    }
    None
}

fn reduce_to_tree(
    g: &NoncrossingGraph,
    mut setup: impl FnMut(&NoncrossingGraph) -> (Vertex, Vec<Vec<Vertex>>),
) -> NoncrossingTree {
    let mut current = g.clone();
    let target = current.vertex_count() as usize - 1;
    while current.edge_count() > target {
        let (start, adjacency) = setup(&current);
        let path = find_cycle(&adjacency, start).expect("edge surplus implies a cycle");
        let rep = CycleRep::new(path, &current);
        current = current
            .without_edge(rep.smallest_edge())
            .expect("deleting a cycle edge keeps the graph connected");
    }
    NoncrossingTree::new(current.vertex_count(), current.edges())
        .expect("the surviving edge set is a spanning tree")
}

/// The canonical spanning tree: delete the smallest edge of some cycle
/// until none remain. Cycles are located deterministically (DFS from
/// vertex 1, neighbors in ascending order), but the outcome is independent
/// of the search order.
pub fn canonical_spanning_tree(g: &NoncrossingGraph) -> NoncrossingTree {
    reduce_to_tree(g, |current| (Vertex(1), current.adjacency()))
}

/// Same reduction with randomized cycle selection: every deletion step
/// starts the search at a random vertex with shuffled neighbor lists.
/// Exists to let tests certify that the reduction is confluent.
pub fn canonical_spanning_tree_randomized<R: Rng>(
    g: &NoncrossingGraph,
    rng: &mut R,
) -> NoncrossingTree {
    reduce_to_tree(g, |current| {
        let mut adjacency = current.adjacency();
        for list in adjacency.iter_mut() {
            list.shuffle(rng);
        }
        let start = Vertex(rng.gen_range(1..=current.vertex_count()));
        (start, adjacency)
    })
}

// ============================================================================
// Companion edges and assembly
// ============================================================================

/// The companion edge of a descent `(i, j)` of `t`.
///
/// Climb the maximal chain of consecutive descent edges upward from `i`;
/// call its vertices `P` (from `i` up to the endpoint nearest the root).
/// Among all tree neighbors of vertices of `P` that are smaller than `j`,
/// the largest is `w`, and the companion is the chord `(w, j)`. Neighbors
/// on the chain itself are exempt automatically: every chain vertex
/// exceeds `j`.
///
/// # Panics
/// Panics if `d` is not a descent of `t`, or if no candidate neighbor
/// exists (which the assembly round trips rule out).
pub fn companion_edge(t: &NoncrossingTree, d: Descent) -> Chord {
    assert_eq!(
        t.parent_of(d.child()),
        Some(d.parent()),
        "descent {d} does not belong to the tree"
    );
    let mut chain = vec![d.parent()];
    let mut top = d.parent();
    while let Some(p) = t.parent_of(top) {
        if p < top {
            break;
        }
        chain.push(p);
        top = p;
    }
    let j = d.child();
    let mut best: Option<Vertex> = None;
    for &x in &chain {
        let parent_neighbor = t.parent_of(x);
        let neighbors = t.children_of(x).iter().copied().chain(parent_neighbor);
        for y in neighbors {
            if y < j && best.is_none_or(|b| y > b) {
                best = Some(y);
            }
        }
    }
    let w = best.expect("some neighbor of the descent chain lies below the child");
    Chord::new(w, j)
}

/// Builds the connected noncrossing graph determined by a tree and a subset
/// of its descents: the tree's edges plus the companion edge of each chosen
/// descent. The edge count is the tree's plus the subset size, the
/// canonical spanning tree of the result is `t`, and the saturated descents
/// of the result are exactly the chosen ones.
///
/// # Panics
/// Panics if a chosen descent is not a descent of `t`.
pub fn assemble(
    t: &NoncrossingTree,
    chosen: impl IntoIterator<Item = Descent>,
) -> NoncrossingGraph {
    let descents: BTreeSet<Descent> = t.descents().into_iter().collect();
    let mut edges: BTreeSet<Chord> = t.edge_set().clone();
    for d in chosen {
        assert!(descents.contains(&d), "{d} is not a descent of the tree");
        let companion = companion_edge(t, d);
        debug_assert!(!t.contains_edge(companion), "companion edges are never tree edges");
        edges.insert(companion);
    }
    NoncrossingGraph::new(t.vertex_count(), edges)
        .expect("companion edges keep the graph connected and noncrossing")
}

/// Edges outside the canonical spanning tree.
pub fn free_edges(g: &NoncrossingGraph) -> BTreeSet<Chord> {
    let t = canonical_spanning_tree(g);
    g.edges().filter(|&e| !t.contains_edge(e)).collect()
}

/// True iff the companion edge of `d` (a descent of the canonical tree)
/// is present in `g`.
pub fn saturated(g: &NoncrossingGraph, d: Descent) -> bool {
    let t = canonical_spanning_tree(g);
    g.contains_edge(companion_edge(&t, d))
}

/// All saturated descents of the canonical spanning tree of `g`. Feeding
/// them back through [`assemble`] reconstructs `g`.
pub fn saturated_descents(g: &NoncrossingGraph) -> BTreeSet<Descent> {
    let t = canonical_spanning_tree(g);
    t.descents()
        .into_iter()
        .filter(|&d| g.contains_edge(companion_edge(&t, d)))
        .collect()
}

// ============================================================================
// The mark-respecting involution
// ============================================================================

/// Toggles the companion edge of the least unmarked descent.
///
/// A descent of the canonical tree is marked when its companion edge
/// carries a mark. The least unmarked descent (smallest child vertex) is
/// located; if it is saturated its companion edge is deleted, otherwise the
/// companion edge is added. Marks never change, the free-edge count moves
/// by exactly one, and applying the map twice restores the input.
///
/// # Errors
/// * [`GraphsError::MarkedEdgeNotFree`] if a mark sits on a tree edge.
/// * [`GraphsError::AllDescentsMarked`] if no unmarked descent exists;
///   such graphs are the fixed points counted by the descent distribution.
pub fn companion_involution(m: &MarkedNCGraph) -> Result<MarkedNCGraph, GraphsError> {
    let g = m.graph();
    let t = canonical_spanning_tree(g);
    for &c in m.marked() {
        if t.contains_edge(c) {
            return Err(GraphsError::MarkedEdgeNotFree(c));
        }
    }
    let least_unmarked = t
        .descents()
        .into_iter()
        .find(|&d| !m.is_marked(companion_edge(&t, d)));
    let Some(d) = least_unmarked else {
        return Err(GraphsError::AllDescentsMarked);
    };
    let companion = companion_edge(&t, d);
    let toggled = if g.contains_edge(companion) {
        g.without_edge(companion)
            .expect("removing a free edge keeps the spanning tree intact")
    } else {
        g.with_edge(companion)
            .expect("adding a companion edge keeps the graph noncrossing")
    };
    Ok(MarkedNCGraph::new(toggled, m.marked().iter().copied())
        .expect("marks are untouched and remain edges"))
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting;
    use crate::enumerate::{connected_nc_graphs, marked_graphs, noncrossing_trees};
    use itertools::Itertools;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    fn graph(text: &str) -> NoncrossingGraph {
        text.parse().unwrap()
    }

    fn tree(text: &str) -> NoncrossingTree {
        text.parse().unwrap()
    }

    fn descent(parent: u32, child: u32) -> Descent {
        Descent::new(Vertex(parent), Vertex(child))
    }

    #[test]
    fn canonical_tree_of_known_graphs() {
        let g = graph("ncg:7:1-3,1-4,2-3,3-4,4-7,5-6,5-7,6-7");
        assert_eq!(canonical_spanning_tree(&g).to_string(), "nct:7:1-4,2-3,3-4,4-7,5-7,6-7");
        assert_eq!(
            free_edges(&g).into_iter().collect::<Vec<_>>(),
            vec![Chord::of(1, 3), Chord::of(5, 6)]
        );

        let triangle = graph("ncg:3:1-2,1-3,2-3");
        assert_eq!(canonical_spanning_tree(&triangle).to_string(), "nct:3:1-3,2-3");
        assert_eq!(free_edges(&triangle).into_iter().collect::<Vec<_>>(), vec![Chord::of(1, 2)]);

        let already_tree = tree("nct:5:1-2,2-3,3-5,4-5");
        let g = NoncrossingGraph::from_tree(&already_tree);
        assert_eq!(canonical_spanning_tree(&g), already_tree);
        assert!(free_edges(&g).is_empty());
    }

    #[test]
    fn cycle_rep_checks_consecutive_adjacency() {
        let square = graph("ncg:4:1-2,2-3,3-4,1-4");
        let rep = CycleRep::new(vec![Vertex(3), Vertex(1), Vertex(4), Vertex(2)], &square);
        assert_eq!(rep.smallest_edge(), Chord::of(1, 2));
    }

    #[test]
    #[should_panic(expected = "consecutively adjacent")]
    fn cycle_rep_rejects_non_cycles() {
        let g = graph("ncg:4:1-2,1-3,1-4,3-4");
        CycleRep::new(vec![Vertex(1), Vertex(2), Vertex(3)], &g);
    }

    #[test]
    fn companion_edges_of_worked_examples() {
        assert_eq!(companion_edge(&tree("nct:3:1-3,2-3"), descent(3, 2)), Chord::of(1, 2));
        let eight_points = tree("nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8");
        assert_eq!(companion_edge(&eight_points, descent(4, 2)), Chord::of(1, 2));
        let chain = tree("nct:4:1-4,3-4,2-3");
        assert_eq!(companion_edge(&chain, descent(3, 2)), Chord::of(1, 2));
        assert_eq!(companion_edge(&chain, descent(4, 3)), Chord::of(1, 3));
    }

    #[test]
    fn assembly_of_worked_examples() {
        let path = tree("nct:3:1-2,2-3");
        assert_eq!(assemble(&path, []).edge_set(), path.edge_set());

        let t = tree("nct:3:1-3,2-3");
        assert_eq!(assemble(&t, [descent(3, 2)]).to_string(), "ncg:3:1-2,1-3,2-3");

        let chain = tree("nct:4:1-4,3-4,2-3");
        let g = assemble(&chain, [descent(3, 2), descent(4, 3)]);
        assert_eq!(g.to_string(), "ncg:4:1-2,1-3,1-4,2-3,3-4");
        assert_eq!(canonical_spanning_tree(&g), chain);
    }

    #[test]
    fn saturation_of_worked_examples() {
        let triangle = graph("ncg:3:1-2,1-3,2-3");
        assert!(saturated(&triangle, descent(3, 2)));
        let t = graph("ncg:3:1-3,2-3");
        assert!(!saturated(&t, descent(3, 2)));

        let seven_points = graph("ncg:7:1-3,1-4,2-3,3-4,4-7,5-6,5-7,6-7");
        assert!(saturated(&seven_points, descent(4, 3)));
        assert!(!saturated(&seven_points, descent(7, 5)));
        assert_eq!(
            saturated_descents(&seven_points).into_iter().collect::<Vec<_>>(),
            vec![descent(4, 3), descent(7, 6)]
        );
    }

    #[test]
    fn assembly_is_a_bijection_small() {
        // Every (tree, descent subset) pair lands on a distinct graph, and
        // every connected graph is hit; fibers recover the pair.
        for n in 1..=4 {
            let mut seen = BTreeSet::new();
            for t in noncrossing_trees(n) {
                let descents = t.descents();
                for k in 0..=descents.len() {
                    for subset in descents.iter().copied().combinations(k) {
                        let g = assemble(&t, subset.iter().copied());
                        assert_eq!(g.edge_count(), n + k, "edge count for {t}");
                        assert_eq!(canonical_spanning_tree(&g), t, "tree fiber of {g}");
                        let sat: Vec<Descent> =
                            saturated_descents(&g).into_iter().collect();
                        assert_eq!(sat, subset, "descent fiber of {g}");
                        assert!(seen.insert(g), "collision for {t}");
                    }
                }
            }
            let all: BTreeSet<NoncrossingGraph> =
                connected_nc_graphs(n as u32 + 1, None).collect();
            assert_eq!(seen, all, "image mismatch at n={n}");
        }
    }

    #[test]
    fn reduction_is_confluent_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
        for v in 2..=5 {
            for g in connected_nc_graphs(v, None) {
                let reference = canonical_spanning_tree(&g);
                for _ in 0..20 {
                    assert_eq!(
                        canonical_spanning_tree_randomized(&g, &mut rng),
                        reference,
                        "order-dependent reduction for {g}"
                    );
                }
            }
        }
    }

    #[test]
    fn involution_on_worked_examples() {
        let triangle = graph("ncg:3:1-2,1-3,2-3");
        let unmarked = MarkedNCGraph::new(triangle.clone(), []).unwrap();
        let image = companion_involution(&unmarked).unwrap();
        assert_eq!(image.graph().to_string(), "ncg:3:1-3,2-3");
        assert_eq!(companion_involution(&image).unwrap(), unmarked);

        let fixed = MarkedNCGraph::new(triangle.clone(), [Chord::of(1, 2)]).unwrap();
        assert_eq!(companion_involution(&fixed), Err(GraphsError::AllDescentsMarked));

        let bad = MarkedNCGraph::new(triangle, [Chord::of(1, 3)]).unwrap();
        assert_eq!(
            companion_involution(&bad),
            Err(GraphsError::MarkedEdgeNotFree(Chord::of(1, 3)))
        );
    }

    #[test]
    fn involution_pairs_and_fixed_points_small() {
        // v=4: fixed points per mark count must match the descent
        // distribution row 5, 5, 2, and moved graphs pair off with the
        // free-edge parity flipped.
        for k in 0..=2usize {
            let mut fixed_count = 0usize;
            for m in marked_graphs(4, k) {
                match companion_involution(&m) {
                    Err(GraphsError::AllDescentsMarked) => {
                        fixed_count += 1;
                        assert_eq!(m.graph().edge_count(), 3 + k, "fixed point size");
                    }
                    Err(other) => panic!("unexpected error {other} on {m}"),
                    Ok(image) => {
                        let free_before = free_edges(m.graph()).len();
                        let free_after = free_edges(image.graph()).len();
                        assert_eq!(free_before.abs_diff(free_after), 1, "free count step");
                        assert_eq!(image.marked(), m.marked(), "marks drifted");
                        assert_eq!(companion_involution(&image).unwrap(), m, "not self-inverse");
                    }
                }
            }
            assert_eq!(
                BigInt::from(fixed_count),
                counting::d_count(3, k as i64),
                "fixed points at k={k}"
            );
        }
    }

    #[test]
    fn marked_descents_and_edge_counts_of_fixed_points() {
        // A fixed point with k marks has exactly n + k edges: all descents
        // saturated and marked, and marks sit only on companions.
        let mut by_marks: BTreeMap<usize, usize> = BTreeMap::new();
        for k in 0..=3usize {
            for m in marked_graphs(5, k) {
                if companion_involution(&m) == Err(GraphsError::AllDescentsMarked) {
                    assert_eq!(m.graph().edge_count(), 4 + k);
                    *by_marks.entry(k).or_default() += 1;
                }
            }
        }
        let row: Vec<usize> = (0..=3).map(|k| by_marks.get(&k).copied().unwrap_or(0)).collect();
        assert_eq!(row, vec![14, 21, 15, 5]);
    }
}
