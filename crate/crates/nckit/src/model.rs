//! Core data model: labelled points on a circle, chords between them, and the
//! tree/graph structures built from noncrossing chord sets.
//!
//! Vertices are labelled `1..=v` counterclockwise around a circle; vertex 1 is
//! always the root. Every structure here has a canonical ASCII serialization
//! (no whitespace) which doubles as its equality/hash key:
//!
//! * noncrossing tree: `nct:<v>:<a-b>,<a-b>,...` with edges sorted
//! * noncrossing graph: `ncg:<v>:<a-b>[*],...` where `*` marks an edge
//! * plane/ternary tree: preorder parentheses, one `(`...`)` per node
//! * L/R tree: like a plane tree but each non-root node is prefixed `L` or `R`

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

/// Largest vertex count accepted by validating constructors. Keeps
/// enumeration and rendering requests within sane bounds.
pub const VERTEX_CAP: u32 = 64;

/// Path from the root of a plane-like tree to a node: child indices taken at
/// each step. The empty path addresses the root.
pub type NodePath = Vec<usize>;

// ============================================================================
// Errors
// ============================================================================

/// Structural validation failure for circle-chord values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelError {
    /// The edge set is not a spanning tree of `1..=v` (wrong count, cycle,
    /// or disconnected). The string names the specific defect.
    NotATree(&'static str),
    /// Two chords cross in the interior of the circle.
    CrossingPair(Chord, Chord),
    /// The edge set does not connect all vertices.
    NotConnected,
    /// A chord endpoint lies outside `1..=v`.
    EdgeOutOfRange { chord: Chord, vertex_count: u32 },
    /// Requested vertex count exceeds [`VERTEX_CAP`].
    VertexCapExceeded { vertex_count: u32 },
    /// A marked edge is not an edge of the underlying graph.
    MarkNotAnEdge(Chord),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::NotATree(why) => write!(f, "not a tree: {why}"),
            ModelError::CrossingPair(e1, e2) => write!(f, "chords {e1} and {e2} cross"),
            ModelError::NotConnected => write!(f, "graph is not connected"),
            ModelError::EdgeOutOfRange { chord, vertex_count } => {
                write!(f, "edge {chord} out of range for {vertex_count} vertices")
            }
            ModelError::VertexCapExceeded { vertex_count } => {
                write!(f, "vertex count {vertex_count} exceeds cap {VERTEX_CAP}")
            }
            ModelError::MarkNotAnEdge(c) => write!(f, "marked edge {c} is not in the graph"),
        }
    }
}

impl std::error::Error for ModelError {}

/// Failure while reading a canonical serialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// Malformed text; `position` is the byte offset of the defect.
    Syntax { position: usize, message: String },
    /// Well-formed text describing an invalid value.
    Invalid(ModelError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            ParseError::Invalid(e) => write!(f, "invalid value: {e}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<ModelError> for ParseError {
    fn from(e: ModelError) -> Self {
        ParseError::Invalid(e)
    }
}

// ============================================================================
// Vertices, chords, descents
// ============================================================================

/// A circle point, labelled `1..=v` counterclockwise. Vertex 1 is the root.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered pair of distinct vertices, stored with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    a: Vertex,
    b: Vertex,
}

impl Chord {
    /// Builds a chord, normalizing endpoint order.
    ///
    /// # Panics
    /// Panics if `x == y`; a chord needs two distinct endpoints.
    pub fn new(x: Vertex, y: Vertex) -> Chord {
        assert!(x != y, "degenerate chord {x}-{y}");
        if x < y {
            Chord { a: x, b: y }
        } else {
            Chord { a: y, b: x }
        }
    }

    /// Convenience constructor from raw labels.
    pub fn of(x: u32, y: u32) -> Chord {
        Chord::new(Vertex(x), Vertex(y))
    }

    /// Smaller endpoint.
    pub fn a(&self) -> Vertex {
        self.a
    }

    /// Larger endpoint.
    pub fn b(&self) -> Vertex {
        self.b
    }

    /// True if `v` is one of the two endpoints.
    pub fn touches(&self, v: Vertex) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Debug for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// True if the two chords cross in the open interior of the circle.
///
/// For `(a1,b1)` and `(a2,b2)` with each pair sorted, this holds exactly when
/// `a1 < a2 < b1 < b2` or `a2 < a1 < b2 < b1`. Chords sharing an endpoint
/// never cross, and nested or disjoint chords never cross.
pub fn crosses(e1: Chord, e2: Chord) -> bool {
    let (a1, b1) = (e1.a, e1.b);
    let (a2, b2) = (e2.a, e2.b);
    (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1)
}

/// A tree edge `(parent, child)` with `parent > child`: the parent lies on
/// the root path of the child and carries the larger label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Descent {
    parent: Vertex,
    child: Vertex,
}

impl Descent {
    /// Builds a descent.
    ///
    /// # Panics
    /// Panics unless `parent > child`.
    pub fn new(parent: Vertex, child: Vertex) -> Descent {
        assert!(parent > child, "descent requires parent > child, got {parent}-{child}");
        Descent { parent, child }
    }

    pub fn parent(&self) -> Vertex {
        self.parent
    }

    pub fn child(&self) -> Vertex {
        self.child
    }

    /// The underlying chord (endpoints sorted).
    pub fn chord(&self) -> Chord {
        Chord::new(self.parent, self.child)
    }
}

// Descents are ordered by child label; each child determines its parent
// within one tree, and "least descent" always means smallest child.
impl Ord for Descent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.child, self.parent).cmp(&(other.child, other.parent))
    }
}

impl PartialOrd for Descent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Descent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.parent, self.child)
    }
}

// ============================================================================
// Noncrossing trees
// ============================================================================

/// A noncrossing tree: a spanning tree of `v` circle points whose chords are
/// pairwise noncrossing, rooted at vertex 1.
///
/// The parent/child orientation is derived once at construction and cached.
#[derive(Clone, Debug)]
pub struct NoncrossingTree {
    vertex_count: u32,
    edges: BTreeSet<Chord>,
    /// `parent[i]` for vertex label `i`; index 0 unused, root maps to `None`.
    parent: Vec<Option<Vertex>>,
    /// Children of each vertex in ascending label order; index 0 unused.
    children: Vec<Vec<Vertex>>,
}

impl PartialEq for NoncrossingTree {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for NoncrossingTree {}

impl std::hash::Hash for NoncrossingTree {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vertex_count.hash(state);
        self.edges.hash(state);
    }
}

impl PartialOrd for NoncrossingTree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NoncrossingTree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.vertex_count, &self.edges).cmp(&(other.vertex_count, &other.edges))
    }
}

impl NoncrossingTree {
    /// Validates `edges` as a noncrossing spanning tree of `1..=vertex_count`
    /// and derives the orientation.
    ///
    /// # Errors
    /// * [`ModelError::VertexCapExceeded`] above [`VERTEX_CAP`]
    /// * [`ModelError::EdgeOutOfRange`] for endpoints outside `1..=v`
    /// * [`ModelError::NotATree`] for wrong edge count or disconnection
    /// * [`ModelError::CrossingPair`] for a crossing chord pair
    pub fn new(
        vertex_count: u32,
        edges: impl IntoIterator<Item = Chord>,
    ) -> Result<NoncrossingTree, ModelError> {
        if vertex_count == 0 {
            return Err(ModelError::NotATree("vertex count must be at least 1"));
        }
        if vertex_count > VERTEX_CAP {
            return Err(ModelError::VertexCapExceeded { vertex_count });
        }
        let edges: BTreeSet<Chord> = edges.into_iter().collect();
        for &e in &edges {
            if e.b.0 > vertex_count {
                return Err(ModelError::EdgeOutOfRange { chord: e, vertex_count });
            }
        }
        if edges.len() != (vertex_count - 1) as usize {
            return Err(ModelError::NotATree("edge count must be one less than vertex count"));
        }
        check_pairwise_noncrossing(&edges)?;
        let (parent, children) = match orient_from_root(vertex_count, &edges) {
            Some(maps) => maps,
            None => return Err(ModelError::NotATree("edges do not connect all vertices")),
        };
        Ok(NoncrossingTree { vertex_count, edges, parent, children })
    }

    /// The single-vertex tree (root only, no edges).
    pub fn trivial() -> NoncrossingTree {
        NoncrossingTree::new(1, []).expect("single vertex is a valid tree")
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    /// Number of edges, `v - 1`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = Chord> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Chord> {
        &self.edges
    }

    pub fn contains_edge(&self, c: Chord) -> bool {
        self.edges.contains(&c)
    }

    /// The root, always vertex 1.
    pub fn root() -> Vertex {
        Vertex(1)
    }

    /// Parent of `x`, or `None` for the root.
    pub fn parent_of(&self, x: Vertex) -> Option<Vertex> {
        self.parent[x.0 as usize]
    }

    /// Children of `x` in ascending label order.
    pub fn children_of(&self, x: Vertex) -> &[Vertex] {
        &self.children[x.0 as usize]
    }

    /// All descents (edges whose parent label exceeds the child label),
    /// ordered by child label ascending.
    pub fn descents(&self) -> Vec<Descent> {
        let mut out = Vec::new();
        for child in 2..=self.vertex_count {
            let child = Vertex(child);
            if let Some(parent) = self.parent_of(child) {
                if parent > child {
                    out.push(Descent::new(parent, child));
                }
            }
        }
        out
    }

    pub fn descent_count(&self) -> usize {
        self.descents().len()
    }
}

fn check_pairwise_noncrossing(edges: &BTreeSet<Chord>) -> Result<(), ModelError> {
    let list: Vec<Chord> = edges.iter().copied().collect();
    for (i, &e1) in list.iter().enumerate() {
        for &e2 in &list[i + 1..] {
            if crosses(e1, e2) {
                return Err(ModelError::CrossingPair(e1, e2));
            }
        }
    }
    Ok(())
}

/// BFS from vertex 1. Returns parent and sorted-children maps when the edges
/// reach every vertex, `None` otherwise.
#[allow(clippy::type_complexity)]
fn orient_from_root(
    vertex_count: u32,
    edges: &BTreeSet<Chord>,
) -> Option<(Vec<Option<Vertex>>, Vec<Vec<Vertex>>)> {
    let n = vertex_count as usize;
    let mut adjacency: Vec<Vec<Vertex>> = vec![Vec::new(); n + 1];
    for &e in edges {
        adjacency[e.a.0 as usize].push(e.b);
        adjacency[e.b.0 as usize].push(e.a);
    }
    let mut parent: Vec<Option<Vertex>> = vec![None; n + 1];
    let mut seen = vec![false; n + 1];
    let mut queue = VecDeque::from([Vertex(1)]);
    seen[1] = true;
    while let Some(u) = queue.pop_front() {
        for &w in &adjacency[u.0 as usize] {
            if !seen[w.0 as usize] {
                seen[w.0 as usize] = true;
                parent[w.0 as usize] = Some(u);
                queue.push_back(w);
            }
        }
    }
    if seen.iter().skip(1).any(|&s| !s) {
        return None;
    }
    let mut children: Vec<Vec<Vertex>> = vec![Vec::new(); n + 1];
    for x in 2..=vertex_count {
        let p = parent[x as usize].expect("non-root vertex has a parent");
        children[p.0 as usize].push(Vertex(x));
    }
    for list in &mut children {
        list.sort();
    }
    Some((parent, children))
}

// ============================================================================
// Noncrossing graphs
// ============================================================================

/// A connected noncrossing graph on `v` circle points. With `n = v - 1` the
/// edge count always lies in `n..=2n-1` (spanning tree up to triangulation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingGraph {
    vertex_count: u32,
    edges: BTreeSet<Chord>,
}

impl NoncrossingGraph {
    /// Validates `edges` as a connected, pairwise-noncrossing edge set.
    ///
    /// # Errors
    /// * [`ModelError::VertexCapExceeded`], [`ModelError::EdgeOutOfRange`]
    /// * [`ModelError::CrossingPair`] for a crossing chord pair
    /// * [`ModelError::NotConnected`] if some vertex is unreachable
    pub fn new(
        vertex_count: u32,
        edges: impl IntoIterator<Item = Chord>,
    ) -> Result<NoncrossingGraph, ModelError> {
        if vertex_count == 0 {
            return Err(ModelError::NotConnected);
        }
        if vertex_count > VERTEX_CAP {
            return Err(ModelError::VertexCapExceeded { vertex_count });
        }
        let edges: BTreeSet<Chord> = edges.into_iter().collect();
        for &e in &edges {
            if e.b.0 > vertex_count {
                return Err(ModelError::EdgeOutOfRange { chord: e, vertex_count });
            }
        }
        check_pairwise_noncrossing(&edges)?;
        if orient_from_root(vertex_count, &edges).is_none() {
            return Err(ModelError::NotConnected);
        }
        Ok(NoncrossingGraph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Chord> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Chord> {
        &self.edges
    }

    pub fn contains_edge(&self, c: Chord) -> bool {
        self.edges.contains(&c)
    }

    /// Neighbor lists in ascending label order; index 0 unused.
    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count as usize;
        let mut adjacency: Vec<Vec<Vertex>> = vec![Vec::new(); n + 1];
        for &e in &self.edges {
            adjacency[e.a.0 as usize].push(e.b);
            adjacency[e.b.0 as usize].push(e.a);
        }
        adjacency
    }

    /// Copy with `c` added.
    ///
    /// # Errors
    /// Same validation as [`NoncrossingGraph::new`].
    pub fn with_edge(&self, c: Chord) -> Result<NoncrossingGraph, ModelError> {
        let mut edges = self.edges.clone();
        edges.insert(c);
        NoncrossingGraph::new(self.vertex_count, edges)
    }

    /// Copy with `c` removed.
    ///
    /// # Errors
    /// [`ModelError::NotConnected`] if removing `c` disconnects the graph.
    pub fn without_edge(&self, c: Chord) -> Result<NoncrossingGraph, ModelError> {
        let mut edges = self.edges.clone();
        edges.remove(&c);
        NoncrossingGraph::new(self.vertex_count, edges)
    }

    /// Views a tree as a graph.
    pub fn from_tree(t: &NoncrossingTree) -> NoncrossingGraph {
        NoncrossingGraph { vertex_count: t.vertex_count(), edges: t.edge_set().clone() }
    }
}

/// A connected noncrossing graph with a distinguished set of marked edges.
///
/// Construction checks only that marks are edges; whether each mark is a
/// *free* edge (outside the canonical spanning tree) is a property of the
/// graph decomposition and is enforced where that decomposition is computed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedNCGraph {
    graph: NoncrossingGraph,
    marked: BTreeSet<Chord>,
}

impl MarkedNCGraph {
    /// # Errors
    /// [`ModelError::MarkNotAnEdge`] if a mark is not an edge of `graph`.
    pub fn new(
        graph: NoncrossingGraph,
        marked: impl IntoIterator<Item = Chord>,
    ) -> Result<MarkedNCGraph, ModelError> {
        let marked: BTreeSet<Chord> = marked.into_iter().collect();
        for &c in &marked {
            if !graph.contains_edge(c) {
                return Err(ModelError::MarkNotAnEdge(c));
            }
        }
        Ok(MarkedNCGraph { graph, marked })
    }

    pub fn graph(&self) -> &NoncrossingGraph {
        &self.graph
    }

    pub fn marked(&self) -> &BTreeSet<Chord> {
        &self.marked
    }

    pub fn is_marked(&self, c: Chord) -> bool {
        self.marked.contains(&c)
    }
}

// ============================================================================
// Plane, ternary, and L/R trees
// ============================================================================

/// A rooted plane tree: children are ordered, nothing is labelled.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> PlaneTree {
        PlaneTree { children: Vec::new() }
    }

    pub fn node(children: Vec<PlaneTree>) -> PlaneTree {
        PlaneTree { children }
    }

    /// Total node count including this node.
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::node_count).sum::<usize>()
    }

    /// Edge count, one less than the node count.
    pub fn edge_count(&self) -> usize {
        self.node_count() - 1
    }

    /// True if every node (including this one) has an even number of children.
    pub fn is_even_tree(&self) -> bool {
        self.children.len() % 2 == 0 && self.children.iter().all(PlaneTree::is_even_tree)
    }
}

/// A ternary tree: every node has exactly zero or three ordered children.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum TernaryTree {
    Leaf,
    Node(Box<[TernaryTree; 3]>),
}

impl TernaryTree {
    pub fn node(left: TernaryTree, middle: TernaryTree, right: TernaryTree) -> TernaryTree {
        TernaryTree::Node(Box::new([left, middle, right]))
    }

    /// Children slice: empty for a leaf, three entries for an internal node.
    pub fn children(&self) -> &[TernaryTree] {
        match self {
            TernaryTree::Leaf => &[],
            TernaryTree::Node(kids) => &kids[..],
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, TernaryTree::Leaf)
    }

    /// Number of internal (3-child) nodes.
    pub fn internal_count(&self) -> usize {
        match self {
            TernaryTree::Leaf => 0,
            TernaryTree::Node(kids) => {
                1 + kids.iter().map(TernaryTree::internal_count).sum::<usize>()
            }
        }
    }
}

/// Edge orientation label in the L/R plane-tree representation: `L` marks an
/// edge whose parent has the larger circle label (a descent), `R` the other
/// orientation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Label {
    L,
    R,
}

impl Label {
    pub fn flipped(self) -> Label {
        match self {
            Label::L => Label::R,
            Label::R => Label::L,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::L => "L",
            Label::R => "R",
        })
    }
}

/// A non-root node of an [`LRTree`]: a label plus ordered children.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LRNode {
    pub label: Label,
    pub children: Vec<LRNode>,
}

impl LRNode {
    pub fn new(label: Label, children: Vec<LRNode>) -> LRNode {
        LRNode { label, children }
    }

    /// Node count of this subtree including this node.
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(LRNode::node_count).sum::<usize>()
    }
}

/// A plane tree whose non-root nodes carry [`Label`]s; the root is unlabelled.
///
/// In a well-formed value every root child is `R` and, within any sibling
/// list, every `L` child precedes every `R` child. Parsing checks only the
/// syntax; the label discipline is enforced where the tree is consumed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct LRTree {
    pub children: Vec<LRNode>,
}

impl LRTree {
    pub fn new(children: Vec<LRNode>) -> LRTree {
        LRTree { children }
    }

    /// Number of non-root nodes (= edge count of the underlying tree).
    pub fn node_count(&self) -> usize {
        self.children.iter().map(LRNode::node_count).sum()
    }

    /// Node at `path`, or `None` if the path leaves the tree. The empty path
    /// addresses the unlabelled root, which is not an [`LRNode`].
    pub fn node_at(&self, path: &[usize]) -> Option<&LRNode> {
        let (&first, rest) = path.split_first()?;
        let mut node = self.children.get(first)?;
        for &idx in rest {
            node = node.children.get(idx)?;
        }
        Some(node)
    }
}

// ============================================================================
// Serialization
// ============================================================================

fn write_edge_list(
    f: &mut fmt::Formatter<'_>,
    edges: &BTreeSet<Chord>,
    marked: Option<&BTreeSet<Chord>>,
) -> fmt::Result {
    for (i, e) in edges.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
        if marked.is_some_and(|m| m.contains(e)) {
            f.write_str("*")?;
        }
    }
    Ok(())
}

impl fmt::Display for NoncrossingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nct:{}:", self.vertex_count)?;
        write_edge_list(f, &self.edges, None)
    }
}

impl fmt::Display for NoncrossingGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ncg:{}:", self.vertex_count)?;
        write_edge_list(f, &self.edges, None)
    }
}

impl fmt::Display for MarkedNCGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ncg:{}:", self.graph.vertex_count)?;
        write_edge_list(f, &self.graph.edges, Some(&self.marked))
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for child in &self.children {
            write!(f, "{child}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for TernaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for child in self.children() {
            write!(f, "{child}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for LRNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.label)?;
        for child in &self.children {
            write!(f, "{child}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for LRTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for child in &self.children {
            write!(f, "{child}")?;
        }
        f.write_str(")")
    }
}

// ----------------------------------------------------------------------------
// Parsing
// ----------------------------------------------------------------------------

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        Cursor { bytes: text.as_bytes(), pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { position: self.pos, message: message.into() }
    }

    fn expect_byte(&mut self, wanted: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(b) if b == wanted => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.error(format!("expected '{}', found '{}'", wanted as char, b as char))),
            None => Err(self.error(format!("expected '{}', found end of input", wanted as char))),
        }
    }

    fn expect_literal(&mut self, lit: &str) -> Result<(), ParseError> {
        for &b in lit.as_bytes() {
            self.expect_byte(b)?;
        }
        Ok(())
    }

    fn parse_u32(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            value = value * 10 + u64::from(b - b'0');
            if value > u64::from(u32::MAX) {
                return Err(ParseError::Syntax {
                    position: start,
                    message: "number too large".into(),
                });
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        Ok(value as u32)
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            Err(self.error("trailing input"))
        }
    }
}

/// Parses an edge list `a-b[*],a-b[*],...` (possibly empty), returning the
/// edges and the marked subset.
fn parse_edge_list(cur: &mut Cursor<'_>) -> Result<(Vec<Chord>, Vec<Chord>), ParseError> {
    let mut edges = Vec::new();
    let mut marked = Vec::new();
    if cur.peek().is_none() {
        return Ok((edges, marked));
    }
    loop {
        let a = cur.parse_u32()?;
        cur.expect_byte(b'-')?;
        let pos_b = cur.pos;
        let b = cur.parse_u32()?;
        if a == 0 || b == 0 || a == b {
            return Err(ParseError::Syntax {
                position: pos_b,
                message: format!("bad edge {a}-{b}: endpoints must be distinct and positive"),
            });
        }
        let chord = Chord::of(a, b);
        if cur.peek() == Some(b'*') {
            cur.bump();
            marked.push(chord);
        }
        edges.push(chord);
        match cur.peek() {
            Some(b',') => {
                cur.bump();
            }
            None => break,
            Some(_) => return Err(cur.error("expected ',' or end of input")),
        }
    }
    Ok((edges, marked))
}

impl FromStr for NoncrossingTree {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(text);
        cur.expect_literal("nct:")?;
        let v = cur.parse_u32()?;
        cur.expect_byte(b':')?;
        let (edges, marked) = parse_edge_list(&mut cur)?;
        if let Some(&c) = marked.first() {
            return Err(cur.error(format!("tree edges cannot be marked: {c}")));
        }
        cur.expect_end()?;
        Ok(NoncrossingTree::new(v, edges)?)
    }
}

impl FromStr for NoncrossingGraph {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(text);
        cur.expect_literal("ncg:")?;
        let v = cur.parse_u32()?;
        cur.expect_byte(b':')?;
        let (edges, marked) = parse_edge_list(&mut cur)?;
        if let Some(&c) = marked.first() {
            return Err(cur.error(format!("unexpected marked edge {c} in unmarked graph")));
        }
        cur.expect_end()?;
        Ok(NoncrossingGraph::new(v, edges)?)
    }
}

impl FromStr for MarkedNCGraph {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(text);
        cur.expect_literal("ncg:")?;
        let v = cur.parse_u32()?;
        cur.expect_byte(b':')?;
        let (edges, marked) = parse_edge_list(&mut cur)?;
        cur.expect_end()?;
        let graph = NoncrossingGraph::new(v, edges)?;
        Ok(MarkedNCGraph::new(graph, marked)?)
    }
}

fn parse_plane_node(cur: &mut Cursor<'_>) -> Result<PlaneTree, ParseError> {
    cur.expect_byte(b'(')?;
    let mut children = Vec::new();
    while cur.peek() == Some(b'(') {
        children.push(parse_plane_node(cur)?);
    }
    cur.expect_byte(b')')?;
    Ok(PlaneTree::node(children))
}

impl FromStr for PlaneTree {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(text);
        let tree = parse_plane_node(&mut cur)?;
        cur.expect_end()?;
        Ok(tree)
    }
}

fn parse_ternary_node(cur: &mut Cursor<'_>) -> Result<TernaryTree, ParseError> {
    let open = cur.pos;
    cur.expect_byte(b'(')?;
    let mut children = Vec::new();
    while cur.peek() == Some(b'(') {
        children.push(parse_ternary_node(cur)?);
    }
    cur.expect_byte(b')')?;
    match children.len() {
        0 => Ok(TernaryTree::Leaf),
        3 => {
            let mut it = children.into_iter();
            let (a, b, c) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
            Ok(TernaryTree::node(a, b, c))
        }
        k => Err(ParseError::Syntax {
            position: open,
            message: format!("ternary node must have 0 or 3 children, found {k}"),
        }),
    }
}

impl FromStr for TernaryTree {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(text);
        let tree = parse_ternary_node(&mut cur)?;
        cur.expect_end()?;
        Ok(tree)
    }
}

fn parse_lr_node(cur: &mut Cursor<'_>) -> Result<LRNode, ParseError> {
    let label = match cur.peek() {
        Some(b'L') => Label::L,
        Some(b'R') => Label::R,
        _ => return Err(cur.error("expected label 'L' or 'R'")),
    };
    cur.bump();
    cur.expect_byte(b'(')?;
    let mut children = Vec::new();
    while matches!(cur.peek(), Some(b'L') | Some(b'R')) {
        children.push(parse_lr_node(cur)?);
    }
    cur.expect_byte(b')')?;
    Ok(LRNode::new(label, children))
}

impl FromStr for LRTree {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(text);
        cur.expect_byte(b'(')?;
        let mut children = Vec::new();
        while matches!(cur.peek(), Some(b'L') | Some(b'R')) {
            children.push(parse_lr_node(&mut cur)?);
        }
        cur.expect_byte(b')')?;
        cur.expect_end()?;
        Ok(LRTree::new(children))
    }
}

// ============================================================================
// Tests
// ============================================================================
