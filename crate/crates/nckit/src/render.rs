//! Deterministic SVG chord diagrams for trees, graphs, and marked graphs.
//!
//! Vertices sit equally spaced on a circle, vertex 1 at the top, labels
//! increasing counterclockwise. Edges are straight chords: spanning-tree
//! edges solid, free edges dashed, marked edges bold. Output bytes depend
//! only on the input value: edges are emitted in sorted order and floats
//! with fixed precision, so renders can be compared or committed.

use crate::graphs::canonical_spanning_tree;
use crate::model::{Chord, MarkedNCGraph, NoncrossingGraph, NoncrossingTree};
use std::fmt::Write as _;

const SIZE: f64 = 400.0;
const CENTER: f64 = SIZE / 2.0;
const RADIUS: f64 = 170.0;
const LABEL_RADIUS: f64 = 186.0;

/// One chord with its drawing attributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct StyledEdge {
    chord: Chord,
    in_tree: bool,
    marked: bool,
}

/// A renderable chord diagram.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagram {
    vertex_count: u32,
    edges: Vec<StyledEdge>,
}

impl Diagram {
    pub fn from_tree(t: &NoncrossingTree) -> Diagram {
        let edges = t
            .edges()
            .map(|chord| StyledEdge { chord, in_tree: true, marked: false })
            .collect();
        Diagram { vertex_count: t.vertex_count(), edges }
    }

    /// Free edges (those outside the canonical spanning tree) are dashed.
    pub fn from_graph(g: &NoncrossingGraph) -> Diagram {
        let tree = canonical_spanning_tree(g);
        let edges = g
            .edges()
            .map(|chord| StyledEdge { chord, in_tree: tree.contains_edge(chord), marked: false })
            .collect();
        Diagram { vertex_count: g.vertex_count(), edges }
    }

    /// Marked edges are additionally drawn bold.
    pub fn from_marked(m: &MarkedNCGraph) -> Diagram {
        let mut diagram = Diagram::from_graph(m.graph());
        for e in &mut diagram.edges {
            e.marked = m.is_marked(e.chord);
        }
        diagram
    }

    /// Position of a vertex: equally spaced, label 1 at the top, labels
    /// increasing counterclockwise.
    fn position(&self, label: u32, radius: f64) -> (f64, f64) {
        let step = std::f64::consts::TAU / f64::from(self.vertex_count);
        let theta = std::f64::consts::FRAC_PI_2 + step * f64::from(label - 1);
        (CENTER + radius * theta.cos(), CENTER - radius * theta.sin())
    }

    /// Renders the complete SVG document.
    pub fn to_svg(&self) -> String {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" \
             viewBox=\"0 0 {SIZE} {SIZE}\">"
        );
        let _ = writeln!(
            out,
            "  <circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{RADIUS}\" fill=\"none\" \
             stroke=\"#cccccc\" stroke-width=\"1\"/>"
        );
        for e in &self.edges {
            let (x1, y1) = self.position(e.chord.a().0, RADIUS);
            let (x2, y2) = self.position(e.chord.b().0, RADIUS);
            let width = if e.marked { "3.5" } else { "1.5" };
            let dash = if e.in_tree { "" } else { " stroke-dasharray=\"7 5\"" };
            let _ = writeln!(
                out,
                "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" \
                 stroke=\"#222222\" stroke-width=\"{width}\"{dash}/>"
            );
        }
        for label in 1..=self.vertex_count {
            let (x, y) = self.position(label, RADIUS);
            let _ = writeln!(out, "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"#222222\"/>");
            let (tx, ty) = self.position(label, LABEL_RADIUS);
            let _ = writeln!(
                out,
                "  <text x=\"{tx:.2}\" y=\"{ty:.2}\" font-family=\"monospace\" font-size=\"14\" \
                 text-anchor=\"middle\" dominant-baseline=\"central\">{label}</text>"
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn output_is_deterministic() {
        let g: NoncrossingGraph = "ncg:7:1-3,1-4,2-3,3-4,4-7,5-6,5-7,6-7".parse().unwrap();
        let first = Diagram::from_graph(&g).to_svg();
        let second = Diagram::from_graph(&g).to_svg();
        assert_eq!(first, second);
    }

    #[test]
    fn vertex_one_sits_at_the_top() {
        let t: NoncrossingTree = "nct:4:1-2,1-3,1-4".parse().unwrap();
        let svg = Diagram::from_tree(&t).to_svg();
        // Top of the circle: x = 200, y = 200 - 170.
        assert!(svg.contains("<circle cx=\"200.00\" cy=\"30.00\" r=\"4\""), "{svg}");
        assert!(svg.contains(">1</text>"));
    }

    #[test]
    fn free_edges_are_dashed_and_marks_are_bold() {
        let g: NoncrossingGraph = "ncg:7:1-3,1-4,2-3,3-4,4-7,5-6,5-7,6-7".parse().unwrap();
        let svg = Diagram::from_graph(&g).to_svg();
        assert_eq!(svg.matches("stroke-dasharray").count(), 2, "free edges 1-3 and 5-6");
        assert_eq!(svg.matches("<line ").count(), 8);
        assert_eq!(svg.matches("stroke-width=\"3.5\"").count(), 0);

        let m: MarkedNCGraph = "ncg:3:1-2*,1-3,2-3".parse().unwrap();
        let svg = Diagram::from_marked(&m).to_svg();
        assert_eq!(svg.matches("stroke-width=\"3.5\"").count(), 1, "one marked edge");
        assert_eq!(svg.matches("stroke-dasharray").count(), 1, "the free edge 1-2");
    }

    #[test]
    fn tree_render_has_no_dashes() {
        let t: NoncrossingTree = "nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8".parse().unwrap();
        let svg = Diagram::from_tree(&t).to_svg();
        assert_eq!(svg.matches("<line ").count(), 7);
        assert_eq!(svg.matches("stroke-dasharray").count(), 0);
        assert_eq!(svg.matches("<text ").count(), 8);
    }
}
