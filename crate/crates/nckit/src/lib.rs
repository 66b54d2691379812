//! Exact enumeration, bijections, and counting for noncrossing trees and
//! connected noncrossing graphs on circle points.
//!
//! A *noncrossing tree* is a spanning tree of `v` points on a circle,
//! labelled `1..=v` counterclockwise and rooted at 1, whose edges are chords
//! that never cross. This crate materializes the combinatorics of these
//! objects and of the connected noncrossing graphs they generate:
//!
//! * [`model`]: the structures themselves plus canonical text forms
//! * [`represent`]: the L/R plane-tree representation and its inverse
//! * [`bijections`]: even plane trees to ternary trees, proper noncrossing
//!   trees to mirror-symmetric ternary trees
//! * [`parity`]: the descent-parity involution on improper trees
//! * [`graphs`]: canonical spanning trees, companion edges, assembly of
//!   graphs from (tree, descent subset) pairs, and the edge-toggling
//!   involution on marked graphs
//! * [`enumerate`]: lazy exhaustive streams for every family, with an
//!   independent brute-force oracle for small sizes
//! * [`counting`]: exact big-integer closed forms and identity checkers
//! * [`checks`]: end-to-end verification routines shared by the CLI and the
//!   acceptance suite
//! * [`render`]: deterministic SVG chord diagrams
//!
//! Run `cargo run --example tour` for a guided walk through the API, or see
//! the `examples/` directory for one focused program per capability.

pub mod bijections;
pub mod checks;
pub mod counting;
pub mod enumerate;
pub mod graphs;
pub mod model;
pub mod parity;
pub mod render;
pub mod represent;
