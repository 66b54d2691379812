//! A quick pass over the whole crate: build a tree, read its descents,
//! translate it, pair it, disassemble a graph, and count everything.

use nckit::bijections::sigma;
use nckit::counting;
use nckit::enumerate;
use nckit::graphs;
use nckit::model::{NoncrossingGraph, NoncrossingTree};
use nckit::parity;
use nckit::represent;
use num_bigint::BigInt;

fn main() {
    // A seven-edge noncrossing tree on eight circle points.
    let t: NoncrossingTree = "nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8".parse().expect("valid tree");
    let descents: Vec<String> = t.descents().iter().map(|d| d.to_string()).collect();
    println!("tree          {t}");
    println!("descents      {}", descents.join(" "));
    println!("parity        {}", parity::tree_parity(&t));

    // Its plane representation: each vertex hangs left or right of its
    // parent, and the labelled shape rebuilds the tree exactly.
    let l = represent::to_lr_tree(&t);
    println!("plane form    {l}");
    assert_eq!(represent::from_lr_tree(&l).expect("round trip"), t);

    // The parity involution pairs this improper tree with one of the
    // opposite descent parity.
    let partner = parity::phi(&t).expect("improper trees have partners");
    println!("partner       {partner}");
    assert_eq!(parity::tree_parity(&partner), parity::tree_parity(&t).flipped());

    // Enumerated and closed-form counts always agree.
    let n = 5;
    let streamed = enumerate::noncrossing_trees(n).count();
    assert_eq!(BigInt::from(streamed), counting::c_count(n as i64));
    println!("c({n})          {streamed}");

    // Proper trees fold onto mirror-symmetric ternary trees.
    let star: NoncrossingTree = "nct:3:1-2,1-3".parse().expect("valid tree");
    println!("folded star   {}", sigma(&star).expect("stars are proper"));

    // Connected graphs split into a canonical spanning tree plus the
    // descents whose companion edges are present.
    let g: NoncrossingGraph =
        "ncg:7:1-3,1-4,2-3,3-4,4-7,5-6,5-7,6-7".parse().expect("valid graph");
    let spanning = graphs::canonical_spanning_tree(&g);
    println!("graph         {g}");
    println!("spanning tree {spanning}");
    for d in graphs::saturated_descents(&g) {
        println!("saturated     {d} via companion {}", graphs::companion_edge(&spanning, d));
    }
}
