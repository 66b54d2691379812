//! The plane representation: each non-root vertex carries an L or R label
//! telling which side of its parent it sits on, and the labelled shape
//! rebuilds the chord picture exactly.

use nckit::enumerate::lr_trees;
use nckit::model::NoncrossingTree;
use nckit::represent::{descent_count, from_lr_tree, to_lr_tree};

fn main() {
    for text in ["nct:3:1-2,2-3", "nct:4:1-4,2-3,2-4", "nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8"] {
        let t: NoncrossingTree = text.parse().expect("valid tree");
        let l = to_lr_tree(&t);
        println!("{t}");
        println!("  ->  {l}");
        // L labels and descents are the same thing in this representation.
        assert_eq!(descent_count(&l), t.descent_count());
        assert_eq!(from_lr_tree(&l).expect("valid labels"), t);
    }

    // Every labelled shape of the right discipline appears exactly once.
    println!("all labelled shapes with two edges:");
    for l in lr_trees(2) {
        println!("  {l}  ->  {}", from_lr_tree(&l).expect("valid labels"));
    }
}
