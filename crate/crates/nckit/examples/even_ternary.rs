//! The correspondence between even plane trees and ternary trees: peel
//! two subtrees at a time, recurse on the rest, and the inverse walks the
//! same steps backwards.

use nckit::bijections::{psi, psi_inverse};
use nckit::counting::c_count;
use nckit::enumerate::{even_plane_trees, ternary_trees};
use nckit::model::PlaneTree;
use num_bigint::BigInt;

fn main() {
    for text in ["(()())", "(()()()())", "((()())())"] {
        let e: PlaneTree = text.parse().expect("balanced parentheses");
        let t = psi(&e).expect("every vertex has an even child count");
        println!("{text:<14} ->  {t}");
        assert_eq!(psi_inverse(&t), e);
    }

    // Trees with an odd vertex are rejected, naming the offender.
    let odd: PlaneTree = "(()()())".parse().expect("balanced parentheses");
    println!("(()()()) is rejected: {}", psi(&odd).unwrap_err());

    for half in 0..=5 {
        let even = even_plane_trees(2 * half).count();
        let ternary = ternary_trees(half).count();
        assert_eq!(even, ternary);
        assert_eq!(BigInt::from(even), c_count(half as i64));
        println!("{:>2} edges: {even} even trees = {ternary} ternary trees", 2 * half);
    }
}
