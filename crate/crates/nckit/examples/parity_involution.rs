//! Pairs improper trees of opposite descent parity and counts what the
//! pairing leaves behind: exactly the proper trees.

use nckit::counting::{eo_split, s_count};
use nckit::enumerate::noncrossing_trees;
use nckit::parity::{is_proper, phi, tree_parity};

fn main() {
    let n = 3;
    println!("all {n}-edge trees under the involution:");
    let mut proper = 0i64;
    for t in noncrossing_trees(n) {
        if is_proper(&t) {
            proper += 1;
            println!("  {t}  stays (proper, {})", tree_parity(&t));
        } else {
            let partner = phi(&t).expect("improper trees have partners");
            assert_eq!(phi(&partner).expect("pairs back"), t);
            println!("  {t} ({})  <->  {partner} ({})", tree_parity(&t), tree_parity(&partner));
        }
    }

    let (even, odd) = eo_split(n as i64);
    println!("{even} even - {odd} odd = {proper} proper = {}", s_count(n as i64));
    assert_eq!(even - odd, s_count(n as i64));
}
