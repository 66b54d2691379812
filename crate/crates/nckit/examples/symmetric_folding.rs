//! Folds proper noncrossing trees onto mirror-symmetric ternary trees and
//! unfolds them again.

use nckit::bijections::{is_symmetric, reflect, sigma, sigma_inverse};
use nckit::enumerate::{noncrossing_trees, symmetric_ternary_trees};
use nckit::model::NoncrossingTree;
use nckit::parity::is_proper;

fn main() {
    let t: NoncrossingTree =
        "nct:9:1-4,1-9,2-4,3-4,5-9,6-8,7-8,8-9".parse().expect("valid tree");
    let folded = sigma(&t).expect("proper tree");
    println!("{t}");
    println!("  ->  {folded}");
    assert!(is_symmetric(folded.inner()));
    assert_eq!(&reflect(folded.inner()), folded.inner());
    assert_eq!(sigma_inverse(&folded), t);

    // One for one at every size: proper trees with n edges against
    // symmetric ternary trees with n internal nodes.
    for n in 0..=5 {
        let proper = noncrossing_trees(n).filter(|t| is_proper(t)).count();
        let symmetric = symmetric_ternary_trees(n).count();
        assert_eq!(proper, symmetric);
        println!("n={n}: {proper} proper trees = {symmetric} symmetric ternary trees");
    }
}
