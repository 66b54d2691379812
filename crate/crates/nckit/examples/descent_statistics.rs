//! Tabulates noncrossing trees by descent count and matches the observed
//! histogram against the two-binomial formula.

use nckit::counting::d_count;
use nckit::enumerate::noncrossing_trees;
use num_bigint::BigInt;
use std::collections::BTreeMap;

fn main() {
    let n = 5;
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for t in noncrossing_trees(n) {
        *histogram.entry(t.descent_count()).or_default() += 1;
    }

    println!(" k  trees  formula");
    for k in 0..n {
        let observed = histogram.get(&k).copied().unwrap_or(0);
        let formula = d_count(n as i64, k as i64);
        assert_eq!(BigInt::from(observed), formula);
        println!("{k:>2}  {observed:>5}  {formula:>7}");
    }

    // No tree with n edges reaches n descents: the root's edges never
    // count.
    assert_eq!(histogram.get(&n), None);
}
