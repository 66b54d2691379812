//! Exact closed forms at sizes far beyond what enumeration could reach.
//! Every division in these formulas is checked to leave no remainder.

use nckit::counting::{c_count, d_count, eo_split, g_count, s_count};

fn main() {
    println!("trees with 100 edges:");
    println!("  {}", c_count(100));
    println!("symmetric ternary trees with 101 internal nodes:");
    println!("  {}", s_count(101));
    println!("trees with 30 edges and 10 descents:");
    println!("  {}", d_count(30, 10));
    println!("connected graphs on 21 points with 30 edges:");
    println!("  {}", g_count(20, 30));

    let (even, odd) = eo_split(9);
    println!("9-edge trees by descent parity: {even} even, {odd} odd");
    assert_eq!(even - odd, s_count(9));
}
