//! The edge-toggling involution on marked graphs: everything pairs off
//! except the graphs whose descents are all marked, and those are counted
//! by the descent distribution.

use nckit::counting::d_count;
use nckit::enumerate::marked_graphs;
use nckit::graphs::{companion_involution, GraphsError};
use num_bigint::BigInt;

fn main() {
    let v: u32 = 5;
    let n = i64::from(v) - 1;
    for k in 0..(v as usize - 1) {
        let mut fixed = 0usize;
        let mut paired = 0usize;
        for m in marked_graphs(v, k) {
            match companion_involution(&m) {
                Err(GraphsError::AllDescentsMarked) => fixed += 1,
                Err(e) => panic!("marks sit on free edges by construction: {e}"),
                Ok(image) => {
                    // The toggle moves one edge and undoes itself.
                    assert_eq!(companion_involution(&image).expect("pairs back"), m);
                    paired += 1;
                }
            }
        }
        assert_eq!(BigInt::from(fixed), d_count(n, k as i64));
        println!("k={k}: {paired} marked graphs pair off, {fixed} fixed = d({n},{k})");
    }
}
