//! Writes chord diagrams: solid lines for spanning-tree edges, dashes for
//! free edges, thick strokes for marks. Output bytes never vary between
//! runs.

use nckit::model::{MarkedNCGraph, NoncrossingTree};
use nckit::render::Diagram;

fn main() {
    let dir = std::env::temp_dir();

    let t: NoncrossingTree = "nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8".parse().expect("valid tree");
    let tree_path = dir.join("nckit-tree.svg");
    std::fs::write(&tree_path, Diagram::from_tree(&t).to_svg()).expect("writable");
    println!("wrote {}", tree_path.display());

    let m: MarkedNCGraph =
        "ncg:7:1-3*,1-4,2-3,3-4,4-7,5-6,5-7,6-7".parse().expect("valid marked graph");
    let graph_path = dir.join("nckit-marked.svg");
    std::fs::write(&graph_path, Diagram::from_marked(&m).to_svg()).expect("writable");
    println!("wrote {}", graph_path.display());

    assert_eq!(Diagram::from_marked(&m).to_svg(), Diagram::from_marked(&m).to_svg());
}
