//! Connected noncrossing graphs disassemble into a canonical spanning
//! tree plus the set of saturated descents, and assemble back from
//! exactly those parts.

use nckit::graphs::{
    assemble, canonical_spanning_tree, companion_edge, free_edges, saturated_descents,
};
use nckit::model::NoncrossingGraph;

fn main() {
    let g: NoncrossingGraph =
        "ncg:7:1-3,1-4,2-3,3-4,4-7,5-6,5-7,6-7".parse().expect("valid graph");
    let t = canonical_spanning_tree(&g);
    let free: Vec<String> = free_edges(&g).iter().map(|c| c.to_string()).collect();

    println!("graph     {g}");
    println!("spanning  {t}");
    println!("free      {}", free.join(" "));
    for d in t.descents() {
        let companion = companion_edge(&t, d);
        let state = if g.contains_edge(companion) { "saturated" } else { "open" };
        println!("descent {d}: companion {companion} ({state})");
    }

    let rebuilt = assemble(&t, saturated_descents(&g));
    assert_eq!(rebuilt, g);
    println!("reassembled {rebuilt}");
}
