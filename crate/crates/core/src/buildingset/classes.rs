//! Graphs up to isomorphism, for exhaustive scans over small node counts.

use std::collections::BTreeSet;

use super::graph::Graph;

/// Node counts for which isomorphism classes can be enumerated.
pub const MAX_CLASS_NODES: usize = 7;

/// One representative per isomorphism class of graphs on `n` nodes, built by
/// adding a node in every possible way to the classes on `n − 1` nodes.
pub fn graph_classes(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CLASS_NODES, "class enumeration limited to {MAX_CLASS_NODES} nodes");
    let mut codes: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 0..n {
        let mut next = BTreeSet::new();
        for &code in &codes {
            let g = Graph::from_code(k, code);
            for mask in 0..(1u32 << k) {
                let h = g.with_extra_node(mask);
                next.insert(h.canonical_code().expect("small graph"));
            }
        }
        codes = next;
    }
    codes.into_iter().map(|c| Graph::from_code(n, c)).collect()
}

pub fn connected_graph_classes(n: usize) -> Vec<Graph> {
    graph_classes(n).into_iter().filter(Graph::is_connected).collect()
}

/// Every labelled graph on `n` nodes (`2^{n(n−1)/2}` of them).
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labelled enumeration limited to 8 nodes");
    let pairs = n * n.saturating_sub(1) / 2;
    (0..(1u64 << pairs)).map(move |code| Graph::from_code(n, code))
}
