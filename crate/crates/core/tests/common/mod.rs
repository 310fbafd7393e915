#![allow(dead_code)]

use proptest::prelude::*;
use sgeo_core::Graph;

/// Connected graphs on `1..=max_n` vertices: a random spanning tree plus random chords.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
            let chords = proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2);
            (Just(n), parents, chords)
        })
        .prop_map(|(n, parents, chords)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if chords[k] && !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
}
