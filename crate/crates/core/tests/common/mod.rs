#![allow(dead_code)]

use graphpos::Graph;
use proptest::prelude::*;

/// Connected graphs: a random spanning tree plus random extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        let pairs = n * (n - 1) / 2;
        (Just(n), parents, proptest::collection::vec(0.0..1.0f64, pairs), 0.0..1.0f64)
    })
    .prop_map(|(n, parents, extra, density)| {
        let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if extra[k] < density {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::from_edges(n, &edges).expect("valid edges")
    })
}

/// Any graph, connected or not.
pub fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).expect("valid edges")
        })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
