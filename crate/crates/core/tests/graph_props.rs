mod common;

use common::{any_graph, connected_graph, permutation};
use graphpos::canon::{canonical_code, canonical_graph6};
use graphpos::metric::{diameter, distance_matrix, Diameter};
use graphpos::{parse_graph6, serialize_graph6, Graph};
use proptest::prelude::*;

/// All-pairs distances by Floyd–Warshall, `None` for unreachable pairs.
fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(0);
        for v in 0..n {
            if g.has_edge(u, v) {
                row[v] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_round_trip(g in any_graph(64)) {
        let code = serialize_graph6(&g);
        prop_assert_eq!(parse_graph6(&code).unwrap(), g.clone());
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn distances_match_floyd_warshall(g in any_graph(14)) {
        let d = distance_matrix(&g);
        let oracle = floyd_warshall(&g);
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(d.get(u, v), oracle[u][v]);
                prop_assert_eq!(d.get(u, v), d.get(v, u));
            }
        }
        let max = oracle.iter().flatten().try_fold(0, |m, x| x.map(|x| m.max(x)));
        let expected = max.map_or(Diameter::Infinite, Diameter::Finite);
        prop_assert_eq!(diameter(&g), expected);
    }

    #[test]
    fn betweenness_is_additive(g in connected_graph(12)) {
        let d = distance_matrix(&g);
        let n = g.order();
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    let (a, b, c) = (d.get(u, w).unwrap(), d.get(w, v).unwrap(), d.get(u, v).unwrap());
                    prop_assert!(a + b >= c);
                    prop_assert_eq!(d.is_between(u, w, v), a + b == c);
                }
            }
        }
    }

    #[test]
    fn canonical_code_ignores_labels(
        (g, perm) in any_graph(12).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })
    ) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        let c = Graph::from_graph6(&canonical_graph6(&g)).unwrap();
        if g.order() <= 7 {
            prop_assert!(graphpos::canon::isomorphic_brute_force(&c, &g));
        }
    }

    #[test]
    fn canonical_code_separates_non_isomorphic(g in any_graph(7), h in any_graph(7)) {
        let same = canonical_code(&g) == canonical_code(&h);
        prop_assert_eq!(same, graphpos::canon::isomorphic_brute_force(&g, &h));
    }

    #[test]
    fn join_and_complement_sizes(g in any_graph(10), h in any_graph(10)) {
        let j = g.join(&h).unwrap();
        prop_assert_eq!(j.size(), g.size() + h.size() + g.order() * h.order());
        let n = g.order();
        prop_assert_eq!(g.size() + g.complement().size(), n * (n - 1) / 2);
    }
}

#[test]
fn graph6_known_codes() {
    assert_eq!(Graph::from_graph6("Dhc").unwrap(), graphpos::graph::named::cycle(5).unwrap());
    assert!(Graph::from_graph6("D!c").is_err());
    assert!(Graph::from_graph6("").is_err());
}
