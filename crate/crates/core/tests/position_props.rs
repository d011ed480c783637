mod common;

use common::{connected_graph, permutation};
use graphpos::graph::{named, Graph};
use graphpos::invariants::{clique_number, independent_clique_number};
use graphpos::position::{self, in_position, Certificate, PositionKind};
use graphpos::brute_force_position_number;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn mp_at_most_gp(g in connected_graph(12)) {
        let (m, k) = position::position_numbers(&g).unwrap();
        prop_assert!(m.value <= k.value);
        prop_assert!(clique_number(&g) <= m.value);
    }

    #[test]
    fn solver_matches_oracle(g in connected_graph(10)) {
        for kind in PositionKind::BOTH {
            let w = position::position_number(&g, kind).unwrap();
            prop_assert_eq!(w.value, brute_force_position_number(&g, kind).unwrap());
            prop_assert!(Certificate::Witness(w).verify(&g, kind));
        }
    }

    #[test]
    fn relabelling_keeps_numbers(
        (g, perm) in connected_graph(10).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })
    ) {
        let h = g.permuted(&perm);
        prop_assert_eq!(
            position::position_numbers(&g).map(|(m, k)| (m.value, k.value)),
            position::position_numbers(&h).map(|(m, k)| (m.value, k.value))
        );
    }

    #[test]
    fn violations_are_certificates(
        (g, set) in connected_graph(11).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=n))
        })
    ) {
        for kind in PositionKind::BOTH {
            match in_position(&g, &set, kind).unwrap() {
                Some(v) => {
                    prop_assert!(v.verify(&g, kind));
                    prop_assert!(v.hits.len() >= 3);
                }
                None => {
                    let w = position::Witness { set: set.clone(), value: set.len() };
                    prop_assert!(w.verify(&g, kind));
                    prop_assert!(set.len() <= position::position_number(&g, kind).unwrap().value);
                }
            }
        }
    }

    #[test]
    fn join_formula(g in connected_graph(6), h in connected_graph(6)) {
        let j = g.join(&h).unwrap();
        let (mg, _) = position::position_numbers(&g).unwrap();
        let (mh, _) = position::position_numbers(&h).unwrap();
        let (mj, kj) = position::position_numbers(&j).unwrap();
        let omega = clique_number(&g) + clique_number(&h);
        prop_assert_eq!(mj.value, omega.max(mg.value).max(mh.value));
        prop_assert_eq!(
            kj.value,
            omega.max(independent_clique_number(&g)).max(independent_clique_number(&h))
        );
    }

    #[test]
    fn multipartite_formula(parts in proptest::collection::vec(1usize..=5, 2..=5)) {
        let g = named::complete_multipartite(&parts).unwrap();
        let claim = parts.len().max(*parts.iter().max().unwrap());
        let (m, k) = position::position_numbers(&g).unwrap();
        prop_assert_eq!((m.value, k.value), (claim, claim));
    }

    #[test]
    fn trees_have_leaf_number(parents in (3usize..=20).prop_flat_map(|n| (1..n).map(|i| 0..i).collect::<Vec<_>>())) {
        let n = parents.len() + 1;
        let edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
        let t = Graph::from_edges(n, &edges).unwrap();
        let (m, k) = position::position_numbers(&t).unwrap();
        prop_assert_eq!(m.value, t.leaf_count());
        prop_assert_eq!(k.value, t.leaf_count());
    }
}

#[test]
fn small_values() {
    let c4 = named::cycle(4).unwrap();
    assert_eq!(position::gp(&c4).unwrap(), 2);
    let c5 = named::cycle(5).unwrap();
    assert_eq!((position::mp(&c5).unwrap(), position::gp(&c5).unwrap()), (2, 3));
    let k33 = named::complete_multipartite(&[3, 3]).unwrap();
    assert_eq!(brute_force_position_number(&k33, PositionKind::Monophonic).unwrap(), 3);
    assert_eq!(brute_force_position_number(&k33, PositionKind::Geodesic).unwrap(), 3);
    let p2 = named::path(2).unwrap();
    assert_eq!(brute_force_position_number(&p2, PositionKind::Geodesic).unwrap(), 2);
}

#[test]
fn induced_paths_through_a_vertex() {
    let p5 = named::path(5).unwrap();
    assert!(position::exists_induced_path_through(&p5, 0, 2, 4));
    let k4 = Graph::complete(4).unwrap();
    assert!(!position::exists_induced_path_through(&k4, 0, 1, 2));
    // a_1, b_2, c_1, x, c_2, b_1, a_2 in the pagoda of order 10
    let pag = graphpos::families::pagoda(3).unwrap();
    assert!(position::exists_induced_path_through(&pag, 0, 9, 1));
    assert!(position::is_induced_path(&pag, &[0, 4, 6, 9, 7, 3, 1]));
}

#[test]
fn disconnected_input_is_rejected() {
    let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert!(matches!(position::mp(&g), Err(graphpos::Error::Disconnected)));
}
