//! Clique number, independent clique number and extreme vertices.

use crate::graph::{Bits, Graph};
use crate::triple::TripleTable;

/// Order of a largest clique, by branch and bound with a greedy colouring
/// bound.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).count_ones() as usize
}

/// Vertex set of one maximum clique.
pub fn max_clique(g: &Graph) -> u64 {
    let mut best = 0u64;
    clique_expand(g, 0, g.vertex_mask(), &mut best);
    best
}

fn clique_expand(g: &Graph, current: u64, cand: u64, best: &mut u64) {
    if cand == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    let (order, colours) = greedy_colouring(g, cand);
    let size = current.count_ones() as usize;
    let mut cand = cand;
    for i in (0..order.len()).rev() {
        if size + colours[i] <= best.count_ones() as usize {
            return;
        }
        let v = order[i];
        clique_expand(g, current | (1 << v), cand & g.neighbors(v), best);
        cand &= !(1 << v);
    }
    if current.count_ones() > best.count_ones() {
        *best = current;
    }
}

/// Sequential colouring of `cand`; returns the vertices sorted by colour
/// class with the running colour count for each.
fn greedy_colouring(g: &Graph, cand: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = cand;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut avail = uncoloured;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !g.neighbors(v);
            uncoloured &= !(1 << v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

pub fn has_triangle(g: &Graph) -> bool {
    g.edges().any(|(u, v)| g.neighbors(u) & g.neighbors(v) != 0)
}

/// Order of a largest induced subgraph whose components are all cliques
/// (equivalently, a largest vertex set inducing no path on three vertices).
pub fn independent_clique_number(g: &Graph) -> usize {
    max_independent_union_of_cliques(g).count_ones() as usize
}

pub fn max_independent_union_of_cliques(g: &Graph) -> u64 {
    let table = TripleTable::new(g.order(), |x, s| {
        if g.has_edge(x, s) {
            g.neighbors(x) ^ g.neighbors(s)
        } else {
            g.neighbors(x) & g.neighbors(s)
        }
    });
    let order: Vec<usize> = (0..g.order()).collect();
    table.maximum(&order)
}

/// Whether the neighbourhood of `v` induces a clique.
pub fn is_extreme(g: &Graph, v: usize) -> bool {
    g.is_clique(g.neighbors(v))
}

/// All simplicial vertices, as a bit set.
pub fn extreme_vertices(g: &Graph) -> u64 {
    (0..g.order())
        .filter(|&v| is_extreme(g, v))
        .fold(0, |m, v| m | (1 << v))
}

/// Leaf number: vertices of degree one.
pub fn leaf_number(g: &Graph) -> usize {
    g.leaf_count()
}

/// Number of triangles, handy for sanity checks on constructions.
pub fn triangle_count(g: &Graph) -> usize {
    g.edges()
        .map(|(u, v)| Bits(g.neighbors(u) & g.neighbors(v)).filter(|&w| w > v).count())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn brute_clique(g: &Graph) -> usize {
        (0u64..1 << g.order())
            .filter(|&s| g.is_clique(s))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn brute_alpha_omega(g: &Graph) -> usize {
        (0u64..1 << g.order())
            .filter(|&s| {
                let h = g.induced_subgraph(s);
                match h {
                    Err(_) => true,
                    Ok(h) => h.components().into_iter().all(|c| h.is_clique(c)),
                }
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&complete_multipartite(&[3, 2, 2]).unwrap()), 3);
        let k5e = Graph::complete(5).unwrap().toggle_edge(0, 1).unwrap();
        assert_eq!(clique_number(&k5e), 4);
        assert_eq!(clique_number(&cycle(5).unwrap()), 2);
        assert_eq!(clique_number(&Graph::empty(4).unwrap()), 1);
    }

    #[test]
    fn alpha_omega() {
        assert_eq!(independent_clique_number(&Graph::complete(6).unwrap()), 6);
        // an edge plus the opposite vertex
        assert_eq!(independent_clique_number(&cycle(5).unwrap()), 3);
        assert_eq!(brute_alpha_omega(&cycle(5).unwrap()), 3);
        assert_eq!(independent_clique_number(&path(5).unwrap()), 4);
    }

    #[test]
    fn extreme() {
        let s = star(3).unwrap();
        assert_eq!(extreme_vertices(&s), 0b1110);
        assert_eq!(extreme_vertices(&Graph::complete(4).unwrap()), 0b1111);
        assert!(is_extreme(&path(3).unwrap(), 0));
        assert!(!is_extreme(&path(3).unwrap(), 1));
    }

    #[test]
    fn random_graphs_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let p = rng.gen_range(0.1..0.9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            assert_eq!(clique_number(&g), brute_clique(&g), "{g:?}");
            assert_eq!(independent_clique_number(&g), brute_alpha_omega(&g), "{g:?}");
            assert!(clique_number(&g) <= independent_clique_number(&g));
        }
    }
}
