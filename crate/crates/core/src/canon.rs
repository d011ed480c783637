//! Canonical labelling for isomorphism rejection.
//!
//! Individualisation–refinement: the vertex partition is refined to an
//! equitable ordered partition, then the search branches on the vertices of
//! the first non-singleton cell until every cell is a singleton. Each leaf is
//! a relabelling of the graph; the lexicographically largest relabelled
//! adjacency matrix is the canonical form. Leaves that reproduce an earlier
//! leaf's matrix yield automorphisms, which prune sibling branches lying in
//! the same orbit of the pointwise stabiliser of the current prefix.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Bits, Graph};
use crate::graph6::serialize_graph6;

/// Byte string identifying an isomorphism class. For plain graphs it is the
/// graph6 encoding of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The code as text. Plain-graph codes are graph6 strings.
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).unwrap_or("<binary>")
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of canonical labelling: `order[i]` is the original vertex that
/// receives canonical label `i`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub order: Vec<usize>,
    pub graph: Graph,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_partitioned(g, vec![g.vertex_mask()])
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    CanonicalCode(serialize_graph6(&canonical_form(g).graph).into_bytes())
}

/// Canonical graph6 string of `g`.
pub fn canonical_graph6(g: &Graph) -> String {
    serialize_graph6(&canonical_form(g).graph)
}

/// Canonical form relative to an ordered colouring: vertices may only be
/// mapped within their cell, and cells keep their order.
pub fn canonical_form_partitioned(g: &Graph, cells: Vec<u64>) -> CanonicalForm {
    debug_assert_eq!(cells.iter().fold(0, |a, c| a | c), g.vertex_mask());
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut prefix = Vec::new();
    search.run(cells, &mut prefix);
    let (_, order) = search.best.expect("search visits at least one leaf");
    let graph = g.permuted(&order);
    CanonicalForm { order, graph }
}

/// Code of `g` with the given ordered colouring; equal codes mean a
/// colour-preserving isomorphism exists.
pub fn canonical_code_partitioned(g: &Graph, cells: Vec<u64>) -> CanonicalCode {
    let sizes: Vec<u8> = cells.iter().map(|c| c.count_ones() as u8).collect();
    let form = canonical_form_partitioned(g, cells);
    let mut bytes = serialize_graph6(&form.graph).into_bytes();
    bytes.push(b'|');
    bytes.extend(sizes);
    CanonicalCode(bytes)
}

/// Whether some automorphism of `g` maps `v` to `w`.
pub fn same_orbit(g: &Graph, v: usize, w: usize) -> bool {
    if v == w {
        return true;
    }
    if g.degree(v) != g.degree(w) {
        return false;
    }
    let all = g.vertex_mask();
    canonical_code_partitioned(g, vec![1 << v, all & !(1 << v)])
        == canonical_code_partitioned(g, vec![1 << w, all & !(1 << w)])
}

/// Brute-force isomorphism test over all bijections. Exponential; meant as
/// a test oracle for small orders.
pub fn isomorphic_brute_force(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()
    {
        return false;
    }
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: u64, i: usize) -> bool {
        if i == g.order() {
            return true;
        }
        for t in Bits(h.vertex_mask() & !used) {
            if g.degree(i) != h.degree(t) {
                continue;
            }
            if (0..i).all(|j| g.has_edge(i, j) == h.has_edge(t, map[j])) {
                map[i] = t;
                if extend(g, h, map, used | (1 << t), i + 1) {
                    return true;
                }
            }
        }
        false
    }
    extend(g, h, &mut map, 0, 0)
}

/// Refines an ordered partition until it is equitable. Splitting is driven
/// only by cell positions and neighbour counts, so the result commutes with
/// relabelling.
pub(crate) fn refine(g: &Graph, mut cells: Vec<u64>) -> Vec<u64> {
    let mut groups: Vec<(u32, u64)> = Vec::with_capacity(16);
    'again: loop {
        for wi in 0..cells.len() {
            let splitter = cells[wi];
            for ci in 0..cells.len() {
                let cell = cells[ci];
                if cell & (cell - 1) == 0 {
                    continue;
                }
                groups.clear();
                for v in Bits(cell) {
                    let k = (g.neighbors(v) & splitter).count_ones();
                    match groups.iter_mut().find(|(c, _)| *c == k) {
                        Some((_, m)) => *m |= 1 << v,
                        None => groups.push((k, 1 << v)),
                    }
                }
                if groups.len() > 1 {
                    groups.sort_unstable_by_key(|&(k, _)| k);
                    cells.splice(ci..=ci, groups.iter().map(|&(_, m)| m));
                    continue 'again;
                }
            }
        }
        return cells;
    }
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        let cells = refine(self.g, cells);
        let Some(ti) = cells.iter().position(|c| c.count_ones() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            self.leaf(order);
            return;
        };
        let target = cells[ti];
        let mut tried = 0u64;
        for v in Bits(target) {
            if tried != 0 && self.equivalent_to_tried(v, tried, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            prefix.push(v);
            self.run(child, prefix);
            prefix.pop();
            tried |= 1 << v;
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let code = self.g.permuted(&order).rows().to_vec();
        match &self.first {
            None => {
                self.first = Some((code.clone(), order.clone()));
                self.best = Some((code, order));
                return;
            }
            Some((fcode, forder)) if *fcode == code => {
                let auto = compose(forder, &order, self.g.order());
                self.autos.push(auto);
                return;
            }
            _ => {}
        }
        let (bcode, border) = self.best.as_ref().expect("best set with first");
        match code.cmp(bcode) {
            std::cmp::Ordering::Equal => {
                let auto = compose(border, &order, self.g.order());
                self.autos.push(auto);
            }
            std::cmp::Ordering::Greater => self.best = Some((code, order)),
            std::cmp::Ordering::Less => {}
        }
    }

    /// Orbit test under the automorphisms found so far that fix `prefix`
    /// pointwise.
    fn equivalent_to_tried(&self, v: usize, tried: u64, prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for auto in &self.autos {
            if prefix.iter().any(|&p| auto[p] != p) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, auto[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        Bits(tried).any(|t| find(&mut parent, t) == root)
    }
}

/// Automorphism sending `from[i]` to `to[i]`.
fn compose(from: &[usize], to: &[usize], n: usize) -> Vec<usize> {
    let mut auto = vec![0; n];
    for i in 0..n {
        auto[from[i]] = to[i];
    }
    auto
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn shuffle(g: &Graph, seed: u64) -> Graph {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..g.order()).collect();
        order.shuffle(&mut rng);
        g.permuted(&order)
    }

    #[test]
    fn invariant_under_relabelling() {
        let c5 = cycle(5).unwrap();
        for seed in 0..20 {
            assert_eq!(canonical_code(&c5), canonical_code(&shuffle(&c5, seed)));
        }
    }

    #[test]
    fn distinguishes_trees() {
        assert_ne!(canonical_code(&path(4).unwrap()), canonical_code(&star(3).unwrap()));
    }

    #[test]
    fn symmetric_graphs_finish() {
        for n in [1, 2, 9, 16, 30] {
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_form(&k).graph, k);
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_form(&e).graph, e);
        }
        let k333 = complete_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(canonical_code(&k333), canonical_code(&shuffle(&k333, 3)));
    }

    #[test]
    fn canonical_graph_is_isomorphic() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let c = canonical_form(&g);
        assert!(isomorphic_brute_force(&g, &c.graph));
        assert_eq!(g.permuted(&c.order), c.graph);
    }

    #[test]
    fn orbits() {
        let p = path(5).unwrap();
        assert!(same_orbit(&p, 0, 4));
        assert!(same_orbit(&p, 1, 3));
        assert!(!same_orbit(&p, 0, 1));
        assert!(!same_orbit(&p, 1, 2));
        let c = cycle(7).unwrap();
        assert!((0..7).all(|v| same_orbit(&c, 0, v)));
    }

    #[test]
    fn random_relabellings_up_to_ten() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for i in 0..400 {
            let n = rng.gen_range(2..=10);
            let p = rng.gen_range(0.2..0.8);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let h = shuffle(&g, i);
            assert_eq!(canonical_code(&g), canonical_code(&h), "{g:?}");
        }
    }
}
