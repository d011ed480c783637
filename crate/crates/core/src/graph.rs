//! Simple undirected graphs on at most 64 vertices, stored as one `u64`
//! adjacency row per vertex.
//!
//! Graphs are immutable once built. Every operation that changes the
//! structure (join, blow-up, pendant addition, vertex deletion) returns a
//! new graph.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order handled by the bit-row representation.
pub const MAX_ORDER: usize = 64;

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// Bit mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Packs a slice of vertex labels into a bit set.
pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { rows: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let all = full_mask(n);
        Ok(Graph {
            rows: (0..n).map(|v| all & !(1u64 << v)).collect(),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph { rows })
    }

    /// Builds a graph from raw adjacency rows. Rows must be symmetric and
    /// loop-free; this is checked.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let all = full_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & (1 << u) != 0 {
                return Err(Error::SelfLoop(u));
            }
            if row & !all != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (row & !all).trailing_zeros() as usize,
                    order: n,
                });
            }
            for v in Bits(row) {
                if rows[v] & (1 << u) == 0 {
                    return Err(Error::InvalidParameters(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(Graph { rows })
    }

    /// Crate-internal constructor for rows already known to be valid.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & (1 << v) != 0
    }

    /// Open neighbourhood of `v` as a bit set.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Bit set of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order())
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &r)| Bits(r & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Number of degree-one vertices.
    pub fn leaf_count(&self) -> usize {
        (0..self.order()).filter(|&v| self.degree(v) == 1).count()
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    /// `start` is included even if it is not in `within`.
    pub fn reach_within(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Connected components as bit sets, ordered by smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.reach_within(v, left);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Whether the subgraph induced on `set` is connected (the empty set
    /// counts as connected).
    pub fn induces_connected(&self, set: u64) -> bool {
        if set == 0 {
            return true;
        }
        let v = set.trailing_zeros() as usize;
        self.reach_within(v, set) == set
    }

    pub fn is_clique(&self, set: u64) -> bool {
        Bits(set).all(|v| self.rows[v] & set == set & !(1 << v))
    }

    pub fn is_independent(&self, set: u64) -> bool {
        Bits(set).all(|v| self.rows[v] & set == 0)
    }

    /// Whether removing `v` disconnects the graph.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let rest = self.vertex_mask() & !(1 << v);
        !self.induces_connected(rest)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph {
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(v, &r)| !r & all & !(1 << v))
                .collect(),
        }
    }

    /// Subgraph induced on the vertices of `keep`, relabelled in increasing
    /// label order.
    pub fn induced_subgraph(&self, keep: u64) -> Result<Graph> {
        let keep = keep & self.vertex_mask();
        let labels: Vec<usize> = Bits(keep).collect();
        check_order(labels.len())?;
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let rows = labels
            .iter()
            .map(|&v| Bits(self.rows[v] & keep).fold(0u64, |m, w| m | (1 << index[w])))
            .collect();
        Ok(Graph { rows })
    }

    /// Deletes the given vertices; remaining labels are compacted in order.
    pub fn remove_vertices(&self, remove: &[usize]) -> Result<Graph> {
        for &v in remove {
            self.check_vertex(v)?;
        }
        self.induced_subgraph(self.vertex_mask() & !mask_of(remove))
    }

    /// Relabels so that old vertex `order[i]` becomes vertex `i`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.order());
        let mut inv = [0usize; MAX_ORDER];
        for (i, &v) in order.iter().enumerate() {
            inv[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| Bits(self.rows[v]).fold(0u64, |m, w| m | (1 << inv[w])))
            .collect();
        Graph { rows }
    }

    /// Join: disjoint union of `self` and `other` plus every edge between
    /// them. `other` is relabelled to `n_self..n_self + n_other`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let a = self.order();
        let total = a + other.order();
        check_order(total)?;
        let left = full_mask(a);
        let right = full_mask(total) & !left;
        let mut rows: Vec<u64> = self.rows.iter().map(|&r| r | right).collect();
        rows.extend(other.rows.iter().map(|&r| (r << a) | left));
        Ok(Graph { rows })
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let a = self.order();
        check_order(a + other.order())?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << a));
        Ok(Graph { rows })
    }

    /// Replaces vertex `i` by an independent set of `sizes[i]` vertices;
    /// two blown-up classes are completely joined iff the original vertices
    /// were adjacent. Class `i` occupies a contiguous label range.
    pub fn blow_up(&self, sizes: &[usize]) -> Result<Graph> {
        if sizes.len() != self.order() {
            return Err(Error::InvalidParameters(format!(
                "blow-up needs {} class sizes, got {}",
                self.order(),
                sizes.len()
            )));
        }
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidParameters(format!(
                "blow-up class {i} has size zero"
            )));
        }
        let total: usize = sizes.iter().sum();
        check_order(total)?;
        let mut class_mask = Vec::with_capacity(sizes.len());
        let mut start = 0;
        for &s in sizes {
            class_mask.push(full_mask(s) << start);
            start += s;
        }
        let mut rows = Vec::with_capacity(total);
        for (i, &s) in sizes.iter().enumerate() {
            let row = Bits(self.rows[i]).fold(0u64, |m, j| m | class_mask[j]);
            rows.extend(std::iter::repeat(row).take(s));
        }
        Ok(Graph { rows })
    }

    /// Adds a new vertex labelled `order()` adjacent only to `v`.
    pub fn add_pendant(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.add_vertex(1 << v)
    }

    /// Adds a new vertex labelled `order()` with the given neighbourhood.
    pub fn add_vertex(&self, neighbourhood: u64) -> Result<Graph> {
        let n = self.order();
        check_order(n + 1)?;
        if neighbourhood & !self.vertex_mask() != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: (neighbourhood & !self.vertex_mask()).trailing_zeros() as usize,
                order: n,
            });
        }
        let mut rows = self.rows.clone();
        for v in Bits(neighbourhood) {
            rows[v] |= 1 << n;
        }
        rows.push(neighbourhood);
        Ok(Graph { rows })
    }

    /// Returns a copy with edge `{u, v}` toggled.
    pub fn toggle_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut rows = self.rows.clone();
        rows[u] ^= 1 << v;
        rows[v] ^= 1 << u;
        Ok(Graph { rows })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }
}

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyGraph)
    } else if n > MAX_ORDER {
        Err(Error::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Small named graphs used throughout the tests and examples.
pub mod named {
    use super::*;

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameters(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// Complete multipartite graph with parts in the given order, each part
    /// a contiguous label range.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        let k = parts.len();
        if k == 0 {
            return Err(Error::EmptyGraph);
        }
        Graph::complete(k)?.blow_up(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn builds_and_counts() {
        let p = path(4).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.size(), 3);
        assert!(p.has_edge(1, 2) && p.has_edge(2, 1));
        assert!(!p.has_edge(0, 2));
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert_eq!(Graph::empty(0), Err(Error::EmptyGraph));
        assert_eq!(Graph::empty(65), Err(Error::OrderTooLarge(65)));
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
    }

    #[test]
    fn join_of_two_points_is_an_edge() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.join(&k1).unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn join_edge_count() {
        let g = cycle(5).unwrap();
        let h = path(3).unwrap();
        let j = g.join(&h).unwrap();
        assert_eq!(j.order(), 8);
        assert_eq!(j.size(), g.size() + h.size() + 5 * 3);
    }

    #[test]
    fn blow_up_identity_and_bipartite() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.blow_up(&[1; 5]).unwrap(), c5);
        let k23 = Graph::complete(2).unwrap().blow_up(&[2, 3]).unwrap();
        assert_eq!(k23.size(), 6);
        assert_eq!(k23, complete_multipartite(&[2, 3]).unwrap());
        assert!(c5.blow_up(&[1, 1]).is_err());
        assert!(c5.blow_up(&[1, 1, 0, 1, 1]).is_err());
    }

    #[test]
    fn c5_blow_up_order_and_size() {
        // r = 4, k = 2: C5[3, 2, 1, 1, 2]
        let g = cycle(5).unwrap().blow_up(&[3, 2, 1, 1, 2]).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.size(), 17);
    }

    #[test]
    fn pendants() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.add_pendant(0).unwrap(), Graph::complete(2).unwrap());
        let s = star(3).unwrap();
        assert_eq!(s.add_pendant(0).unwrap().leaf_count(), 4);
        assert!(s.add_pendant(4).is_err());
    }

    #[test]
    fn connectivity_and_cut_vertices() {
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.components(), vec![0b0011, 0b1100]);
        let p = path(3).unwrap();
        assert!(p.is_cut_vertex(1));
        assert!(!p.is_cut_vertex(0));
    }

    #[test]
    fn remove_and_permute() {
        let p = path(4).unwrap();
        let q = p.remove_vertices(&[0]).unwrap();
        assert_eq!(q, path(3).unwrap());
        let r = p.permuted(&[3, 2, 1, 0]);
        assert_eq!(r, p);
        assert_eq!(p.complement().size(), 3);
    }
}
