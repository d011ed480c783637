//! Maximum vertex sets avoiding a family of forbidden triples.
//!
//! Both position numbers and the independent clique number ask for the
//! largest set containing no forbidden triple. For a pair `(x, s)` the table
//! holds every `y` such that `{x, s, y}` is forbidden, so adding `x` to a set
//! containing `s` removes that row from the candidates.

use crate::graph::{Bits, MAX_ORDER};

pub(crate) struct TripleTable {
    n: usize,
    forb: Vec<u64>,
}

impl TripleTable {
    /// `forbid(x, s)` returns the third vertices completing a forbidden
    /// triple with `x` and `s` (`x != s`). The relation must be symmetric in
    /// all three positions.
    pub fn new(n: usize, mut forbid: impl FnMut(usize, usize) -> u64) -> Self {
        let mut forb = vec![0u64; n * n];
        for x in 0..n {
            for s in 0..n {
                if x != s {
                    forb[x * n + s] = forbid(x, s) & !(1 << x) & !(1 << s);
                }
            }
        }
        TripleTable { n, forb }
    }

    #[inline]
    pub fn get(&self, x: usize, s: usize) -> u64 {
        self.forb[x * self.n + s]
    }

    /// Largest triple-free set. Vertices are branched on in `order`; the
    /// first optimum met in that order is returned.
    pub fn maximum(&self, order: &[usize]) -> u64 {
        debug_assert_eq!(order.len(), self.n);
        let n = self.n;
        if n == 0 {
            return 0;
        }
        // Work in position space so that the lowest set bit is the next
        // vertex in branching order.
        let mut forb = vec![0u64; n * n];
        let mut pos = [0usize; MAX_ORDER];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let remap = |m: u64| Bits(m).fold(0u64, |acc, v| acc | (1 << pos[v]));
        for x in 0..n {
            for s in 0..n {
                if x != s {
                    forb[pos[x] * n + pos[s]] = remap(self.get(x, s));
                }
            }
        }
        let mut search = Search {
            n,
            forb,
            best: 0,
            best_size: 0,
        };
        let all = crate::graph::full_mask(n);
        search.expand(0, 0, all);
        Bits(search.best).fold(0u64, |acc, i| acc | (1 << order[i]))
    }
}

struct Search {
    n: usize,
    forb: Vec<u64>,
    best: u64,
    best_size: u32,
}

impl Search {
    fn expand(&mut self, chosen: u64, size: u32, mut cand: u64) {
        if size > self.best_size {
            self.best_size = size;
            self.best = chosen;
        }
        while cand != 0 {
            if size + cand.count_ones() <= self.best_size {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let mut next = cand;
            let row = &self.forb[v * self.n..(v + 1) * self.n];
            for s in Bits(chosen) {
                next &= !row[s];
            }
            self.expand(chosen | (1 << v), size + 1, next);
        }
    }
}
