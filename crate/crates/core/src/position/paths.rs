//! Chordless (induced) path search.

use crate::graph::{Bits, Graph};

/// Whether some induced `u`–`v` path passes through `w`.
pub fn exists_induced_path_through(g: &Graph, u: usize, w: usize, v: usize) -> bool {
    induced_path_through(g, u, w, v).is_some()
}

/// One induced `u`–`v` path containing `w`, as a vertex sequence from `u`
/// to `v`. Requires `u`, `w`, `v` distinct.
///
/// Depth-first over chordless extensions: the next vertex must be adjacent
/// to the tip and outside the closed neighbourhoods of every earlier path
/// vertex. A branch is cut when `v` (or a still missing `w`) can no longer
/// be reached through the vertices that remain usable.
pub fn induced_path_through(g: &Graph, u: usize, w: usize, v: usize) -> Option<Vec<usize>> {
    debug_assert!(u != v && u != w && w != v);
    let mut search = PathSearch {
        g,
        target: v,
        via: w,
        path: vec![u],
    };
    // Closed neighbourhoods of non-tip vertices: none yet.
    if search.extend(0, false) {
        Some(search.path)
    } else {
        None
    }
}

struct PathSearch<'a> {
    g: &'a Graph,
    target: usize,
    via: usize,
    path: Vec<usize>,
}

impl PathSearch<'_> {
    /// `blocked` is the union of closed neighbourhoods of all path vertices
    /// except the tip.
    fn extend(&mut self, blocked: u64, have_via: bool) -> bool {
        let g = self.g;
        let tip = *self.path.last().expect("path never empty");
        let tip_closed = g.neighbors(tip) | (1 << tip);
        let cand = g.neighbors(tip) & !blocked;
        let target_bit = 1u64 << self.target;
        if cand & target_bit != 0 {
            if have_via {
                self.path.push(self.target);
                return true;
            }
            // The path would have to end here without `via`, and any longer
            // route would make the tip–target edge a chord.
            return false;
        }
        let next_blocked = blocked | tip_closed;
        let free = g.vertex_mask() & !next_blocked;
        for c in Bits(cand & !target_bit) {
            let region = free | (1 << c);
            let reach = g.reach_within(c, region & !(1 << tip));
            if reach & target_bit == 0 {
                continue;
            }
            let now_via = have_via || c == self.via;
            if !now_via && reach & (1 << self.via) == 0 {
                continue;
            }
            self.path.push(c);
            if self.extend(next_blocked, now_via) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// Whether `path` is a simple path of `g` with no chords.
pub fn is_induced_path(g: &Graph, path: &[usize]) -> bool {
    let mut seen = 0u64;
    for (i, &p) in path.iter().enumerate() {
        if p >= g.order() || seen & (1 << p) != 0 {
            return false;
        }
        seen |= 1 << p;
        for (j, &q) in path[..i].iter().enumerate() {
            let adjacent = g.has_edge(p, q);
            if adjacent != (j + 1 == i) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn along_a_path() {
        let p = path(5).unwrap();
        assert_eq!(induced_path_through(&p, 0, 2, 4), Some(vec![0, 1, 2, 3, 4]));
        assert!(!exists_induced_path_through(&p, 0, 4, 2));
    }

    #[test]
    fn clique_has_only_edges() {
        let k = Graph::complete(4).unwrap();
        for u in 0..4 {
            for w in 0..4 {
                for v in 0..4 {
                    if u != w && w != v && u != v {
                        assert!(!exists_induced_path_through(&k, u, w, v));
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_routes_the_long_way() {
        let c = cycle(6).unwrap();
        // 0 -> 5 directly is an edge, so nothing can lie between them.
        assert!(!exists_induced_path_through(&c, 0, 2, 5));
        // 0 and 2 are joined by 0-1-2 and by 0-5-4-3-2.
        assert!(exists_induced_path_through(&c, 0, 4, 2));
        let found = induced_path_through(&c, 0, 4, 2).unwrap();
        assert!(is_induced_path(&c, &found));
    }

    #[test]
    fn induced_path_check() {
        let c = cycle(5).unwrap();
        assert!(is_induced_path(&c, &[0, 1, 2, 3]));
        assert!(!is_induced_path(&c, &[0, 1, 2, 3, 4]));
        assert!(!is_induced_path(&c, &[0, 2]));
        assert!(!is_induced_path(&c, &[0, 1, 0]));
    }
}
