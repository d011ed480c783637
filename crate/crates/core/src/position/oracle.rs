//! Subset-enumeration oracle for position numbers.
//!
//! Deliberately shares nothing with the solver beyond the graph type:
//! distances come from Floyd–Warshall rather than breadth-first search, the
//! monophonic relation is decided triple by triple, and sets are tried in
//! decreasing size until one passes.

use super::paths::exists_induced_path_through;
use super::{check_connected, Connectivity, PositionKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_ORDER: usize = 16;

pub fn brute_force_position_number(g: &Graph, kind: PositionKind) -> Result<usize> {
    brute_force_position_number_with(g, kind, Connectivity::RequireConnected)
}

pub fn brute_force_position_number_with(
    g: &Graph,
    kind: PositionKind,
    conn: Connectivity,
) -> Result<usize> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::OracleTooLarge {
            order: n,
            max: ORACLE_MAX_ORDER,
        });
    }
    check_connected(g, conn)?;
    let mut rel = Relation::new(g, kind);
    for k in (1..=n).rev() {
        // Gosper's hack over all k-subsets.
        let mut s: u64 = (1 << k) - 1;
        while s < 1 << n {
            if rel.in_position(s) {
                return Ok(k);
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    Ok(0)
}

struct Relation<'a> {
    g: &'a Graph,
    kind: PositionKind,
    dist: Vec<Vec<Option<u32>>>,
    memo: Vec<Option<bool>>,
}

impl<'a> Relation<'a> {
    fn new(g: &'a Graph, kind: PositionKind) -> Self {
        let n = g.order();
        let mut dist = vec![vec![None; n]; n];
        for u in 0..n {
            dist[u][u] = Some(0);
            for v in 0..n {
                if g.has_edge(u, v) {
                    dist[u][v] = Some(1);
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if let (Some(a), Some(b)) = (dist[i][k], dist[k][j]) {
                        if dist[i][j].is_none_or(|c| a + b < c) {
                            dist[i][j] = Some(a + b);
                        }
                    }
                }
            }
        }
        Relation {
            g,
            kind,
            dist,
            memo: vec![None; n * n * n],
        }
    }

    /// Whether `w` lies inside some `u`–`v` path of the chosen kind.
    fn inside(&mut self, u: usize, w: usize, v: usize) -> bool {
        match self.kind {
            PositionKind::Geodesic => match (self.dist[u][w], self.dist[w][v], self.dist[u][v]) {
                (Some(a), Some(b), Some(c)) => a + b == c,
                _ => false,
            },
            PositionKind::Monophonic => {
                let n = self.g.order();
                let key = (u * n + w) * n + v;
                if let Some(x) = self.memo[key] {
                    return x;
                }
                let x = exists_induced_path_through(self.g, u, w, v);
                self.memo[key] = Some(x);
                self.memo[(v * n + w) * n + u] = Some(x);
                x
            }
        }
    }

    fn in_position(&mut self, set: u64) -> bool {
        let members: Vec<usize> = crate::graph::Bits(set).collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                for &w in &members {
                    if w != u && w != v && self.inside(u, w, v) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
