//! General and monophonic position: set checks with violation
//! certificates, exact position numbers, and a brute-force oracle.
//!
//! A set is in *general position* when no geodesic holds three of its
//! members, and in *monophonic position* when no induced path does. Both
//! reduce to a betweenness relation on triples: `w` is between `u` and `v`
//! when some path of the chosen kind from `u` to `v` passes through `w`.
//! For geodesics that is `d(u,w) + d(w,v) = d(u,v)`; for induced paths it is
//! decided by a chordless-path search.

mod oracle;
mod paths;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};
use crate::metric::DistanceMatrix;
use crate::triple::TripleTable;

pub use oracle::{brute_force_position_number, brute_force_position_number_with, ORACLE_MAX_ORDER};
pub use paths::{exists_induced_path_through, induced_path_through, is_induced_path};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PositionKind {
    /// Shortest paths: general position, `gp(G)`.
    Geodesic,
    /// Induced paths: monophonic position, `mp(G)`.
    Monophonic,
}

impl PositionKind {
    pub const BOTH: [PositionKind; 2] = [PositionKind::Monophonic, PositionKind::Geodesic];

    pub fn short_name(self) -> &'static str {
        match self {
            PositionKind::Geodesic => "gp",
            PositionKind::Monophonic => "mp",
        }
    }
}

impl fmt::Display for PositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for PositionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gp" | "geodesic" => Ok(PositionKind::Geodesic),
            "mp" | "monophonic" => Ok(PositionKind::Monophonic),
            other => Err(Error::InvalidParameters(format!("unknown position kind `{other}`"))),
        }
    }
}

/// Whether disconnected inputs are accepted. When they are, no path of
/// either kind crosses components, so a set is checked per component pair.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Connectivity {
    #[default]
    RequireConnected,
    AllowDisconnected,
}

/// A path of the chosen kind carrying three or more members of a set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub path: Vec<usize>,
    pub hits: Vec<usize>,
}

/// A vertex set in position, and its size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub set: Vec<usize>,
    pub value: usize,
}

impl Witness {
    fn from_mask(mask: u64) -> Self {
        Witness {
            set: Bits(mask).collect(),
            value: mask.count_ones() as usize,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    Violation(Violation),
    Witness(Witness),
}

impl Certificate {
    /// Re-checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph, kind: PositionKind) -> bool {
        match self {
            Certificate::Violation(v) => v.verify(g, kind),
            Certificate::Witness(w) => w.verify(g, kind),
        }
    }
}

impl Violation {
    pub fn verify(&self, g: &Graph, kind: PositionKind) -> bool {
        let path = &self.path;
        if path.len() < 3 || self.hits.len() < 3 {
            return false;
        }
        if !self.hits.iter().all(|h| path.contains(h)) {
            return false;
        }
        let mut sorted = self.hits.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.hits.len() {
            return false;
        }
        match kind {
            PositionKind::Monophonic => is_induced_path(g, path),
            PositionKind::Geodesic => {
                let simple_walk = path.iter().all(|&p| p < g.order())
                    && path.windows(2).all(|w| g.has_edge(w[0], w[1]));
                let d = DistanceMatrix::new(g);
                let (a, b) = (path[0], path[path.len() - 1]);
                simple_walk && d.get(a, b) == Some(path.len() as u32 - 1)
            }
        }
    }
}

impl Witness {
    pub fn verify(&self, g: &Graph, kind: PositionKind) -> bool {
        self.set.len() == self.value
            && matches!(
                in_position_with(g, &self.set, kind, Connectivity::AllowDisconnected),
                Ok(None)
            )
    }
}

fn check_set(g: &Graph, set: &[usize]) -> Result<u64> {
    let mut mask = 0u64;
    for &v in set {
        g.check_vertex(v)?;
        mask |= 1 << v;
    }
    Ok(mask)
}

fn check_connected(g: &Graph, conn: Connectivity) -> Result<()> {
    if conn == Connectivity::RequireConnected && !g.is_connected() {
        Err(Error::Disconnected)
    } else {
        Ok(())
    }
}

/// Checks whether `set` is in position. Returns `None` when it is, or one
/// violating path otherwise.
pub fn in_position(g: &Graph, set: &[usize], kind: PositionKind) -> Result<Option<Violation>> {
    in_position_with(g, set, kind, Connectivity::RequireConnected)
}

pub fn in_position_with(
    g: &Graph,
    set: &[usize],
    kind: PositionKind,
    conn: Connectivity,
) -> Result<Option<Violation>> {
    check_connected(g, conn)?;
    let mask = check_set(g, set)?;
    let members: Vec<usize> = Bits(mask).collect();
    let dist = match kind {
        PositionKind::Geodesic => Some(DistanceMatrix::new(g)),
        PositionKind::Monophonic => None,
    };
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            for &w in &members {
                if w == u || w == v {
                    continue;
                }
                let path = match &dist {
                    Some(d) => {
                        if !d.is_between(u, w, v) {
                            continue;
                        }
                        let mut p = d.geodesic(g, u, w).expect("between implies reachable");
                        p.extend(&d.geodesic(g, w, v).expect("between implies reachable")[1..]);
                        p
                    }
                    None => match induced_path_through(g, u, w, v) {
                        Some(p) => p,
                        None => continue,
                    },
                };
                let hits = path.iter().copied().filter(|p| mask & (1 << p) != 0).collect();
                return Ok(Some(Violation { path, hits }));
            }
        }
    }
    Ok(None)
}

/// Betweenness table for one graph and path kind: `between(u, v)` is the
/// set of vertices lying strictly inside some `u`–`v` path of that kind.
#[derive(Clone, Debug)]
pub struct Betweenness {
    n: usize,
    table: Vec<u64>,
}

impl Betweenness {
    pub fn new(g: &Graph, kind: PositionKind) -> Self {
        match kind {
            PositionKind::Geodesic => Self::geodesic(g),
            PositionKind::Monophonic => Self::monophonic(g),
        }
    }

    pub fn geodesic(g: &Graph) -> Self {
        let n = g.order();
        let d = DistanceMatrix::new(g);
        let mut table = vec![0u64; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    table[u * n + v] = d.interval(u, v) & !(1 << u) & !(1 << v);
                }
            }
        }
        Betweenness { n, table }
    }

    /// Every triple is settled by a chordless-path search; each path found
    /// also settles all triples read off its subpaths, since a subpath of
    /// an induced path is induced.
    pub fn monophonic(g: &Graph) -> Self {
        let n = g.order();
        let mut table = vec![0u64; n * n];
        let mut settled = vec![0u64; n * n];
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    continue;
                }
                // Only vertices in the component of u can lie on u–v paths.
                let comp = g.reach_within(u, g.vertex_mask());
                if comp & (1 << v) == 0 {
                    continue;
                }
                let open = comp & !(1 << u) & !(1 << v) & !settled[u * n + v];
                for w in Bits(open) {
                    if settled[u * n + v] & (1 << w) != 0 {
                        continue;
                    }
                    settled[u * n + v] |= 1 << w;
                    if let Some(path) = induced_path_through(g, u, w, v) {
                        for i in 0..path.len() {
                            let mut inner = 0u64;
                            for j in i + 1..path.len() {
                                let (a, b) = (path[i], path[j]);
                                table[a * n + b] |= inner;
                                table[b * n + a] |= inner;
                                settled[a * n + b] |= inner;
                                settled[b * n + a] |= inner;
                                inner |= 1 << b;
                            }
                        }
                    }
                }
            }
        }
        Betweenness { n, table }
    }

    #[inline]
    pub fn between(&self, u: usize, v: usize) -> u64 {
        self.table[u * self.n + v]
    }

    fn triples(&self) -> TripleTable {
        TripleTable::new(self.n, |x, s| {
            let mut m = self.between(x, s);
            for y in 0..self.n {
                if y != x && y != s {
                    if self.between(y, s) & (1 << x) != 0 || self.between(x, y) & (1 << s) != 0 {
                        m |= 1 << y;
                    }
                }
            }
            m
        })
    }

    /// Whether no member of `set` lies between two other members.
    pub fn is_position_set(&self, set: u64) -> bool {
        Bits(set).all(|u| Bits(set).all(|v| u == v || self.between(u, v) & set == 0))
    }
}

/// Branching order for the solver: descending degree, ties by label.
fn solver_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Exact position number with an optimal set.
pub fn position_number(g: &Graph, kind: PositionKind) -> Result<Witness> {
    position_number_with(g, kind, Connectivity::RequireConnected)
}

pub fn position_number_with(g: &Graph, kind: PositionKind, conn: Connectivity) -> Result<Witness> {
    check_connected(g, conn)?;
    Ok(solve(g, &Betweenness::new(g, kind)))
}

/// Solves from a precomputed betweenness table.
pub fn solve(g: &Graph, between: &Betweenness) -> Witness {
    let table = between.triples();
    Witness::from_mask(table.maximum(&solver_order(g)))
}

/// Both position numbers, `(mp, gp)`.
pub fn position_numbers(g: &Graph) -> Result<(Witness, Witness)> {
    check_connected(g, Connectivity::RequireConnected)?;
    let mp = solve(g, &Betweenness::monophonic(g));
    let gp = solve(g, &Betweenness::geodesic(g));
    Ok((mp, gp))
}

pub fn mp(g: &Graph) -> Result<usize> {
    Ok(position_number(g, PositionKind::Monophonic)?.value)
}

pub fn gp(g: &Graph) -> Result<usize> {
    Ok(position_number(g, PositionKind::Geodesic)?.value)
}

/// Every maximum position set, in increasing bit-mask order. Exponential;
/// used for uniqueness claims on small graphs.
pub fn all_optimal_sets(g: &Graph, kind: PositionKind) -> Result<Vec<Vec<usize>>> {
    check_connected(g, Connectivity::RequireConnected)?;
    let between = Betweenness::new(g, kind);
    let best = solve(g, &between).value;
    let table = between.triples();
    let mut out = Vec::new();
    collect_sets(&table, g.order(), 0, 0, best, &mut out);
    out.sort();
    Ok(out)
}

fn collect_sets(
    table: &TripleTable,
    n: usize,
    start: usize,
    chosen: u64,
    target: usize,
    out: &mut Vec<Vec<usize>>,
) {
    let size = chosen.count_ones() as usize;
    if size == target {
        out.push(Bits(chosen).collect());
        return;
    }
    if size + (n - start) < target {
        return;
    }
    for v in start..n {
        if Bits(chosen).all(|s| table.get(v, s) & chosen == 0) {
            collect_sets(table, n, v + 1, chosen | (1 << v), target, out);
        }
    }
}
