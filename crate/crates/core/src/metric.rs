//! Hop distances and diameter.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Bits, Graph};

/// Marker stored for pairs in different components.
const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances, computed by one breadth-first search per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut d = vec![UNREACHABLE; n * n];
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut depth = 0;
            while frontier != 0 {
                depth += 1;
                let mut next = 0u64;
                for v in Bits(frontier) {
                    next |= g.neighbors(v);
                }
                next &= !seen;
                for v in Bits(next) {
                    row[v] = depth;
                }
                seen |= next;
                frontier = next;
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Distance from `u` to `v`, or `None` if they lie in different
    /// components.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let x = self.d[u * self.n + v];
        (x != UNREACHABLE).then_some(x)
    }

    /// Whether `w` lies on some shortest `u`–`v` path, endpoints included.
    #[inline]
    pub fn is_between(&self, u: usize, w: usize, v: usize) -> bool {
        match (self.get(u, w), self.get(w, v), self.get(u, v)) {
            (Some(a), Some(b), Some(c)) => a + b == c,
            _ => false,
        }
    }

    /// Interval `I(u, v)`: every vertex on some `u`–`v` geodesic.
    pub fn interval(&self, u: usize, v: usize) -> u64 {
        (0..self.n)
            .filter(|&w| self.is_between(u, w, v))
            .fold(0, |m, w| m | (1 << w))
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for &x in &self.d {
            if x == UNREACHABLE {
                return Diameter::Infinite;
            }
            best = best.max(x);
        }
        Diameter::Finite(best)
    }

    pub fn eccentricity(&self, v: usize) -> Diameter {
        let row = &self.d[v * self.n..(v + 1) * self.n];
        if row.contains(&UNREACHABLE) {
            Diameter::Infinite
        } else {
            Diameter::Finite(*row.iter().max().unwrap_or(&0))
        }
    }

    /// One shortest path from `u` to `v` (vertex sequence, both ends
    /// included), choosing the smallest-labelled next hop at each step.
    pub fn geodesic(&self, g: &Graph, u: usize, v: usize) -> Option<Vec<usize>> {
        let mut remaining = self.get(u, v)?;
        let mut path = vec![u];
        let mut cur = u;
        while remaining > 0 {
            let next = Bits(g.neighbors(cur)).find(|&w| self.get(w, v) == Some(remaining - 1))?;
            path.push(next);
            cur = next;
            remaining -= 1;
        }
        Some(path)
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for u in 0..self.n {
            for v in 0..self.n {
                match self.get(u, v) {
                    Some(x) => write!(f, "{x:>3}")?,
                    None => write!(f, "  ∞")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Diameter of a graph: a finite hop count, or infinite when disconnected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    DistanceMatrix::new(g)
}

pub fn diameter(g: &Graph) -> Diameter {
    DistanceMatrix::new(g).diameter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn path_and_cycle_distances() {
        let p = distance_matrix(&path(4).unwrap());
        assert_eq!(p.get(0, 3), Some(3));
        let c = distance_matrix(&cycle(6).unwrap());
        assert_eq!(c.get(0, 3), Some(3));
        assert_eq!(c.interval(0, 3), 0b111111);
        assert_eq!(c.interval(0, 2), 0b000111);
    }

    #[test]
    fn disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let d = distance_matrix(&g);
        assert_eq!(d.get(0, 2), None);
        assert_eq!(d.diameter(), Diameter::Infinite);
        assert!(!d.is_between(0, 1, 2));
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&Graph::complete(6).unwrap()), Diameter::Finite(1));
        assert_eq!(diameter(&Graph::complete(1).unwrap()), Diameter::Finite(0));
        assert_eq!(diameter(&cycle(7).unwrap()), Diameter::Finite(3));
    }

    #[test]
    fn geodesic_path() {
        let g = cycle(6).unwrap();
        let d = distance_matrix(&g);
        assert_eq!(d.geodesic(&g, 0, 3), Some(vec![0, 1, 2, 3]));
    }
}
