use std::path::PathBuf;

use rayon::prelude::*;

use crate::enumerate::{self, IngestOptions, Shard, StreamFilter, NATIVE_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Origin {
    Native,
    Stream(PathBuf),
}

/// The graphs a search ranges over: native enumeration (orders up to
/// [`NATIVE_MAX_ORDER`]) or a graph6 file produced elsewhere.
///
/// Only connected graphs are scanned unless
/// [`with_disconnected`](SearchSpace::with_disconnected) is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpace {
    origin: Origin,
    shards: usize,
    include_disconnected: bool,
}

impl Default for SearchSpace {
    fn default() -> Self {
        SearchSpace::native()
    }
}

impl SearchSpace {
    pub fn native() -> Self {
        SearchSpace {
            origin: Origin::Native,
            shards: 1,
            include_disconnected: false,
        }
    }

    pub fn stream(path: impl Into<PathBuf>) -> Self {
        SearchSpace {
            origin: Origin::Stream(path.into()),
            ..SearchSpace::native()
        }
    }

    /// Splits native enumeration into `k` independent shards that are
    /// scanned in parallel. Results do not depend on `k`.
    pub fn with_shards(mut self, k: usize) -> Self {
        self.shards = k.max(1);
        self
    }

    pub fn with_disconnected(mut self, include: bool) -> Self {
        self.include_disconnected = include;
        self
    }

    pub fn shards(&self) -> usize {
        self.shards
    }

    pub fn includes_disconnected(&self) -> bool {
        self.include_disconnected
    }

    pub fn is_native(&self) -> bool {
        self.origin == Origin::Native
    }

    /// Whether order `n` can be scanned.
    pub fn covers(&self, n: usize) -> bool {
        match self.origin {
            Origin::Native => (1..=NATIVE_MAX_ORDER).contains(&n),
            Origin::Stream(_) => n >= 1,
        }
    }

    /// Description stored in records; independent of the shard count.
    pub fn describe(&self) -> String {
        let conn = if self.include_disconnected { "all graphs" } else { "connected" };
        match &self.origin {
            Origin::Native => format!("native {conn}"),
            Origin::Stream(p) => format!("file {} {conn}", p.display()),
        }
    }

    /// Applies `f` to every graph of order `n` and keeps the `Some`
    /// results. Output order is unspecified.
    pub fn scan<T, F>(&self, n: usize, f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(&Graph) -> Option<T> + Sync,
    {
        let connected = !self.include_disconnected;
        match &self.origin {
            Origin::Native => {
                if !self.covers(n) {
                    return Err(Error::InvalidParameters(format!(
                        "order {n} is outside native enumeration (1..={NATIVE_MAX_ORDER}); supply a graph6 stream"
                    )));
                }
                let parts: Vec<Result<Vec<T>>> = (0..self.shards)
                    .into_par_iter()
                    .map(|i| {
                        let mut out = Vec::new();
                        for g in enumerate::enumerate(n, connected, Shard::new(i, self.shards)?)? {
                            if let Some(t) = f(&g?) {
                                out.push(t);
                            }
                        }
                        Ok(out)
                    })
                    .collect();
                let mut all = Vec::new();
                for p in parts {
                    all.extend(p?);
                }
                Ok(all)
            }
            Origin::Stream(path) => {
                let filter = StreamFilter {
                    connected_only: connected,
                    order: n..=n,
                    ..StreamFilter::default()
                };
                let opts = IngestOptions {
                    dedupe: true,
                    lenient: false,
                };
                let mut out = Vec::new();
                for g in enumerate::ingest_graph6(path, opts)?.with_filter(filter) {
                    if let Some(t) = f(&g?) {
                        out.push(t);
                    }
                }
                Ok(out)
            }
        }
    }
}
