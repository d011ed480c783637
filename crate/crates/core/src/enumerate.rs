//! Isomorphism-free streams of graphs.
//!
//! Native generation uses canonical augmentation: every graph of order `n`
//! is built from a graph of order `n - 1` by adding vertex `n - 1` with some
//! neighbourhood, and the child is kept only when the new vertex lies in the
//! orbit of a canonically chosen deletable vertex. Children of one parent
//! are deduplicated locally, so memory stays proportional to the previous
//! level plus one parent's children.
//!
//! For connected generation the deletable vertices are the non-cut
//! vertices, so each connected graph has a connected canonical parent.

use std::collections::{HashSet, VecDeque};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use crate::canon::{canonical_code, canonical_form, same_orbit, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};
use crate::graph6::{parse_graph6, HEADER};

/// Largest order generated natively.
pub const NATIVE_MAX_ORDER: usize = 9;

/// One slice of the final generation level: parents whose index is
/// congruent to `index` modulo `count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const ALL: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: usize, count: usize) -> Result<Shard> {
        if count == 0 || index >= count {
            return Err(Error::InvalidParameters(format!(
                "shard {index}/{count} out of range"
            )));
        }
        Ok(Shard { index, count })
    }

    /// Parses `i/k`.
    pub fn parse(text: &str) -> Result<Shard> {
        let (i, k) = text
            .split_once('/')
            .ok_or_else(|| Error::InvalidParameters(format!("shard `{text}` is not i/k")))?;
        let num = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameters(format!("shard `{text}` is not i/k")))
        };
        Shard::new(num(i)?, num(k)?)
    }
}

/// Predicates applied to every graph leaving a stream.
#[derive(Clone, Debug)]
pub struct StreamFilter {
    pub connected_only: bool,
    pub order: RangeInclusive<usize>,
    pub size: RangeInclusive<usize>,
}

impl Default for StreamFilter {
    fn default() -> Self {
        StreamFilter {
            connected_only: true,
            order: 1..=crate::graph::MAX_ORDER,
            size: 0..=usize::MAX,
        }
    }
}

impl StreamFilter {
    pub fn accepts(&self, g: &Graph) -> bool {
        self.order.contains(&g.order())
            && self.size.contains(&g.size())
            && (!self.connected_only || g.is_connected())
    }
}

/// Where a stream's graphs come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Native { order: usize, connected: bool, shard: Shard },
    File { path: PathBuf },
}

impl Source {
    pub fn describe(&self) -> String {
        match self {
            Source::Native { order, connected, shard } => format!(
                "native n={order}{}{}",
                if *connected { " connected" } else { " all" },
                if shard.count > 1 {
                    format!(" shard {}/{}", shard.index, shard.count)
                } else {
                    String::new()
                }
            ),
            Source::File { path } => format!("file {}", path.display()),
        }
    }
}

/// Options for reading graph6 files.
#[derive(Clone, Copy, Debug, Default)]
pub struct IngestOptions {
    /// Drop graphs whose canonical code was already seen.
    pub dedupe: bool,
    /// Skip malformed lines (counted as warnings) instead of failing.
    pub lenient: bool,
}

/// Iterator of graphs from one source, with filters applied.
pub struct GraphStream {
    inner: Inner,
    filter: StreamFilter,
    warnings: usize,
    source: Source,
}

enum Inner {
    Native(NativeGen),
    File(FileReader),
}

impl GraphStream {
    pub fn with_filter(mut self, filter: StreamFilter) -> Self {
        self.filter = filter;
        self
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    /// Malformed lines skipped so far in lenient mode.
    pub fn warnings(&self) -> usize {
        self.warnings
    }
}

impl Iterator for GraphStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        loop {
            let item = match &mut self.inner {
                Inner::Native(gen) => gen.next().map(Ok),
                Inner::File(r) => {
                    let item = r.next();
                    self.warnings = r.warnings;
                    item
                }
            }?;
            match item {
                Ok(g) if !self.filter.accepts(&g) => continue,
                other => return Some(other),
            }
        }
    }
}

/// All connected graphs of order `n` up to isomorphism.
pub fn enumerate_connected(n: usize) -> Result<GraphStream> {
    enumerate(n, true, Shard::ALL)
}

/// Graphs of order `n` up to isomorphism; all of them when `connected` is
/// false. Only the final level is sharded.
pub fn enumerate(n: usize, connected: bool, shard: Shard) -> Result<GraphStream> {
    if n == 0 || n > NATIVE_MAX_ORDER {
        return Err(Error::InvalidParameters(format!(
            "native enumeration supports 1 <= n <= {NATIVE_MAX_ORDER}, got {n}; \
             use an external generator and ingest its graph6 output"
        )));
    }
    let filter = StreamFilter {
        connected_only: connected,
        ..StreamFilter::default()
    };
    Ok(GraphStream {
        inner: Inner::Native(NativeGen::new(n, connected, shard)),
        filter,
        warnings: 0,
        source: Source::Native { order: n, connected, shard },
    })
}

/// Complete list of one order, collected.
pub fn all_graphs(n: usize, connected: bool) -> Result<Vec<Graph>> {
    Ok(enumerate(n, connected, Shard::ALL)?.map(|g| g.expect("native never fails")).collect())
}

struct NativeGen {
    parents: Vec<Graph>,
    next_parent: usize,
    shard: Shard,
    connected: bool,
    buffer: VecDeque<Graph>,
    single: Option<Graph>,
}

impl NativeGen {
    fn new(n: usize, connected: bool, shard: Shard) -> Self {
        if n == 1 {
            let k1 = Graph::empty(1).expect("order 1");
            let single = (shard.index == 0).then_some(k1);
            return NativeGen {
                parents: Vec::new(),
                next_parent: 0,
                shard,
                connected,
                buffer: VecDeque::new(),
                single,
            };
        }
        let mut level = vec![Graph::empty(1).expect("order 1")];
        for _ in 2..n {
            level = level.iter().flat_map(|p| children(p, connected)).collect();
        }
        NativeGen {
            parents: level,
            next_parent: shard.index,
            shard,
            connected,
            buffer: VecDeque::new(),
            single: None,
        }
    }
}

impl Iterator for NativeGen {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(g) = self.single.take() {
            return Some(g);
        }
        loop {
            if let Some(g) = self.buffer.pop_front() {
                return Some(g);
            }
            let parent = self.parents.get(self.next_parent)?;
            self.buffer.extend(children(parent, self.connected));
            self.next_parent += self.shard.count;
        }
    }
}

/// Cheap isomorphism invariant used to pick the canonical deletion
/// candidates before any labelling is computed.
fn vertex_invariant(g: &Graph, v: usize) -> u64 {
    let d = g.degree(v) as u64;
    let nd: u64 = Bits(g.neighbors(v)).map(|w| g.degree(w) as u64).sum();
    let tri: u64 = Bits(g.neighbors(v))
        .map(|w| (g.neighbors(w) & g.neighbors(v)).count_ones() as u64)
        .sum();
    (d << 40) | (nd << 20) | tri
}

/// Accepted children of `parent`, each isomorphism class once.
fn children(parent: &Graph, connected: bool) -> Vec<Graph> {
    let m = parent.order();
    let first = if connected { 1u64 } else { 0 };
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut out = Vec::new();
    for nbhd in first..(1u64 << m) {
        let child = parent.add_vertex(nbhd).expect("order stays within range");
        if is_canonical_extension(&child, m, connected) {
            if seen.insert(canonical_code(&child)) {
                out.push(child);
            }
        }
    }
    out
}

fn is_canonical_extension(g: &Graph, new: usize, connected: bool) -> bool {
    let n = g.order();
    let eligible: u64 = if connected {
        (0..n).filter(|&v| !g.is_cut_vertex(v)).fold(0, |m, v| m | (1 << v))
    } else {
        g.vertex_mask()
    };
    debug_assert!(eligible & (1 << new) != 0);
    let mine = vertex_invariant(g, new);
    let mut ties = 0u64;
    for v in Bits(eligible) {
        let x = vertex_invariant(g, v);
        if x > mine {
            return false;
        }
        if x == mine {
            ties |= 1 << v;
        }
    }
    if ties == 1 << new {
        return true;
    }
    // Pick the tied vertex with the largest canonical label.
    let form = canonical_form(g);
    let chosen = form
        .order
        .iter()
        .rev()
        .copied()
        .find(|&v| ties & (1 << v) != 0)
        .expect("ties contains `new`");
    chosen == new || same_orbit(g, new, chosen)
}

/// Reads graph6 lines from a file.
pub fn ingest_graph6(path: impl AsRef<Path>, opts: IngestOptions) -> Result<GraphStream> {
    let path = path.as_ref().to_path_buf();
    let file = File::open(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(ingest_reader(BufReader::new(file), opts, Source::File { path }))
}

/// Reads graph6 lines from any buffered reader (standard input, pipes).
pub fn ingest_reader(
    reader: impl BufRead + Send + 'static,
    opts: IngestOptions,
    source: Source,
) -> GraphStream {
    GraphStream {
        inner: Inner::File(FileReader {
            lines: Box::new(reader.lines()),
            line_no: 0,
            opts,
            seen: HashSet::new(),
            warnings: 0,
        }),
        filter: StreamFilter {
            connected_only: false,
            ..StreamFilter::default()
        },
        warnings: 0,
        source,
    }
}

struct FileReader {
    lines: Box<dyn Iterator<Item = std::io::Result<String>> + Send>,
    line_no: usize,
    opts: IngestOptions,
    seen: HashSet<CanonicalCode>,
    warnings: usize,
}

impl Iterator for FileReader {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        loop {
            let line = match self.lines.next()? {
                Ok(l) => l,
                Err(e) => return Some(Err(Error::Io(e.to_string()))),
            };
            self.line_no += 1;
            let text = line.trim();
            if text.is_empty() || text == HEADER {
                continue;
            }
            match parse_graph6(text) {
                Ok(g) => {
                    if self.opts.dedupe && !self.seen.insert(canonical_code(&g)) {
                        continue;
                    }
                    return Some(Ok(g));
                }
                Err(_) if self.opts.lenient => self.warnings += 1,
                Err(e) => {
                    return Some(Err(Error::Parse {
                        line: self.line_no,
                        message: e.to_string(),
                    }))
                }
            }
        }
    }
}
