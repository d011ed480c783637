use std::collections::BTreeMap;
use std::fmt;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{clique_number, independence_number};
use crate::metric::{diameter, Diameter};
use crate::position::{self, PositionKind};

/// Version of the on-disk record layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Most witnesses stored in one record. Counts are always exact.
pub const WITNESS_CAP: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QueryKind {
    Mu,
    Mex,
    Gex,
    ExMinus,
    Diam,
    Circulant,
    DiameterTwo,
    Ramsey,
}

impl QueryKind {
    pub const ALL: [QueryKind; 8] = [
        QueryKind::Mu,
        QueryKind::Mex,
        QueryKind::Gex,
        QueryKind::ExMinus,
        QueryKind::Diam,
        QueryKind::Circulant,
        QueryKind::DiameterTwo,
        QueryKind::Ramsey,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            QueryKind::Mu => "mu",
            QueryKind::Mex => "mex",
            QueryKind::Gex => "gex",
            QueryKind::ExMinus => "exminus",
            QueryKind::Diam => "diam",
            QueryKind::Circulant => "circulant",
            QueryKind::DiameterTwo => "d2mp2",
            QueryKind::Ramsey => "ramsey",
        }
    }
}

impl fmt::Display for QueryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for QueryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        QueryKind::ALL
            .into_iter()
            .find(|q| q.as_str() == s)
            .ok_or_else(|| Error::Record(format!("unknown query kind {s:?}")))
    }
}

/// Outcome of a query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum RecordValue {
    Exact { value: i64 },
    /// Nothing found up to the scanned limit.
    AtLeast { value: i64 },
    Bound { lower: Option<i64>, upper: Option<i64> },
    Exists { value: bool },
    Set { values: Vec<u32> },
    /// No graph has the requested parameters in the scanned range.
    Unrealizable,
    Unknown,
}

impl RecordValue {
    pub fn exact(&self) -> Option<i64> {
        match *self {
            RecordValue::Exact { value } => Some(value),
            _ => None,
        }
    }
}

impl fmt::Display for RecordValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |x: Option<i64>| x.map_or(String::from("?"), |v| v.to_string());
        match self {
            RecordValue::Exact { value } => write!(f, "{value}"),
            RecordValue::AtLeast { value } => write!(f, ">={value}"),
            RecordValue::Bound { lower, upper } => write!(f, "[{},{}]", opt(*lower), opt(*upper)),
            RecordValue::Exists { value } => f.write_str(if *value { "yes" } else { "no" }),
            RecordValue::Set { values } => {
                let items: Vec<String> = values.iter().map(u32::to_string).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            RecordValue::Unrealizable => f.write_str("unrealizable"),
            RecordValue::Unknown => f.write_str("unknown"),
        }
    }
}

impl FromStr for RecordValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Record(format!("cannot parse value {s:?}"));
        let int = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        let opt = |t: &str| if t.trim() == "?" { Ok(None) } else { int(t).map(Some) };
        Ok(match s {
            "yes" => RecordValue::Exists { value: true },
            "no" => RecordValue::Exists { value: false },
            "unrealizable" => RecordValue::Unrealizable,
            "unknown" => RecordValue::Unknown,
            _ if s.starts_with(">=") => RecordValue::AtLeast { value: int(&s[2..])? },
            _ if s.starts_with('[') && s.ends_with(']') => {
                let (lo, hi) = s[1..s.len() - 1].split_once(',').ok_or_else(bad)?;
                RecordValue::Bound {
                    lower: opt(lo)?,
                    upper: opt(hi)?,
                }
            }
            _ if s.starts_with('{') && s.ends_with('}') => {
                let inner = &s[1..s.len() - 1];
                let values = if inner.is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
                        .collect::<Result<_>>()?
                };
                RecordValue::Set { values }
            }
            _ => RecordValue::Exact { value: int(s)? },
        })
    }
}

/// Lower and upper bounds with where each came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRecord {
    pub lower: Option<i64>,
    pub lower_from: Option<String>,
    pub upper: Option<i64>,
    pub upper_from: Option<String>,
    pub exact: bool,
}

impl BoundsRecord {
    pub fn new(lower: Option<(i64, String)>, upper: Option<(i64, String)>) -> Result<Self> {
        let (lower, lower_from) = lower.map_or((None, None), |(v, s)| (Some(v), Some(s)));
        let (upper, upper_from) = upper.map_or((None, None), |(v, s)| (Some(v), Some(s)));
        let b = BoundsRecord {
            lower,
            lower_from,
            upper,
            upper_from,
            exact: lower.is_some() && lower == upper,
        };
        b.check()?;
        Ok(b)
    }

    /// Checks `lower <= upper` and that `exact` means they coincide.
    pub fn check(&self) -> Result<()> {
        if let (Some(l), Some(u)) = (self.lower, self.upper) {
            if l > u {
                return Err(Error::Verification(format!("lower bound {l} exceeds upper bound {u}")));
            }
        }
        if self.exact && (self.lower.is_none() || self.lower != self.upper) {
            return Err(Error::Verification("bounds flagged exact but differ".into()));
        }
        Ok(())
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lower.is_none_or(|l| l <= v) && self.upper.is_none_or(|u| v <= u)
    }
}

/// One persisted search result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub schema: u32,
    pub query: QueryKind,
    pub params: BTreeMap<String, i64>,
    pub value: RecordValue,
    /// Number of non-isomorphic witnesses; exact even when the list is
    /// capped.
    pub witness_count: u64,
    /// Canonical graph6 codes, sorted, at most `witness_cap` of them.
    pub witnesses: Vec<String>,
    pub witness_cap: usize,
    /// Optional description of each witness, aligned with `witnesses`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness_notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsRecord>,
    pub search_space: String,
    pub timestamp: u64,
    pub engine: String,
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

impl SearchRecord {
    pub fn new(query: QueryKind, params: &[(&str, i64)], value: RecordValue, search_space: impl Into<String>) -> Self {
        SearchRecord {
            schema: SCHEMA_VERSION,
            query,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            value,
            witness_count: 0,
            witnesses: Vec::new(),
            witness_cap: WITNESS_CAP,
            witness_notes: Vec::new(),
            bounds: None,
            search_space: search_space.into(),
            timestamp: now(),
            engine: crate::ENGINE_VERSION.to_string(),
        }
    }

    /// Stores canonical codes: sorts, removes duplicates, counts, then caps.
    pub fn with_witnesses(mut self, mut codes: Vec<String>) -> Self {
        codes.sort();
        codes.dedup();
        self.witness_count = codes.len() as u64;
        codes.truncate(self.witness_cap);
        self.witnesses = codes;
        self.witness_notes.clear();
        self
    }

    /// Stores witnesses with notes, keeping the given order.
    pub fn with_noted_witnesses(mut self, items: Vec<(String, String)>) -> Self {
        self.witness_count = items.len() as u64;
        let (codes, notes): (Vec<_>, Vec<_>) = items.into_iter().take(self.witness_cap).unzip();
        self.witnesses = codes;
        self.witness_notes = notes;
        self
    }

    pub fn with_bounds(mut self, bounds: BoundsRecord) -> Self {
        self.bounds = Some(bounds);
        self
    }

    pub fn param(&self, key: &str) -> Result<i64> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::Record(format!("{} record lacks parameter {key}", self.query)))
    }

    fn uparam(&self, key: &str) -> Result<usize> {
        usize::try_from(self.param(key)?).map_err(|_| Error::Record(format!("negative parameter {key}")))
    }

    pub fn params_text(&self) -> String {
        let items: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        items.join(" ")
    }

    /// Line used for order-independent comparisons: the JSON encoding with
    /// the timestamp cleared.
    pub fn canonical_line(&self) -> String {
        let mut r = self.clone();
        r.timestamp = 0;
        serde_json::to_string(&r).expect("records serialize")
    }

    /// Recomputes every claim the record makes about its witnesses.
    pub fn reverify(&self) -> Result<()> {
        if self.schema != SCHEMA_VERSION {
            return Err(Error::Record(format!("schema {} not supported", self.schema)));
        }
        if let Some(b) = &self.bounds {
            b.check()?;
            if let Some(v) = self.value.exact() {
                if !b.contains(v) {
                    return Err(Error::Verification(format!("value {v} outside its bounds")));
                }
            }
        }
        if self.witnesses.len() as u64 > self.witness_count || self.witnesses.len() > self.witness_cap {
            return Err(Error::Verification("witness list longer than its count or cap".into()));
        }
        let fail = |i: usize, what: String| {
            Err(Error::Verification(format!(
                "{} {}: witness {} ({}) {what}",
                self.query,
                self.params_text(),
                i,
                self.witnesses[i]
            )))
        };
        for (i, code) in self.witnesses.iter().enumerate() {
            let g = Graph::from_graph6(code)?;
            let checks: Vec<(&str, i64, i64)> = match self.query {
                QueryKind::Mu => {
                    let mut c = vec![
                        ("mp", self.param("a")?, mp(&g)?),
                        ("gp", self.param("b")?, gp(&g)?),
                    ];
                    if let Some(n) = self.value.exact() {
                        c.push(("order", n, g.order() as i64));
                    }
                    c
                }
                QueryKind::Mex | QueryKind::Gex => {
                    let number = if self.query == QueryKind::Mex { mp(&g)? } else { gp(&g)? };
                    let mut c = vec![
                        ("order", self.param("n")?, g.order() as i64),
                        (self.query.as_str(), self.param("a")?, number),
                    ];
                    if let Some(m) = self.value.exact() {
                        c.push(("size", m, g.size() as i64));
                    }
                    c
                }
                QueryKind::ExMinus => {
                    let mut c = vec![
                        ("order", self.param("n")?, g.order() as i64),
                        ("mp", self.param("a")?, mp(&g)?),
                        ("gp", self.param("b")?, gp(&g)?),
                    ];
                    match (&self.value, &self.bounds) {
                        (RecordValue::Exact { value }, _) => c.push(("size", *value, g.size() as i64)),
                        (_, Some(BoundsRecord { upper: Some(u), .. })) => {
                            if g.size() as i64 > *u {
                                return fail(i, format!("has size {} above the upper bound {u}", g.size()));
                            }
                        }
                        _ => {}
                    }
                    c
                }
                QueryKind::Diam => {
                    let RecordValue::Set { values } = &self.value else {
                        return Err(Error::Record("diam record without a set value".into()));
                    };
                    let d = values
                        .get(i)
                        .ok_or_else(|| Error::Record("diam record has more witnesses than diameters".into()))?;
                    vec![
                        ("order", self.param("n")?, g.order() as i64),
                        ("mp", self.param("a")?, mp(&g)?),
                        ("diameter", i64::from(*d), finite_diameter(&g)),
                    ]
                }
                QueryKind::Circulant | QueryKind::DiameterTwo => vec![
                    ("order", self.param("n")?, g.order() as i64),
                    ("mp", 2, mp(&g)?),
                    ("diameter", 2, finite_diameter(&g)),
                ],
                QueryKind::Ramsey => {
                    let s = self.uparam("s")?;
                    let t = self.uparam("t")?;
                    let omega = clique_number(&g);
                    let alpha = independence_number(&g);
                    if omega >= s || alpha >= t {
                        return fail(i, format!("has clique {omega} / independent set {alpha}"));
                    }
                    if let Some(r) = self.value.exact() {
                        if g.order() as i64 != r - 1 {
                            return fail(i, format!("has order {} instead of {}", g.order(), r - 1));
                        }
                    }
                    vec![]
                }
            };
            for (what, expected, actual) in checks {
                if expected != actual {
                    return fail(i, format!("has {what} {actual}, record says {expected}"));
                }
            }
        }
        Ok(())
    }
}

fn mp(g: &Graph) -> Result<i64> {
    Ok(position::position_number(g, PositionKind::Monophonic)?.value as i64)
}

fn gp(g: &Graph) -> Result<i64> {
    Ok(position::position_number(g, PositionKind::Geodesic)?.value as i64)
}

fn finite_diameter(g: &Graph) -> i64 {
    match diameter(g) {
        Diameter::Finite(d) => i64::from(d),
        Diameter::Infinite => -1,
    }
}

/// Sorts records by query and parameters so that runs can be compared.
pub fn canonical_sort(records: &mut [SearchRecord]) {
    records.sort_by(|a, b| {
        (a.query, &a.params)
            .cmp(&(b.query, &b.params))
            .then_with(|| a.canonical_line().cmp(&b.canonical_line()))
    });
}

/// Appends records to a JSON-lines file, creating it if needed.
pub fn append_records(path: &Path, records: &[SearchRecord]) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    for r in records {
        let line = serde_json::to_string(r).map_err(|e| Error::Record(e.to_string()))?;
        writeln!(f, "{line}")?;
    }
    Ok(())
}

pub fn parse_records(text: &str) -> Result<Vec<SearchRecord>> {
    read_records_from(text.as_bytes())
}

pub fn read_records_from(reader: impl BufRead) -> Result<Vec<SearchRecord>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let r: SearchRecord = serde_json::from_str(&line).map_err(|e| Error::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        if r.schema != SCHEMA_VERSION {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("schema {} not supported", r.schema),
            });
        }
        out.push(r);
    }
    Ok(out)
}

pub fn read_records(path: &Path) -> Result<Vec<SearchRecord>> {
    let f = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    read_records_from(BufReader::new(f))
}

/// Every `*.jsonl` file in `dir`, in file-name order.
pub fn load_dir(dir: &Path) -> Result<Vec<SearchRecord>> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "jsonl"))
        .collect();
    files.sort();
    let mut out = Vec::new();
    for f in files {
        out.extend(read_records(&f)?);
    }
    Ok(out)
}

/// Loads records and re-verifies each of them.
pub fn load_verified(path: &Path) -> Result<Vec<SearchRecord>> {
    let records = if path.is_dir() { load_dir(path)? } else { read_records(path)? };
    for r in &records {
        r.reverify()?;
    }
    Ok(records)
}
