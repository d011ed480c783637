//! Rendering stored search records as tables, CSV, graph6 or JSON lines.
//!
//! Nothing here computes: every cell comes from a record.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::search::{parse_records, BoundsRecord, QueryKind, RecordValue, SearchRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    Markdown,
    Csv,
    Graph6,
    JsonLines,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" | "markdown" => Ok(OutputFormat::Markdown),
            "csv" => Ok(OutputFormat::Csv),
            "g6" | "graph6" => Ok(OutputFormat::Graph6),
            "jsonl" | "json-lines" => Ok(OutputFormat::JsonLines),
            _ => Err(Error::InvalidParameters(format!(
                "unknown format {s:?}, expected md, csv, graph6 or jsonl"
            ))),
        }
    }
}

pub fn render(records: &[SearchRecord], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Markdown => Ok(markdown(records)),
        OutputFormat::Csv => to_csv(records),
        OutputFormat::Graph6 => Ok(graph6_lines(records)),
        OutputFormat::JsonLines => Ok(json_lines(records)),
    }
}

/// One section per query kind; `mu` records become an `a` by `b` grid.
pub fn markdown(records: &[SearchRecord]) -> String {
    let mut out = String::new();
    for kind in QueryKind::ALL {
        let group: Vec<&SearchRecord> = records.iter().filter(|r| r.query == kind).collect();
        if group.is_empty() {
            continue;
        }
        if !out.is_empty() {
            out.push('\n');
        }
        let _ = writeln!(out, "## {kind}\n");
        if kind == QueryKind::Mu {
            out.push_str(&mu_grid(&group));
        } else {
            out.push_str(&record_table(&group));
        }
    }
    out
}

fn mu_cell(r: &SearchRecord) -> String {
    match (&r.value, &r.bounds) {
        (RecordValue::Exact { value }, _) => format!("{value} ({})", r.witness_count),
        (RecordValue::AtLeast { value }, Some(BoundsRecord { upper: Some(u), .. })) if value == u => {
            format!("{u} (construction)")
        }
        (RecordValue::AtLeast { value }, Some(BoundsRecord { upper: Some(u), .. })) => format!(">={value}, <={u}"),
        (v, _) => v.to_string(),
    }
}

/// Rank used when several records cover the same cell.
fn strength(r: &SearchRecord) -> (u8, i64) {
    match r.value {
        RecordValue::Exact { .. } => (2, 0),
        RecordValue::AtLeast { value } => (1, value),
        _ => (0, 0),
    }
}

/// Grid with rows `a`, columns `b` and `-` below the diagonal. Exact cells
/// read `order (solutions)`; cells settled by a construction meeting the
/// scanned lower bound read `order (construction)`.
pub fn mu_grid(records: &[&SearchRecord]) -> String {
    let mut cells: BTreeMap<(i64, i64), &SearchRecord> = BTreeMap::new();
    for r in records {
        let (Ok(a), Ok(b)) = (r.param("a"), r.param("b")) else {
            continue;
        };
        let e = cells.entry((a, b)).or_insert(r);
        if strength(r) > strength(e) {
            *e = r;
        }
    }
    if cells.is_empty() {
        return String::new();
    }
    let a_lo = cells.keys().map(|k| k.0).min().expect("non-empty");
    let a_hi = cells.keys().map(|k| k.0).max().expect("non-empty");
    let b_lo = cells.keys().map(|k| k.1).min().expect("non-empty");
    let b_hi = cells.keys().map(|k| k.1).max().expect("non-empty");
    let mut out = String::from("| a \\ b |");
    for b in b_lo..=b_hi {
        let _ = write!(out, " {b} |");
    }
    out.push_str("\n|---|");
    for _ in b_lo..=b_hi {
        out.push_str("---|");
    }
    out.push('\n');
    for a in a_lo..=a_hi {
        let _ = write!(out, "| {a} |");
        for b in b_lo..=b_hi {
            let cell = if b < a {
                "-".to_string()
            } else {
                cells.get(&(a, b)).map(|r| mu_cell(r)).unwrap_or_default()
            };
            let _ = write!(out, " {cell} |");
        }
        out.push('\n');
    }
    out
}

fn record_table(records: &[&SearchRecord]) -> String {
    let mut out = String::from("| parameters | value | solutions | bounds | search space |\n|---|---|---|---|---|\n");
    for r in records {
        let bounds = r.bounds.as_ref().map(bounds_text).unwrap_or_default();
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            r.params_text(),
            r.value,
            r.witness_count,
            bounds,
            r.search_space
        );
    }
    out
}

fn bounds_text(b: &BoundsRecord) -> String {
    let side = |v: Option<i64>, from: &Option<String>| match (v, from) {
        (Some(v), Some(f)) => format!("{v} ({f})"),
        (Some(v), None) => v.to_string(),
        _ => "?".to_string(),
    };
    format!("{} .. {}", side(b.lower, &b.lower_from), side(b.upper, &b.upper_from))
}

/// Witness codes, one per line, in record order.
pub fn graph6_lines(records: &[SearchRecord]) -> String {
    let mut out = String::new();
    for code in records.iter().flat_map(|r| &r.witnesses) {
        out.push_str(code);
        out.push('\n');
    }
    out
}

pub fn json_lines(records: &[SearchRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

pub fn parse_json_lines(text: &str) -> Result<Vec<SearchRecord>> {
    parse_records(text)
}

const CSV_HEADER: [&str; 12] = [
    "schema",
    "query",
    "params",
    "value",
    "witness_count",
    "witnesses",
    "witness_cap",
    "witness_notes",
    "bounds",
    "search_space",
    "timestamp",
    "engine",
];

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::Record(format!("csv: {e}"))
}

pub fn to_csv(records: &[SearchRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(csv_error)?;
    for r in records {
        let notes = if r.witness_notes.is_empty() {
            String::new()
        } else {
            serde_json::to_string(&r.witness_notes).map_err(csv_error)?
        };
        let bounds = match &r.bounds {
            Some(b) => serde_json::to_string(b).map_err(csv_error)?,
            None => String::new(),
        };
        w.write_record([
            r.schema.to_string(),
            r.query.to_string(),
            r.params_text(),
            r.value.to_string(),
            r.witness_count.to_string(),
            r.witnesses.join(" "),
            r.witness_cap.to_string(),
            notes,
            bounds,
            r.search_space.clone(),
            r.timestamp.to_string(),
            r.engine.clone(),
        ])
        .map_err(csv_error)?;
    }
    String::from_utf8(w.into_inner().map_err(csv_error)?).map_err(csv_error)
}

/// Reads records written by [`to_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<SearchRecord>> {
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let header = rd.headers().map_err(csv_error)?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Parse {
            line: 1,
            message: "unexpected csv header".into(),
        });
    }
    let mut out = Vec::new();
    for (i, row) in rd.records().enumerate() {
        let line = i + 2;
        let perr = |message: String| Error::Parse { line, message };
        let row = row.map_err(|e| perr(e.to_string()))?;
        let field = |k: usize| row.get(k).unwrap_or("");
        let int = |k: usize| field(k).parse::<u64>().map_err(|e| perr(format!("{}: {e}", CSV_HEADER[k])));
        let mut params = BTreeMap::new();
        for item in field(2).split_whitespace() {
            let (k, v) = item.split_once('=').ok_or_else(|| perr(format!("bad parameter {item:?}")))?;
            let v = v.parse::<i64>().map_err(|e| perr(format!("parameter {k}: {e}")))?;
            params.insert(k.to_string(), v);
        }
        let query = field(1).parse::<QueryKind>().map_err(|e| perr(e.to_string()))?;
        let value = field(3).parse::<RecordValue>().map_err(|e| perr(e.to_string()))?;
        let witnesses = field(5).split_whitespace().map(String::from).collect();
        let witness_notes = if field(7).is_empty() {
            Vec::new()
        } else {
            serde_json::from_str(field(7)).map_err(|e| perr(e.to_string()))?
        };
        let bounds = if field(8).is_empty() {
            None
        } else {
            Some(serde_json::from_str(field(8)).map_err(|e| perr(e.to_string()))?)
        };
        out.push(SearchRecord {
            schema: int(0)? as u32,
            query,
            params,
            value,
            witness_count: int(4)?,
            witnesses,
            witness_cap: int(6)? as usize,
            witness_notes,
            bounds,
            search_space: field(9).to_string(),
            timestamp: int(10)?,
            engine: field(11).to_string(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(a: i64, b: i64, value: RecordValue, count: usize) -> SearchRecord {
        let codes = (0..count).map(|i| format!("C{i}")).collect();
        SearchRecord::new(QueryKind::Mu, &[("a", a), ("b", b), ("n_cap", 8)], value, "native connected")
            .with_witnesses(codes)
    }

    #[test]
    fn grid_layout() {
        let rs = vec![
            mu(2, 2, RecordValue::Exact { value: 2 }, 1),
            mu(2, 3, RecordValue::Exact { value: 5 }, 1),
            mu(3, 3, RecordValue::Exact { value: 3 }, 1),
        ];
        let md = markdown(&rs);
        assert!(md.contains("| 2 | 2 (1) | 5 (1) |"), "{md}");
        assert!(md.contains("| 3 | - | 3 (1) |"), "{md}");
    }

    #[test]
    fn exact_cell_beats_lower_bound() {
        let rs = vec![
            mu(2, 5, RecordValue::AtLeast { value: 9 }, 0),
            mu(2, 5, RecordValue::Exact { value: 9 }, 4),
        ];
        let refs: Vec<&SearchRecord> = rs.iter().collect();
        assert!(mu_grid(&refs).contains("| 9 (4) |"));
    }

    #[test]
    fn csv_round_trip() {
        let mut r = mu(3, 4, RecordValue::Bound { lower: Some(5), upper: None }, 3);
        r.witness_notes = vec!["a, \"quoted\"".into(); 3];
        r.bounds = Some(BoundsRecord::new(Some((5, "x".into())), Some((9, "y, z".into()))).unwrap());
        let rs = vec![r, mu(2, 2, RecordValue::Exact { value: 2 }, 1)];
        let text = to_csv(&rs).unwrap();
        assert_eq!(parse_csv(&text).unwrap(), rs);
        assert_eq!(parse_json_lines(&json_lines(&rs)).unwrap(), rs);
    }

    #[test]
    fn csv_errors_carry_lines() {
        let rs = vec![mu(2, 2, RecordValue::Exact { value: 2 }, 1)];
        let text = to_csv(&rs).unwrap().replace(",mu,", ",nope,");
        assert!(matches!(parse_csv(&text), Err(Error::Parse { line: 2, .. })));
    }
}
