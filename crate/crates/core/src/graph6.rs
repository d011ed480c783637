//! graph6 encoding, bit-exact with the format written by nauty's `geng`.
//!
//! Order prefix: one byte `63 + n` for `n <= 62`, otherwise `~` followed by
//! three bytes of 6-bit big-endian groups. Body: the upper triangle in
//! column order (`v = 1..n`, `u = 0..v`), packed six bits per byte, each
//! byte offset by 63, zero padded.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Optional header some tools emit at the top of a graph6 file.
pub const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or_else(|| err("empty input"))?;
    if first != 126 {
        return Ok(((first - 63) as usize, 1));
    }
    if bytes.get(1) == Some(&126) {
        if bytes.len() < 8 {
            return Err(err("truncated 8-byte order prefix"));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 258_048 {
            return Err(err("non-minimal 8-byte order prefix"));
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(err("truncated 4-byte order prefix"));
    }
    let n = bytes[1..4]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    if n < 63 {
        return Err(err("non-minimal 4-byte order prefix"));
    }
    Ok((n, 4))
}

/// Parses one graph6 line. Trailing `\n` / `\r` are ignored; any other
/// trailing byte is an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(format!(
            "byte {:#04x} at offset {pos} outside 63..=126",
            bytes[pos]
        )));
    }
    let (n, prefix) = decode_order(bytes)?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let nbits = n * (n - 1) / 2;
    let body_len = nbits.div_ceil(6);
    let body = &bytes[prefix..];
    if body.len() < body_len {
        return Err(err(format!(
            "body has {} bytes, order {n} needs {body_len}",
            body.len()
        )));
    }
    if body.len() > body_len {
        return Err(err(format!(
            "{} bytes of trailing data after graph",
            body.len() - body_len
        )));
    }
    let bit = |k: usize| ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            k += 1;
        }
    }
    for pad in nbits..body_len * 6 {
        if bit(pad) {
            return Err(err("nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(2 + n * n / 12);
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        serialize_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        parse_graph6(text)
    }
}
