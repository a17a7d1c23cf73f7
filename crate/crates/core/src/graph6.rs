//! graph6 short form (n ≤ 62).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order (x01, x02, x12, x03, ...) packed big-endian six
//! bits per byte, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + OFFSET);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.mask(j);
        for i in 0..j {
            acc = (acc << 1) | ((col >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    // All bytes are in 63..=126.
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Format("empty graph6 string".into()))?;
    for (pos, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Format(format!("byte {b:#04x} at offset {pos} outside 63..126")));
        }
    }
    let n = (first - OFFSET) as usize;
    if n > MAX_VERTICES {
        return Err(Error::Format("long-form graph6 (n > 62) is not supported".into()));
    }
    if n == 0 {
        return Err(Error::Format("graph6 encodes a graph with no vertices".into()));
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Format(format!(
            "truncated bit field: expected {need} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Format(format!(
            "trailing data: expected {need} data bytes, found {}",
            body.len()
        )));
    }

    let bit_at = |k: usize| -> bool {
        let byte = body[k / 6] - OFFSET;
        (byte >> (5 - k % 6)) & 1 == 1
    };
    for k in nbits..need * 6 {
        if bit_at(k) {
            return Err(Error::Format("nonzero padding bits".into()));
        }
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_masks(adj))
}

/// Parses a multi-graph file: one graph6 string per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_graph6)
        .collect()
}
