//! graph6 encoding for graphs on at most 62 vertices.
//!
//! A single size byte `n + 63` is followed by the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed big-endian into 6-bit groups, zero-padded, each offset by 63.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 62;
pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;

/// Encodes `g` as a canonical graph6 line (without newline).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::UnsupportedSize(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + BIAS);

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Parses one graph6 line. Trailing whitespace and a leading `>>graph6<<`
/// header are ignored; everything else must be canonical.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_graph6_bytes(text.as_bytes())
}

pub fn parse_graph6_bytes(bytes: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if bytes.starts_with(HEADER.as_bytes()) {
        start = HEADER.len();
    }
    let end = bytes
        .iter()
        .rposition(|b| !b.is_ascii_whitespace())
        .map_or(start, |p| (p + 1).max(start));
    let body = &bytes[start..end];

    let Some(&size_byte) = body.first() else {
        return Err(Error::parse(start, "missing size byte"));
    };
    if size_byte == 126 {
        return Err(Error::parse(start, "extended size header (n > 62) is not supported"));
    }
    if !(BIAS..126).contains(&size_byte) {
        return Err(Error::parse(start, format!("size byte {size_byte:#04x} out of range")));
    }
    let n = (size_byte - BIAS) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let ngroups = nbits.div_ceil(6);
    let data = &body[1..];

    for (k, &b) in data.iter().enumerate().take(ngroups) {
        if !(BIAS..=126).contains(&b) {
            return Err(Error::parse(start + 1 + k, format!("byte {b:#04x} out of range")));
        }
    }
    if data.len() < ngroups {
        return Err(Error::parse(
            start + 1 + data.len(),
            format!("truncated: expected {ngroups} data bytes, found {}", data.len()),
        ));
    }
    if data.len() > ngroups {
        return Err(Error::parse(start + 1 + ngroups, "trailing garbage"));
    }

    let bit = |k: usize| -> bool {
        let group = data[k / 6] - BIAS;
        (group >> (5 - k % 6)) & 1 == 1
    };
    let padding = ngroups * 6 - nbits;
    if padding > 0 && (nbits..ngroups * 6).any(bit) {
        return Err(Error::parse(start + ngroups, "nonzero padding bits"));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses a corpus: one graph per line, blank lines skipped. Errors carry
/// the 1-based line number in their reason.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && l.trim_end() != HEADER)
        .map(|(i, l)| {
            parse_graph6(l).map_err(|e| match e {
                Error::Parse { offset, reason } => Error::Parse {
                    offset,
                    reason: format!("line {}: {reason}", i + 1),
                },
                other => other,
            })
        })
        .collect()
}
