//! graph6 encoding (McKay's `formats.txt`) for graphs of order at most 64.
//!
//! The size prefix is one byte `63 + n` for `n <= 62`, otherwise `126`
//! followed by three bytes carrying 18 bits of `n`. The body is the upper
//! triangle read column by column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! packed six bits per byte (most significant first) and offset by 63.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 word")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: unsupported order {n} (must be 1..={MAX_ORDER})")]
    Order { offset: usize, n: usize },
    #[error("byte {offset}: word truncated, expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: trailing data after graph6 word")]
    Trailing { offset: usize },
    #[error("byte {offset}: nonzero padding bits")]
    Padding { offset: usize },
}

/// Parses one graph6 word. A leading `>>graph6<<` header and trailing line
/// terminators are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(HEADER.as_bytes()) {
        bytes = rest;
        base = HEADER.len();
    }
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { offset: base + i, byte: b });
        }
    }

    let (n, header_len) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { offset: base + bytes.len(), expected: 4 });
        }
        if bytes[1] == 126 {
            // 8-byte size form is only used for n >= 258048
            return Err(Graph6Error::Order { offset: base + 1, n: usize::MAX });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            // non-minimal size encoding
            return Err(Graph6Error::Order { offset: base, n });
        }
        (n, 4)
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::Order { offset: base, n });
    }

    let nbits = n * (n - 1) / 2;
    let body_len = nbits.div_ceil(6);
    let expected = header_len + body_len;
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated { offset: base + bytes.len(), expected });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::Trailing { offset: base + expected });
    }

    let body = &bytes[header_len..];
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
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
            return Err(Graph6Error::Padding { offset: base + header_len + pad / 6 });
        }
    }
    Ok(Graph::from_rows(rows))
}

/// Encodes a graph as a graph6 word without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12 + 1);
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
