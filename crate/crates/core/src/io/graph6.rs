//! graph6 text encoding.
//!
//! Orders up to 62 use a one-byte header `63 + n`; orders up to 258047 use
//! `126` followed by `n` as three 6-bit groups. The eight-byte header for
//! larger orders is rejected. The upper triangle of the adjacency matrix is
//! read column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits
//! per byte, most significant first, each byte offset by 63. Unused bits of
//! the last byte are zero.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order with a one-byte header.
pub const MAX_SHORT_ORDER: usize = 62;
/// Largest order with a four-byte header.
pub const MAX_ORDER: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("graph6 headers for more than {MAX_ORDER} vertices are not supported")]
    LongForm,
    #[error("truncated graph6 length header")]
    TruncatedHeader,
    #[error("graph on {order} vertices needs {expected} data bytes, found {found}")]
    BadLength {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in the last data byte")]
    NonzeroPadding,
    #[error("graph on {0} vertices is too large for graph6 (limit {MAX_ORDER})")]
    TooLarge(usize),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn graph6_encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut data = vec![0u8; data_len(n)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[k / 6] |= 0x20 >> (k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(data.len() + 4);
    if n <= MAX_SHORT_ORDER {
        out.push((63 + n as u8) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((63 + ((n >> shift) & 0x3f) as u8) as char);
        }
    }
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

pub fn graph6_decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::NonPrintable { offset, byte });
    }
    let (n, data) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        match bytes.get(1..4) {
            None => return Err(Graph6Error::TruncatedHeader),
            Some([126, ..]) => return Err(Graph6Error::LongForm),
            Some(h) => {
                let n = h.iter().fold(0, |acc, &b| (acc << 6) | (b - 63) as usize);
                (n, &bytes[4..])
            }
        }
    };
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::BadLength {
            order: n,
            expected,
            found: data.len(),
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    if let Some(&last) = data.last() {
        let unused = expected * 6 - bits;
        if (last - 63) & ((1 << unused) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (data[k / 6] - 63) & (0x20 >> (k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_valid_edges(n, edges))
}
