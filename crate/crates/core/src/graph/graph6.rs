//! graph6, short form only (n <= 62).
//!
//! A line is one header byte `63 + n` followed by the upper triangle of the
//! adjacency matrix in column-major order `x(0,1), x(0,2), x(1,2), x(0,3), ..`,
//! packed six bits per byte (most significant first) with 63 added and the
//! last group zero-padded.

use super::Graph;
use crate::error::{Error, Result};

const MAX_SHORT_ORDER: usize = 62;

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let bytes = line.as_bytes();
    let (&head, body) = bytes.split_first().ok_or_else(|| malformed("empty line"))?;
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b} outside 63..=126")));
    }
    if head == 126 {
        return Err(malformed("extended header (n > 62) is not supported"));
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(malformed(format!(
            "order {n} needs the extended header, only n <= {MAX_SHORT_ORDER} is encoded"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (acc << (6 - k % 6)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
