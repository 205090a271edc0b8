//! graph6 encoding (McKay's format, restricted to `n <= 64`).
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order `(0,1) (0,2) (1,2) (0,3) ...`, six bits per byte, each byte
//! offset by 63. `N(n)` is one byte `n + 63` for `n <= 62` and `'~'` plus
//! three bytes of an 18-bit big-endian value for `63 <= n <= 258047`.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (start, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if body.is_empty() {
        return Err(parse_err(start, "empty graph6 string"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(start + i, format!("byte 0x{b:02x} outside graph6 range")));
        }
    }
    let (n, header_len) = if body[0] == b'~' {
        if body.len() >= 2 && body[1] == b'~' {
            return Err(parse_err(start + 1, "8-byte size header is beyond capacity"));
        }
        if body.len() < 4 {
            return Err(parse_err(start + body.len(), "truncated size header"));
        }
        let n = ((body[1] - 63) as usize) << 12
            | ((body[2] - 63) as usize) << 6
            | (body[3] - 63) as usize;
        (n, 4)
    } else {
        ((body[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity { requested: n });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let payload = &body[header_len..];
    if payload.len() != expected {
        let offset = start + header_len + payload.len().min(expected);
        return Err(parse_err(
            offset,
            format!("expected {expected} payload bytes for n={n}, found {}", payload.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = payload[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(start + header_len + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}
