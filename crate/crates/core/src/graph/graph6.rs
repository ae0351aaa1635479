//! graph6 encoding of undirected simple graphs.
//!
//! The order `n` is written as `N(n)` (one byte for `n < 63`, `~` plus three
//! bytes up to 258047, `~~` plus six bytes beyond), followed by the upper
//! triangle of the adjacency matrix in column order (`x(0,1) x(0,2) x(1,2)
//! x(0,3) ...`) packed six bits per byte, big-endian, offset by 63.

use super::{Graph, Neighborhood, ParseError};

pub const MAX_ORDER: usize = 1 << 18;
const HEADER: &str = ">>graph6<<";

pub fn encode<G: Neighborhood>(g: &G) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + 63));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let column = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | column.binary_search(&i).is_ok() as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph, ParseError> {
    let skip = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = text[skip..].trim_end().as_bytes();
    let err = |at: usize, message: String| ParseError::Graph6 { offset: skip + at, message };

    let sextet = |at: usize| -> Result<usize, ParseError> {
        match bytes.get(at) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(err(at, format!("byte {b:#04x} outside the graph6 range 63..=126"))),
            None => Err(err(at, "input ends inside the vertex count".into())),
        }
    };
    let read_wide = |from: usize, count: usize| -> Result<usize, ParseError> {
        (from..from + count).try_fold(0usize, |acc, at| Ok((acc << 6) | sextet(at)?))
    };

    let (n, mut pos) = match sextet(0)? {
        63 => match bytes.get(1) {
            Some(&126) => (read_wide(2, 6)?, 8),
            _ => (read_wide(1, 3)?, 4),
        },
        small => (small, 1),
    };
    if n > MAX_ORDER {
        return Err(err(0, format!("order {n} exceeds the supported maximum {MAX_ORDER}")));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let available = bytes.len() - pos;
    if available != expected {
        let at = pos + available.min(expected);
        return Err(err(
            at,
            format!("order {n} needs {expected} adjacency bytes, found {available}"),
        ));
    }

    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..expected {
        let chunk = sextet(pos)?;
        for b in (0..6).rev() {
            let bit = (chunk >> b) & 1 == 1;
            if k * 6 + (5 - b) >= bits {
                if bit {
                    return Err(err(pos, "nonzero padding bit".into()));
                }
                continue;
            }
            if bit {
                edges.push((i, j));
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Ok(Graph::from_edges(n, edges)?)
}
