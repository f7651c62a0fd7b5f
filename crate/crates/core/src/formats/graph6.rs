//! graph6 encoding: the vertex count, then the upper triangle of the
//! adjacency matrix in column-major order, six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_UNIVERSE;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// whitespace are accepted; anything else malformed is reported with the
/// byte position at which it was found.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end();
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (trimmed, 0),
    };
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::parse(base + i, format!("byte 0x{b:02x} is not a graph6 character")));
        }
    }
    let first = *bytes.first().ok_or_else(|| Error::parse(base, "empty graph6 string"))?;
    let (n, mut pos) = if first == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(Error::parse(base + 1, "graphs beyond 258047 vertices are not supported"));
        }
        if bytes.len() < 4 {
            return Err(Error::parse(base + bytes.len(), "truncated vertex count"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
        (n, 4)
    } else {
        ((first - OFFSET) as usize, 1)
    };
    if n > MAX_UNIVERSE {
        return Err(Error::parse(base, format!("{n} vertices exceed the ceiling of {MAX_UNIVERSE}")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pos + pairs.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::parse(
            base + bytes.len().min(expected),
            format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        pos += k / 6;
        let pad = 6 - k % 6;
        if (bytes[pos] - OFFSET) & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(base + pos, "nonzero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(encode_graph6(&Graph::new(0).unwrap()), "?");
        assert_eq!(encode_graph6(&Graph::new(1).unwrap()), "@");
        assert_eq!(encode_graph6(&Graph::path(2).unwrap()), "A_");
        let big = encode_graph6(&Graph::new(63).unwrap());
        assert!(big.starts_with("~??~"));
    }

    #[test]
    fn decode_known() {
        let g = decode_graph6("DQc\n").unwrap();
        assert_eq!(g, Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap());
        assert_eq!(decode_graph6(">>graph6<<C~").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn decode_errors_carry_positions() {
        assert!(matches!(decode_graph6(""), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(decode_graph6("D Q"), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(decode_graph6("DQ"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(decode_graph6("DQcc"), Err(Error::Parse { .. })));
        // "A`" sets a padding bit
        assert!(matches!(decode_graph6("A`"), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(decode_graph6("~?A?"), Err(Error::Parse { .. })));
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=64, seed in any::<u64>()) {
            let mut g = Graph::new(n).unwrap();
            let mut x = seed | 1;
            for j in 1..n {
                for i in 0..j {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 3 == 0 { g.add_edge(i, j).unwrap(); }
                }
            }
            let text = encode_graph6(&g);
            prop_assert_eq!(decode_graph6(&text).unwrap(), g);
        }
    }
}
