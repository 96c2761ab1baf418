//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 68_719_476_735;

fn push_order(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + OFFSET) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + OFFSET) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + OFFSET) as char);
        }
    }
}

/// Encodes `g` as a graph6 string (no header, no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    push_order(&mut out, n);

    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((word + OFFSET) as char);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((word << (6 - filled)) + OFFSET) as char);
    }
    out
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - OFFSET)
    } else {
        Err(Error::Graph6(format!("byte {b:#04x} outside the printable range 63..=126")))
    }
}

/// Decodes one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }

    let (n, body) = if bytes[0] != b'~' {
        (sextet(bytes[0])? as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != b'~' {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated order field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | sextet(b)? as usize;
        }
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated order field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | sextet(b)? as usize;
        }
        (n, &bytes[8..])
    };
    if n > MAX_ORDER {
        return Err(Error::Graph6(format!("order {n} too large")));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let word = sextet(body[k / 6])?;
            if (word >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 {
        let pad = sextet(body[expected - 1])? & ((1 << (6 - bits % 6)) - 1);
        if pad != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&k4), "C~");
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(decode(">>graph6<<C~\n").unwrap(), k4);
    }

    #[test]
    fn large_order_prefix() {
        let g = Graph::new(63, [(0, 62)]).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_input() {
        assert!(decode("").is_err());
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("C\x20").is_err());
        // order 2 uses one bit; the remaining five must be zero
        assert!(decode("A_").is_ok());
        assert!(decode("A`").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=62, seed in any::<u64>(), density in 0.0f64..1.0) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if (state % 1000) as f64 / 1000.0 < density {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let s = encode(&g);
            prop_assert_eq!(decode(&s).unwrap(), g.clone());
            prop_assert_eq!(encode(&decode(&s).unwrap()), s);
        }
    }
}
