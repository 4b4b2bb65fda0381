//! graph6 interchange format.
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed big-endian into 6-bit groups, each offset by 63.

use super::{Graph, GraphBuilder, GraphError};

const BIAS: u8 = 63;
const MAX_BYTE: u8 = 126;
const HEADER_PREFIX: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER_PREFIX).unwrap_or(text);
    let bytes = text.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(BIAS..=MAX_BYTE).contains(&byte) {
            return Err(GraphError::InvalidCharacter { byte, offset });
        }
    }
    let (n, header_len) = decode_size(bytes)?;
    let payload = &bytes[header_len..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() < expected {
        return Err(GraphError::TruncatedPayload {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(GraphError::TrailingData(payload.len() - expected));
    }

    let mut b = GraphBuilder::new(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = payload[k / 6] - BIAS;
            if group & (1 << (5 - k % 6)) != 0 {
                b.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    Ok(b.build())
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let digits = |slice: &[u8]| {
        slice
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS))
    };
    match bytes {
        [] => Err(GraphError::MalformedHeader("empty input".into())),
        [MAX_BYTE, MAX_BYTE, rest @ ..] => {
            if rest.len() < 6 {
                return Err(GraphError::MalformedHeader(
                    "8-byte size header is truncated".into(),
                ));
            }
            Ok((digits(&rest[..6]), 8))
        }
        [MAX_BYTE, rest @ ..] => {
            if rest.len() < 3 {
                return Err(GraphError::MalformedHeader(
                    "4-byte size header is truncated".into(),
                ));
            }
            Ok((digits(&rest[..3]), 4))
        }
        [first, ..] => Ok((usize::from(first - BIAS), 1)),
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    let push_digits = |out: &mut Vec<u8>, count: usize| {
        for shift in (0..count).rev() {
            out.push(((n >> (6 * shift)) & 0x3f) as u8 + BIAS);
        }
    };
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258_048 {
        out.push(MAX_BYTE);
        push_digits(&mut out, 3);
    } else {
        out.push(MAX_BYTE);
        out.push(MAX_BYTE);
        push_digits(&mut out, 6);
    }

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let column = g.neighbors(j);
        for i in 0..j {
            group = (group << 1) | u8::from(column.contains(i));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(emit_graph6(&g), "Bw");
    }

    #[test]
    fn edgeless_pair() {
        assert_eq!(emit_graph6(&Graph::empty(2)), "A?");
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn known_encodings() {
        // Petersen graph in its usual graph6 form.
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert_eq!(emit_graph6(&p), "IheA@GUAo");
        assert_eq!(emit_graph6(&Graph::complete(4)), "C~");
    }

    #[test]
    fn long_header_round_trip() {
        let mut b = GraphBuilder::new(100);
        b.add_edge(0, 99).unwrap();
        b.add_edge(17, 42).unwrap();
        let g = b.build();
        let text = emit_graph6(&g);
        assert!(text.starts_with('~'));
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_graph6(""),
            Err(GraphError::MalformedHeader(_))
        ));
        assert!(matches!(
            parse_graph6("~?"),
            Err(GraphError::MalformedHeader(_))
        ));
        assert!(matches!(
            parse_graph6("C"),
            Err(GraphError::TruncatedPayload {
                expected: 1,
                found: 0
            })
        ));
        assert!(matches!(
            parse_graph6("Bww"),
            Err(GraphError::TrailingData(1))
        ));
        assert!(matches!(
            parse_graph6("B w"),
            Err(GraphError::InvalidCharacter {
                byte: b' ',
                offset: 1
            })
        ));
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap().edge_count(), 3);
    }
}
