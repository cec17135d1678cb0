use super::{Graph, GraphError};

/// Encodes `g` in graph6 (no `>>graph6<<` header, no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Decodes one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(input: &[u8]) -> Result<Graph, GraphError> {
    let mut start = 0;
    let mut end = input.len();
    while start < end && input[start].is_ascii_whitespace() {
        start += 1;
    }
    while end > start && input[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    const HEADER: &[u8] = b">>graph6<<";
    if input[start..end].starts_with(HEADER) {
        start += HEADER.len();
    }
    let bytes = &input[start..end];
    let bad = |i: usize| GraphError::MalformedGraph6 { offset: start + i };
    if let Some(i) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(bad(i));
    }
    let (n, mut pos) = match bytes {
        [] => return Err(bad(0)),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad(bytes.len()));
            }
            (rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize), 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad(bytes.len()));
            }
            (rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize), 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() != pos + needed {
        return Err(bad(bytes.len().min(pos + needed)));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    pos += needed;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        let g = parse_graph6(b"@").unwrap();
        assert_eq!((g.order(), g.edge_count()), (1, 0));
    }

    #[test]
    fn known_strings() {
        // Standard examples: K3 is "Bw", the 5-cycle 0-1-2-3-4 is "Dhc".
        assert_eq!(emit_graph6(&Graph::complete(3)), "Bw");
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(emit_graph6(&c5), "Dhc");
        assert_eq!(parse_graph6(b">>graph6<<Dhc\n").unwrap(), c5);
    }

    #[test]
    fn large_order_header() {
        let g = Graph::from_edges(70, &[(0, 69), (3, 40)]).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_graph6(b"garbage\xFF"), Err(GraphError::MalformedGraph6 { .. })));
        assert!(matches!(parse_graph6(b"D"), Err(GraphError::MalformedGraph6 { offset: 1 })));
        assert!(parse_graph6(b"").is_err());
    }
}
