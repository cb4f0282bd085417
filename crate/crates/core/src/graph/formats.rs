//! Graph file formats: a plain edge-list format and graph6.

use thiserror::Error;

use super::Graph;

/// Parse failure for either graph format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphParseError {
    #[error("line {line}: malformed, expected \"u v\"")]
    MalformedLine { line: usize },
    #[error("missing vertex-count header")]
    MissingHeader,
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: i64, n: usize },
    #[error("line {line}: self-loop not allowed in a simple graph")]
    SelfLoop { line: usize },
    #[error("line {line}: edge endpoints must satisfy u < v")]
    NotAscending { line: usize },
    #[error("line {line}: duplicate edge")]
    DuplicateEdge { line: usize },
    #[error("empty graph6 input")]
    EmptyGraph6,
    #[error("graph6 order {0} not supported (limit 62)")]
    UnsupportedOrder(usize),
    #[error("graph6 byte {byte:#x} at position {pos} out of range")]
    BadGraph6Byte { pos: usize, byte: u8 },
    #[error("graph6 bit field truncated: expected {expected} data bytes, got {got}")]
    TruncatedGraph6 { expected: usize, got: usize },
    #[error("trailing data after graph6 string")]
    TrailingGraph6Data,
}

/// Parses the edge-list format: first non-comment line is the vertex
/// count, every following non-empty line is an edge "u v" with
/// 1 <= u < v <= n. '#' starts a comment line.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphParseError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        match graph {
            None => {
                let n: usize = content
                    .parse()
                    .map_err(|_| GraphParseError::MalformedLine { line })?;
                graph = Some(Graph::with_vertices(n));
            }
            Some(ref mut g) => {
                let mut parts = content.split_whitespace();
                let (u, v) = match (parts.next(), parts.next(), parts.next()) {
                    (Some(a), Some(b), None) => {
                        let u: i64 = a
                            .parse()
                            .map_err(|_| GraphParseError::MalformedLine { line })?;
                        let v: i64 = b
                            .parse()
                            .map_err(|_| GraphParseError::MalformedLine { line })?;
                        (u, v)
                    }
                    _ => return Err(GraphParseError::MalformedLine { line }),
                };
                let n = g.vertex_count();
                for &w in &[u, v] {
                    if w < 1 || w as usize > n {
                        return Err(GraphParseError::VertexOutOfRange { line, vertex: w, n });
                    }
                }
                if u == v {
                    return Err(GraphParseError::SelfLoop { line });
                }
                if u > v {
                    return Err(GraphParseError::NotAscending { line });
                }
                let (u, v) = (u as usize - 1, v as usize - 1);
                if g.has_edge(u, v) {
                    return Err(GraphParseError::DuplicateEdge { line });
                }
                g.add_edge(u, v);
            }
        }
    }
    graph.ok_or(GraphParseError::MissingHeader)
}

/// Canonical edge-list output: header, then edges ascending, 1-based.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

const G6_MAX_ORDER: usize = 62;

/// Parses a graph6 string (single-byte order header, n <= 62).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphParseError> {
    let bytes = text.trim_end().as_bytes();
    let (&first, rest) = bytes.split_first().ok_or(GraphParseError::EmptyGraph6)?;
    if first == 126 {
        // multi-byte order header
        return Err(GraphParseError::UnsupportedOrder(63));
    }
    if !(63..=63 + G6_MAX_ORDER as u8).contains(&first) {
        return Err(GraphParseError::BadGraph6Byte {
            pos: 0,
            byte: first,
        });
    }
    let n = (first - 63) as usize;
    let bit_count = n * (n.saturating_sub(1)) / 2;
    let expected = bit_count.div_ceil(6);
    if rest.len() < expected {
        return Err(GraphParseError::TruncatedGraph6 {
            expected,
            got: rest.len(),
        });
    }
    if rest.len() > expected {
        return Err(GraphParseError::TrailingGraph6Data);
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for (i, &b) in rest.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphParseError::BadGraph6Byte { pos: i + 1, byte: b });
        }
        let value = b - 63;
        for k in (0..6).rev() {
            bits.push((value >> k) & 1 == 1);
        }
    }
    let mut g = Graph::with_vertices(n);
    let mut idx = 0;
    // upper triangle, column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                g.add_edge(u, v);
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph as graph6 (n <= 62).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n <= G6_MAX_ORDER, "graph6 output limited to order {G6_MAX_ORDER}");
    let mut bits = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (k, &bit) in chunk.iter().enumerate() {
            if bit {
                value |= 1 << (5 - k);
            }
        }
        out.push((63 + value) as char);
    }
    out
}
