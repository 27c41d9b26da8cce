//! graph6 and plain edge-list text formats.
//!
//! graph6 is the bit-packed upper-triangle format of McKay's nauty tools:
//! an order prefix followed by the adjacency bits `x(0,1) x(0,2) x(1,2)
//! x(0,3) ...` in groups of six, each group offset by 63 into printable
//! ASCII. The edge-list format is a header line `n m` followed by `m` lines
//! `u v`.

use std::fmt::Write as _;

use super::{Graph, GraphError, VertexId};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn push_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// graph6 bytes for an order-`n` graph whose adjacency is given by `adjacent`.
pub(crate) fn graph6_bytes(n: usize, adjacent: impl Fn(VertexId, VertexId) -> bool) -> Vec<u8> {
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_order(n, &mut out);
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | u8::from(adjacent(i, j));
            filled += 1;
            if filled == 6 {
                out.push(word + BIAS);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + BIAS);
    }
    out
}

pub fn emit_graph6(g: &Graph) -> String {
    let bytes = graph6_bytes(g.vertex_count(), |i, j| g.has_edge(i, j));
    String::from_utf8(bytes).expect("graph6 is ASCII")
}

fn malformed(msg: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6(msg.into())
}

/// Parses one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted; padding bits must be zero.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(malformed(format!("byte {b:#04x} outside the graph6 range")));
    }
    let (n, body) = match bytes {
        [126, 126, rest @ ..] => {
            let (head, body) = rest
                .split_at_checked(6)
                .ok_or_else(|| malformed("truncated order field"))?;
            (decode_sixes(head), body)
        }
        [126, rest @ ..] => {
            let (head, body) = rest
                .split_at_checked(3)
                .ok_or_else(|| malformed("truncated order field"))?;
            (decode_sixes(head), body)
        }
        [first, body @ ..] => (usize::from(first - BIAS), body),
        [] => unreachable!("checked non-empty"),
    };
    let bit_count = n
        .checked_mul(n.saturating_sub(1))
        .map(|x| x / 2)
        .ok_or_else(|| malformed("order too large"))?;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} adjacency bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (bit_count..expected * 6).any(bit) {
        return Err(malformed("non-zero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_sixes(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS))
}

/// Renders the `n m` / `u v` edge-list format.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut tokens = line.split_whitespace();
    let a = tokens.next()?.parse().ok()?;
    let b = tokens.next()?.parse().ok()?;
    tokens.next().is_none().then_some((a, b))
}

/// Parses the edge-list format; blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let bad = |msg: String| GraphError::MalformedEdgeList(msg);
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| bad("empty input".into()))?;
    let (n, m) = parse_pair(header).ok_or_else(|| bad(format!("bad header {header:?}")))?;
    let mut pairs = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let pair = parse_pair(line).ok_or_else(|| bad(format!("line {}: {line:?}", lineno + 1)))?;
        pairs.push(pair);
    }
    if pairs.len() != m {
        return Err(bad(format!(
            "header promises {m} edges, found {}",
            pairs.len()
        )));
    }
    Graph::from_edges(n, pairs)
}

/// Reads either format: input whose first line holds two integers is an
/// edge list, anything else a single graph6 line.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if parse_pair(first).is_some() {
        parse_edge_list(text)
    } else {
        parse_graph6(text)
    }
}
