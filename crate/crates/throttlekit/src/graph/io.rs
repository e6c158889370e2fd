//! Graph input/output: whitespace edge lists and the graph6 format.
//!
//! graph6 follows the published format description exactly: size is encoded
//! in 1, 4 or 8 bytes, the upper triangle is packed column-major into 6-bit
//! groups, and every byte is offset by 63.

use super::{Graph, GraphError, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

/// Parses an edge list: one `u v` pair per line, `#` comments allowed.
///
/// Numeric vertex names are used verbatim (n = max id + 1); otherwise names
/// are remapped to dense ids in order of first appearance and kept as labels.
/// The directive comment `# n <count>` fixes a minimum vertex count so graphs
/// with trailing isolated vertices round-trip.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut min_n = 0usize;
    let mut raw_edges: Vec<(String, String)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = match line.find('#') {
            Some(pos) => {
                let comment = line[pos + 1..].trim();
                let mut it = comment.split_whitespace();
                if it.next() == Some("n") {
                    if let Some(k) = it.next().and_then(|t| t.parse::<usize>().ok()) {
                        min_n = min_n.max(k);
                    }
                }
                &line[..pos]
            }
            None => line,
        };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.len() {
            0 => continue,
            2 => raw_edges.push((tokens[0].to_string(), tokens[1].to_string())),
            k => {
                return Err(GraphError::Parse {
                    line: line_no,
                    msg: format!("expected 2 vertex names per line, found {}", k),
                })
            }
        }
    }
    let all_numeric = raw_edges
        .iter()
        .flat_map(|(u, v)| [u, v])
        .all(|t| t.parse::<VertexId>().is_ok());
    if all_numeric {
        let edges: Vec<(VertexId, VertexId)> = raw_edges
            .iter()
            .map(|(u, v)| (u.parse().unwrap(), v.parse().unwrap()))
            .collect();
        let n = edges
            .iter()
            .map(|&(u, v)| u.max(v) as usize + 1)
            .max()
            .unwrap_or(0)
            .max(min_n);
        Graph::from_edges(n, edges)
    } else {
        let mut ids: Vec<String> = Vec::new();
        let mut lookup = std::collections::HashMap::new();
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (u, v) in &raw_edges {
            let mut id_of = |name: &String| -> VertexId {
                *lookup.entry(name.clone()).or_insert_with(|| {
                    ids.push(name.clone());
                    (ids.len() - 1) as VertexId
                })
            };
            let (a, b) = (id_of(u), id_of(v));
            edges.push((a, b));
        }
        let n = ids.len().max(min_n);
        while ids.len() < n {
            ids.push(format!("v{}", ids.len()));
        }
        Ok(Graph::from_edges(n, edges)?.with_labels(ids))
    }
}

const G6_HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. An optional `>>graph6<<` header is stripped.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim();
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let err = |msg: &str| GraphError::Parse { line: 1, msg: msg.to_string() };
    if bytes.is_empty() {
        return Err(err("empty graph6 string"));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(err(&format!("byte {} outside graph6 range 63..=126", b)));
        }
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() > 1 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err("truncated 4-byte size"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(err("truncated 8-byte size"));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 8)
    };
    let nbits = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos < nbytes {
        return Err(err(&format!(
            "adjacency data too short: need {} bytes, have {}",
            nbytes,
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut cur = 0u8;
    let mut left = 0u32;
    for col in 1..n {
        for row in 0..col {
            if left == 0 {
                cur = bytes[pos] - 63;
                pos += 1;
                left = 6;
            }
            if cur & (1 << (left - 1)) != 0 {
                edges.push((row as VertexId, col as VertexId));
            }
            left -= 1;
            bit += 1;
        }
    }
    debug_assert_eq!(bit, nbits);
    Graph::from_edges(n, edges)
}

pub(super) fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut cur = 0u8;
    let mut filled = 0u32;
    for col in 1..n {
        for row in 0..col {
            cur <<= 1;
            if g.has_edge(row as VertexId, col as VertexId) {
                cur |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(cur + 63);
                cur = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((cur << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are ASCII")
}
