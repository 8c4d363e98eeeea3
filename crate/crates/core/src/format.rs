//! Text input formats: the edge-list format and graph6.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! n 4
//! e 0 1
//! e 1 2
//! e 2 2
//! ```
//!
//! Repeated `e` lines create parallel edges and `e u u` creates a loop,
//! unless strict parsing is requested.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the edge-list format. With `strict`, loops and repeated pairs are
/// rejected.
pub fn parse_edge_list(text: &str, strict: bool) -> Result<Graph> {
    let mut n: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("expected a non-negative integer, got `{s}`")))
        };
        match fields.as_slice() {
            ["n", count] => {
                if n.is_some() {
                    return Err(parse_err(line_no, "duplicate `n` line"));
                }
                n = Some((num(count)?, line_no));
            }
            ["e", u, v] => {
                let Some((count, _)) = n else {
                    return Err(parse_err(line_no, "`e` line before the `n` line"));
                };
                let (u, v) = (num(u)?, num(v)?);
                if u >= count || v >= count {
                    return Err(parse_err(
                        line_no,
                        format!("edge ({u}, {v}) has an endpoint outside 0..{count}"),
                    ));
                }
                if strict {
                    if u == v {
                        return Err(parse_err(line_no, format!("loop at vertex {u} in strict mode")));
                    }
                    if !seen.insert((u.min(v), u.max(v))) {
                        return Err(parse_err(line_no, format!("repeated edge ({u}, {v}) in strict mode")));
                    }
                }
                pairs.push((u, v));
            }
            _ => return Err(parse_err(line_no, format!("unrecognised line `{line}`"))),
        }
    }
    let (count, _) = n.ok_or_else(|| parse_err(0, "missing `n <count>` line"))?;
    Graph::new(count, pairs)
}

/// Parses one graph6 string (simple graphs only). A leading `>>graph6<<`
/// header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(1, "empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, format!("byte {b} outside the graph6 range 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(parse_err(1, "graph6 orders above 258047 are not supported"));
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() != needed {
        return Err(parse_err(
            1,
            format!("graph6 body has {} bytes, expected {needed} for n = {n}", body.len()),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
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
    edges.sort_unstable();
    Graph::new(n, edges)
}

/// graph6 encoding; `None` unless the graph is simple.
pub fn to_graph6(g: &Graph) -> Option<String> {
    if !g.is_simple() {
        return None;
    }
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let adj: std::collections::HashSet<(usize, usize)> = g
        .endpoints()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(adj.contains(&(i, j)));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            byte |= u8::from(b) << (5 - i);
        }
        out.push(byte + 63);
    }
    Some(String::from_utf8(out).expect("graph6 is ascii"))
}

/// Dispatches on content: anything with an `n` header line is an edge list,
/// otherwise a single graph6 line.
pub fn parse_graph(text: &str, strict: bool) -> Result<Graph> {
    let is_edge_list = text
        .lines()
        .map(str::trim)
        .any(|l| l.starts_with("n ") || l.starts_with('#') || l == "n");
    if is_edge_list {
        parse_edge_list(text, strict)
    } else {
        parse_graph6(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_basics() {
        let g = parse_edge_list("# triangle\nn 3\ne 0 1\ne 1 2\n\ne 0 2\n", true).unwrap();
        assert_eq!(g, Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
        let multi = parse_edge_list("n 2\ne 0 1\ne 0 1\ne 1 1\n", false).unwrap();
        assert_eq!(multi.m(), 3);
        assert_eq!(multi.loop_count(), 1);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let cases = [
            ("n 2\ne 0 5\n", 2),
            ("e 0 1\n", 1),
            ("n 2\nx 1\n", 2),
            ("n 3\n\ne 0 a\n", 3),
            ("n 2\nn 3\n", 2),
        ];
        for (text, line) in cases {
            match parse_edge_list(text, false) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
        assert!(parse_edge_list("n 2\ne 0 0\n", true).is_err());
        assert!(parse_edge_list("n 2\ne 0 1\ne 1 0\n", true).is_err());
        assert!(parse_edge_list("# nothing\n", false).is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // K4 and the 5-cycle 0-1-2-3-4-0
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.n(), 4);
        assert_eq!(k4.m(), 6);
        let c5 = parse_graph6("Dhc").unwrap();
        assert_eq!(c5.m(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(to_graph6(&k4).unwrap(), "C~");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
    }

    #[test]
    fn graph6_rejects_multigraphs() {
        let digon = Graph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert!(to_graph6(&digon).is_none());
    }

    #[test]
    fn dispatch() {
        assert_eq!(parse_graph("C~\n", false).unwrap().m(), 6);
        assert_eq!(parse_graph("n 1\n", false).unwrap(), Graph::empty(1));
    }
}
