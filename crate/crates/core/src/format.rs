//! Text formats: graph6 and a plain edge list.
//!
//! graph6 follows the nauty `formats.txt` description: a size header `N(n)`
//! followed by the upper triangle of the adjacency matrix, ordered
//! `(0,1),(0,2),(1,2),(0,3),...`, packed six bits per byte with 63 added.

use crate::error::{Error, Result};
use crate::graph::Graph;

const G6_HEADER: &[u8] = b">>graph6<<";
const G6_MAX_N: u64 = 68_719_476_735;

fn g6_err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 { offset, msg: msg.into() }
}

/// Decodes a single graph6 record. A trailing newline and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text;
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    let base = if bytes.starts_with(G6_HEADER) { G6_HEADER.len() } else { 0 };
    let body = &bytes[base..];
    if body.is_empty() {
        return Err(g6_err(base, "empty input"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(base + i, format!("byte {b:#04x} outside the printable range 63..=126")));
        }
    }
    let six = |i: usize| (body[i] - 63) as u64;

    let (n, header_len) = if body[0] != 126 {
        (six(0), 1)
    } else if body.len() >= 2 && body[1] != 126 {
        if body.len() < 4 {
            return Err(g6_err(base + body.len(), "truncated 18-bit size header"));
        }
        ((six(1) << 12) | (six(2) << 6) | six(3), 4)
    } else {
        if body.len() < 8 {
            return Err(g6_err(base + body.len(), "truncated 36-bit size header"));
        }
        ((2..8).fold(0u64, |acc, i| (acc << 6) | six(i)), 8)
    };
    if header_len == 4 && n < 63 {
        return Err(g6_err(base, format!("non-canonical 18-bit header for n = {n}")));
    }
    if header_len == 8 && n < 258_048 {
        return Err(g6_err(base, format!("non-canonical 36-bit header for n = {n}")));
    }
    let n = usize::try_from(n).map_err(|_| g6_err(base, "graph too large"))?;
    let bits = n.checked_mul(n.saturating_sub(1)).map(|x| x / 2).ok_or_else(|| g6_err(base, "graph too large"))?;
    let data_len = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != data_len {
        let at = base + header_len + data.len().min(data_len);
        return Err(g6_err(
            at,
            format!("expected {data_len} data bytes for n = {n}, found {}", data.len()),
        ));
    }
    let mut adj = vec![Vec::new(); n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[data_len - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(base + header_len + data_len - 1, "nonzero padding bits"));
        }
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adj))
}

/// Encodes `g` as graph6 without header or newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!((n as u64) <= G6_MAX_N, "graph6 cannot encode n = {n}");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64 >> s) & 63) as u8 + 63);
        }
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes every non-empty line of a graph6 stream.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| {
            parse_graph6(l.as_bytes()).map_err(|e| match e {
                Error::Graph6 { offset, msg } => Error::Graph6 { offset, msg: format!("line {i}: {msg}") },
                other => other,
            })
        })
        .collect()
}

fn el_err(line: usize, msg: impl Into<String>) -> Error {
    Error::EdgeList { line, msg: msg.into() }
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v` with 0-based ids. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| el_err(1, "missing `n m` header"))?;
    let nums = parse_pair(header).ok_or_else(|| el_err(hline, "header must be two integers `n m`"))?;
    let (n, m) = nums;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut count = 0usize;
    for (line, body) in lines {
        let (u, v) = parse_pair(body).ok_or_else(|| el_err(line, "expected two vertex ids `u v`"))?;
        if u >= n || v >= n {
            return Err(el_err(line, format!("vertex id {} out of range for n = {n}", u.max(v))));
        }
        if u == v {
            return Err(el_err(line, format!("self-loop at vertex {u}")));
        }
        if adj[u].contains(&v) {
            return Err(el_err(line, format!("duplicate edge {u}-{v}")));
        }
        count += 1;
        if count > m {
            return Err(el_err(line, format!("more than the declared {m} edges")));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    if count != m {
        return Err(el_err(hline, format!("header declares {m} edges but {count} were listed")));
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adj))
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let mut it = s.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Writes `g` in the edge-list format.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Reads `# label <id> <name>` comment lines from an edge-list file.
pub fn parse_labels(text: &str, n: usize) -> Option<Vec<String>> {
    let mut labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut any = false;
    for line in text.lines() {
        let Some(rest) = line.trim().strip_prefix('#') else { continue };
        let mut it = rest.split_whitespace();
        if it.next() != Some("label") {
            continue;
        }
        if let (Some(Ok(id)), Some(name)) = (it.next().map(str::parse::<usize>), it.next()) {
            if id < n {
                labels[id] = name.to_string();
                any = true;
            }
        }
    }
    any.then_some(labels)
}

/// Guesses the format of `text`: an edge list when the first meaningful line
/// is two integers, graph6 otherwise.
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| parse_pair(l).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_small_examples() {
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(g.n(), 5);
        // cross-checked against networkx.from_graph6_bytes
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        let k1 = parse_graph6(b"@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        let k2 = parse_graph6(b"A_\n").unwrap();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(parse_graph6(b"?").unwrap().n(), 0);
    }

    #[test]
    fn encodes_known_strings() {
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(encode_graph6(&Graph::from_edges(2, [(0, 1)]).unwrap()), "A_");
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(encode_graph6(&c5), "Dhc");
        let p70 = Graph::from_edges(70, (1..70).map(|i| (i - 1, i))).unwrap();
        let s = encode_graph6(&p70);
        assert!(s.starts_with("~?@EhCGGC@"));
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), p70);
    }

    #[test]
    fn accepts_header() {
        assert_eq!(parse_graph6(b">>graph6<<A_").unwrap().m(), 1);
    }

    #[test]
    fn graph6_errors_name_offsets() {
        assert_eq!(parse_graph6(b"A ").unwrap_err(), g6_err(1, "byte 0x20 outside the printable range 63..=126"));
        match parse_graph6(b"A`").unwrap_err() {
            Error::Graph6 { offset, msg } => {
                assert_eq!(offset, 1);
                assert!(msg.contains("padding"));
            }
            e => panic!("{e}"),
        }
        assert!(matches!(parse_graph6(b"D?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6(b"D?{{"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6(b""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6(b"~?"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn edge_list_examples() {
        let p3 = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(
            parse_edge_list("2 1\n0 0").unwrap_err(),
            Error::EdgeList { line: 2, msg: "self-loop at vertex 0".into() }
        );
        let k4 = parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!(k4.m(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("3 2\n0 1\n# dup\n1 0\n"), Err(Error::EdgeList { line: 4, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 3"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1\n1 2"), Err(Error::EdgeList { line: 3, .. })));
        assert!(matches!(parse_edge_list("\n\n"), Err(Error::EdgeList { .. })));
        assert!(matches!(parse_edge_list("3 x"), Err(Error::EdgeList { line: 1, .. })));
    }

    #[test]
    fn edge_list_comments_and_labels() {
        let text = "# a path\n3 2\n\n0 1 # first\n1 2\n# label 0 left\n# label 2 right\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(parse_labels(text, 3).unwrap(), vec!["left", "1", "right"]);
        assert!(looks_like_edge_list(text));
        assert!(!looks_like_edge_list("Dhc\n"));
        assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
    }
}
