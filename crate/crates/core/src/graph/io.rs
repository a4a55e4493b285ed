//! Edge-list text and graph6 encodings.

use super::Graph;
use crate::error::{Error, Result};

/// Parses the line-oriented edge-list format.
///
/// `#` starts a comment, blank lines are skipped, an optional `n=<k>` line
/// fixes the vertex count, and every other line holds one `u v` pair.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n") {
            if let Some(value) = rest.trim_start().strip_prefix('=') {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate n= header"));
                }
                let k = value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(line_no, format!("bad vertex count `{}`", value.trim())))?;
                header = Some((k, line_no));
                continue;
            }
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_err(line_no, format!("expected `u v`, got `{line}`")));
        }
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("`{t}` is not a nonnegative integer")))
        };
        let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
        if u == v {
            return Err(Error::SelfLoop { line: line_no, vertex: u });
        }
        edges.push((u, v));
    }
    let needed = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match header {
        Some((k, line_no)) if k < needed => {
            return Err(parse_err(
                line_no,
                format!("n={k} but edges reference vertex {}", needed - 1),
            ))
        }
        Some((k, _)) => k,
        None => needed,
    };
    let mut g = Graph::empty(n);
    for (u, v) in edges {
        g.insert_edge(u, v);
    }
    Ok(g)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Writes the `n=<k>` header followed by one `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes a single graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6("byte outside the printable range 63..=126".into()));
    }
    let (n, rest) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, tail @ ..] => (read_sextets(tail, 6)?, &tail[6..]),
        [126, tail @ ..] => (read_sextets(tail, 3)?, &tail[3..]),
        [b, tail @ ..] => ((*b - 63) as usize, tail),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if rest.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n={n}, found {}",
            rest.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                g.insert_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

fn read_sextets(bytes: &[u8], count: usize) -> Result<usize> {
    if bytes.len() < count {
        return Err(Error::Graph6("truncated vertex count".into()));
    }
    Ok(bytes[..count]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        let count = if n <= 258_047 { 3 } else { 6 };
        out.extend(std::iter::repeat(126).take(count / 3));
        for k in (0..count).rev() {
            out.push(((n >> (6 * k)) & 0x3f) as u8 + 63);
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
