//! Edge-list and graph6 text formats.
//!
//! Edge list: first non-comment line `n m`, then `m` lines `u v` with
//! `0 <= u < v < n`. Lines starting with `#` are comments. The writer
//! emits edges in lexicographic order, so write/read/write is byte-exact.

use std::fmt::Write as _;

use crate::error::{parse_err, Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let nums = parse_pair(ln, header)?;
    let (n, m) = nums;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            limit: MAX_VERTICES,
        });
    }
    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (ln, line) in lines {
        let (u, v) = parse_pair(ln, line)?;
        if !(u < v && v < n) {
            return Err(parse_err(ln, format!("edge {u} {v} violates 0 <= u < v < n")));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(ln, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(0, format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

fn parse_pair(ln: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| parse_err(ln, format!("not a number: {t:?}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(parse_err(ln, "expected two integers")),
    }
}

/// One graph6 line (without trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            k += 1;
            if k == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(((acc << (6 - k)) + 63) as char);
    }
    out
}

pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes: Vec<u8> = line.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, "graph6 byte outside 63..=126"));
    }
    let (n, body) = match bytes.first() {
        None => return Err(parse_err(1, "empty graph6 string")),
        Some(126) => {
            if bytes.len() < 4 || bytes[1] == 126 {
                return Err(parse_err(1, "unsupported graph6 size prefix"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            limit: MAX_VERTICES,
        });
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(parse_err(1, format!("expected {needed} data bytes, got {}", body.len())));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// Reads one graph per non-empty line.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            from_graph6(l).map_err(|e| match e {
                Error::Parse { msg, .. } => parse_err(i + 1, msg),
                other => other,
            })
        })
        .collect()
}
