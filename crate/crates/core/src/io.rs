//! Line-oriented text formats for graphs, digraphs, matrices, and
//! orientations.
//!
//! Files are 1-based; the in-memory types are 0-based. Blank lines and lines
//! starting with `#` are ignored. Writers emit edges in sorted order so that
//! output is diff-stable.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Digraph, Dir, Orientation, SignMatrix, ZeroOneMatrix};
use std::collections::BTreeMap;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(tok: &str, line: usize, what: &str) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("expected {what}, got `{tok}`")))?;
    if v == 0 {
        return Err(parse_err(line, format!("{what} must be 1-based, got 0")));
    }
    Ok(v - 1)
}

/// Parse a bipartite graph file:
///
/// ```text
/// bipartite <n_a> <n_b>
/// e <a> <b>
/// ```
pub fn parse_bipartite_graph(text: &str) -> Result<BipartiteGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (no, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["bipartite", na, nb] => {
                if header.is_some() {
                    return Err(parse_err(no, "duplicate `bipartite` header"));
                }
                let na: usize =
                    na.parse().map_err(|_| parse_err(no, "bad A-side vertex count"))?;
                let nb: usize =
                    nb.parse().map_err(|_| parse_err(no, "bad B-side vertex count"))?;
                header = Some((na, nb));
            }
            ["e", a, b] => {
                if header.is_none() {
                    return Err(parse_err(no, "edge before `bipartite` header"));
                }
                edges.push((parse_index(a, no, "A vertex")?, parse_index(b, no, "B vertex")?));
            }
            _ => return Err(parse_err(no, format!("unrecognized line `{line}`"))),
        }
    }
    let (n_a, n_b) = header.ok_or_else(|| parse_err(0, "missing `bipartite` header"))?;
    BipartiteGraph::new(n_a, n_b, &edges)
        .map_err(|e| parse_err(0, format!("invalid graph: {e}")))
}

pub fn write_bipartite_graph(g: &BipartiteGraph) -> String {
    let mut out = format!("bipartite {} {}\n", g.n_a(), g.n_b());
    for &(a, b) in g.edges() {
        out.push_str(&format!("e {} {}\n", a + 1, b + 1));
    }
    out
}

/// Parse a digraph file:
///
/// ```text
/// digraph <n>
/// a <u> <v>
/// ```
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut n: Option<usize> = None;
    let mut arcs = Vec::new();
    for (no, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["digraph", k] => {
                if n.is_some() {
                    return Err(parse_err(no, "duplicate `digraph` header"));
                }
                n = Some(k.parse().map_err(|_| parse_err(no, "bad vertex count"))?);
            }
            ["a", u, v] => {
                if n.is_none() {
                    return Err(parse_err(no, "arc before `digraph` header"));
                }
                arcs.push((parse_index(u, no, "vertex")?, parse_index(v, no, "vertex")?));
            }
            _ => return Err(parse_err(no, format!("unrecognized line `{line}`"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `digraph` header"))?;
    Digraph::new(n, &arcs).map_err(|e| parse_err(0, format!("invalid digraph: {e}")))
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("digraph {}\n", d.n());
    for &(u, v) in d.arcs() {
        out.push_str(&format!("a {} {}\n", u + 1, v + 1));
    }
    out
}

/// Parse a square matrix over {-1, 0, 1}: one whitespace-separated row per
/// line.
pub fn parse_sign_matrix(text: &str) -> Result<SignMatrix> {
    let mut rows: Vec<Vec<i8>> = Vec::new();
    for (no, line) in content_lines(text) {
        let mut row = Vec::new();
        for tok in line.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| parse_err(no, format!("expected matrix entry, got `{tok}`")))?;
            if !(-1..=1).contains(&v) {
                return Err(parse_err(no, format!("entry {v} outside {{-1, 0, 1}}")));
            }
            row.push(v as i8);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err(0, "empty matrix"));
    }
    SignMatrix::new(rows).map_err(|e| parse_err(0, format!("invalid matrix: {e}")))
}

/// Parse a 0-1 matrix, rejecting negative entries.
pub fn parse_zero_one_matrix(text: &str) -> Result<ZeroOneMatrix> {
    let s = parse_sign_matrix(text)?;
    let mut rows = Vec::with_capacity(s.n());
    for r in s.rows() {
        let mut row = Vec::with_capacity(s.n());
        for &x in r {
            if x < 0 {
                return Err(parse_err(0, format!("entry {x} outside {{0, 1}}")));
            }
            row.push(x as u8);
        }
        rows.push(row);
    }
    ZeroOneMatrix::new(rows).map_err(|e| parse_err(0, format!("invalid matrix: {e}")))
}

pub fn write_sign_matrix(m: &SignMatrix) -> String {
    let mut out = String::new();
    for r in m.rows() {
        let row: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// The file token for a direction: `>` is A to B, `<` is B to A.
pub fn dir_token(d: Dir) -> char {
    match d {
        Dir::AtoB => '>',
        Dir::BtoA => '<',
    }
}

/// Parse an orientation file: `e <a> <b> <dir>` with `>` meaning A to B and
/// `<` meaning B to A.
pub fn parse_orientation(text: &str) -> Result<Orientation> {
    let mut dirs = BTreeMap::new();
    for (no, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["e", a, b, dir] => {
                let a = parse_index(a, no, "A vertex")?;
                let b = parse_index(b, no, "B vertex")?;
                let d = match *dir {
                    ">" => Dir::AtoB,
                    "<" => Dir::BtoA,
                    other => {
                        return Err(parse_err(no, format!("expected `>` or `<`, got `{other}`")))
                    }
                };
                if dirs.insert((a, b), d).is_some() {
                    return Err(parse_err(no, format!("duplicate edge ({}, {})", a + 1, b + 1)));
                }
            }
            _ => return Err(parse_err(no, format!("unrecognized line `{line}`"))),
        }
    }
    Ok(Orientation::new(dirs))
}

pub fn write_orientation(d: &Orientation) -> String {
    let mut out = String::new();
    for ((a, b), dir) in d.iter() {
        out.push_str(&format!("e {} {} {}\n", a + 1, b + 1, dir_token(dir)));
    }
    out
}

/// DOT rendering of an oriented bipartite graph. A-side vertices are named
/// `a1..`, B-side `b1..`; arrows follow the orientation.
pub fn orientation_to_dot(g: &BipartiteGraph, d: &Orientation) -> String {
    let mut out = String::from("digraph pfaffian {\n  rankdir=LR;\n");
    for i in 0..g.n_a() {
        out.push_str(&format!("  a{} [shape=circle];\n", i + 1));
    }
    for j in 0..g.n_b() {
        out.push_str(&format!("  b{} [shape=box];\n", j + 1));
    }
    for ((a, b), dir) in d.iter() {
        match dir {
            Dir::AtoB => out.push_str(&format!("  a{} -> b{};\n", a + 1, b + 1)),
            Dir::BtoA => out.push_str(&format!("  b{} -> a{};\n", b + 1, a + 1)),
        }
    }
    out.push_str("}\n");
    out
}
