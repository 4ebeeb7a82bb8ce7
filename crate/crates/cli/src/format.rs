//! Text formats: instances, uncoloured edge lists and certificates.
//!
//! All files use 1-based vertex labels; parsing maps them to dense 0-based ids.
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use colclust_core::instance_gen::SimpleGraph;
use colclust_core::{Colour, EdgeColouredGraph, VertexColouring};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line `{0}`")]
    MissingHeader(&'static str),
    #[error("header declares {declared} {what}, file has {found}")]
    CountMismatch { what: &'static str, declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] colclust_core::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Non-comment lines with their 1-based line numbers, split on whitespace.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, trimmed.split_whitespace().collect()))
        }
    })
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, FormatError> {
    token.parse().map_err(|_| syntax(line, format!("bad {what} `{token}`")))
}

fn label(line: usize, token: &str, n: usize) -> Result<usize, FormatError> {
    let x: usize = number(line, token, "vertex label")?;
    if x == 0 || x > n {
        return Err(syntax(line, format!("vertex label {x} outside 1..={n}")));
    }
    Ok(x - 1)
}

fn expect_arity(line: usize, fields: &[&str], arity: usize) -> Result<(), FormatError> {
    if fields.len() != arity {
        return Err(syntax(line, format!("expected {arity} fields, found {}", fields.len())));
    }
    Ok(())
}

/// Parses `p cc n m t` followed by `m` lines `e u v c`.
pub fn parse_instance(text: &str) -> Result<EdgeColouredGraph, FormatError> {
    let mut header: Option<(usize, usize, Colour)> = None;
    let mut edges = Vec::new();
    for (line, fields) in records(text) {
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "second header line"));
                }
                expect_arity(line, &fields, 5)?;
                if fields[1] != "cc" {
                    return Err(syntax(line, format!("expected `p cc`, found `p {}`", fields[1])));
                }
                header = Some((
                    number(line, fields[2], "vertex count")?,
                    number(line, fields[3], "edge count")?,
                    number(line, fields[4], "colour count")?,
                ));
            }
            "e" => {
                let (n, _, t) = header.ok_or_else(|| syntax(line, "edge before header"))?;
                expect_arity(line, &fields, 4)?;
                let u = label(line, fields[1], n)?;
                let v = label(line, fields[2], n)?;
                let c: Colour = number(line, fields[3], "colour")?;
                if c == 0 || c > t {
                    return Err(syntax(line, format!("colour {c} outside 1..={t}")));
                }
                edges.push((u, v, c));
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let (n, m, t) = header.ok_or(FormatError::MissingHeader("p cc <n> <m> <t>"))?;
    if edges.len() != m {
        return Err(FormatError::CountMismatch { what: "edges", declared: m, found: edges.len() });
    }
    Ok(EdgeColouredGraph::new(n, t, edges)?)
}

/// Writes an instance, preceded by one `#` line per comment.
pub fn write_instance(g: &EdgeColouredGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "p cc {} {} {}", g.vertex_count(), g.edge_count(), g.colour_count());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {} {}", e.u + 1, e.v + 1, e.colour);
    }
    out
}

/// Parses an uncoloured graph: `p edge n m` followed by `m` lines `e u v`.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (line, fields) in records(text) {
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "second header line"));
                }
                expect_arity(line, &fields, 4)?;
                if fields[1] != "edge" {
                    return Err(syntax(line, format!("expected `p edge`, found `p {}`", fields[1])));
                }
                header = Some((
                    number(line, fields[2], "vertex count")?,
                    number(line, fields[3], "edge count")?,
                ));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| syntax(line, "edge before header"))?;
                expect_arity(line, &fields, 3)?;
                edges.push((label(line, fields[1], n)?, label(line, fields[2], n)?));
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingHeader("p edge <n> <m>"))?;
    if edges.len() != m {
        return Err(FormatError::CountMismatch { what: "edges", declared: m, found: edges.len() });
    }
    Ok(SimpleGraph::new(n, edges)?)
}

pub fn write_edge_list(g: &SimpleGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edges().len());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Colouring(VertexColouring),
    /// Indices of deleted edges in the instance, ascending.
    Deletion(Vec<usize>),
}

/// Parses a certificate against `g`. A colouring must give every vertex
/// exactly one colour in `1..=t`; a deletion set may only name edges of `g`,
/// each at most once. Mixing `v` and `d` lines is an error. A file without
/// records is an empty deletion set.
pub fn parse_certificate(text: &str, g: &EdgeColouredGraph) -> Result<Certificate, FormatError> {
    let n = g.vertex_count();
    let t = g.colour_count();
    let mut colours: Vec<Option<Colour>> = vec![None; n];
    let mut coloured = 0usize;
    let mut deleted = BTreeSet::new();
    let mut kind: Option<&str> = None;

    for (line, fields) in records(text) {
        match (fields[0], kind) {
            ("v", None | Some("v")) | ("d", None | Some("d")) => kind = Some(fields[0]),
            ("v" | "d", Some(_)) => {
                return Err(syntax(line, "colouring and deletion lines mixed in one certificate"))
            }
            (other, _) => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
        expect_arity(line, &fields, 3)?;
        let a = label(line, fields[1], n)?;
        if fields[0] == "v" {
            let c: Colour = number(line, fields[2], "colour")?;
            if c == 0 || c > t.max(1) {
                return Err(syntax(line, format!("colour {c} outside 1..={}", t.max(1))));
            }
            if colours[a].replace(c).is_some() {
                return Err(syntax(line, format!("vertex {} coloured twice", a + 1)));
            }
            coloured += 1;
        } else {
            let b = label(line, fields[2], n)?;
            let index = edge_index(g, a, b)
                .ok_or_else(|| syntax(line, format!("no edge {{{}, {}}} in the instance", a + 1, b + 1)))?;
            if !deleted.insert(index) {
                return Err(syntax(line, format!("edge {{{}, {}}} deleted twice", a + 1, b + 1)));
            }
        }
    }
    match kind {
        // With no records at all, only an empty deletion set makes sense
        // unless the graph itself is empty.
        Some("d") => Ok(Certificate::Deletion(deleted.into_iter().collect())),
        None if n > 0 => Ok(Certificate::Deletion(Vec::new())),
        _ if coloured == n => Ok(Certificate::Colouring(VertexColouring::new(
            colours.into_iter().map(|c| c.unwrap_or(1)).collect(),
        ))),
        _ => Err(FormatError::CountMismatch { what: "coloured vertices", declared: n, found: coloured }),
    }
}

/// Index of the edge `{u, v}`, if present.
pub fn edge_index(g: &EdgeColouredGraph, u: usize, v: usize) -> Option<usize> {
    g.incident(u).iter().find(|inc| inc.neighbour == v).map(|inc| inc.edge)
}

pub fn write_colouring(f: &VertexColouring, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for (v, c) in f.as_slice().iter().enumerate() {
        let _ = writeln!(out, "v {} {c}", v + 1);
    }
    out
}

pub fn write_deletion(g: &EdgeColouredGraph, deleted: &[usize], comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for &i in deleted {
        let e = g.edge(i);
        let _ = writeln!(out, "d {} {}", e.u + 1, e.v + 1);
    }
    out
}
