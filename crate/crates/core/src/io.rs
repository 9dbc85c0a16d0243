//! Graph text format.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v            (m edge lines, 0-based endpoints)
//! w w0 w1 ... w{n-1}    (optional vertex weights)
//! X i j k ...           (optional: vertices on the X side of a bipartition)
//! ```
//!
//! The writer emits edges sorted lexicographically, then the optional weight
//! and X lines, so emitted files parse back to the identical in-memory value.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, Part};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct GraphParseError {
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, GraphParseError> {
    Err(GraphParseError {
        line,
        msg: msg.into(),
    })
}

pub fn parse_graph(text: &str) -> Result<Graph, GraphParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = match lines.next() {
        Some(x) => x,
        None => return err(1, "empty input: expected header line \"n m\""),
    };
    let mut it = header.split_whitespace();
    let n: usize = match it.next().map(str::parse) {
        Some(Ok(n)) => n,
        _ => return err(header_no, "malformed header: expected \"n m\""),
    };
    let m: usize = match it.next().map(str::parse) {
        Some(Ok(m)) => m,
        _ => return err(header_no, "malformed header: expected \"n m\""),
    };
    if it.next().is_some() {
        return err(header_no, "malformed header: trailing tokens after \"n m\"");
    }

    let mut g = Graph::new(n);
    let mut seen_edges = 0usize;
    let mut weights_done = false;
    let mut parts_done = false;
    for (no, line) in lines {
        let mut toks = line.split_whitespace();
        let first = toks.next().unwrap();
        if first == "w" {
            if weights_done {
                return err(no, "duplicate weight line");
            }
            let mut w = Vec::with_capacity(n);
            for t in toks {
                match t.parse::<u64>() {
                    Ok(x) => w.push(x),
                    Err(_) => return err(no, format!("bad weight {t:?}")),
                }
            }
            if let Err(e) = g.set_weights(w) {
                return err(no, e.to_string());
            }
            weights_done = true;
        } else if first == "X" {
            if parts_done {
                return err(no, "duplicate X line");
            }
            let mut parts = vec![Part::Y; n];
            for t in toks {
                match t.parse::<usize>() {
                    Ok(v) if v < n => parts[v] = Part::X,
                    Ok(v) => return err(no, format!("X vertex {v} out of range")),
                    Err(_) => return err(no, format!("bad vertex {t:?} in X line")),
                }
            }
            if let Err(e) = g.set_parts(parts) {
                return err(no, e.to_string());
            }
            parts_done = true;
        } else {
            if seen_edges == m {
                return err(no, format!("unexpected extra line after {m} edges"));
            }
            let u: usize = match first.parse() {
                Ok(u) => u,
                Err(_) => return err(no, format!("bad endpoint {first:?}")),
            };
            let v: usize = match toks.next().map(str::parse) {
                Some(Ok(v)) => v,
                _ => return err(no, "edge line needs two endpoints"),
            };
            if toks.next().is_some() {
                return err(no, "edge line has trailing tokens");
            }
            if u >= n || v >= n {
                return err(no, format!("edge {u}-{v} out of range for {n} vertices"));
            }
            if u == v {
                return err(no, format!("self-loop at vertex {u}"));
            }
            if g.has_edge(u, v) {
                return err(no, format!("duplicate edge {u}-{v}"));
            }
            g.add_edge(u, v);
            seen_edges += 1;
        }
    }
    if seen_edges != m {
        let last = text.lines().count();
        return err(last, format!("expected {m} edges, found {seen_edges}"));
    }
    Ok(g)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if let Some(w) = g.weights() {
        let ws: Vec<String> = w.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "w {}", ws.join(" "));
    }
    if let Some(parts) = g.parts() {
        let xs: Vec<String> = (0..g.n())
            .filter(|&v| parts[v] == Part::X)
            .map(|v| v.to_string())
            .collect();
        let _ = writeln!(out, "X {}", xs.join(" "));
    }
    out
}
