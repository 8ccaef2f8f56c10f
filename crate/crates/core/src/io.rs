//! Edge-list text format: a header line `n m`, then `m` lines `u v`
//! (0-based). `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::input("edge list is empty: expected a header `n m`"))?;
    let [n, m] = parse_pair(header, line_no)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        edges.push(parse_pair(line, line_no).map(|[u, v]| (u, v))?);
    }
    if edges.len() != m {
        return Err(Error::input(format!(
            "header declares {m} edges but {} were listed",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}

fn parse_pair(line: &str, line_no: usize) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let bad = || {
        Error::input(format!(
            "line {line_no}: expected two non-negative integers, got `{line}`"
        ))
    };
    match fields.as_slice() {
        [a, b] => Ok([a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?]),
        _ => Err(bad()),
    }
}

/// Header plus edges in lexicographic order.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&fs::read_to_string(path)?)
}

pub fn write_graph(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    fs::write(path, format_edge_list(g))?;
    Ok(())
}
