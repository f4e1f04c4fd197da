//! Edge-list text format.
//!
//! One `u v` pair per line, whitespace separated decimal ids. Lines starting
//! with `#` and blank lines are ignored. An optional header `p n m` fixes the
//! vertex count; without it the count is one more than the largest id.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "p" {
            if declared.is_some() || !edges.is_empty() {
                return Err(parse_err(line_no, "header must precede all edges and appear once"));
            }
            if fields.len() != 3 {
                return Err(parse_err(line_no, "header must be `p n m`"));
            }
            let n = parse_id(fields[1], line_no)?;
            let m = parse_id(fields[2], line_no)?;
            declared = Some((n, m));
            continue;
        }
        if fields.len() != 2 {
            return Err(parse_err(line_no, &format!("expected `u v`, found {} fields", fields.len())));
        }
        let u = parse_id(fields[0], line_no)?;
        let v = parse_id(fields[1], line_no)?;
        if u == v {
            return Err(parse_err(line_no, &format!("self-loop on vertex {u}")));
        }
        if let Some((n, _)) = declared {
            if u >= n || v >= n {
                return Err(parse_err(line_no, &format!("vertex id {} out of range for n = {n}", u.max(v))));
            }
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }

    let n = match declared {
        Some((n, _)) => n,
        None => max_id.map_or(0, |m| m + 1),
    };
    Graph::from_edges(n, &edges)
}

fn parse_id(field: &str, line: usize) -> Result<usize> {
    field.parse().map_err(|_| parse_err(line, &format!("`{field}` is not a vertex id")))
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse { line, message: message.to_string() }
}

/// Canonical serialization with a `p n m` header.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
