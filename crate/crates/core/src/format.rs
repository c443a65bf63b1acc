//! The `.h3` text format.
//!
//! ```text
//! # comment
//! h3 <n> <m>
//! <a> <b> <c>     (m lines)
//! ```
//!
//! Serialization is canonical: each triple ascending and the edge lines in
//! lexicographic order, so equal hypergraphs serialize to identical bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hypergraph::{sort3, Edge, Hypergraph3};

pub const FORMAT_VERSION: &str = "h3/1";

pub fn serialize(h: &Hypergraph3) -> String {
    let mut out = String::with_capacity(16 + 12 * h.edge_count());
    let _ = writeln!(out, "h3 {} {}", h.n(), h.edge_count());
    for [a, b, c] in h.edges() {
        let _ = writeln!(out, "{a} {b} {c}");
    }
    out
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| {
                Error::parse(
                    lineno,
                    format!("expected a non-negative integer, got {t:?}"),
                )
            })
        })
        .collect()
}

/// Parses `.h3` text. Edge lines may list their vertices in any order and
/// appear in any order; the result is the same hypergraph either way.
pub fn parse(text: &str) -> Result<Hypergraph3> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `h3 <n> <m>` header"))?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("h3") {
        return Err(Error::parse(hline, "header must start with `h3`"));
    }
    let rest: Vec<&str> = fields.collect();
    let dims = numbers(&rest.join(" "), hline)?;
    let [n, m] = dims[..] else {
        return Err(Error::parse(hline, "header must be `h3 <n> <m>`"));
    };

    let mut h = Hypergraph3::new(n).map_err(|e| Error::parse(hline, e.to_string()))?;
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let vs = numbers(line, lineno)?;
        let [a, b, c] = vs[..] else {
            return Err(Error::parse(
                lineno,
                "edge line must have exactly three vertices",
            ));
        };
        if seen == m {
            return Err(Error::parse(
                lineno,
                format!("more than the declared {m} edges"),
            ));
        }
        let triple = [a, b, c];
        if let Some(&v) = triple.iter().find(|&&v| v >= n) {
            return Err(Error::parse(
                lineno,
                format!("vertex {v} out of range for n = {n}"),
            ));
        }
        let s = sort3(triple);
        if s[0] == s[1] || s[1] == s[2] {
            return Err(Error::parse(
                lineno,
                format!("edge {a} {b} {c} repeats a vertex"),
            ));
        }
        if h.contains(&s) {
            return Err(Error::parse(lineno, format!("duplicate edge {a} {b} {c}")));
        }
        h.add_edge(s)
            .map_err(|e| Error::parse(lineno, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(
            hline,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(h)
}

#[derive(Serialize, Deserialize)]
struct Repr {
    n: usize,
    edges: Vec<Edge>,
}

/// JSON and other serde formats see `{"n": .., "edges": [[a, b, c], ..]}`.
impl Serialize for Hypergraph3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            n: self.n(),
            edges: self.edges().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hypergraph3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = Repr::deserialize(d)?;
        Hypergraph3::from_edges(r.n, r.edges).map_err(serde::de::Error::custom)
    }
}
