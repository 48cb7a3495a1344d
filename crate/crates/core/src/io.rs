//! Line-based instance format.
//!
//! ```text
//! # optional comments
//! p dg 3 3        # dg = directed, ug = undirected; trailing `w` = weighted
//! a 1 2
//! a 2 3
//! a 3 1
//! ```
//!
//! Vertices are 1-based in files and 0-based in memory. Weighted instances
//! carry a weight on every arc line, unweighted ones on none.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::{Digraph, Weight};

struct Header {
    undirected: bool,
    n: usize,
    m: usize,
    weighted: bool,
}

fn parse_header(line_no: usize, tokens: &[&str]) -> Result<Header, ParseError> {
    let bad = |reason: &str| ParseError::BadHeader {
        line: line_no,
        reason: reason.to_string(),
    };
    if tokens.len() < 4 || tokens.len() > 5 {
        return Err(bad("expected 'p dg|ug <n> <m> [w]'"));
    }
    let undirected = match tokens[1] {
        "dg" => false,
        "ug" => true,
        other => return Err(bad(&format!("unknown graph kind '{other}'"))),
    };
    let n = tokens[2]
        .parse::<usize>()
        .map_err(|_| bad("vertex count is not a non-negative integer"))?;
    let m = tokens[3]
        .parse::<usize>()
        .map_err(|_| bad("arc count is not a non-negative integer"))?;
    let weighted = match tokens.get(4) {
        None => false,
        Some(&"w") => true,
        Some(other) => return Err(bad(&format!("unexpected flag '{other}'"))),
    };
    Ok(Header {
        undirected,
        n,
        m,
        weighted,
    })
}

fn parse_vertex(line: usize, token: &str, n: usize) -> Result<usize, ParseError> {
    let value: i64 = token.parse().map_err(|_| ParseError::BadArcLine {
        line,
        reason: format!("'{token}' is not a vertex index"),
    })?;
    if value < 1 || value as u64 > n as u64 {
        return Err(ParseError::VertexOutOfRange {
            line,
            vertex: value,
            n,
        });
    }
    Ok(value as usize - 1)
}

fn parse_weight(line: usize, token: &str) -> Result<Weight, ParseError> {
    if token.starts_with('-') && token[1..].chars().all(|c| c.is_ascii_digit()) && token.len() > 1 {
        return Err(ParseError::NegativeWeight {
            line,
            weight: token.to_string(),
        });
    }
    token.parse().map_err(|_| ParseError::BadArcLine {
        line,
        reason: format!("'{token}' is not a non-negative integer weight"),
    })
}

/// Parses an instance file.
pub fn parse_graph(text: &str) -> Result<Digraph, ParseError> {
    let mut header: Option<Header> = None;
    let mut arcs: Vec<(usize, usize, Weight)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line: line_no });
                }
                header = Some(parse_header(line_no, &tokens)?);
            }
            "a" => {
                let h = header.as_ref().ok_or(ParseError::MissingHeader)?;
                let (u, v, w) = match (tokens.len(), h.weighted) {
                    (3, false) => (tokens[1], tokens[2], None),
                    (4, true) => (tokens[1], tokens[2], Some(tokens[3])),
                    (3, true) => return Err(ParseError::MissingWeight { line: line_no }),
                    (4, false) => return Err(ParseError::UnexpectedWeight { line: line_no }),
                    _ => {
                        return Err(ParseError::BadArcLine {
                            line: line_no,
                            reason: "expected 'a <u> <v> [<weight>]'".to_string(),
                        })
                    }
                };
                let u = parse_vertex(line_no, u, h.n)?;
                let v = parse_vertex(line_no, v, h.n)?;
                let w = match w {
                    Some(t) => parse_weight(line_no, t)?,
                    None => 1,
                };
                if u == v {
                    return Err(ParseError::SelfLoop {
                        line: line_no,
                        vertex: u + 1,
                    });
                }
                let key = if h.undirected { (u.min(v), u.max(v)) } else { (u, v) };
                if !seen.insert(key) {
                    return Err(ParseError::DuplicateArc {
                        line: line_no,
                        u: u + 1,
                        v: v + 1,
                    });
                }
                arcs.push((u, v, w));
            }
            other => {
                return Err(ParseError::BadArcLine {
                    line: line_no,
                    reason: format!("unknown line type '{other}'"),
                })
            }
        }
    }

    let h = header.ok_or(ParseError::MissingHeader)?;
    if arcs.len() != h.m {
        return Err(ParseError::ArcCountMismatch {
            declared: h.m,
            found: arcs.len(),
        });
    }
    let built = if h.undirected {
        Digraph::undirected(h.n, arcs)
    } else {
        Digraph::directed(h.n, arcs)
    };
    match built {
        Ok(g) => Ok(g.with_weighted_flag(h.weighted)),
        Err(crate::Error::WeightOverflow) => Err(ParseError::WeightOverflow),
        Err(e) => unreachable!("validated input rejected by graph builder: {e}"),
    }
}

/// Canonical text form: header, then arcs sorted by `(u, v)`. Undirected
/// edges are written once with `u < v`.
pub fn serialize_graph(g: &Digraph) -> String {
    let mut out = String::new();
    let kind = if g.is_undirected() { "ug" } else { "dg" };
    let flag = if g.is_weighted() { " w" } else { "" };
    let _ = writeln!(out, "p {kind} {} {}{flag}", g.n(), g.m());
    let mut write_arc = |u: usize, v: usize, w: Weight| {
        if g.is_weighted() {
            let _ = writeln!(out, "a {} {} {w}", u + 1, v + 1);
        } else {
            let _ = writeln!(out, "a {} {}", u + 1, v + 1);
        }
    };
    if g.is_undirected() {
        for (u, v, w) in g.edges() {
            write_arc(u, v, w);
        }
    } else {
        for a in g.arcs() {
            write_arc(a.tail, a.head, a.weight);
        }
    }
    out
}
