//! Text formats: edge lists, certificates, torus drawings, signed graphs and
//! DIMACS CNF with a clause-cycle line.
//!
//! Line formats ignore blank lines and `#` comments; CNF files use `c` for
//! comments as usual. Every `emit_*` output parses back to an equal value.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{CopyId, SplitCertificate, SplitEdge};
use crate::graph::Graph;
use crate::hardness::{Literal, SatInstance};
use crate::splitters::{SignedGraph, SplitterError, TorusDrawing};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing `{0}` line")]
    MissingHeader(&'static str),
    #[error("{0}")]
    Json(String),
    #[error("field `{field}`: {message}")]
    Field { field: &'static str, message: String },
    #[error(transparent)]
    Annotation(#[from] SplitterError),
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line { line, message: message.into() }
}

/// Non-blank, non-comment lines with 1-based line numbers, split into words.
fn content_lines<'a>(text: &'a str, comment: &'a str) -> impl Iterator<Item = (usize, Vec<&'a str>)> + 'a {
    text.lines().enumerate().filter_map(move |(i, l)| {
        let words: Vec<&str> = l.split_whitespace().collect();
        match words.first() {
            None => None,
            Some(w) if w.starts_with('#') || *w == comment => None,
            Some(_) => Some((i + 1, words)),
        }
    })
}

fn num<T: std::str::FromStr>(line: usize, word: &str, what: &str) -> Result<T, ParseError> {
    word.parse().map_err(|_| at(line, format!("expected {what}, found `{word}`")))
}

/// Collects `(u, v)` edges for a graph on `n` vertices, reporting the line of
/// the first bad edge.
struct EdgeCollector {
    n: usize,
    seen: std::collections::BTreeSet<(usize, usize)>,
}

impl EdgeCollector {
    fn new(n: usize) -> Self {
        EdgeCollector { n, seen: Default::default() }
    }

    fn add(&mut self, line: usize, u: usize, v: usize) -> Result<(), ParseError> {
        if u >= self.n || v >= self.n {
            return Err(at(line, format!("edge ({u}, {v}) has a label outside 0..{}", self.n)));
        }
        if u == v {
            return Err(at(line, format!("self-loop at {u}")));
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(at(line, format!("duplicate edge ({u}, {v})")));
        }
        Ok(())
    }

    fn finish(self) -> Graph {
        Graph::new(self.n, self.seen).expect("edges checked while parsing")
    }
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>) -> Result<usize, ParseError> {
    let (line, words) = lines.next().ok_or(ParseError::MissingHeader("n <vertex-count>"))?;
    match words.as_slice() {
        ["n", count] => num(line, count, "vertex count"),
        _ => Err(at(line, "expected `n <vertex-count>`")),
    }
}

/// Parses `n N` followed by `u v` lines.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text, "#");
    let n = header(&mut lines)?;
    let mut edges = EdgeCollector::new(n);
    for (line, words) in lines {
        let [u, v] = words.as_slice() else {
            return Err(at(line, "expected `u v`"));
        };
        edges.add(line, num(line, u, "vertex")?, num(line, v, "vertex")?)?;
    }
    Ok(edges.finish())
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BaseFile {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateFile {
    base: BaseFile,
    copies: Vec<usize>,
    edges: Vec<[[usize; 2]; 2]>,
}

/// Parses a certificate from JSON.
///
/// Only the shape is checked here, plus simplicity of the base graph; copy
/// ranges, coverage and planarity are left to the verifier so that it can
/// report them.
pub fn parse_certificate(text: &str) -> Result<SplitCertificate, ParseError> {
    let file: CertificateFile = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let base = Graph::new(file.base.n, file.base.edges.iter().map(|&[u, v]| (u, v)))
        .map_err(|e| ParseError::Field { field: "base.edges", message: e.to_string() })?;
    let edges = file
        .edges
        .iter()
        .map(|&[[u, i], [v, j]]| SplitEdge(CopyId::new(u, i), CopyId::new(v, j)))
        .collect();
    Ok(SplitCertificate::new(base, file.copies, edges))
}

fn join<T>(items: impl IntoIterator<Item = T>, f: impl Fn(T) -> String) -> String {
    items.into_iter().map(f).collect::<Vec<_>>().join(", ")
}

pub fn emit_certificate(cert: &SplitCertificate) -> String {
    let base_edges = join(cert.base.edges(), |&(u, v)| format!("[{u}, {v}]"));
    let copies = join(&cert.copies, |k| k.to_string());
    let edges = join(&cert.edges, |SplitEdge(a, b)| format!("[[{}, {}], [{}, {}]]", a.vertex, a.index, b.vertex, b.index));
    format!(
        "{{\n  \"base\": {{\n    \"n\": {},\n    \"edges\": [{base_edges}]\n  }},\n  \"copies\": [{copies}],\n  \"edges\": [{edges}]\n}}\n",
        cert.base.vertex_count()
    )
}

/// Parses `n N`, edge lines `u v wx wy` and optional `pos u x y` lines.
pub fn parse_torus(text: &str) -> Result<TorusDrawing, ParseError> {
    let mut lines = content_lines(text, "#");
    let n = header(&mut lines)?;
    let mut edges = EdgeCollector::new(n);
    let mut wraps = Vec::new();
    let mut pos: Vec<Option<(f64, f64)>> = vec![None; n];
    let mut any_pos = false;
    for (line, words) in lines {
        match words.as_slice() {
            ["pos", v, x, y] => {
                let v: usize = num(line, v, "vertex")?;
                if v >= n {
                    return Err(at(line, format!("vertex {v} outside 0..{n}")));
                }
                if pos[v].replace((num(line, x, "coordinate")?, num(line, y, "coordinate")?)).is_some() {
                    return Err(at(line, format!("second position for vertex {v}")));
                }
                any_pos = true;
            }
            [u, v, wx, wy] => {
                let (u, v): (usize, usize) = (num(line, u, "vertex")?, num(line, v, "vertex")?);
                edges.add(line, u, v)?;
                let (wx, wy): (i8, i8) = (num(line, wx, "wrap")?, num(line, wy, "wrap")?);
                if wx.abs() > 1 || wy.abs() > 1 {
                    return Err(at(line, format!("wrap ({wx}, {wy}) outside -1..=1")));
                }
                wraps.push(((u, v), (wx, wy)));
            }
            _ => return Err(at(line, "expected `u v wx wy` or `pos u x y`")),
        }
    }
    let coords = if any_pos {
        let missing = pos.iter().position(Option::is_none);
        if let Some(v) = missing {
            return Err(ParseError::Field { field: "pos", message: format!("vertex {v} has no position") });
        }
        Some(pos.into_iter().flatten().collect())
    } else {
        None
    };
    Ok(TorusDrawing::new(edges.finish(), wraps, coords)?)
}

pub fn emit_torus(d: &TorusDrawing) -> String {
    let g = d.graph();
    let mut out = format!("n {}\n", g.vertex_count());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let (wx, wy) = d.wrap(i);
        writeln!(out, "{u} {v} {wx} {wy}").unwrap();
    }
    for (v, (x, y)) in d.coords().unwrap_or_default().iter().enumerate() {
        writeln!(out, "pos {v} {x} {y}").unwrap();
    }
    out
}

/// Parses `n N` and edge lines `u v s` with `s` one of `+`, `-`.
pub fn parse_signed(text: &str) -> Result<SignedGraph, ParseError> {
    let mut lines = content_lines(text, "#");
    let n = header(&mut lines)?;
    let mut edges = EdgeCollector::new(n);
    let mut signs = Vec::new();
    for (line, words) in lines {
        let [u, v, s] = words.as_slice() else {
            return Err(at(line, "expected `u v +` or `u v -`"));
        };
        let (u, v): (usize, usize) = (num(line, u, "vertex")?, num(line, v, "vertex")?);
        edges.add(line, u, v)?;
        let sign = match *s {
            "+" => 1,
            "-" => -1,
            other => return Err(at(line, format!("sign must be + or -, found `{other}`"))),
        };
        signs.push(((u, v), sign));
    }
    Ok(SignedGraph::new(edges.finish(), signs)?)
}

pub fn emit_signed(sg: &SignedGraph) -> String {
    let g = sg.graph();
    let mut out = format!("n {}\n", g.vertex_count());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(out, "{u} {v} {}", if sg.sign(i) > 0 { '+' } else { '-' }).unwrap();
    }
    out
}

/// Parses DIMACS CNF with exactly three literals per clause and a required
/// `cy j1 j2 ...` line giving the clause cycle (1-based clause numbers).
///
/// Repeated variables and non-permutation cycles parse fine; they are
/// reported by [`crate::hardness::validate_instance`].
pub fn parse_sat(text: &str) -> Result<SatInstance, ParseError> {
    let mut lines = content_lines(text, "c");
    let (line, words) = lines.next().ok_or(ParseError::MissingHeader("p cnf <vars> <clauses>"))?;
    let (num_vars, num_clauses): (usize, usize) = match words.as_slice() {
        ["p", "cnf", v, c] => (num(line, v, "variable count")?, num(line, c, "clause count")?),
        _ => return Err(at(line, "expected `p cnf <vars> <clauses>`")),
    };
    let mut clauses = Vec::with_capacity(num_clauses);
    let mut cycle = None;
    for (line, words) in lines {
        if words[0] == "cy" {
            if cycle.is_some() {
                return Err(at(line, "second `cy` line"));
            }
            let order = words[1..]
                .iter()
                .map(|w| match num::<usize>(line, w, "clause number")? {
                    0 => Err(at(line, "clause numbers start at 1")),
                    j => Ok(j - 1),
                })
                .collect::<Result<Vec<_>, _>>()?;
            cycle = Some(order);
            continue;
        }
        let [a, b, c, zero] = words.as_slice() else {
            return Err(at(line, "expected three literals followed by 0"));
        };
        if *zero != "0" {
            return Err(at(line, "clause must end with 0"));
        }
        let mut lits = [Literal::pos(0); 3];
        for (slot, w) in lits.iter_mut().zip([a, b, c]) {
            let x: i64 = num(line, w, "literal")?;
            *slot = Literal::from_dimacs(x).ok_or_else(|| at(line, "literal 0 inside a clause"))?;
            if slot.var >= num_vars {
                return Err(at(line, format!("literal {x} exceeds the {num_vars} declared variables")));
            }
        }
        clauses.push(lits);
    }
    if clauses.len() != num_clauses {
        return Err(ParseError::Field {
            field: "p cnf",
            message: format!("header declares {num_clauses} clauses, file has {}", clauses.len()),
        });
    }
    let cycle = cycle.ok_or(ParseError::MissingHeader("cy <clause-order>"))?;
    Ok(SatInstance { num_vars, clauses, cycle })
}

pub fn emit_sat(inst: &SatInstance) -> String {
    let mut out = format!("p cnf {} {}\n", inst.num_vars, inst.clauses.len());
    for clause in &inst.clauses {
        let [a, b, c] = clause.map(Literal::to_dimacs);
        writeln!(out, "{a} {b} {c} 0").unwrap();
    }
    let order: Vec<String> = inst.cycle.iter().map(|j| (j + 1).to_string()).collect();
    writeln!(out, "cy {}", order.join(" ")).unwrap();
    out
}
