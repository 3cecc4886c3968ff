//! Text formats. Vertices are 1-indexed on disk and 0-indexed in memory;
//! the conversion happens only here.
//!
//! Graph:    `p edge <n> <m>` then `m` lines `e <u> <v>`.
//! Coloring: `p kcol <n> <m_red>` then the red edges as `e` lines.
//! Witness:  `w <clique|independent-set> <size>` then one `v <i>` per vertex.
//! Lines starting with `c` are comments. A witness comment `c case <label>`
//! carries its provenance.

use std::collections::HashSet;
use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use crate::graph_core::{Graph, HomogeneousWitness, TwoColoring, WitnessCase, WitnessKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for FormatError {}

fn err_at(line: usize, message: impl Into<String>) -> FormatError {
    FormatError { line: Some(line), message: message.into() }
}

fn err(message: impl Into<String>) -> FormatError {
    FormatError { line: None, message: message.into() }
}

/// A parsed graph or coloring file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Coloring(TwoColoring),
}

fn write_edges(out: &mut String, tag: &str, g: &Graph) {
    writeln!(out, "p {tag} {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
}

pub fn graph_to_string(g: &Graph) -> String {
    let mut out = String::new();
    write_edges(&mut out, "edge", g);
    out
}

pub fn coloring_to_string(c: &TwoColoring) -> String {
    let mut out = String::new();
    write_edges(&mut out, "kcol", c.red());
    out
}

pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let mut header: Option<(bool, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(err_at(line_no, "second problem line"));
                }
                if fields.len() != 4 {
                    return Err(err_at(line_no, "expected `p <edge|kcol> <n> <m>`"));
                }
                let coloring = match fields[1] {
                    "edge" => false,
                    "kcol" => true,
                    other => return Err(err_at(line_no, format!("unknown problem type {other:?}"))),
                };
                let n = parse_num(fields[2], line_no)?;
                let m = parse_num(fields[3], line_no)?;
                header = Some((coloring, n, m));
            }
            "e" => {
                let Some((_, n, _)) = header else {
                    return Err(err_at(line_no, "edge line before the problem line"));
                };
                if fields.len() != 3 {
                    return Err(err_at(line_no, "expected `e <u> <v>`"));
                }
                let u = parse_num(fields[1], line_no)?;
                let v = parse_num(fields[2], line_no)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err_at(line_no, format!("endpoint outside 1..={n}")));
                }
                if u == v {
                    return Err(err_at(line_no, format!("self-loop at vertex {u}")));
                }
                let key = (u.min(v) - 1, u.max(v) - 1);
                if !seen.insert(key) {
                    return Err(err_at(line_no, format!("duplicate edge {} {}", key.0 + 1, key.1 + 1)));
                }
                edges.push(key);
            }
            other => return Err(err_at(line_no, format!("unknown line type {other:?}"))),
        }
    }
    let (coloring, n, m) = header.ok_or_else(|| err("missing problem line"))?;
    if edges.len() != m {
        return Err(err(format!("header declares {m} edges but {} were listed", edges.len())));
    }
    let g = Graph::from_edges(n, &edges).map_err(|e| err(e.to_string()))?;
    Ok(if coloring {
        Instance::Coloring(TwoColoring::from_red_graph(g))
    } else {
        Instance::Graph(g)
    })
}

fn parse_num(s: &str, line_no: usize) -> Result<usize, FormatError> {
    s.parse::<usize>()
        .map_err(|_| err_at(line_no, format!("expected a non-negative integer, got {s:?}")))
}

fn read_text(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|e| err(format!("{}: {e}", path.display())))
}

pub fn read_instance(path: &Path) -> Result<Instance, FormatError> {
    parse_instance(&read_text(path)?)
}

pub fn read_graph(path: &Path) -> Result<Graph, FormatError> {
    match read_instance(path)? {
        Instance::Graph(g) => Ok(g),
        Instance::Coloring(_) => Err(err(format!("{}: expected a graph, found a coloring", path.display()))),
    }
}

pub fn read_coloring(path: &Path) -> Result<TwoColoring, FormatError> {
    match read_instance(path)? {
        Instance::Coloring(c) => Ok(c),
        Instance::Graph(_) => Err(err(format!("{}: expected a coloring, found a graph", path.display()))),
    }
}

pub fn write_graph(g: &Graph, path: &Path) -> Result<(), FormatError> {
    write_text(path, &graph_to_string(g))
}

pub fn write_coloring(c: &TwoColoring, path: &Path) -> Result<(), FormatError> {
    write_text(path, &coloring_to_string(c))
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<(), FormatError> {
    fs::write(path, text).map_err(|e| err(format!("{}: {e}", path.display())))
}

pub fn witness_to_string(w: &HomogeneousWitness) -> String {
    let mut out = String::new();
    if w.case_used != WitnessCase::Trivial {
        writeln!(out, "c case {}", w.case_used).unwrap();
    }
    writeln!(out, "w {} {}", w.kind, w.size()).unwrap();
    for v in &w.vertices {
        writeln!(out, "v {}", v + 1).unwrap();
    }
    out
}

pub fn parse_witness(text: &str) -> Result<HomogeneousWitness, FormatError> {
    let mut case_used = WitnessCase::Trivial;
    let mut head: Option<(WitnessKind, usize)> = None;
    let mut vertices = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "c" => {
                if fields.len() == 3 && fields[1] == "case" {
                    case_used = match fields[2] {
                        "case1" => WitnessCase::Case1,
                        "case2" => WitnessCase::Case2,
                        "case3" => WitnessCase::Case3,
                        "trivial" => WitnessCase::Trivial,
                        other => return Err(err_at(line_no, format!("unknown case label {other:?}"))),
                    };
                }
            }
            "w" => {
                if head.is_some() {
                    return Err(err_at(line_no, "second witness header"));
                }
                if fields.len() != 3 {
                    return Err(err_at(line_no, "expected `w <kind> <size>`"));
                }
                let kind = match fields[1] {
                    "clique" => WitnessKind::Clique,
                    "independent-set" => WitnessKind::IndependentSet,
                    other => return Err(err_at(line_no, format!("unknown witness kind {other:?}"))),
                };
                head = Some((kind, parse_num(fields[2], line_no)?));
            }
            "v" => {
                if head.is_none() {
                    return Err(err_at(line_no, "vertex line before the witness header"));
                }
                if fields.len() != 2 {
                    return Err(err_at(line_no, "expected `v <index>`"));
                }
                let v = parse_num(fields[1], line_no)?;
                if v == 0 {
                    return Err(err_at(line_no, "vertex indices start at 1"));
                }
                if !seen.insert(v) {
                    return Err(err_at(line_no, format!("duplicate vertex {v}")));
                }
                vertices.push(v - 1);
            }
            other => return Err(err_at(line_no, format!("unknown line type {other:?}"))),
        }
    }
    let (kind, size) = head.ok_or_else(|| err("missing witness header"))?;
    if size != vertices.len() {
        return Err(err(format!("header declares {size} vertices but {} were listed", vertices.len())));
    }
    Ok(HomogeneousWitness::new(kind, vertices, case_used))
}

pub fn read_witness(path: &Path) -> Result<HomogeneousWitness, FormatError> {
    parse_witness(&read_text(path)?)
}

pub fn write_witness(w: &HomogeneousWitness, path: &Path) -> Result<(), FormatError> {
    write_text(path, &witness_to_string(w))
}
