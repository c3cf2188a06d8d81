//! Plain-text edge-list files.
//!
//! Line 1 is `n m directed` (directed is `0` or `1`); each of the next m
//! lines is `u v w`. Undirected graphs list every edge once. Lines starting
//! with `#` and blank lines are skipped. Weights are written with `{}`
//! (shortest round-tripping representation), so save → load reproduces the
//! graph bit for bit.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use kspath_core::{Graph, GraphError};

#[derive(Debug)]
pub enum EdgeListError {
    Io(io::Error),
    /// First line absent or not three whitespace-separated fields.
    BadHeader { line: String },
    /// A field failed to parse as its declared type.
    BadField { line_no: usize, line: String },
    /// Header promised `expected` edges, file held `found`.
    EdgeCountMismatch { expected: usize, found: usize },
    /// Parsed cleanly but violates a graph invariant.
    BadGraph(GraphError),
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeListError::Io(e) => write!(f, "i/o error: {e}"),
            EdgeListError::BadHeader { line } => {
                write!(f, "bad header {line:?}: expected `n m directed`")
            }
            EdgeListError::BadField { line_no, line } => {
                write!(f, "line {line_no}: cannot parse {line:?}")
            }
            EdgeListError::EdgeCountMismatch { expected, found } => {
                write!(f, "header declares {expected} edges, file has {found}")
            }
            EdgeListError::BadGraph(e) => write!(f, "invalid graph: {e}"),
        }
    }
}

impl std::error::Error for EdgeListError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            EdgeListError::Io(e) => Some(e),
            EdgeListError::BadGraph(e) => Some(e),
            _ => None,
        }
    }
}

impl From<io::Error> for EdgeListError {
    fn from(e: io::Error) -> Self {
        EdgeListError::Io(e)
    }
}

impl From<GraphError> for EdgeListError {
    fn from(e: GraphError) -> Self {
        EdgeListError::BadGraph(e)
    }
}

/// Serializes `g` in deterministic order: header, then edges ascending by
/// (u, v). Extra `comments` become leading `#` lines.
pub fn write_graph<W: Write>(g: &Graph, mut out: W, comments: &[String]) -> io::Result<()> {
    for c in comments {
        writeln!(out, "# {c}")?;
    }
    writeln!(
        out,
        "{} {} {}",
        g.vertex_count(),
        g.edge_count(),
        if g.is_directed() { 1 } else { 0 }
    )?;
    for (u, v, w) in g.edges() {
        writeln!(out, "{u} {v} {w}")?;
    }
    Ok(())
}

pub fn save_graph(g: &Graph, path: &Path) -> Result<(), EdgeListError> {
    let mut buf = Vec::new();
    write_graph(g, &mut buf, &[])?;
    fs::write(path, buf)?;
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<Graph, EdgeListError> {
    let mut records = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (_, header) = records.next().ok_or(EdgeListError::BadHeader {
        line: String::new(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(EdgeListError::BadHeader { line: header.into() });
    }
    let bad_header = || EdgeListError::BadHeader { line: header.into() };
    let n: usize = fields[0].parse().map_err(|_| bad_header())?;
    let m: usize = fields[1].parse().map_err(|_| bad_header())?;
    let directed = match fields[2] {
        "0" => false,
        "1" => true,
        _ => return Err(bad_header()),
    };

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in records {
        if edges.len() == m {
            // One record too many is as wrong as one too few.
            return Err(EdgeListError::EdgeCountMismatch {
                expected: m,
                found: m + 1,
            });
        }
        let bad = || EdgeListError::BadField {
            line_no,
            line: line.into(),
        };
        let mut it = line.split_whitespace();
        let u: u32 = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let v: u32 = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let w: f64 = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if it.next().is_some() {
            return Err(bad());
        }
        edges.push((u, v, w));
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::build(n, directed, &edges)?)
}

pub fn load_graph(path: &Path) -> Result<Graph, EdgeListError> {
    let text = fs::read_to_string(path)?;
    parse_graph(&text)
}
