//! Line-oriented text formats.
//!
//! Graph file:
//!
//! ```text
//! # comment
//! graph 2 3
//! edge 0 0 1
//! edge 1 0 1
//! edge 2 0 1
//! rot 0 0.0 1.0 2.0
//! rot 1 0.1 2.1 1.1
//! name 0 v(0)
//! ```
//!
//! `rot` lines give the rotation at a vertex as dart tokens `edge.side`;
//! they appear for every vertex or for none. `name` lines likewise. A walk
//! file is `walk closed k` followed by `k` dart tokens.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::embedding::{Embedding, EmbeddingError};
use crate::gadgets::NodeName;
use crate::graph::{Dart, Graph, GraphError};
use crate::walk::{Walk, WalkError};

/// Largest vertex or edge count a file may declare.
pub const MAX_ITEMS: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `graph <n> <m>` header")]
    MissingHeader,
    #[error("header appears twice")]
    DuplicateHeader,
    #[error("unknown directive {0:?}")]
    UnknownDirective(String),
    #[error("expected {expected} fields, found {found}")]
    FieldCount { expected: usize, found: usize },
    #[error("invalid number {0:?}")]
    BadNumber(String),
    #[error("invalid dart token {0:?}")]
    BadDart(String),
    #[error("count {0} exceeds the supported maximum")]
    TooLarge(usize),
    #[error("edge id {id} out of range")]
    EdgeIdOutOfRange { id: usize },
    #[error("edge {id} defined twice")]
    DuplicateEdge { id: usize },
    #[error("edge {id} missing")]
    MissingEdge { id: usize },
    #[error("vertex {vertex} out of range")]
    VertexOutOfRange { vertex: usize },
    #[error("vertex {vertex} has two {what} lines")]
    Duplicate { vertex: usize, what: &'static str },
    #[error("{what} lines missing for vertex {vertex}")]
    Missing { vertex: usize, what: &'static str },
    #[error("rotation of vertex {vertex} does not list exactly its darts")]
    BadRotation { vertex: usize },
    #[error("invalid vertex name {0:?}")]
    BadName(String),
    #[error("vertex name {0} used twice")]
    DuplicateName(String),
    #[error("expected `walk closed <k>` header")]
    BadWalkHeader,
    #[error("walk declares {expected} darts, found {found}")]
    WalkLength { expected: usize, found: usize },
    #[error("embedding belongs to a different graph")]
    ForeignEmbedding,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Walk(#[from] WalkError),
}

/// A parse failure; `line` is 1-based, 0 for the file as a whole.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.kind)
        } else {
            write!(f, "line {}: {}", self.line, self.kind)
        }
    }
}

fn at(line: usize) -> impl Fn(ParseErrorKind) -> ParseError {
    move |kind| ParseError { line, kind }
}

#[derive(Debug, Clone)]
pub struct GraphFile {
    pub graph: Graph,
    pub embedding: Option<Embedding>,
    pub names: Option<Vec<NodeName>>,
}

fn number(s: &str) -> Result<usize, ParseErrorKind> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseErrorKind::BadNumber(s.to_string()));
    }
    s.parse().map_err(|_| ParseErrorKind::BadNumber(s.to_string()))
}

fn count(s: &str) -> Result<usize, ParseErrorKind> {
    let n = number(s)?;
    if n > MAX_ITEMS {
        return Err(ParseErrorKind::TooLarge(n));
    }
    Ok(n)
}

/// Parses a dart token `edge.side`.
pub fn parse_dart(s: &str) -> Result<Dart, ParseErrorKind> {
    let bad = || ParseErrorKind::BadDart(s.to_string());
    let (e, side) = s.split_once('.').ok_or_else(bad)?;
    let e = number(e).map_err(|_| bad())?;
    let side = match side {
        "0" => 0,
        "1" => 1,
        _ => return Err(bad()),
    };
    if e > MAX_ITEMS {
        return Err(bad());
    }
    Ok(Dart::new(e, side))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#')).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn fields(line: usize, f: &[&str], expected: usize) -> Result<(), ParseError> {
    if f.len() == expected {
        Ok(())
    } else {
        Err(at(line)(ParseErrorKind::FieldCount { expected, found: f.len() }))
    }
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Option<(usize, usize)>> = Vec::new();
    let mut rots: Vec<Option<(usize, Vec<Dart>)>> = Vec::new();
    let mut names: Vec<Option<NodeName>> = Vec::new();
    let (mut any_rot, mut any_name) = (false, false);
    for (line, f) in content_lines(text) {
        let err = at(line);
        if f[0] == "graph" {
            if header.is_some() {
                return Err(err(ParseErrorKind::DuplicateHeader));
            }
            fields(line, &f, 3)?;
            let n = count(f[1]).map_err(&err)?;
            let m = count(f[2]).map_err(&err)?;
            header = Some((n, m));
            edges = vec![None; m];
            rots = vec![None; n];
            names = vec![None; n];
            continue;
        }
        let Some((n, m)) = header else {
            return Err(err(ParseErrorKind::MissingHeader));
        };
        match f[0] {
            "edge" => {
                fields(line, &f, 4)?;
                let id = number(f[1]).map_err(&err)?;
                if id >= m {
                    return Err(err(ParseErrorKind::EdgeIdOutOfRange { id }));
                }
                let u = number(f[2]).map_err(&err)?;
                let v = number(f[3]).map_err(&err)?;
                for x in [u, v] {
                    if x >= n {
                        return Err(err(ParseErrorKind::VertexOutOfRange { vertex: x }));
                    }
                }
                if edges[id].replace((u, v)).is_some() {
                    return Err(err(ParseErrorKind::DuplicateEdge { id }));
                }
            }
            "rot" => {
                if f.len() < 2 {
                    return Err(err(ParseErrorKind::FieldCount { expected: 2, found: f.len() }));
                }
                let v = number(f[1]).map_err(&err)?;
                if v >= n {
                    return Err(err(ParseErrorKind::VertexOutOfRange { vertex: v }));
                }
                let darts = f[2..].iter().map(|t| parse_dart(t)).collect::<Result<Vec<_>, _>>().map_err(&err)?;
                if rots[v].replace((line, darts)).is_some() {
                    return Err(err(ParseErrorKind::Duplicate { vertex: v, what: "rot" }));
                }
                any_rot = true;
            }
            "name" => {
                fields(line, &f, 3)?;
                let v = number(f[1]).map_err(&err)?;
                if v >= n {
                    return Err(err(ParseErrorKind::VertexOutOfRange { vertex: v }));
                }
                let name: NodeName = f[2].parse().map_err(|_| err(ParseErrorKind::BadName(f[2].to_string())))?;
                if names[v].replace(name).is_some() {
                    return Err(err(ParseErrorKind::Duplicate { vertex: v, what: "name" }));
                }
                any_name = true;
            }
            other => return Err(err(ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }
    let whole = at(0);
    let (n, _) = header.ok_or_else(|| whole(ParseErrorKind::MissingHeader))?;
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(id, e)| e.ok_or_else(|| whole(ParseErrorKind::MissingEdge { id })))
        .collect::<Result<Vec<_>, _>>()?;
    let graph = Graph::new(n, edges).map_err(|e| whole(e.into()))?;
    let embedding = if any_rot {
        let mut rotation = Vec::with_capacity(n);
        for (v, r) in rots.into_iter().enumerate() {
            let (line, darts) = r.ok_or_else(|| whole(ParseErrorKind::Missing { vertex: v, what: "rot" }))?;
            let mut have = darts.clone();
            have.sort();
            let mut want = graph.incident(v).to_vec();
            want.sort();
            if have != want {
                return Err(at(line)(ParseErrorKind::BadRotation { vertex: v }));
            }
            rotation.push(darts);
        }
        Some(Embedding::new(graph.clone(), rotation).map_err(|e| whole(e.into()))?)
    } else {
        None
    };
    let names = if any_name {
        let names = names
            .into_iter()
            .enumerate()
            .map(|(v, x)| x.ok_or_else(|| whole(ParseErrorKind::Missing { vertex: v, what: "name" })))
            .collect::<Result<Vec<_>, _>>()?;
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = names.iter().find(|x| !seen.insert(**x)) {
            return Err(whole(ParseErrorKind::DuplicateName(dup.to_string())));
        }
        Some(names)
    } else {
        None
    };
    Ok(GraphFile {
        graph,
        embedding,
        names,
    })
}

/// Canonical text: edges by id, each rotation starting at its smallest
/// dart, names last.
pub fn serialize_graph(g: &Graph, emb: Option<&Embedding>, names: Option<&[NodeName]>) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (id, (u, v)) in g.edges().iter().enumerate() {
        writeln!(out, "edge {id} {u} {v}").unwrap();
    }
    if let Some(emb) = emb {
        for v in 0..g.vertex_count() {
            let rot = emb.rotation(v);
            let start = (0..rot.len()).min_by_key(|&i| rot[i]).unwrap_or(0);
            write!(out, "rot {v}").unwrap();
            for k in 0..rot.len() {
                write!(out, " {}", rot[(start + k) % rot.len()]).unwrap();
            }
            out.push('\n');
        }
    }
    if let Some(names) = names {
        for (v, name) in names.iter().enumerate() {
            writeln!(out, "name {v} {name}").unwrap();
        }
    }
    out
}

/// Parses a walk file into its dart sequence, without checking it against
/// a graph.
pub fn parse_walk_darts(text: &str) -> Result<Vec<Dart>, ParseError> {
    let mut lines = content_lines(text);
    let Some((line, f)) = lines.next() else {
        return Err(at(0)(ParseErrorKind::BadWalkHeader));
    };
    if f.len() != 3 || f[0] != "walk" || f[1] != "closed" {
        return Err(at(line)(ParseErrorKind::BadWalkHeader));
    }
    let k = count(f[2]).map_err(at(line))?;
    let mut darts = Vec::with_capacity(k);
    for (line, f) in lines {
        for t in f {
            darts.push(parse_dart(t).map_err(at(line))?);
        }
    }
    if darts.len() != k {
        return Err(at(0)(ParseErrorKind::WalkLength {
            expected: k,
            found: darts.len(),
        }));
    }
    Ok(darts)
}

pub fn parse_walk(text: &str, g: &Graph) -> Result<Walk, ParseError> {
    let darts = parse_walk_darts(text)?;
    Walk::new(g, darts).map_err(|e| at(0)(e.into()))
}

/// `walk closed k`, then the darts, twelve per line.
pub fn serialize_walk(w: &Walk) -> String {
    let mut out = format!("walk closed {}\n", w.len());
    for chunk in w.darts().chunks(12) {
        let line: Vec<String> = chunk.iter().map(|d| d.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Undirected DOT text. With a walk, solo edges are drawn plain, double
/// edges bold red and unused edges dashed; with an embedding the rotations
/// are listed as comments.
pub fn export_dot(
    g: &Graph,
    names: Option<&[NodeName]>,
    walk: Option<&Walk>,
    emb: Option<&Embedding>,
) -> Result<String, ParseErrorKind> {
    let usage = match walk {
        Some(w) => Some(Walk::new(g, w.darts().to_vec())?.edge_usage(g)),
        None => None,
    };
    if let Some(emb) = emb {
        if emb.graph() != g {
            return Err(ParseErrorKind::ForeignEmbedding);
        }
    }
    let mut out = String::from("graph G {\n");
    if let Some(emb) = emb {
        for v in 0..g.vertex_count() {
            let rot: Vec<String> = emb.rotation(v).iter().map(|d| d.to_string()).collect();
            writeln!(out, "  // rot {v}: {}", rot.join(" ")).unwrap();
        }
    }
    for v in 0..g.vertex_count() {
        match names {
            Some(names) => writeln!(out, "  {v} [label=\"{}\"];", names[v]).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let style = match usage.as_ref().map(|u| u[id]) {
            None => String::new(),
            Some(0) => ", style=dashed".into(),
            Some(1) => ", class=solo".into(),
            Some(k) => format!(", class=double, color=red, penwidth=2.5, xlabel=\"x{k}\""),
        };
        writeln!(out, "  {u} -- {v} [id=\"e{id}\"{style}];").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
