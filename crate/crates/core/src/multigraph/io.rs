//! MGF text format and DOT export.
//!
//! ```text
//! mgf 3
//! # label 0 hub x
//! # label 1 copy 1 1
//! 0 1 2
//! 1 2 1
//! ```
//!
//! Line 1 is the header. `# label <id> <hub x|y|z | pair i j | copy k i>`
//! lines attach labels; other `#` lines and blank lines are ignored. Each
//! remaining line is a bundle `<u> <v> <multiplicity>`. Every unordered pair
//! appears at most once.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use thiserror::Error;

use super::{GraphError, LabelError, Multigraph, VertexId};

/// Upper bound on the vertex count accepted by the parser.
pub const MAX_VERTICES: usize = 1 << 20;
/// Upper bound on a single bundle multiplicity accepted by the parser.
pub const MAX_MULTIPLICITY: usize = u32::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    MalformedHeader(String),
    TooManyVertices(usize),
    MalformedLine(String),
    Loop(VertexId),
    DuplicatePair(VertexId, VertexId),
    OutOfRange { v: VertexId, n: usize },
    ZeroMultiplicity,
    MultiplicityTooLarge(usize),
    BadLabel(LabelError),
    DuplicateLabel(VertexId),
    Graph(GraphError),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MissingHeader => f.write_str("missing `mgf <n>` header"),
            ParseErrorKind::MalformedHeader(s) => write!(f, "malformed header `{s}`"),
            ParseErrorKind::TooManyVertices(n) => {
                write!(f, "{n} vertices exceeds the limit of {MAX_VERTICES}")
            }
            ParseErrorKind::MalformedLine(s) => write!(f, "malformed line `{s}`"),
            ParseErrorKind::Loop(v) => write!(f, "loop at vertex {v}"),
            ParseErrorKind::DuplicatePair(u, v) => write!(f, "pair {{{u},{v}}} listed twice"),
            ParseErrorKind::OutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for {n} vertices")
            }
            ParseErrorKind::ZeroMultiplicity => f.write_str("multiplicity must be at least 1"),
            ParseErrorKind::MultiplicityTooLarge(m) => write!(f, "multiplicity {m} too large"),
            ParseErrorKind::BadLabel(e) => write!(f, "{e}"),
            ParseErrorKind::DuplicateLabel(v) => write!(f, "vertex {v} labeled twice"),
            ParseErrorKind::Graph(e) => write!(f, "{e}"),
        }
    }
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse_mgf(text: &str) -> Result<Multigraph, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));

    let (_, header) = lines
        .next()
        .filter(|(_, l)| !l.is_empty())
        .ok_or(err(1, ParseErrorKind::MissingHeader))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["mgf", count] => count
            .parse::<usize>()
            .map_err(|_| err(1, ParseErrorKind::MalformedHeader(header.to_string())))?,
        _ => return Err(err(1, ParseErrorKind::MalformedHeader(header.to_string()))),
    };
    if n > MAX_VERTICES {
        return Err(err(1, ParseErrorKind::TooManyVertices(n)));
    }

    let mut g = Multigraph::new(n);
    let mut labeled = vec![false; n];
    let mut seen_pairs = BTreeSet::new();
    let in_range = |line: usize, v: VertexId| {
        if v < n {
            Ok(v)
        } else {
            Err(err(line, ParseErrorKind::OutOfRange { v, n }))
        }
    };

    for (no, line) in lines {
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let mut tokens = rest.split_whitespace();
            if tokens.next() != Some("label") {
                continue;
            }
            let malformed = || err(no, ParseErrorKind::MalformedLine(line.to_string()));
            let id = tokens
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(malformed)?;
            let id = in_range(no, id)?;
            let body = tokens.collect::<Vec<_>>().join(" ");
            let label = body
                .parse()
                .map_err(|e| err(no, ParseErrorKind::BadLabel(e)))?;
            if labeled[id] {
                return Err(err(no, ParseErrorKind::DuplicateLabel(id)));
            }
            labeled[id] = true;
            g.set_label(id, label)
                .map_err(|e| err(no, ParseErrorKind::Graph(e)))?;
            continue;
        }

        let fields: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| err(no, ParseErrorKind::MalformedLine(line.to_string())))?;
        let [u, v, m] = fields[..] else {
            return Err(err(no, ParseErrorKind::MalformedLine(line.to_string())));
        };
        let (u, v) = (in_range(no, u)?, in_range(no, v)?);
        if u == v {
            return Err(err(no, ParseErrorKind::Loop(u)));
        }
        if m == 0 {
            return Err(err(no, ParseErrorKind::ZeroMultiplicity));
        }
        if m > MAX_MULTIPLICITY {
            return Err(err(no, ParseErrorKind::MultiplicityTooLarge(m)));
        }
        let key = (u.min(v), u.max(v));
        if !seen_pairs.insert(key) {
            return Err(err(no, ParseErrorKind::DuplicatePair(key.0, key.1)));
        }
        g.add_edges(u, v, m)
            .map_err(|e| err(no, ParseErrorKind::Graph(e)))?;
    }
    Ok(g)
}

/// Canonical MGF text: header, label lines by id, bundles in lexicographic order.
pub fn serialize_mgf(g: &Multigraph) -> String {
    let mut out = format!("mgf {}\n", g.vertex_count());
    for v in g.vertices() {
        if let Some(body) = g.label(v).to_mgf() {
            let _ = writeln!(out, "# label {v} {body}");
        }
    }
    for (u, v, m) in g.bundles() {
        let _ = writeln!(out, "{u} {v} {m}");
    }
    out
}

/// Graphviz rendering with one edge per parallel edge. Vertices in
/// `highlight` are filled.
pub fn export_dot(g: &Multigraph, highlight: &[VertexId]) -> String {
    let marked: BTreeSet<VertexId> = highlight.iter().copied().collect();
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let style = if marked.contains(&v) {
            ", style=filled, fillcolor=lightcoral"
        } else {
            ""
        };
        let _ = writeln!(out, "  {v} [label=\"{}\"{style}];", g.label(v));
    }
    for (u, v, m) in g.bundles() {
        for _ in 0..m {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}
