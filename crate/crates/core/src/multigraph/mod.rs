//! Loop-free multigraphs stored as bundles of parallel edges.
//!
//! Every unordered vertex pair carries a multiplicity (0 when absent). Degrees
//! are multiplicity-weighted; neighborhoods ignore multiplicity.

mod io;
mod label;

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

pub use io::{export_dot, parse_mgf, serialize_mgf, ParseError, ParseErrorKind};
pub use label::{Hub, LabelError, VertexLabel};

/// Dense 0-based vertex index.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0} is not allowed")]
    Loop(VertexId),
    #[error("vertex {v} out of range for graph with {n} vertices")]
    OutOfRange { v: VertexId, n: usize },
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("cannot remove {requested} edges from bundle {{{u},{v}}} of multiplicity {present}")]
    NotEnoughEdges {
        u: VertexId,
        v: VertexId,
        requested: usize,
        present: usize,
    },
    #[error("graph has no vertices")]
    Empty,
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(VertexId),
    #[error("label {label} already assigned to vertex {existing}")]
    DuplicateLabel {
        label: VertexLabel,
        existing: VertexId,
    },
    #[error("plain label {label} does not match vertex {v}")]
    PlainMismatch { label: VertexLabel, v: VertexId },
    #[error(transparent)]
    Label(#[from] LabelError),
}

/// Degrees and parts of a biregular bipartite graph.
///
/// `degrees.0 >= degrees.1`; `parts.0` holds the vertices of degree
/// `degrees.0`. For a regular bipartite graph the part holding the smallest
/// vertex comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biregular {
    pub degrees: (usize, usize),
    pub parts: (Vec<VertexId>, Vec<VertexId>),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multigraph {
    adj: Vec<BTreeMap<VertexId, usize>>,
    labels: Vec<VertexLabel>,
    label_index: BTreeMap<VertexLabel, VertexId>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            adj: vec![BTreeMap::new(); n],
            labels: (0..n).map(VertexLabel::Plain).collect(),
            label_index: BTreeMap::new(),
        }
    }

    /// Builds a graph from `(u, v, multiplicity)` triples.
    pub fn from_bundles<I>(n: usize, bundles: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, usize)>,
    {
        let mut g = Multigraph::new(n);
        for (u, v, m) in bundles {
            g.add_edges(u, v, m)?;
        }
        Ok(g)
    }

    /// Simple graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        Self::from_bundles(n, edges.iter().map(|&(u, v)| (u, v, 1)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.adj.len()
    }

    fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(GraphError::OutOfRange {
                v,
                n: self.adj.len(),
            })
        }
    }

    /// Adds `m` parallel edges between `u` and `v`.
    pub fn add_edges(&mut self, u: VertexId, v: VertexId, m: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if m == 0 {
            return Err(GraphError::ZeroMultiplicity);
        }
        *self.adj[u].entry(v).or_insert(0) += m;
        *self.adj[v].entry(u).or_insert(0) += m;
        Ok(())
    }

    /// Removes `m` parallel edges between `u` and `v`; the bundle disappears at 0.
    pub fn remove_edges(&mut self, u: VertexId, v: VertexId, m: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        let present = self.multiplicity(u, v);
        if m > present {
            return Err(GraphError::NotEnoughEdges {
                u,
                v,
                requested: m,
                present,
            });
        }
        for (a, b) in [(u, v), (v, u)] {
            let slot = self.adj[a]
                .get_mut(&b)
                .expect("bundle present on both ends");
            *slot -= m;
            if *slot == 0 {
                self.adj[a].remove(&b);
            }
        }
        Ok(())
    }

    /// Multiplicity of the bundle `{u, v}`; 0 when absent or out of range.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.adj
            .get(u)
            .and_then(|row| row.get(&v))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// All bundles as `(u, v, multiplicity)` with `u < v`, in lexicographic order.
    pub fn bundles(&self) -> impl Iterator<Item = (VertexId, VertexId, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.range(u + 1..).map(move |(&v, &m)| (u, v, m)))
    }

    /// Multiplicity-weighted edge count.
    pub fn edge_count(&self) -> usize {
        self.bundles().map(|(_, _, m)| m).sum()
    }

    /// Number of bundles, i.e. the edge count of the support graph.
    pub fn support_edge_count(&self) -> usize {
        self.bundles().count()
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.adj[v].values().sum())
    }

    fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(|row| row.values().sum())
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        self.degrees().max().ok_or(GraphError::Empty)
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.degrees().min().ok_or(GraphError::Empty)
    }

    /// Common degree when every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut it = self.degrees();
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Support neighbors in ascending order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].keys().copied()
    }

    pub fn support_neighbors(&self, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        self.check(v)?;
        Ok(self.neighbors(v).collect())
    }

    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        let (small, large) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        Ok(self
            .neighbors(small)
            .filter(|w| self.adj[large].contains_key(w))
            .collect())
    }

    /// First common neighbor of `u` and `v` in ascending order, if any.
    /// Panics if either vertex is out of range.
    pub fn first_common_neighbor(&self, u: VertexId, v: VertexId) -> Option<VertexId> {
        self.neighbors(u).find(|w| self.adj[v].contains_key(w))
    }

    /// Adjacency lists of the support graph, each sorted ascending.
    pub fn support_adjacency(&self) -> Vec<Vec<VertexId>> {
        self.adj
            .iter()
            .map(|row| row.keys().copied().collect())
            .collect()
    }

    /// Same vertices and labels with every multiplicity set to 1.
    pub fn collapsed(&self) -> Multigraph {
        let mut g = self.clone();
        for row in &mut g.adj {
            for m in row.values_mut() {
                *m = 1;
            }
        }
        g
    }

    pub fn label(&self, v: VertexId) -> VertexLabel {
        self.labels[v]
    }

    pub fn set_label(&mut self, v: VertexId, label: VertexLabel) -> Result<(), GraphError> {
        self.check(v)?;
        label.validate()?;
        if let VertexLabel::Plain(id) = label {
            if id != v {
                return Err(GraphError::PlainMismatch { label, v });
            }
        } else if let Some(&existing) = self.label_index.get(&label) {
            if existing != v {
                return Err(GraphError::DuplicateLabel { label, existing });
            }
        }
        let old = std::mem::replace(&mut self.labels[v], label);
        self.label_index.remove(&old);
        if !label.is_plain() {
            self.label_index.insert(label, v);
        }
        Ok(())
    }

    /// Vertex carrying `label`.
    pub fn find(&self, label: VertexLabel) -> Option<VertexId> {
        match label {
            VertexLabel::Plain(id) if id < self.adj.len() && self.labels[id] == label => Some(id),
            VertexLabel::Plain(_) => None,
            other => self.label_index.get(&other).copied(),
        }
    }

    /// Connected components of the support graph, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Proper 2-coloring of the support graph (color `false` on the smallest
    /// vertex of each component), or `None` when an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].expect("colored on enqueue");
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.expect("all colored")).collect())
    }

    /// Recognizes `(a, b)`-biregular bipartite graphs. Both parts must be
    /// non-empty.
    pub fn classify_biregular_bipartite(&self) -> Option<Biregular> {
        let n = self.vertex_count();
        if n < 2 {
            return None;
        }
        let degree: Vec<usize> = self.degrees().collect();
        let mut distinct: Vec<usize> = degree.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() > 2 {
            return None;
        }
        let color = self.two_coloring()?;

        if let [d] = distinct[..] {
            let mut parts: (Vec<VertexId>, Vec<VertexId>) = (0..n).partition(|&v| !color[v]);
            if parts.1.is_empty() {
                // only isolated vertices
                debug_assert_eq!(d, 0);
                let last = parts.0.pop().expect("n >= 2");
                parts.1.push(last);
            }
            return Some(Biregular {
                degrees: (d, d),
                parts,
            });
        }

        let (high, low) = (distinct[1], distinct[0]);
        let mut in_high = vec![false; n];
        for comp in self.components() {
            let side_degree = |c: bool| -> Result<Option<usize>, ()> {
                let mut found = None;
                for &v in comp.iter().filter(|&&v| color[v] == c) {
                    match found {
                        None => found = Some(degree[v]),
                        Some(d) if d != degree[v] => return Err(()),
                        Some(_) => {}
                    }
                }
                Ok(found)
            };
            let (d0, d1) = (side_degree(false).ok()?, side_degree(true).ok()?);
            let high_color = match (d0, d1) {
                (Some(a), Some(b)) if a == b => return None,
                (Some(a), _) if a == high => false,
                (_, Some(b)) if b == high => true,
                _ => continue,
            };
            for &v in &comp {
                in_high[v] = color[v] == high_color;
            }
        }
        let parts = (0..n).partition(|&v| in_high[v]);
        Some(Biregular {
            degrees: (high, low),
            parts,
        })
    }
}
