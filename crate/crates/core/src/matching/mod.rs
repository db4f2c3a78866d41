//! Maximum matchings on multigraphs.
//!
//! Everything here runs on the support graph: parallel edges never change
//! which vertex sets can be matched, so multiplicities are ignored.

mod blossom;
mod decomposition;
mod enumerate;
mod hall;
pub mod oracle;

use std::fmt;

use thiserror::Error;

use crate::multigraph::{Multigraph, VertexId};

use blossom::{maximum_mates, NONE};
pub use decomposition::{
    gallai_edmonds, odd_components_without, tutte_berge_witness, GallaiEdmonds, GeClass,
    TutteBergeWitness,
};
pub use enumerate::{
    enumerate_maximum_matchings, for_each_maximum_matching, Enumeration, EnumerationOutcome,
};
pub use hall::hall_violator;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("vertex {v} out of range for graph with {n} vertices")]
    OutOfRange { v: VertexId, n: usize },
    #[error("{{{0},{1}}} is not an edge of the graph")]
    NotAnEdge(VertexId, VertexId),
    #[error("vertex {0} is covered twice")]
    NotDisjoint(VertexId),
    #[error("matching is over {matching} vertices but the graph has {graph}")]
    SizeMismatch { matching: usize, graph: usize },
    #[error("given side is not one part of a bipartition of the graph")]
    NotBipartite,
    #[error("Tutte-Berge check failed: {odd} odd components minus |S|={s} differs from deficiency {deficiency}")]
    TutteBergeMismatch {
        odd: usize,
        s: usize,
        deficiency: usize,
    },
    #[error("oracle guard exceeded: {0} support edges (limit {limit})", limit = oracle::MAX_ORACLE_EDGES)]
    OracleGuard(usize),
    #[error("enumeration cap must be at least 1")]
    ZeroCap,
}

/// A set of vertex-disjoint support edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    mate: Vec<Option<VertexId>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![None; n],
        }
    }

    pub(crate) fn from_raw_mates(raw: &[usize]) -> Self {
        Matching {
            mate: raw.iter().map(|&m| (m != NONE).then_some(m)).collect(),
        }
    }

    /// Builds a matching of `g` from vertex pairs, checking that the pairs are
    /// edges and pairwise disjoint.
    pub fn from_pairs(
        g: &Multigraph,
        pairs: &[(VertexId, VertexId)],
    ) -> Result<Self, MatchingError> {
        let n = g.vertex_count();
        let mut m = Matching::empty(n);
        for &(u, v) in pairs {
            for x in [u, v] {
                if x >= n {
                    return Err(MatchingError::OutOfRange { v: x, n });
                }
            }
            if !g.is_adjacent(u, v) {
                return Err(MatchingError::NotAnEdge(u, v));
            }
            for x in [u, v] {
                if m.mate[x].is_some() {
                    return Err(MatchingError::NotDisjoint(x));
                }
            }
            m.mate[u] = Some(v);
            m.mate[v] = Some(u);
        }
        Ok(m)
    }

    pub fn vertex_count(&self) -> usize {
        self.mate.len()
    }

    /// Number of matched edges.
    pub fn len(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        self.mate.get(v).copied().flatten()
    }

    pub fn is_saturated(&self, v: VertexId) -> bool {
        self.mate(v).is_some()
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, &m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    /// Unsaturated vertices in ascending order.
    pub fn exposed(&self) -> Vec<VertexId> {
        self.mate
            .iter()
            .enumerate()
            .filter(|(_, m)| m.is_none())
            .map(|(v, _)| v)
            .collect()
    }

    fn validate(&self, g: &Multigraph) -> Result<(), MatchingError> {
        if self.mate.len() != g.vertex_count() {
            return Err(MatchingError::SizeMismatch {
                matching: self.mate.len(),
                graph: g.vertex_count(),
            });
        }
        for (u, v) in self.pairs() {
            if !g.is_adjacent(u, v) {
                return Err(MatchingError::NotAnEdge(u, v));
            }
        }
        Ok(())
    }
}

/// Sorted edge list, e.g. `0-1 2-3`.
impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (u, v)) in self.pairs().into_iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching[{self}]")
    }
}

/// A maximum matching, deterministic for a given graph.
///
/// Debug builds re-certify the size with a Tutte-Berge witness.
pub fn maximum_matching(g: &Multigraph) -> Matching {
    let adj = g.support_adjacency();
    let alive = vec![true; g.vertex_count()];
    let m = Matching::from_raw_mates(&maximum_mates(&adj, &alive));
    #[cfg(debug_assertions)]
    {
        let witness =
            tutte_berge_witness(g).expect("blossom result fails Tutte-Berge certification");
        debug_assert_eq!(witness.deficiency, g.vertex_count() - 2 * m.len());
    }
    m
}

pub(crate) fn matching_number_of(adj: &[Vec<usize>]) -> usize {
    let alive = vec![true; adj.len()];
    maximum_mates(adj, &alive)
        .iter()
        .filter(|&&m| m != NONE)
        .count()
        / 2
}

/// ν(g), the size of a maximum matching.
pub fn matching_number(g: &Multigraph) -> usize {
    matching_number_of(&g.support_adjacency())
}

/// Number of vertices left exposed by every maximum matching.
pub fn deficiency(g: &Multigraph) -> usize {
    g.vertex_count() - 2 * matching_number(g)
}

pub fn exposed_vertices(g: &Multigraph, m: &Matching) -> Result<Vec<VertexId>, MatchingError> {
    m.validate(g)?;
    Ok(m.exposed())
}
