//! Exhaustive reference answers for small graphs, independent of the blossom
//! code. Walks the support edge list and tries every subset of pairwise
//! disjoint edges.

use std::collections::BTreeSet;

use crate::multigraph::{Multigraph, VertexId};

use super::MatchingError;

/// Hard limit on the number of support edges accepted by the oracle.
pub const MAX_ORACLE_EDGES: usize = 32;

pub type EdgeSet = Vec<(VertexId, VertexId)>;

fn support_edges(g: &Multigraph) -> Result<EdgeSet, MatchingError> {
    let edges: EdgeSet = g.bundles().map(|(u, v, _)| (u, v)).collect();
    if edges.len() > MAX_ORACLE_EDGES {
        return Err(MatchingError::OracleGuard(edges.len()));
    }
    Ok(edges)
}

fn walk(
    edges: &[(VertexId, VertexId)],
    idx: usize,
    used: &mut [bool],
    chosen: &mut EdgeSet,
    best: &mut usize,
    all: &mut BTreeSet<EdgeSet>,
) {
    if idx == edges.len() {
        if chosen.len() > *best {
            *best = chosen.len();
            all.clear();
        }
        if chosen.len() == *best {
            all.insert(chosen.clone());
        }
        return;
    }
    // remaining edges cannot beat the best size found so far
    if chosen.len() + (edges.len() - idx) < *best {
        return;
    }
    let (u, v) = edges[idx];
    if !used[u] && !used[v] {
        used[u] = true;
        used[v] = true;
        chosen.push((u, v));
        walk(edges, idx + 1, used, chosen, best, all);
        chosen.pop();
        used[u] = false;
        used[v] = false;
    }
    walk(edges, idx + 1, used, chosen, best, all);
}

/// All maximum matchings as sorted edge lists.
pub fn brute_force_all_maximum_matchings(
    g: &Multigraph,
) -> Result<BTreeSet<EdgeSet>, MatchingError> {
    let edges = support_edges(g)?;
    let mut all = BTreeSet::new();
    let mut best = 0;
    walk(
        &edges,
        0,
        &mut vec![false; g.vertex_count()],
        &mut Vec::new(),
        &mut best,
        &mut all,
    );
    Ok(all)
}

pub fn brute_force_matching_number(g: &Multigraph) -> Result<usize, MatchingError> {
    Ok(brute_force_all_maximum_matchings(g)?
        .iter()
        .next()
        .map_or(0, |m| m.len()))
}
