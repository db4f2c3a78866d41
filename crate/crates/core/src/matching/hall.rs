use std::collections::VecDeque;

use crate::multigraph::{Multigraph, VertexId};

use super::MatchingError;

const NONE: usize = usize::MAX;

/// Kuhn's augmenting-path search from `s` on the side/other bipartition.
fn try_kuhn(adj: &[Vec<usize>], s: usize, seen: &mut [bool], mate: &mut [usize]) -> bool {
    for &t in &adj[s] {
        if seen[t] {
            continue;
        }
        seen[t] = true;
        if mate[t] == NONE || try_kuhn(adj, mate[t], seen, mate) {
            mate[t] = s;
            mate[s] = t;
            return true;
        }
    }
    false
}

/// Finds `W ⊆ side` with `|N(W)| < |W|`, or `None` when every maximum
/// matching saturates `side`.
///
/// The returned set is everything reachable from the side vertices left
/// unmatched by a maximum bipartite matching along alternating paths; its
/// neighborhood is matched back into `W`, so `|N(W)| = |W| − #unmatched`.
/// Fails unless `side` and its complement are both independent.
pub fn hall_violator(
    g: &Multigraph,
    side: &[VertexId],
) -> Result<Option<Vec<VertexId>>, MatchingError> {
    let n = g.vertex_count();
    let mut in_side = vec![false; n];
    for &v in side {
        if v >= n {
            return Err(MatchingError::OutOfRange { v, n });
        }
        in_side[v] = true;
    }
    if g.bundles().any(|(u, v, _)| in_side[u] == in_side[v]) {
        return Err(MatchingError::NotBipartite);
    }

    let adj = g.support_adjacency();
    let mut mate = vec![NONE; n];
    let mut seen = vec![false; n];
    for s in (0..n).filter(|&v| in_side[v]) {
        seen.iter_mut().for_each(|x| *x = false);
        try_kuhn(&adj, s, &mut seen, &mut mate);
    }

    let unmatched: Vec<VertexId> = (0..n).filter(|&v| in_side[v] && mate[v] == NONE).collect();
    if unmatched.is_empty() {
        return Ok(None);
    }
    let mut in_w = vec![false; n];
    let mut queue: VecDeque<VertexId> = unmatched.iter().copied().collect();
    for &s in &unmatched {
        in_w[s] = true;
    }
    while let Some(s) = queue.pop_front() {
        for &t in &adj[s] {
            let back = mate[t];
            debug_assert_ne!(back, NONE, "augmenting path left in a maximum matching");
            if back != NONE && !in_w[back] {
                in_w[back] = true;
                queue.push_back(back);
            }
        }
    }
    Ok(Some((0..n).filter(|&v| in_w[v]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_leaves_violate() {
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(hall_violator(&g, &[1, 2, 3]), Ok(Some(vec![1, 2, 3])));
        assert_eq!(hall_violator(&g, &[0]), Ok(None));
    }

    #[test]
    fn rejects_non_bipartition() {
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(hall_violator(&g, &[0]), Err(MatchingError::NotBipartite));
        let p = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(hall_violator(&p, &[0, 1]), Err(MatchingError::NotBipartite));
        assert_eq!(
            hall_violator(&p, &[5]),
            Err(MatchingError::OutOfRange { v: 5, n: 3 })
        );
    }

    #[test]
    fn isolated_side_vertex_violates_alone() {
        let g = Multigraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(hall_violator(&g, &[0, 2]), Ok(Some(vec![2])));
    }
}
