use std::collections::VecDeque;

use crate::multigraph::{Multigraph, VertexId};

use super::blossom::{maximum_mates, Blossom, NONE};
use super::MatchingError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeClass {
    /// Missed by at least one maximum matching.
    D,
    /// Outside `D` but adjacent to it.
    A,
    C,
}

/// Gallai-Edmonds partition `(D, A, C)` of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiEdmonds {
    pub d: Vec<VertexId>,
    pub a: Vec<VertexId>,
    pub c: Vec<VertexId>,
    pub class: Vec<GeClass>,
    pub matching_number: usize,
}

impl GallaiEdmonds {
    pub fn in_d(&self, v: VertexId) -> bool {
        self.class.get(v) == Some(&GeClass::D)
    }

    pub fn deficiency(&self) -> usize {
        self.class.len() - 2 * self.matching_number
    }
}

/// Computes `D` with the deletion test `v ∈ D ⇔ ν(G − v) = ν(G)`.
///
/// Each test starts from one maximum matching `M` of `G`: a vertex exposed by
/// `M` is in `D`; otherwise `v` is dropped together with its matched edge and
/// `ν(G − v) = ν(G)` exactly when an augmenting path leaves its former mate.
pub fn gallai_edmonds(g: &Multigraph) -> GallaiEdmonds {
    let n = g.vertex_count();
    let adj = g.support_adjacency();
    let mut alive = vec![true; n];
    let mate = maximum_mates(&adj, &alive);
    let matching_number = mate.iter().filter(|&&m| m != NONE).count() / 2;

    let mut engine = Blossom::new(n);
    let mut scratch = mate.clone();
    let mut class = vec![GeClass::C; n];
    for v in 0..n {
        let w = mate[v];
        if w == NONE {
            class[v] = GeClass::D;
            continue;
        }
        scratch.copy_from_slice(&mate);
        scratch[v] = NONE;
        scratch[w] = NONE;
        alive[v] = false;
        if engine.augment_from(&adj, &alive, &mut scratch, w) {
            class[v] = GeClass::D;
        }
        alive[v] = true;
    }
    for v in 0..n {
        if class[v] != GeClass::D && adj[v].iter().any(|&w| class[w] == GeClass::D) {
            class[v] = GeClass::A;
        }
    }
    let pick = |c: GeClass| (0..n).filter(|&v| class[v] == c).collect::<Vec<_>>();
    GallaiEdmonds {
        d: pick(GeClass::D),
        a: pick(GeClass::A),
        c: pick(GeClass::C),
        class,
        matching_number,
    }
}

/// A set `S` whose removal leaves `odd_count` odd components with
/// `odd_count − |S|` equal to the deficiency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteBergeWitness {
    pub s: Vec<VertexId>,
    pub odd_count: usize,
    pub deficiency: usize,
}

/// Number of odd components of `g − s`.
pub fn odd_components_without(g: &Multigraph, s: &[VertexId]) -> usize {
    let n = g.vertex_count();
    let mut removed = vec![false; n];
    for &v in s {
        removed[v] = true;
    }
    let mut odd = 0;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if removed[start] {
            continue;
        }
        removed[start] = true;
        queue.push_back(start);
        let mut size = 0usize;
        while let Some(v) = queue.pop_front() {
            size += 1;
            for w in g.neighbors(v) {
                if !removed[w] {
                    removed[w] = true;
                    queue.push_back(w);
                }
            }
        }
        odd += size % 2;
    }
    odd
}

/// Uses `S = A` from the Gallai-Edmonds partition and checks the count
/// before returning.
pub fn tutte_berge_witness(g: &Multigraph) -> Result<TutteBergeWitness, MatchingError> {
    let ge = gallai_edmonds(g);
    let deficiency = ge.deficiency();
    let odd_count = odd_components_without(g, &ge.a);
    if odd_count < ge.a.len() || odd_count - ge.a.len() != deficiency {
        return Err(MatchingError::TutteBergeMismatch {
            odd: odd_count,
            s: ge.a.len(),
            deficiency,
        });
    }
    Ok(TutteBergeWitness {
        s: ge.a,
        odd_count,
        deficiency,
    })
}
