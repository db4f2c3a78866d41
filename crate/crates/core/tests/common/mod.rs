#![allow(dead_code)]

use std::collections::BTreeSet;

use mgraph::families::{build, Family};
use mgraph::matching::oracle::MAX_ORACLE_EDGES;
use mgraph::{Matching, Multigraph, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random loop-free multigraph on at most `max_n` vertices with at most
/// `max_support` distinct adjacent pairs.
pub fn random_multigraph(rng: &mut ChaCha8Rng, max_n: usize, max_support: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_n);
    let density: f64 = rng.gen_range(0.1..0.8);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    pairs.shuffle(rng);
    pairs.truncate(max_support);
    let bundles: Vec<_> = pairs
        .into_iter()
        .map(|(u, v)| {
            (
                u,
                v,
                if rng.gen_bool(0.3) {
                    rng.gen_range(2..=4)
                } else {
                    1
                },
            )
        })
        .collect();
    Multigraph::from_bundles(n, bundles).unwrap()
}

/// Random connected simple graph with every degree in {2, 3}.
pub fn random_subcubic(rng: &mut ChaCha8Rng, max_n: usize) -> Multigraph {
    loop {
        let n = rng.gen_range(3..=max_n);
        let mut stubs: Vec<usize> = Vec::new();
        for v in 0..n {
            let d = if rng.gen_bool(0.5) { 3 } else { 2 };
            stubs.extend(std::iter::repeat_n(v, d));
        }
        if stubs.len() % 2 == 1 {
            continue;
        }
        stubs.shuffle(rng);
        let mut edges = BTreeSet::new();
        let ok = stubs.chunks(2).all(|c| {
            let (u, v) = (c[0].min(c[1]), c[0].max(c[1]));
            u != v && edges.insert((u, v))
        });
        if !ok {
            continue;
        }
        let edges: Vec<_> = edges.into_iter().collect();
        let g = Multigraph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Random bipartite multigraph with sides `0..p` and `p..p+q`.
pub fn random_bipartite(rng: &mut ChaCha8Rng, max_side: usize) -> (Multigraph, Vec<VertexId>) {
    let p = rng.gen_range(1..=max_side);
    let q = rng.gen_range(1..=max_side);
    let density: f64 = rng.gen_range(0.1..0.7);
    let mut bundles = Vec::new();
    for u in 0..p {
        for v in p..p + q {
            if rng.gen_bool(density) {
                bundles.push((u, v, rng.gen_range(1..=2)));
            }
        }
    }
    (
        Multigraph::from_bundles(p + q, bundles).unwrap(),
        (0..p).collect(),
    )
}

/// Family members small enough for the brute-force oracle once collapsed.
pub fn oracle_sized_families() -> Vec<(String, Multigraph)> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for r in family.min_r()..=family.min_r() + 4 {
            let g = build(family, r).unwrap();
            if g.support_edge_count() <= MAX_ORACLE_EDGES {
                out.push((format!("{family}({r})"), g));
            }
        }
    }
    out
}

/// Does some pair of exposed vertices share a neighbor? Scans
/// multiplicities directly instead of calling the library's neighbor helpers.
pub fn exposed_pair_with_common_neighbor(g: &Multigraph, m: &Matching) -> bool {
    let exposed = m.exposed();
    let n = g.vertex_count();
    for (i, &u) in exposed.iter().enumerate() {
        for &v in &exposed[i + 1..] {
            if (0..n).any(|w| g.multiplicity(u, w) > 0 && g.multiplicity(v, w) > 0) {
                return true;
            }
        }
    }
    false
}

/// Does every pair of exposed vertices share a neighbor?
pub fn every_exposed_pair_has_common_neighbor(g: &Multigraph, m: &Matching) -> bool {
    let exposed = m.exposed();
    let n = g.vertex_count();
    exposed.iter().enumerate().all(|(i, &u)| {
        exposed[i + 1..]
            .iter()
            .all(|&v| (0..n).any(|w| g.multiplicity(u, w) > 0 && g.multiplicity(v, w) > 0))
    })
}

pub fn edge_set(m: &Matching) -> Vec<(VertexId, VertexId)> {
    m.pairs()
}
