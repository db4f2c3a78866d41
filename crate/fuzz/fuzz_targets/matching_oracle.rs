#![no_main]

//! Decodes bytes into a small multigraph and checks the blossom matching,
//! the enumerator and the Tutte-Berge witness against brute force.

use std::collections::BTreeSet;

use libfuzzer_sys::fuzz_target;
use mgraph::matching::oracle::{brute_force_all_maximum_matchings, MAX_ORACLE_EDGES};
use mgraph::matching::{enumerate_maximum_matchings, odd_components_without, tutte_berge_witness};
use mgraph::{maximum_matching, Multigraph};

fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let n = usize::from(first % 10) + 1;
    let mut g = Multigraph::new(n);
    for chunk in rest.chunks_exact(2) {
        let (u, v) = (usize::from(chunk[0]) % n, usize::from(chunk[1]) % n);
        if u != v && (g.is_adjacent(u, v) || g.support_edge_count() < MAX_ORACLE_EDGES) {
            g.add_edges(u, v, 1).unwrap();
        }
    }
    let oracle = brute_force_all_maximum_matchings(&g).unwrap();
    let nu = oracle.iter().next().map_or(0, |m| m.len());
    assert_eq!(maximum_matching(&g).len(), nu);

    let e = enumerate_maximum_matchings(&g, usize::MAX).unwrap();
    assert!(e.exhaustive);
    let listed: BTreeSet<_> = e.matchings.iter().map(|m| m.pairs()).collect();
    assert_eq!(listed, oracle);

    let w = tutte_berge_witness(&g).unwrap();
    assert_eq!(odd_components_without(&g, &w.s), w.s.len() + n - 2 * nu);
});
