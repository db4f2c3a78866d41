//! Branch-and-prune enumeration of all maximum matchings.
//!
//! The smallest undecided vertex `v` is either matched to one of its
//! remaining neighbors (ascending) or left exposed. A branch survives only if
//! the residual graph still has a matching large enough to reach ν(G). The
//! residual check starts from the parent's matching and only augments when
//! that matching falls short.
//! Every maximum matching corresponds to exactly one leaf, so the output has
//! no duplicates and comes out in a fixed order.

use std::ops::ControlFlow;

use crate::multigraph::Multigraph;

use super::blossom::{maximum_mates, Blossom, NONE};
use super::{Matching, MatchingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOutcome {
    /// Matchings handed to the visitor.
    pub count: usize,
    /// True iff every maximum matching was visited.
    pub exhaustive: bool,
    pub matching_number: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub matchings: Vec<Matching>,
    pub exhaustive: bool,
}

struct Enumerator<'a, F> {
    adj: &'a [Vec<usize>],
    alive: Vec<bool>,
    engine: Blossom,
    current: Vec<usize>,
    emitted: usize,
    cap: usize,
    capped: bool,
    visit: F,
}

impl<F> Enumerator<'_, F>
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    fn emit(&mut self) -> ControlFlow<()> {
        if self.emitted == self.cap {
            self.capped = true;
            return ControlFlow::Break(());
        }
        self.emitted += 1;
        (self.visit)(&Matching::from_raw_mates(&self.current))
    }

    /// Copy of `mate` with the edges at `drop` removed. If that leaves fewer
    /// than `need` edges it is grown to a maximum matching of the alive set.
    fn residual(&mut self, mate: &[usize], drop: &[usize], need: usize) -> (Vec<usize>, usize) {
        let mut next = mate.to_vec();
        for &x in drop {
            let y = next[x];
            if y != NONE {
                next[y] = NONE;
                next[x] = NONE;
            }
        }
        let size = next.iter().filter(|&&m| m != NONE).count() / 2;
        if size >= need {
            return (next, size);
        }
        let size = self.engine.maximize(self.adj, &self.alive, &mut next);
        (next, size)
    }

    fn search(&mut self, from: usize, need: usize, mate: &[usize]) -> ControlFlow<()> {
        if need == 0 {
            return self.emit();
        }
        let Some(v) = (from..self.adj.len()).find(|&v| self.alive[v]) else {
            return ControlFlow::Continue(());
        };
        self.alive[v] = false;
        let adj = self.adj;
        for &w in &adj[v] {
            if !self.alive[w] {
                continue;
            }
            self.alive[w] = false;
            let (child, size) = self.residual(mate, &[v, w], need - 1);
            if size + 1 >= need {
                self.current[v] = w;
                self.current[w] = v;
                self.search(v + 1, need - 1, &child)?;
                self.current[v] = NONE;
                self.current[w] = NONE;
            }
            self.alive[w] = true;
        }
        let (child, size) = self.residual(mate, &[v], need);
        if size >= need {
            self.search(v + 1, need, &child)?;
        }
        self.alive[v] = true;
        ControlFlow::Continue(())
    }
}

/// Visits distinct maximum matchings of `g` until `cap` have been visited or
/// the visitor breaks.
pub fn for_each_maximum_matching<F>(
    g: &Multigraph,
    cap: usize,
    visit: F,
) -> Result<EnumerationOutcome, MatchingError>
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    if cap == 0 {
        return Err(MatchingError::ZeroCap);
    }
    let n = g.vertex_count();
    let adj = g.support_adjacency();
    let alive = vec![true; n];
    let mate = maximum_mates(&adj, &alive);
    let matching_number = mate.iter().filter(|&&m| m != NONE).count() / 2;
    let mut e = Enumerator {
        adj: &adj,
        alive,
        engine: Blossom::new(n),
        current: vec![NONE; n],
        emitted: 0,
        cap,
        capped: false,
        visit,
    };
    let flow = e.search(0, matching_number, &mate);
    Ok(EnumerationOutcome {
        count: e.emitted,
        exhaustive: flow.is_continue() && !e.capped,
        matching_number,
    })
}

/// Collects up to `cap` maximum matchings.
pub fn enumerate_maximum_matchings(
    g: &Multigraph,
    cap: usize,
) -> Result<Enumeration, MatchingError> {
    let mut matchings = Vec::new();
    let outcome = for_each_maximum_matching(g, cap, |m| {
        matchings.push(m.clone());
        ControlFlow::Continue(())
    })?;
    Ok(Enumeration {
        matchings,
        exhaustive: outcome.exhaustive,
    })
}
