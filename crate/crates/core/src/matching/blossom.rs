//! Edmonds' blossom algorithm for maximum cardinality matching.
//!
//! Works on a support adjacency list restricted to the vertices flagged in
//! `alive`, starting from any valid matching. One pass over the exposed roots
//! in ascending order suffices: once no augmenting path starts at a vertex,
//! none starts there after later augmentations.

use std::collections::VecDeque;

pub(crate) const NONE: usize = usize::MAX;

/// Scratch space for repeated augmenting-path searches on graphs with the
/// same vertex count.
pub(crate) struct Blossom {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom {
    pub(crate) fn new(n: usize) -> Self {
        Blossom {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            lca_mark: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    /// Matches every exposed alive vertex to its first exposed alive neighbor.
    pub(crate) fn greedy(adj: &[Vec<usize>], alive: &[bool], mate: &mut [usize]) {
        for v in 0..adj.len() {
            if !alive[v] || mate[v] != NONE {
                continue;
            }
            if let Some(&w) = adj[v].iter().find(|&&w| alive[w] && mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }

    /// Grows `mate` into a maximum matching of the alive subgraph and returns
    /// its size.
    pub(crate) fn maximize(
        &mut self,
        adj: &[Vec<usize>],
        alive: &[bool],
        mate: &mut [usize],
    ) -> usize {
        for root in 0..adj.len() {
            if alive[root] && mate[root] == NONE {
                self.augment_from(adj, alive, mate, root);
            }
        }
        mate.iter()
            .enumerate()
            .filter(|&(v, &m)| m != NONE && v < m)
            .count()
    }

    /// Searches for an augmenting path from `root` and flips it if found.
    pub(crate) fn augment_from(
        &mut self,
        adj: &[Vec<usize>],
        alive: &[bool],
        mate: &mut [usize],
        root: usize,
    ) -> bool {
        let Some(mut v) = self.find_path(adj, alive, mate, root) else {
            return false;
        };
        while v != NONE {
            let pv = self.parent[v];
            let next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
        true
    }

    fn lca(&mut self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        self.lca_mark.iter_mut().for_each(|m| *m = false);
        loop {
            a = self.base[a];
            self.lca_mark[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// Returns the exposed endpoint of an augmenting path from `root`.
    fn find_path(
        &mut self,
        adj: &[Vec<usize>],
        alive: &[bool],
        mate: &[usize],
        root: usize,
    ) -> Option<usize> {
        let n = adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in &adj[v] {
                if !alive[to] || self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let cur = self.lca(mate, v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[mate[to]] = true;
                    self.queue.push_back(mate[to]);
                }
            }
        }
        None
    }
}

/// Maximum matching of the alive subgraph as a mate array.
pub(crate) fn maximum_mates(adj: &[Vec<usize>], alive: &[bool]) -> Vec<usize> {
    let mut mate = vec![NONE; adj.len()];
    Blossom::greedy(adj, alive, &mut mate);
    Blossom::new(adj.len()).maximize(adj, alive, &mut mate);
    mate
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(mate: &[usize]) -> usize {
        mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    fn adj(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut a = vec![Vec::new(); n];
        for &(u, v) in edges {
            a[u].push(v);
            a[v].push(u);
        }
        a.iter_mut().for_each(|r| r.sort_unstable());
        a
    }

    #[test]
    fn needs_blossom_contraction() {
        // triangle 0-1-2 with pendant paths 2-3 and 0-4; greedy picks 0-1
        // and 2-3, leaving 4 exposed until the search goes through the odd cycle
        let a = adj(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (3, 5)]);
        let alive = vec![true; 6];
        let mate = maximum_mates(&a, &alive);
        assert_eq!(size(&mate), 3);
    }

    #[test]
    fn respects_alive_mask() {
        let a = adj(4, &[(0, 1), (1, 2), (2, 3)]);
        let mut alive = vec![true; 4];
        alive[1] = false;
        assert_eq!(size(&maximum_mates(&a, &alive)), 1);
    }

    #[test]
    fn petersen_has_perfect_matching() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let a = adj(10, &edges);
        assert_eq!(size(&maximum_mates(&a, &[true; 10])), 5);
    }
}
