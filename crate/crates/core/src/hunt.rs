//! Seeded search for counterexamples among random regular multigraphs.
//!
//! Graph `i` of a hunt is generated from `graph_seed(seed, i)` alone, so a
//! summary does not depend on how the work is spread over threads.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::multigraph::{parse_mgf, serialize_mgf, Multigraph};
use crate::verify::{conjecture_holds, Method, Verdict};

/// Pairings tried before giving up on a simple (or loop-free) sample.
pub const DEFAULT_RETRY_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HuntError {
    #[error("degree sum {n} x {degree} is odd")]
    OddDegreeSum { n: usize, degree: usize },
    #[error("no {kind} {degree}-regular graph on {n} vertices")]
    Infeasible {
        n: usize,
        degree: usize,
        kind: &'static str,
    },
    #[error("no valid pairing found in {0} attempts")]
    RetryBudgetExhausted(usize),
    #[error("invalid hunt configuration: {0}")]
    Config(String),
    #[error("could not build thread pool: {0}")]
    ThreadPool(String),
}

/// Configuration-model sample of a `degree`-regular multigraph on `n`
/// vertices. Pairings with a loop are always rejected; with `simple_only`,
/// pairings with parallel edges are rejected too.
pub fn random_regular_graph(
    n: usize,
    degree: usize,
    seed: u64,
    simple_only: bool,
) -> Result<Multigraph, HuntError> {
    random_regular_graph_with_budget(n, degree, seed, simple_only, DEFAULT_RETRY_BUDGET)
}

pub fn random_regular_graph_with_budget(
    n: usize,
    degree: usize,
    seed: u64,
    simple_only: bool,
    budget: usize,
) -> Result<Multigraph, HuntError> {
    if (n * degree) % 2 == 1 {
        return Err(HuntError::OddDegreeSum { n, degree });
    }
    if degree > 0 && n < 2 {
        return Err(HuntError::Infeasible {
            n,
            degree,
            kind: "loop-free",
        });
    }
    if simple_only && degree >= n && degree > 0 {
        return Err(HuntError::Infeasible {
            n,
            degree,
            kind: "simple",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n)
        .flat_map(|v| std::iter::repeat_n(v, degree))
        .collect();
    'attempt: for _ in 0..budget.max(1) {
        stubs.shuffle(&mut rng);
        let mut g = Multigraph::new(n);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || (simple_only && g.is_adjacent(u, v)) {
                continue 'attempt;
            }
            g.add_edges(u, v, 1)
                .expect("checked loop-free and in range");
        }
        return Ok(g);
    }
    Err(HuntError::RetryBudgetExhausted(budget))
}

/// Mixes a hunt seed and a graph index into the seed of that graph:
/// `splitmix64(seed ^ splitmix64(index))`.
pub fn graph_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index))
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuntConfig {
    pub degree: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub count: usize,
    pub seed: u64,
    pub simple_only: bool,
    /// Enumeration cap per graph.
    pub cap: usize,
}

impl Default for HuntConfig {
    fn default() -> Self {
        HuntConfig {
            degree: 4,
            n_min: 10,
            n_max: 14,
            count: 100,
            seed: 0,
            simple_only: false,
            cap: 100_000,
        }
    }
}

impl HuntConfig {
    /// Vertex counts in range for which a graph of this kind exists.
    pub fn feasible_sizes(&self) -> Vec<usize> {
        (self.n_min..=self.n_max)
            .filter(|&n| (n * self.degree).is_multiple_of(2) && n >= 2)
            .filter(|&n| !self.simple_only || n > self.degree)
            .collect()
    }

    pub fn validate(&self) -> Result<(), HuntError> {
        let fail = |m: &str| Err(HuntError::Config(m.to_string()));
        if self.degree == 0 {
            return fail("degree must be at least 1");
        }
        if self.count == 0 {
            return fail("count must be at least 1");
        }
        if self.cap == 0 {
            return fail("cap must be at least 1");
        }
        if self.n_min > self.n_max {
            return fail("n_min exceeds n_max");
        }
        if self.feasible_sizes().is_empty() {
            return fail("no vertex count in range admits such a regular graph");
        }
        Ok(())
    }
}

impl fmt::Display for HuntConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree={} n_min={} n_max={} count={} seed={} simple_only={} cap={}",
            self.degree, self.n_min, self.n_max, self.count, self.seed, self.simple_only, self.cap
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphRecord {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub verdict: Verdict,
    pub method: Option<Method>,
    pub deficiency: Option<usize>,
    pub note: Option<String>,
}

impl fmt::Display for GraphRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph index={} seed={} n={} verdict={}",
            self.index, self.seed, self.n, self.verdict
        )?;
        if let Some(m) = self.method {
            write!(f, " method={m}")?;
        }
        if let Some(d) = self.deficiency {
            write!(f, " def={d}")?;
        }
        if let Some(note) = &self.note {
            write!(f, " note=\"{note}\"")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuntSummary {
    pub config: HuntConfig,
    pub records: Vec<GraphRecord>,
    /// `(index, MGF text)` for each counterexample.
    pub counterexample_graphs: Vec<(usize, String)>,
}

impl HuntSummary {
    pub fn graphs_tested(&self) -> usize {
        self.records.len()
    }

    fn tally(&self, v: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == v).count()
    }

    pub fn holds_count(&self) -> usize {
        self.tally(Verdict::Holds)
    }

    pub fn counterexample_count(&self) -> usize {
        self.tally(Verdict::Counterexample)
    }

    pub fn inconclusive_count(&self) -> usize {
        self.tally(Verdict::Inconclusive)
    }
}

/// Line-oriented report: config line, one line per graph, totals line.
impl fmt::Display for HuntSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "hunt {}", self.config)?;
        for r in &self.records {
            writeln!(f, "{r}")?;
        }
        for (index, _) in &self.counterexample_graphs {
            writeln!(f, "counterexample index={index}")?;
        }
        writeln!(
            f,
            "summary tested={} holds={} counterexamples={} inconclusive={}",
            self.graphs_tested(),
            self.holds_count(),
            self.counterexample_count(),
            self.inconclusive_count()
        )
    }
}

/// Parses an MGF payload and checks it again from scratch.
pub fn reverify_payload(mgf: &str, cap: usize) -> bool {
    parse_mgf(mgf)
        .ok()
        .and_then(|g| conjecture_holds(&g, cap).ok())
        .is_some_and(|r| r.verdict == Verdict::Counterexample)
}

fn examine(config: &HuntConfig, sizes: &[usize], index: usize) -> (GraphRecord, Option<String>) {
    let seed = graph_seed(config.seed, index as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = sizes[rng.gen_range(0..sizes.len())];
    let mut record = GraphRecord {
        index,
        seed,
        n,
        verdict: Verdict::Inconclusive,
        method: None,
        deficiency: None,
        note: None,
    };
    let g = match random_regular_graph(n, config.degree, rng.gen(), config.simple_only) {
        Ok(g) => g,
        Err(e) => {
            record.note = Some(e.to_string());
            return (record, None);
        }
    };
    let report = match conjecture_holds(&g, config.cap) {
        Ok(r) => r,
        Err(e) => {
            record.note = Some(e.to_string());
            return (record, None);
        }
    };
    record.verdict = report.verdict;
    record.method = Some(report.method);
    record.deficiency = Some(report.deficiency);
    if report.verdict != Verdict::Counterexample {
        return (record, None);
    }
    let payload = serialize_mgf(&g);
    if !reverify_payload(&payload, config.cap) {
        record.verdict = Verdict::Inconclusive;
        record.note = Some("counterexample did not re-verify from its MGF payload".into());
        return (record, None);
    }
    (record, Some(payload))
}

/// Runs a hunt on the global thread pool.
pub fn hunt(config: &HuntConfig) -> Result<HuntSummary, HuntError> {
    config.validate()?;
    let sizes = config.feasible_sizes();
    let results: Vec<_> = (0..config.count)
        .into_par_iter()
        .map(|i| examine(config, &sizes, i))
        .collect();
    let mut summary = HuntSummary {
        config: config.clone(),
        records: Vec::with_capacity(results.len()),
        counterexample_graphs: Vec::new(),
    };
    for (record, payload) in results {
        if let Some(p) = payload {
            summary.counterexample_graphs.push((record.index, p));
        }
        summary.records.push(record);
    }
    Ok(summary)
}

/// Runs a hunt on a dedicated pool of `workers` threads.
pub fn hunt_with_workers(config: &HuntConfig, workers: usize) -> Result<HuntSummary, HuntError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| HuntError::ThreadPool(e.to_string()))?;
    pool.install(|| hunt(config))
}
