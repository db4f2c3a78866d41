//! Checks on the exposed vertices of maximum matchings.
//!
//! A graph *satisfies the exposed-pair property* when some maximum matching
//! leaves an exposed set with no two members sharing a neighbor. Two
//! counterexample strengths are distinguished by [`PairMode`].
//!
//! Every check either enumerates all maximum matchings (exact, bounded by a
//! cap) or relies on a certificate built from the Gallai-Edmonds set `D`:
//! the exposed vertices of any maximum matching always lie in `D`, so a
//! statement about all pairs (or a pigeonhole argument) over `D` transfers to
//! every maximum matching without enumerating them.

use std::fmt;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::families::subindex_classes;
use crate::matching::{
    for_each_maximum_matching, gallai_edmonds, maximum_matching, Matching, MatchingError,
};
use crate::multigraph::{Multigraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    /// Every maximum matching exposes at least two vertices and every exposed
    /// pair shares a neighbor.
    AllPairs,
    /// Every maximum matching exposes some pair sharing a neighbor.
    SomePair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The property checked holds: the graph is not a counterexample, or
    /// the saturation claim is true.
    Holds,
    Counterexample,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Decided by the deficiency alone.
    ShortCircuit,
    Enumeration,
    Certificate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Counterexample => "counterexample",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ShortCircuit => "short-circuit",
            Method::Enumeration => "enumeration",
            Method::Certificate => "certificate",
        })
    }
}

/// A maximum matching singled out by a check, with the exposed pair that
/// decided it (sharing `common`, or sharing nothing when `common` is `None`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub matching: Matching,
    pub pair: Option<(VertexId, VertexId)>,
    pub common: Option<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub verdict: Verdict,
    pub method: Method,
    pub matchings_examined: usize,
    /// True when every maximum matching was examined.
    pub exhaustive: bool,
    pub deficiency: usize,
    pub witness: Option<Witness>,
    /// Set when two independent routes disagree; indicates a bug.
    pub discrepancy: Option<String>,
}

impl VerificationReport {
    fn new(verdict: Verdict, method: Method, deficiency: usize) -> Self {
        VerificationReport {
            verdict,
            method,
            matchings_examined: 0,
            exhaustive: false,
            deficiency,
            witness: None,
            discrepancy: None,
        }
    }
}

/// One `key=value` per line.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict={}", self.verdict)?;
        writeln!(f, "method={}", self.method)?;
        writeln!(f, "deficiency={}", self.deficiency)?;
        writeln!(f, "matchings_examined={}", self.matchings_examined)?;
        writeln!(f, "exhaustive={}", self.exhaustive)?;
        if let Some(w) = &self.witness {
            writeln!(f, "witness_matching={}", w.matching)?;
            let exposed: Vec<String> = w.matching.exposed().iter().map(|v| v.to_string()).collect();
            writeln!(f, "witness_exposed={}", exposed.join(" "))?;
            if let Some((u, v)) = w.pair {
                match w.common {
                    Some(c) => writeln!(f, "witness_pair={u},{v} common={c}")?,
                    None => writeln!(f, "witness_pair={u},{v} common=none")?,
                }
            }
        }
        if let Some(d) = &self.discrepancy {
            writeln!(f, "discrepancy={d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("degrees must satisfy 2 <= min <= max <= 3, got min={min} max={max}")]
    DegreeRange { min: usize, max: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("malformed vertex class: {0}")]
    MalformedClass(String),
    #[error(transparent)]
    Matching(#[from] MatchingError),
}

/// Vertices dominated by a common hub.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClass {
    pub hub: VertexId,
    pub members: Vec<VertexId>,
}

/// Proof that every pair of vertices any maximum matching can expose shares a
/// neighbor, for a graph of deficiency at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongCertificate {
    pub deficiency: usize,
    pub d: Vec<VertexId>,
    /// `(u, v, w)`: `w` is a common neighbor of `u` and `v`, for each pair in `d`.
    pub pairs: Vec<(VertexId, VertexId, VertexId)>,
}

/// Pigeonhole proof: all exposable vertices lie in hub-dominated classes and
/// more vertices are exposed than there are classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakCertificate {
    pub deficiency: usize,
    pub class_count: usize,
    pub d: Vec<VertexId>,
}

/// First exposed pair sharing a neighbor, with that neighbor.
fn sharing_pair(g: &Multigraph, exposed: &[VertexId]) -> Option<(VertexId, VertexId, VertexId)> {
    for (idx, &u) in exposed.iter().enumerate() {
        for &v in &exposed[idx + 1..] {
            if let Some(w) = g.first_common_neighbor(u, v) {
                return Some((u, v, w));
            }
        }
    }
    None
}

/// First exposed pair without a common neighbor.
fn separated_pair(g: &Multigraph, exposed: &[VertexId]) -> Option<(VertexId, VertexId)> {
    for (idx, &u) in exposed.iter().enumerate() {
        for &v in &exposed[idx + 1..] {
            if g.first_common_neighbor(u, v).is_none() {
                return Some((u, v));
            }
        }
    }
    None
}

fn sharing_witness(g: &Multigraph, m: &Matching) -> Witness {
    let found = sharing_pair(g, &m.exposed());
    Witness {
        matching: m.clone(),
        pair: found.map(|(u, v, _)| (u, v)),
        common: found.map(|(_, _, w)| w),
    }
}

fn short_circuit(g: &Multigraph) -> Option<VerificationReport> {
    let m = maximum_matching(g);
    let def = g.vertex_count() - 2 * m.len();
    (def <= 1).then(|| VerificationReport {
        witness: Some(Witness {
            matching: m,
            pair: None,
            common: None,
        }),
        ..VerificationReport::new(Verdict::Holds, Method::ShortCircuit, def)
    })
}

/// Does some maximum matching leave an exposed set with no two members
/// sharing a neighbor? `Holds` comes with such a matching as witness.
///
/// Order of attempts: deficiency at most 1, the strong certificate, then
/// enumeration up to `cap`.
pub fn conjecture_holds(g: &Multigraph, cap: usize) -> Result<VerificationReport, VerifyError> {
    if cap == 0 {
        return Err(MatchingError::ZeroCap.into());
    }
    if let Some(report) = short_circuit(g) {
        return Ok(report);
    }
    if let Some(cert) = strong_counterexample_certificate(g) {
        return Ok(VerificationReport::new(
            Verdict::Counterexample,
            Method::Certificate,
            cert.deficiency,
        ));
    }
    let mut first = None;
    let mut good = None;
    let outcome = for_each_maximum_matching(g, cap, |m| {
        if sharing_pair(g, &m.exposed()).is_none() {
            good = Some(m.clone());
            return ControlFlow::Break(());
        }
        if first.is_none() {
            first = Some(sharing_witness(g, m));
        }
        ControlFlow::Continue(())
    })?;
    let def = g.vertex_count() - 2 * outcome.matching_number;
    let (verdict, witness) = match good {
        Some(m) => (
            Verdict::Holds,
            Some(Witness {
                matching: m,
                pair: None,
                common: None,
            }),
        ),
        None if outcome.exhaustive => (Verdict::Counterexample, first),
        None => (Verdict::Inconclusive, first),
    };
    Ok(VerificationReport {
        matchings_examined: outcome.count,
        exhaustive: outcome.exhaustive,
        witness,
        ..VerificationReport::new(verdict, Method::Enumeration, def)
    })
}

/// Decides whether `g` is a counterexample of the given strength.
///
/// Enumeration runs first so small instances are always decided exactly;
/// certificates are consulted only when the cap is hit. For `SomePair` the
/// subindex classes of a labeled graph are tried as a pigeonhole certificate.
pub fn is_counterexample(
    g: &Multigraph,
    mode: PairMode,
    cap: usize,
) -> Result<VerificationReport, VerifyError> {
    if cap == 0 {
        return Err(MatchingError::ZeroCap.into());
    }
    if let Some(report) = short_circuit(g) {
        return Ok(report);
    }
    let mut first = None;
    let mut refuting = None;
    let outcome = for_each_maximum_matching(g, cap, |m| {
        let exposed = m.exposed();
        let refuted = match mode {
            PairMode::SomePair => sharing_pair(g, &exposed).is_none().then(|| Witness {
                matching: m.clone(),
                pair: None,
                common: None,
            }),
            PairMode::AllPairs => separated_pair(g, &exposed).map(|pair| Witness {
                matching: m.clone(),
                pair: Some(pair),
                common: None,
            }),
        };
        if refuted.is_some() {
            refuting = refuted;
            return ControlFlow::Break(());
        }
        if first.is_none() {
            first = Some(sharing_witness(g, m));
        }
        ControlFlow::Continue(())
    })?;
    let def = g.vertex_count() - 2 * outcome.matching_number;
    let enumerated = |verdict, witness| VerificationReport {
        matchings_examined: outcome.count,
        exhaustive: outcome.exhaustive,
        witness,
        ..VerificationReport::new(verdict, Method::Enumeration, def)
    };
    if refuting.is_some() {
        return Ok(enumerated(Verdict::Holds, refuting));
    }
    if outcome.exhaustive {
        return Ok(enumerated(Verdict::Counterexample, first));
    }

    let certified = strong_counterexample_certificate(g).is_some()
        || (mode == PairMode::SomePair && {
            let classes = subindex_classes(g);
            !classes.is_empty() && weak_counterexample_certificate(g, &classes)?.is_some()
        });
    let mut report = enumerated(Verdict::Inconclusive, first);
    if certified {
        report.verdict = Verdict::Counterexample;
        report.method = Method::Certificate;
    }
    Ok(report)
}

/// Present when the deficiency is at least 2 and every two vertices of `D`
/// share a neighbor. Absence decides nothing.
pub fn strong_counterexample_certificate(g: &Multigraph) -> Option<StrongCertificate> {
    let ge = gallai_edmonds(g);
    let deficiency = ge.deficiency();
    if deficiency < 2 {
        return None;
    }
    let mut pairs = Vec::new();
    for (idx, &u) in ge.d.iter().enumerate() {
        for &v in &ge.d[idx + 1..] {
            pairs.push((u, v, g.first_common_neighbor(u, v)?));
        }
    }
    Some(StrongCertificate {
        deficiency,
        d: ge.d,
        pairs,
    })
}

fn check_classes(g: &Multigraph, classes: &[VertexClass]) -> Result<Vec<bool>, VerifyError> {
    let n = g.vertex_count();
    let mut covered = vec![false; n];
    for (idx, class) in classes.iter().enumerate() {
        if class.hub >= n {
            return Err(VerifyError::MalformedClass(format!(
                "class {idx}: hub {} out of range",
                class.hub
            )));
        }
        for &m in &class.members {
            if m >= n {
                return Err(VerifyError::MalformedClass(format!(
                    "class {idx}: member {m} out of range"
                )));
            }
            if !g.is_adjacent(class.hub, m) {
                return Err(VerifyError::MalformedClass(format!(
                    "class {idx}: hub {} not adjacent to member {m}",
                    class.hub
                )));
            }
            if covered[m] {
                return Err(VerifyError::MalformedClass(format!(
                    "class {idx}: member {m} appears in two classes"
                )));
            }
            covered[m] = true;
        }
    }
    Ok(covered)
}

/// Present when `D` lies inside the classes and the deficiency exceeds the
/// number of classes: some class then holds two exposed vertices, which share
/// its hub.
pub fn weak_counterexample_certificate(
    g: &Multigraph,
    classes: &[VertexClass],
) -> Result<Option<WeakCertificate>, VerifyError> {
    let covered = check_classes(g, classes)?;
    let ge = gallai_edmonds(g);
    let deficiency = ge.deficiency();
    if deficiency <= classes.len() || !ge.d.iter().all(|&v| covered[v]) {
        return Ok(None);
    }
    Ok(Some(WeakCertificate {
        deficiency,
        class_count: classes.len(),
        d: ge.d,
    }))
}

/// Runs [`conjecture_holds`] on a graph with `2 <= δ <= Δ <= 3`. Such graphs
/// are known to yield `Holds`, so a counterexample verdict is recorded as a
/// discrepancy.
pub fn check_theorem1(g: &Multigraph, cap: usize) -> Result<VerificationReport, VerifyError> {
    let min = g.min_degree().map_err(|_| VerifyError::Empty)?;
    let max = g.max_degree().map_err(|_| VerifyError::Empty)?;
    if !(2 <= min && max <= 3) {
        return Err(VerifyError::DegreeRange { min, max });
    }
    let mut report = conjecture_holds(g, cap)?;
    if report.verdict == Verdict::Counterexample {
        report.discrepancy =
            Some("subcubic graph with min degree 2 reported as counterexample".into());
    }
    Ok(report)
}

/// Does every maximum matching saturate `s`? Decided by `s ∩ D = ∅` and,
/// when enumeration finishes within `cap`, cross-checked against every
/// maximum matching.
pub fn all_maximum_matchings_saturate(
    g: &Multigraph,
    s: &[VertexId],
    cap: usize,
) -> Result<VerificationReport, VerifyError> {
    let n = g.vertex_count();
    if let Some(&v) = s.iter().find(|&&v| v >= n) {
        return Err(MatchingError::OutOfRange { v, n }.into());
    }
    let ge = gallai_edmonds(g);
    let claim_holds = !s.iter().any(|&v| ge.in_d(v));

    let mut exposing = None;
    let outcome = for_each_maximum_matching(g, cap, |m| {
        if exposing.is_none() && s.iter().any(|&v| !m.is_saturated(v)) {
            exposing = Some(m.clone());
        }
        ControlFlow::Continue(())
    })?;
    let mut report = VerificationReport {
        matchings_examined: outcome.count,
        exhaustive: outcome.exhaustive,
        witness: exposing.clone().map(|matching| Witness {
            matching,
            pair: None,
            common: None,
        }),
        ..VerificationReport::new(
            if claim_holds {
                Verdict::Holds
            } else {
                Verdict::Counterexample
            },
            Method::Certificate,
            ge.deficiency(),
        )
    };
    let enumerated_holds = exposing.is_none();
    if (outcome.exhaustive && enumerated_holds != claim_holds) || (claim_holds && !enumerated_holds)
    {
        report.discrepancy = Some(format!(
            "D-criterion says {claim_holds}, enumeration says {enumerated_holds}"
        ));
    }
    Ok(report)
}
