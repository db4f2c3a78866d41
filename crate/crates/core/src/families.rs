//! Constructors for four families of graphs whose maximum matchings always
//! expose two vertices with a common neighbor.
//!
//! Vertex layouts are fixed so callers can address vertices directly:
//!
//! * `B(r)`: the pair vertices `u(i,j)`, `1 <= i < j <= 2r`, in lexicographic
//!   order, then the copies `v_k^(i)` ordered by `(i, k)`.
//! * `G(r)`, `H(r)`, `F(r)`: hubs `x = 0`, `y = 1`, `z = 2`, then the triangle
//!   vertices `v_1^(i), v_2^(i), v_3^(i)` grouped by `i`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::matching::deficiency;
use crate::multigraph::{Hub, Multigraph, VertexId, VertexLabel};
use crate::verify::VertexClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `(2r, 2r−1)`-biregular bipartite, `r >= 2`.
    B,
    /// `(2r+1)`-regular with `2r+1` triangles, `r >= 3`.
    G,
    /// `G(r)` minus one `v_3 v_1` edge per triangle, `r >= 3`.
    H,
    /// `2r`-regular with `r` triangles, `r >= 5`.
    F,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::B, Family::G, Family::H, Family::F];

    pub fn min_r(self) -> u32 {
        match self {
            Family::B => 2,
            Family::G | Family::H => 3,
            Family::F => 5,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::B => "B",
            Family::G => "G",
            Family::H => "H",
            Family::F => "F",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "B" | "b" => Ok(Family::B),
            "G" | "g" => Ok(Family::G),
            "H" | "h" => Ok(Family::H),
            "F" | "f" => Ok(Family::F),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family {family} needs r >= {min}, got {r}")]
    ParameterTooSmall { family: Family, r: u32, min: u32 },
    #[error("family {family} with r = {r} is too large to build")]
    ParameterTooLarge { family: Family, r: u32 },
    #[error("unknown family `{0}` (expected B, G, H or F)")]
    UnknownFamily(String),
}

/// Largest `r` accepted by the builders; keeps vertex counts far below
/// anything that could overflow.
pub const MAX_R: u32 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub r: u32,
}

impl FamilySpec {
    pub fn new(family: Family, r: u32) -> Result<Self, FamilyError> {
        let min = family.min_r();
        if r < min {
            return Err(FamilyError::ParameterTooSmall { family, r, min });
        }
        if r > MAX_R {
            return Err(FamilyError::ParameterTooLarge { family, r });
        }
        Ok(FamilySpec { family, r })
    }

    pub fn build(&self) -> Multigraph {
        let r = self.r as usize;
        match self.family {
            Family::B => bipartite(r),
            Family::G => triangles_with_private_hubs(r),
            Family::H => thinned_triangles(r),
            Family::F => triangles_with_shared_hubs(r),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeProfile {
    Regular(usize),
    /// `(a, b)`-biregular bipartite with `a > b`.
    Biregular(usize, usize),
    Range {
        min: usize,
        max: usize,
    },
}

impl DegreeProfile {
    pub fn of(g: &Multigraph) -> Option<DegreeProfile> {
        if let Some(d) = g.regular_degree() {
            return Some(DegreeProfile::Regular(d));
        }
        if let Some(b) = g.classify_biregular_bipartite() {
            return Some(DegreeProfile::Biregular(b.degrees.0, b.degrees.1));
        }
        Some(DegreeProfile::Range {
            min: g.min_degree().ok()?,
            max: g.max_degree().ok()?,
        })
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DegreeProfile::Regular(d) => write!(f, "regular={d}"),
            DegreeProfile::Biregular(a, b) => write!(f, "biregular=({a},{b})"),
            DegreeProfile::Range { min, max } => write!(f, "min_degree={min} max_degree={max}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyStats {
    pub vertex_count: usize,
    pub weighted_edge_count: usize,
    pub degree_profile: DegreeProfile,
    pub deficiency: usize,
}

impl FamilyStats {
    /// Measures a built graph; the deficiency comes from a maximum matching.
    pub fn measure(g: &Multigraph) -> Option<FamilyStats> {
        Some(FamilyStats {
            vertex_count: g.vertex_count(),
            weighted_edge_count: g.edge_count(),
            degree_profile: DegreeProfile::of(g)?,
            deficiency: deficiency(g),
        })
    }
}

impl fmt::Display for FamilyStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} m={} {} def={}",
            self.vertex_count, self.weighted_edge_count, self.degree_profile, self.deficiency
        )
    }
}

/// Closed-form counts for a family member.
pub fn expected_stats(spec: FamilySpec) -> FamilyStats {
    let r = spec.r as usize;
    match spec.family {
        Family::B => FamilyStats {
            vertex_count: (2 * r * r - r) + 2 * r * r,
            weighted_edge_count: 2 * r * (2 * r * r - r),
            degree_profile: DegreeProfile::Biregular(2 * r, 2 * r - 1),
            deficiency: r,
        },
        Family::G => FamilyStats {
            vertex_count: 6 * r + 6,
            weighted_edge_count: (2 * r + 1) * (3 * r + 3),
            degree_profile: DegreeProfile::Regular(2 * r + 1),
            deficiency: 2 * r - 2,
        },
        Family::H => FamilyStats {
            vertex_count: 6 * r + 6,
            weighted_edge_count: (2 * r + 1) * (3 * r + 3) - (2 * r + 1),
            degree_profile: DegreeProfile::Range {
                min: 2 * r,
                max: 2 * r + 1,
            },
            deficiency: 2 * r - 2,
        },
        Family::F => FamilyStats {
            vertex_count: 3 * r + 3,
            weighted_edge_count: r * (3 * r + 3),
            degree_profile: DegreeProfile::Regular(2 * r),
            deficiency: r - 3,
        },
    }
}

pub fn build(family: Family, r: u32) -> Result<Multigraph, FamilyError> {
    Ok(FamilySpec::new(family, r)?.build())
}

pub fn build_b(r: u32) -> Result<Multigraph, FamilyError> {
    build(Family::B, r)
}

pub fn build_g(r: u32) -> Result<Multigraph, FamilyError> {
    build(Family::G, r)
}

pub fn build_h(r: u32) -> Result<Multigraph, FamilyError> {
    build(Family::H, r)
}

pub fn build_f(r: u32) -> Result<Multigraph, FamilyError> {
    build(Family::F, r)
}

pub fn hub_id(h: Hub) -> VertexId {
    match h {
        Hub::X => 0,
        Hub::Y => 1,
        Hub::Z => 2,
    }
}

/// Id of `v_k^(i)` in the triangle families.
pub fn triangle_vertex_id(k: u32, i: u32) -> VertexId {
    3 + 3 * (i as usize - 1) + (k as usize - 1)
}

/// Ids of the `U` side of `B(r)`.
pub fn b_pair_side(r: u32) -> Vec<VertexId> {
    let r = r as usize;
    (0..2 * r * r - r).collect()
}

/// Ids of the `V` side of `B(r)`.
pub fn b_copy_side(r: u32) -> Vec<VertexId> {
    let r = r as usize;
    let u = 2 * r * r - r;
    (u..u + 2 * r * r).collect()
}

fn label(g: &mut Multigraph, v: VertexId, l: VertexLabel) {
    g.set_label(v, l)
        .expect("builder labels are valid and distinct");
}

fn edges(g: &mut Multigraph, u: VertexId, v: VertexId, m: usize) {
    g.add_edges(u, v, m)
        .expect("builder edges are in range and loop-free");
}

fn bipartite(r: usize) -> Multigraph {
    let blocks = 2 * r;
    let pairs = blocks * (blocks - 1) / 2;
    let mut g = Multigraph::new(pairs + blocks * r);
    let copy = |k: usize, i: usize| pairs + (i - 1) * r + (k - 1);

    for i in 1..=blocks {
        for k in 1..=r {
            label(
                &mut g,
                copy(k, i),
                VertexLabel::Copy {
                    k: k as u32,
                    i: i as u32,
                },
            );
        }
    }
    let mut u = 0;
    for i in 1..=blocks {
        for j in i + 1..=blocks {
            label(
                &mut g,
                u,
                VertexLabel::Pair {
                    i: i as u32,
                    j: j as u32,
                },
            );
            for k in 1..=r {
                edges(&mut g, u, copy(k, i), 1);
                edges(&mut g, u, copy(k, j), 1);
            }
            u += 1;
        }
    }
    g
}

fn with_hubs_and_triangles(count: usize, multiplicity: usize) -> Multigraph {
    let mut g = Multigraph::new(3 + 3 * count);
    for h in Hub::ALL {
        label(&mut g, hub_id(h), VertexLabel::Hub(h));
    }
    for i in 1..=count as u32 {
        let [a, b, c] = [1, 2, 3].map(|k| triangle_vertex_id(k, i));
        for k in 1..=3 {
            label(&mut g, triangle_vertex_id(k, i), VertexLabel::Copy { k, i });
        }
        edges(&mut g, a, b, multiplicity);
        edges(&mut g, b, c, multiplicity);
        edges(&mut g, c, a, multiplicity);
    }
    g
}

fn triangles_with_private_hubs(r: usize) -> Multigraph {
    let count = 2 * r + 1;
    let mut g = with_hubs_and_triangles(count, r);
    for i in 1..=count as u32 {
        for (k, hub) in [(1, Hub::X), (2, Hub::Y), (3, Hub::Z)] {
            edges(&mut g, hub_id(hub), triangle_vertex_id(k, i), 1);
        }
    }
    g
}

fn thinned_triangles(r: usize) -> Multigraph {
    let mut g = triangles_with_private_hubs(r);
    for i in 1..=(2 * r + 1) as u32 {
        g.remove_edges(triangle_vertex_id(3, i), triangle_vertex_id(1, i), 1)
            .expect("v3-v1 bundle has multiplicity r >= 3");
    }
    g
}

fn triangles_with_shared_hubs(r: usize) -> Multigraph {
    let mut g = with_hubs_and_triangles(r, r - 1);
    for i in 1..=r as u32 {
        for (hub, k) in [
            (Hub::X, 1),
            (Hub::X, 2),
            (Hub::Y, 1),
            (Hub::Y, 3),
            (Hub::Z, 2),
            (Hub::Z, 3),
        ] {
            edges(&mut g, hub_id(hub), triangle_vertex_id(k, i), 1);
        }
    }
    g
}

/// Groups the `v_k^(i)` vertices of a labeled graph by subindex `k`, pairing
/// each group with the smallest hub adjacent to all of its members. Groups
/// without such a hub are skipped.
pub fn subindex_classes(g: &Multigraph) -> Vec<VertexClass> {
    let mut groups: std::collections::BTreeMap<u32, Vec<VertexId>> = Default::default();
    for v in g.vertices() {
        if let VertexLabel::Copy { k, .. } = g.label(v) {
            groups.entry(k).or_default().push(v);
        }
    }
    groups
        .into_values()
        .filter_map(|members| {
            let hub = Hub::ALL
                .iter()
                .filter_map(|&h| g.find(VertexLabel::Hub(h)))
                .find(|&h| members.iter().all(|&m| g.is_adjacent(h, m)))?;
            Some(VertexClass { hub, members })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::serialize_mgf;

    fn copy_id(g: &Multigraph, k: u32, i: u32) -> VertexId {
        g.find(VertexLabel::Copy { k, i }).unwrap()
    }

    #[test]
    fn parameter_bounds() {
        assert!(matches!(
            build_b(1),
            Err(FamilyError::ParameterTooSmall { min: 2, .. })
        ));
        assert!(build_g(2).is_err());
        assert!(build_h(2).is_err());
        assert!(matches!(
            build_f(4),
            Err(FamilyError::ParameterTooSmall { min: 5, .. })
        ));
        assert!(build_f(MAX_R + 1).is_err());
        assert_eq!(
            "x".parse::<Family>(),
            Err(FamilyError::UnknownFamily("x".into()))
        );
    }

    #[test]
    fn b2_layout() {
        let g = build_b(2).unwrap();
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edge_count(), 24);
        assert_eq!(g.label(0), VertexLabel::Pair { i: 1, j: 2 });
        assert_eq!(g.label(5), VertexLabel::Pair { i: 3, j: 4 });
        assert_eq!(g.label(6), VertexLabel::Copy { k: 1, i: 1 });
        assert_eq!(g.label(7), VertexLabel::Copy { k: 2, i: 1 });
        assert_eq!(g.label(8), VertexLabel::Copy { k: 1, i: 2 });
        let u12 = g.find(VertexLabel::Pair { i: 1, j: 2 }).unwrap();
        assert_eq!(g.degree(u12), Ok(4));
        assert_eq!(g.degree(copy_id(&g, 1, 1)), Ok(3));
        assert!(g.bundles().all(|(_, _, m)| m == 1));
        let b = g.classify_biregular_bipartite().unwrap();
        assert_eq!(b.degrees, (4, 3));
        assert_eq!(b.parts.0, b_pair_side(2));
        assert_eq!(b.parts.1, b_copy_side(2));
        assert!(g
            .common_neighbors(copy_id(&g, 1, 1), copy_id(&g, 1, 2))
            .unwrap()
            .contains(&u12));
    }

    #[test]
    fn b3_is_six_five_biregular() {
        let g = build_b(3).unwrap();
        let b = g.classify_biregular_bipartite().unwrap();
        assert_eq!(b.degrees, (6, 5));
        assert_eq!((b.parts.0.len(), b.parts.1.len()), (15, 18));
        assert_eq!(g.vertex_count(), 33);
    }

    #[test]
    fn g3_layout() {
        let g = build_g(3).unwrap();
        assert_eq!(g.vertex_count(), 24);
        assert_eq!(g.edge_count(), 84);
        assert_eq!(g.regular_degree(), Some(7));
        let x = hub_id(Hub::X);
        assert_eq!(g.degree(x), Ok(7));
        let v11 = copy_id(&g, 1, 1);
        assert_eq!(v11, triangle_vertex_id(1, 1));
        assert_eq!(g.multiplicity(v11, copy_id(&g, 2, 1)), 3);
        assert_eq!(
            g.support_neighbors(v11).unwrap(),
            vec![x, copy_id(&g, 2, 1), copy_id(&g, 3, 1)]
        );
        let g4 = build_g(4).unwrap();
        assert_eq!((g4.vertex_count(), g4.regular_degree()), (30, Some(9)));
    }

    #[test]
    fn h3_drops_one_edge_per_triangle() {
        let g = build_g(3).unwrap();
        let h = build_h(3).unwrap();
        assert_eq!(h.max_degree(), Ok(7));
        assert_eq!(h.min_degree(), Ok(6));
        assert_eq!(h.edge_count(), 77);
        assert_eq!(h.multiplicity(copy_id(&h, 3, 1), copy_id(&h, 1, 1)), 2);
        let changed: Vec<_> = g
            .bundles()
            .filter(|&(u, v, m)| h.multiplicity(u, v) != m)
            .collect();
        assert_eq!(changed.len(), 7);
        assert!(changed
            .iter()
            .all(|&(u, v, m)| h.multiplicity(u, v) + 1 == m));
        for v in h.vertices() {
            let expected = match h.label(v) {
                VertexLabel::Copy { k: 1 | 3, .. } => 6,
                _ => 7,
            };
            assert_eq!(h.degree(v), Ok(expected), "vertex {}", h.label(v));
        }
    }

    #[test]
    fn f5_layout() {
        let g = build_f(5).unwrap();
        assert_eq!(g.vertex_count(), 18);
        assert_eq!(g.edge_count(), 90);
        assert_eq!(g.regular_degree(), Some(10));
        assert_eq!(g.multiplicity(copy_id(&g, 2, 1), copy_id(&g, 3, 1)), 4);
        let (x, y) = (hub_id(Hub::X), hub_id(Hub::Y));
        assert_eq!(
            g.support_neighbors(copy_id(&g, 1, 1)).unwrap(),
            vec![x, y, copy_id(&g, 2, 1), copy_id(&g, 3, 1)]
        );
        assert!(g
            .common_neighbors(copy_id(&g, 1, 1), copy_id(&g, 2, 3))
            .unwrap()
            .contains(&x));
        let g6 = build_f(6).unwrap();
        assert_eq!((g6.vertex_count(), g6.regular_degree()), (21, Some(12)));
    }

    #[test]
    fn expected_stats_small_cases() {
        let s = expected_stats(FamilySpec::new(Family::B, 2).unwrap());
        assert_eq!((s.vertex_count, s.deficiency), (14, 2));
        let s = expected_stats(FamilySpec::new(Family::G, 3).unwrap());
        assert_eq!((s.vertex_count, s.deficiency), (24, 4));
        let s = expected_stats(FamilySpec::new(Family::F, 5).unwrap());
        assert_eq!((s.vertex_count, s.deficiency), (18, 2));
    }

    #[test]
    fn builders_are_deterministic() {
        for family in Family::ALL {
            let r = family.min_r();
            let a = serialize_mgf(&build(family, r).unwrap());
            let b = serialize_mgf(&build(family, r).unwrap());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn subindex_classes_of_g() {
        let g = build_g(3).unwrap();
        let classes = subindex_classes(&g);
        assert_eq!(classes.len(), 3);
        for (class, hub) in classes.iter().zip(Hub::ALL) {
            assert_eq!(class.hub, hub_id(hub));
            assert_eq!(class.members.len(), 7);
        }
    }
}
