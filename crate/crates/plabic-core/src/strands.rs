//! Zig-zag strands of a plabic graph, reducedness checks, alternating
//! region colorings, and the Stokes-front sampler.
//!
//! Rule of the road: a strand arriving at a vertex along dart `a` leaves
//! along `rot_next(a)` at white vertices and `rot_prev(a)` at black ones.
//! Strands end at boundary stubs. Every dart is traversed by exactly one
//! strand, so strands partition the darts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive};

use crate::error::{GraphError, NumericsError};
use crate::graph::{Color, DartId, EdgeId, FaceSet, PlabicGraph};
use crate::Rat;

/// One zig-zag strand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strand {
    /// Darts traversed tail-to-head, in order.
    pub transits: Vec<DartId>,
    /// Source and target boundary labels, or `None` for a closed strand.
    pub endpoints: Option<(usize, usize)>,
}

impl Strand {
    /// Edge-midpoint sequence: (edge id, forward flag). Forward means the
    /// transit runs from the even dart to the odd dart of the edge.
    pub fn edge_midpoint_sequence(&self) -> Vec<(EdgeId, bool)> {
        self.transits.iter().map(|&d| (d / 2, d % 2 == 0)).collect()
    }

    pub fn is_closed(&self) -> bool {
        self.endpoints.is_none()
    }
}

/// Boundary-to-boundary matching induced by the strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripPermutation {
    /// `mapping[i - 1]` is the target label of the strand leaving label i.
    pub mapping: Vec<usize>,
}

impl TripPermutation {
    pub fn n(&self) -> usize {
        self.mapping.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.mapping[i - 1]
    }

    /// Degenerate lollipop strands map a label to itself.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.mapping
            .iter()
            .enumerate()
            .filter(|(i, &t)| t == i + 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.mapping.len()];
        for &t in &self.mapping {
            if t == 0 || t > self.mapping.len() || seen[t - 1] {
                return false;
            }
            seen[t - 1] = true;
        }
        true
    }
}

fn exit_dart(g: &PlabicGraph, arrival: DartId) -> DartId {
    match g.color(g.vertex_of(arrival)) {
        Color::White => g.rot_next(arrival),
        Color::Black => g.rot_prev(arrival),
        Color::Boundary => arrival, // strands stop before this is used
    }
}

/// Trace all zig-zag strands. Every dart is used exactly once; strands
/// from boundary stubs come first (in label order), then closed strands.
pub fn zig_zag_strands(g: &PlabicGraph) -> Result<(Vec<Strand>, TripPermutation), GraphError> {
    g.require_valid()?;
    let nd = g.dart_count();
    let mut used = vec![false; nd];
    let mut strands = Vec::new();
    let mut mapping = vec![0usize; g.boundary_count()];
    for (idx, &b) in g.boundary().iter().enumerate() {
        let start = g.rotation(b)[0];
        let mut transits = Vec::new();
        let mut d = start;
        let target;
        loop {
            debug_assert!(!used[d], "dart traversed twice from the boundary");
            used[d] = true;
            transits.push(d);
            let arrival = g.involution(d);
            let head = g.vertex_of(arrival);
            if g.color(head) == Color::Boundary {
                target = g.boundary_label(head).unwrap();
                break;
            }
            d = exit_dart(g, arrival);
        }
        mapping[idx] = target;
        strands.push(Strand {
            transits,
            endpoints: Some((idx + 1, target)),
        });
    }
    // Closed strands on leftover darts.
    for start in 0..nd {
        if used[start] {
            continue;
        }
        let mut transits = Vec::new();
        let mut d = start;
        loop {
            if used[d] {
                break;
            }
            used[d] = true;
            transits.push(d);
            d = exit_dart(g, g.involution(d));
        }
        strands.push(Strand {
            transits,
            endpoints: None,
        });
    }
    Ok((strands, TripPermutation { mapping }))
}

/// Violation of one of the reducedness conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReducednessViolation {
    /// Condition 3: two strands crossing twice with matching transit order.
    ParallelBigon {
        strands: (usize, usize),
        edges: (EdgeId, EdgeId),
    },
    /// Condition 4: one strand carries both transits of a crossing edge.
    SelfIntersection { strand: usize, edge: EdgeId },
    /// Condition 5: a strand never reaches the boundary.
    ClosedStrand { strand: usize },
}

impl ReducednessViolation {
    /// Which numbered condition of the reducedness definition fails.
    pub fn condition(&self) -> u8 {
        match self {
            ReducednessViolation::ParallelBigon { .. } => 3,
            ReducednessViolation::SelfIntersection { .. } => 4,
            ReducednessViolation::ClosedStrand { .. } => 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducednessReport {
    pub violations: Vec<ReducednessViolation>,
}

impl ReducednessReport {
    pub fn is_reduced(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the strand-diagram reducedness conditions. Alternating boundary
/// orientations and the absence of cusps hold automatically in this
/// combinatorial model (each stub carries one inbound and one outbound
/// strand end, resolved in a fixed order), so the operative checks are:
/// no parallel bigons, no self-intersections, and no closed strands.
pub fn is_reduced(g: &PlabicGraph) -> Result<ReducednessReport, GraphError> {
    let (strands, _) = zig_zag_strands(g)?;
    let mut violations = Vec::new();
    // strand id and position for each dart
    let mut strand_of = vec![usize::MAX; g.dart_count()];
    let mut pos_of = vec![0usize; g.dart_count()];
    for (s, strand) in strands.iter().enumerate() {
        for (p, &d) in strand.transits.iter().enumerate() {
            strand_of[d] = s;
            pos_of[d] = p;
        }
        if strand.is_closed() {
            violations.push(ReducednessViolation::ClosedStrand { strand: s });
            // A closed strand cycles through its transits, which also
            // counts as a self-intersection of the diagram.
            violations.push(ReducednessViolation::SelfIntersection {
                strand: s,
                edge: strand.transits[0] / 2,
            });
        }
    }
    // Crossings sit on edges with one white and one black endpoint.
    let mut per_pair: BTreeMap<(usize, usize), Vec<(EdgeId, usize, usize)>> = BTreeMap::new();
    for e in 0..g.edge_count() {
        if !g.is_mixed_edge(e) {
            continue;
        }
        let (s0, s1) = (strand_of[2 * e], strand_of[2 * e + 1]);
        if s0 == s1 {
            if !strands[s0].is_closed() {
                violations.push(ReducednessViolation::SelfIntersection { strand: s0, edge: e });
            }
            continue;
        }
        if strands[s0].is_closed() || strands[s1].is_closed() {
            continue;
        }
        let (a, b) = if s0 < s1 { (s0, s1) } else { (s1, s0) };
        let (pa, pb) = if s0 < s1 {
            (pos_of[2 * e], pos_of[2 * e + 1])
        } else {
            (pos_of[2 * e + 1], pos_of[2 * e])
        };
        per_pair.entry((a, b)).or_default().push((e, pa, pb));
    }
    for ((a, b), crossings) in per_pair {
        for i in 0..crossings.len() {
            for j in (i + 1)..crossings.len() {
                let (e1, pa1, pb1) = crossings[i];
                let (e2, pa2, pb2) = crossings[j];
                // parallel: both strands meet e1 before e2 (or both after)
                if (pa1 < pa2) == (pb1 < pb2) {
                    violations.push(ReducednessViolation::ParallelBigon {
                        strands: (a, b),
                        edges: (e1, e2),
                    });
                }
            }
        }
    }
    Ok(ReducednessReport { violations })
}

/// Labels for regions of a front-projection complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionLabel {
    Black,
    White,
    Null,
}

/// What separates two consecutive border arcs of a region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separator {
    /// A transverse crossing of two strands.
    Crossing,
    /// The same strand continues smoothly.
    Smooth,
    /// An arc of the disk boundary intervenes.
    BoundaryArc,
}

/// A border arc between two regions, co-oriented toward one of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BorderArc {
    pub regions: (usize, usize),
    /// Index into `regions`: 0 or 1, the side the co-orientation points to.
    pub toward: u8,
}

impl BorderArc {
    fn points_toward(&self, region: usize) -> bool {
        if self.toward == 0 {
            self.regions.0 == region
        } else {
            self.regions.1 == region
        }
    }

    fn touches(&self, region: usize) -> bool {
        self.regions.0 == region || self.regions.1 == region
    }
}

/// Combinatorial model of the regions cut out by a strand diagram.
#[derive(Debug, Clone)]
pub struct RegionModel {
    pub region_count: usize,
    pub labels: Vec<RegionLabel>,
    pub arcs: Vec<BorderArc>,
    /// Boundary components per region: cyclic lists of (arc, separator to
    /// the next arc in the component).
    pub components: Vec<Vec<Vec<(usize, Separator)>>>,
}

impl RegionModel {
    /// Structural sanity: every arc names its region consistently.
    pub fn well_formed(&self) -> Result<(), GraphError> {
        for (r, comps) in self.components.iter().enumerate() {
            for comp in comps {
                for &(a, _) in comp {
                    if a >= self.arcs.len() {
                        return Err(GraphError::BadIndex(format!("arc {a} out of range")));
                    }
                    if !self.arcs[a].touches(r) {
                        return Err(GraphError::BadIndex(format!(
                            "arc {a} listed for region {r} it does not touch"
                        )));
                    }
                }
            }
        }
        if self.labels.len() != self.region_count {
            return Err(GraphError::BadIndex(String::from("label count mismatch")));
        }
        Ok(())
    }
}

/// Check the four alternating-coloring conditions for the given labels.
pub fn check_alternating(rm: &RegionModel) -> Result<bool, GraphError> {
    rm.well_formed()?;
    Ok(check_labels(rm, &rm.labels))
}

fn check_labels(rm: &RegionModel, labels: &[RegionLabel]) -> bool {
    // Condition 4: border compatibility.
    for arc in &rm.arcs {
        let (a, b) = (labels[arc.regions.0], labels[arc.regions.1]);
        match (a, b) {
            (RegionLabel::Black, RegionLabel::White) | (RegionLabel::White, RegionLabel::Black) => {
                return false
            }
            (RegionLabel::Null, RegionLabel::Null) => return false,
            _ => {}
        }
    }
    // Conditions 1-3 region by region.
    for (r, comps) in rm.components.iter().enumerate() {
        match labels[r] {
            RegionLabel::Black => {
                for comp in comps {
                    for &(a, _) in comp {
                        if !rm.arcs[a].points_toward(r) {
                            return false;
                        }
                    }
                }
            }
            RegionLabel::White => {
                for comp in comps {
                    for &(a, _) in comp {
                        if rm.arcs[a].points_toward(r) {
                            return false;
                        }
                    }
                }
            }
            RegionLabel::Null => {
                for comp in comps {
                    let k = comp.len();
                    for i in 0..k {
                        let (a, sep) = comp[i];
                        let (b, _) = comp[(i + 1) % k];
                        let ta = rm.arcs[a].points_toward(r);
                        let tb = rm.arcs[b].points_toward(r);
                        match sep {
                            Separator::Crossing if ta == tb => return false,
                            Separator::Smooth if ta != tb => return false,
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    true
}

/// All valid labelings of the model, found by exhaustive search with
/// early pruning. When every region abuts a crossing the result has at
/// most one entry.
pub fn solve_alternating(rm: &RegionModel) -> Result<Vec<Vec<RegionLabel>>, GraphError> {
    rm.well_formed()?;
    let mut out = Vec::new();
    let mut labels = vec![RegionLabel::Null; rm.region_count];
    fn rec(
        rm: &RegionModel,
        labels: &mut Vec<RegionLabel>,
        i: usize,
        out: &mut Vec<Vec<RegionLabel>>,
    ) {
        if i == rm.region_count {
            if check_labels(rm, labels) {
                out.push(labels.clone());
            }
            return;
        }
        for lab in [RegionLabel::Black, RegionLabel::White, RegionLabel::Null] {
            labels[i] = lab;
            // prune on arcs whose regions are both already labeled
            let ok = rm.arcs.iter().all(|arc| {
                let (x, y) = arc.regions;
                if x > i || y > i {
                    return true;
                }
                !matches!(
                    (labels[x], labels[y]),
                    (RegionLabel::Black, RegionLabel::White)
                        | (RegionLabel::White, RegionLabel::Black)
                        | (RegionLabel::Null, RegionLabel::Null)
                )
            });
            if ok {
                rec(rm, labels, i + 1, out);
            }
        }
        labels[i] = RegionLabel::Null;
    }
    rec(rm, &mut labels, 0, &mut out);
    Ok(out)
}

/// Region model induced by the strand diagram of a plabic graph, labeled
/// by the graph colors: one region per group of internal vertices joined
/// through same-colored edges, one null region per face.
pub fn region_model_from_graph(g: &PlabicGraph) -> Result<RegionModel, GraphError> {
    g.require_valid()?;
    let fs = FaceSet::build(g);
    let nv = g.vertex_count();
    // Merge internal vertices across same-colored internal edges.
    let mut group = (0..nv).collect::<Vec<usize>>();
    fn find(group: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while group[r] != r {
            r = group[r];
        }
        let mut c = x;
        while group[c] != r {
            let n = group[c];
            group[c] = r;
            c = n;
        }
        r
    }
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        if g.color(u) != Color::Boundary && g.color(u) == g.color(v) {
            let (ru, rv) = (find(&mut group, u), find(&mut group, v));
            group[ru] = rv;
        }
    }
    let mut region_of_vertex = vec![usize::MAX; nv];
    let mut labels = Vec::new();
    for v in 0..nv {
        if g.color(v) == Color::Boundary {
            continue;
        }
        let r = find(&mut group, v);
        if region_of_vertex[r] == usize::MAX {
            region_of_vertex[r] = labels.len();
            labels.push(match g.color(r) {
                Color::White => RegionLabel::White,
                Color::Black => RegionLabel::Black,
                Color::Boundary => unreachable!(),
            });
        }
        region_of_vertex[v] = region_of_vertex[r];
    }
    let vertex_regions = labels.len();
    let face_region = |f: usize| vertex_regions + f;
    for _ in 0..fs.faces.len() {
        labels.push(RegionLabel::Null);
    }
    // One arc per dart with an internal tail, at the corner
    // (d, rot_next(d)): between the vertex group and the face left of d.
    let nd = g.dart_count();
    let mut arc_of_dart = vec![usize::MAX; nd];
    let mut arcs = Vec::new();
    for d in 0..nd {
        let v = g.vertex_of(d);
        if g.color(v) == Color::Boundary {
            continue;
        }
        let vr = region_of_vertex[v];
        let fr = face_region(fs.left_face(d));
        let toward = if g.color(v) == Color::White { 1 } else { 0 };
        arc_of_dart[d] = arcs.len();
        arcs.push(BorderArc {
            regions: (vr, fr),
            toward,
        });
    }
    let mut components: Vec<Vec<Vec<(usize, Separator)>>> =
        vec![Vec::new(); vertex_regions + fs.faces.len()];
    // Vertex-region components: walk corners, jumping through corridors
    // along same-colored edges.
    let mut seen = vec![false; nd];
    for start in 0..nd {
        if seen[start] || g.color(g.vertex_of(start)) == Color::Boundary {
            continue;
        }
        let region = region_of_vertex[g.vertex_of(start)];
        let mut comp = Vec::new();
        let mut d = start;
        loop {
            seen[d] = true;
            let next_corner = g.rot_next(d);
            let e = g.edge_of(next_corner);
            let head = g.vertex_of(g.involution(next_corner));
            let (sep, nd2) = if g.color(head) == Color::Boundary {
                (Separator::BoundaryArc, next_corner)
            } else if g.is_mixed_edge(e) {
                (Separator::Crossing, next_corner)
            } else {
                // corridor: continue at the far endpoint
                (Separator::Smooth, g.involution(next_corner))
            };
            comp.push((arc_of_dart[d], sep));
            d = nd2;
            if d == start {
                break;
            }
        }
        components[region].push(comp);
    }
    // Face-region components from the face walks.
    for face in &fs.faces {
        let region = face_region(face.id);
        if face.boundary_walk.is_empty() {
            components[region].push(Vec::new());
            continue;
        }
        let mut comp: Vec<(usize, Separator)> = Vec::new();
        let walk = &face.boundary_walk;
        for &d in walk {
            let tail = g.vertex_of(d);
            if tail < nv && g.color(tail) == Color::Boundary {
                continue; // stub-tail corner carries no arc
            }
            let head = g.vertex_of(g.involution(d));
            let sep = if g.color(head) == Color::Boundary {
                Separator::BoundaryArc
            } else if g.is_mixed_edge(g.edge_of(d)) {
                Separator::Crossing
            } else {
                Separator::Smooth
            };
            comp.push((arc_of_dart[d], sep));
        }
        components[region].push(comp);
    }
    let rm = RegionModel {
        region_count: labels.len(),
        labels,
        arcs,
        components,
    };
    rm.well_formed()?;
    Ok(rm)
}

/// Sampled Stokes front for the operator family `d^2 - z^n`.
#[derive(Debug, Clone)]
pub struct StokesFront {
    /// Sampled values of the exponent curve of the solution with the
    /// upper sign choice.
    pub curve_plus: Vec<f64>,
    /// The opposite-sign curve.
    pub curve_minus: Vec<f64>,
    /// Number of sign changes of their difference over one period.
    pub crossing_count: usize,
}

/// Exact sign of cos(pi * q) for rational q: 1, 0, or -1.
fn cos_pi_sign(q: &Rat) -> i8 {
    // reduce q modulo 2 into [0, 2)
    let two = Rat::from_integer(2.into());
    let mut r = q.clone();
    let f = (r.clone() / two.clone()).floor();
    r -= f * two;
    if r.is_negative() {
        r += Rat::from_integer(2.into());
    }
    let half = Rat::new(1.into(), 2.into());
    let three_half = Rat::new(3.into(), 2.into());
    if r == half || r == three_half {
        0
    } else if r < half || r > three_half {
        1
    } else {
        -1
    }
}

/// Sample the two exponent curves of the Stokes diagram of `d^2 - z^n`
/// over one period and count their crossings. The curves are the real
/// parts of the leading exponents of the two formal solutions on the
/// circle of radius epsilon; the dominance order swaps where their
/// difference changes sign. Crossing counting uses the exact sign of the
/// closed form, not floating comparison.
pub fn stokes_front(n: u32, epsilon: &Rat, samples: usize) -> Result<StokesFront, NumericsError> {
    if n < 1 {
        return Err(NumericsError::OutOfDomain(String::from("need n >= 1")));
    }
    if !epsilon.is_positive() {
        return Err(NumericsError::OutOfDomain(String::from("need epsilon > 0")));
    }
    if samples < 8 * (n as usize + 2) {
        return Err(NumericsError::OutOfDomain(format!(
            "need at least {} samples",
            8 * (n as usize + 2)
        )));
    }
    let m = n as f64 + 2.0;
    let eps = epsilon.numer().to_f64().unwrap_or(f64::NAN)
        / epsilon.denom().to_f64().unwrap_or(f64::NAN);
    let amp = (2.0 / m) * libm::pow(eps, -m / 2.0);
    let mut curve_plus = Vec::with_capacity(samples);
    let mut curve_minus = Vec::with_capacity(samples);
    let mut signs: Vec<i8> = Vec::with_capacity(samples + 1);
    // For odd n+2 the exponents are double-valued in theta, so the period
    // is traversed on a fixed branch: signs run over the closed interval
    // [0, 2pi] rather than cyclically.
    for i in 0..=samples {
        let q = Rat::new(((n as i64 + 2) * i as i64).into(), (samples as i64).into());
        signs.push(cos_pi_sign(&q));
        if i == samples {
            break;
        }
        let theta = 2.0 * core::f64::consts::PI * i as f64 / samples as f64;
        let c = libm::cos(m * theta / 2.0);
        curve_plus.push(-amp * c);
        curve_minus.push(amp * c);
    }
    let nonzero: Vec<i8> = signs.iter().copied().filter(|s| *s != 0).collect();
    let mut crossing_count = 0;
    for w in nonzero.windows(2) {
        if w[0] != w[1] {
            crossing_count += 1;
        }
    }
    Ok(StokesFront {
        curve_plus,
        curve_minus,
        crossing_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn star3_black() -> PlabicGraph {
        PlabicGraph::from_edge_lists(
            vec![Color::Black, Color::Boundary, Color::Boundary, Color::Boundary],
            &[(0, 1), (0, 2), (0, 3)],
            &[vec![0, 1, 2], vec![0], vec![1], vec![2]],
            vec![1, 2, 3],
        )
        .unwrap()
    }

    #[test]
    fn star3_trip_is_shift_back() {
        let g = star3_black();
        let (strands, trip) = zig_zag_strands(&g).unwrap();
        assert_eq!(trip.mapping, vec![3, 1, 2]);
        assert!(strands.iter().all(|s| !s.is_closed()));
        let total: usize = strands.iter().map(|s| s.transits.len()).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn white_star_shifts_forward() {
        let g = PlabicGraph::from_edge_lists(
            vec![Color::White, Color::Boundary, Color::Boundary, Color::Boundary],
            &[(0, 1), (0, 2), (0, 3)],
            &[vec![0, 1, 2], vec![0], vec![1], vec![2]],
            vec![1, 2, 3],
        )
        .unwrap();
        let (_, trip) = zig_zag_strands(&g).unwrap();
        assert_eq!(trip.mapping, vec![2, 3, 1]);
    }

    #[test]
    fn lollipop_is_a_fixed_point() {
        let g = PlabicGraph::from_edge_lists(
            vec![Color::White, Color::Boundary],
            &[(0, 1)],
            &[vec![0], vec![0]],
            vec![1],
        )
        .unwrap();
        let (_, trip) = zig_zag_strands(&g).unwrap();
        assert_eq!(trip.fixed_points(), vec![1]);
    }

    #[test]
    fn doubled_edge_is_a_parallel_bigon() {
        let g = PlabicGraph::from_edge_lists(
            vec![Color::White, Color::Black, Color::Boundary, Color::Boundary],
            &[(0, 1), (0, 1), (0, 2), (1, 3)],
            &[vec![2, 0, 1], vec![3, 1, 0], vec![2], vec![3]],
            vec![2, 3],
        )
        .unwrap();
        assert!(g.validate().is_ok(), "{:?}", g.validate());
        let rep = is_reduced(&g).unwrap();
        assert!(rep.violations.iter().any(|v| v.condition() == 3));
    }

    #[test]
    fn self_loop_is_a_self_intersection() {
        let g = PlabicGraph::from_edge_lists(
            vec![Color::White, Color::Boundary],
            &[(0, 0), (0, 1)],
            &[vec![1, 0, 0], vec![1]],
            vec![1],
        )
        .unwrap();
        assert!(g.validate().is_ok(), "{:?}", g.validate());
        let rep = is_reduced(&g).unwrap();
        assert!(rep.violations.iter().any(|v| v.condition() == 4));
    }

    #[test]
    fn star_region_model_is_alternating() {
        let g = star3_black();
        let rm = region_model_from_graph(&g).unwrap();
        assert!(check_alternating(&rm).unwrap());
    }

    #[test]
    fn concentric_circles_have_two_colorings() {
        // inner circle co-oriented outward, outer inward; regions
        // 0 = inner disk, 1 = annulus, 2 = outside.
        let arcs = vec![
            BorderArc { regions: (0, 1), toward: 1 },
            BorderArc { regions: (1, 2), toward: 0 },
        ];
        let components = vec![
            vec![vec![(0, Separator::Smooth)]],
            vec![vec![(0, Separator::Smooth)], vec![(1, Separator::Smooth)]],
            vec![vec![(1, Separator::Smooth)]],
        ];
        let mut rm = RegionModel {
            region_count: 3,
            labels: vec![RegionLabel::White, RegionLabel::Null, RegionLabel::White],
            arcs,
            components,
        };
        assert!(check_alternating(&rm).unwrap());
        rm.labels = vec![RegionLabel::Null, RegionLabel::Black, RegionLabel::Null];
        assert!(check_alternating(&rm).unwrap());
        rm.labels = vec![RegionLabel::Black, RegionLabel::Null, RegionLabel::Null];
        assert!(!check_alternating(&rm).unwrap());
        let all = solve_alternating(&rm).unwrap();
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn stokes_crossings_match_braid_index() {
        for n in 1..=12u32 {
            let f = stokes_front(n, &rat(1, 10), (8 * (n as usize + 2)).max(128)).unwrap();
            assert_eq!(f.crossing_count, n as usize + 2, "n = {n}");
        }
    }

    #[test]
    fn stokes_rejects_small_sampling() {
        assert!(stokes_front(1, &rat(1, 10), 8).is_err());
        assert!(stokes_front(0, &rat(1, 10), 100).is_err());
    }
}
