//! Standard graph constructions: wiring graphs from braid words,
//! concentric-circle graphs from double words (cut to a disk), the
//! triangular graphs embedded in ideal triangles, polygon assemblies,
//! and big-cell graphs.
//!
//! All constructions compute rotations from an explicit planar placement
//! by sorting edge directions counterclockwise, so the results are valid
//! combinatorial maps by construction.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::{Color, PlabicGraph, VertexId};

/// Helper that accumulates vertices with plane positions and edges, then
/// derives counterclockwise rotations by angle sorting.
#[derive(Default)]
struct Builder {
    colors: Vec<Color>,
    pos: Vec<(f64, f64)>,
    edges: Vec<(VertexId, VertexId)>,
    boundary: Vec<VertexId>,
}

impl Builder {
    fn vertex(&mut self, color: Color, x: f64, y: f64) -> VertexId {
        self.colors.push(color);
        self.pos.push((x, y));
        self.colors.len() - 1
    }

    fn edge(&mut self, u: VertexId, v: VertexId) -> usize {
        self.edges.push((u, v));
        self.edges.len() - 1
    }

    /// Attach a boundary stub at the given position.
    fn stub(&mut self, v: VertexId, x: f64, y: f64) -> VertexId {
        let b = self.vertex(Color::Boundary, x, y);
        self.edge(v, b);
        self.boundary.push(b);
        b
    }

    fn finish(self) -> Result<PlabicGraph, GraphError> {
        let n = self.colors.len();
        let mut incident: Vec<Vec<(f64, usize)>> = vec![Vec::new(); n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let du = angle(self.pos[u], self.pos[v]);
            let dv = angle(self.pos[v], self.pos[u]);
            incident[u].push((du, e));
            incident[v].push((dv, e));
        }
        let mut rotations = Vec::with_capacity(n);
        for list in incident.iter_mut() {
            list.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite angles"));
            rotations.push(list.iter().map(|&(_, e)| e).collect::<Vec<_>>());
        }
        PlabicGraph::from_edge_lists(self.colors, &self.edges, &rotations, self.boundary)
    }
}

fn angle(from: (f64, f64), to: (f64, f64)) -> f64 {
    libm::atan2(to.1 - from.1, to.0 - from.0)
}

/// Wiring graph of a braid word: n horizontal lines with white end
/// vertices; the j-th letter s_{i_j} adds a vertical rung at x = j
/// joining lines i_j and i_j + 1, with a black vertex on the upper line
/// and a white vertex on the lower. Boundary stubs sit at the 2n line
/// ends, labeled counterclockwise starting up the right side.
pub fn wiring_graph(n: usize, word: &[usize]) -> Result<PlabicGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadIndex(String::from("need at least one strand")));
    }
    for &s in word {
        if s == 0 || s >= n {
            return Err(GraphError::BadIndex(format!(
                "letter s_{s} out of range for {n} strands"
            )));
        }
    }
    let k = word.len();
    let mut b = Builder::default();
    // attachment points per line, keyed by x position
    let mut on_line: Vec<Vec<(usize, VertexId)>> = vec![Vec::new(); n + 1];
    let mut rungs = Vec::new();
    for (j, &s) in word.iter().enumerate() {
        let x = (j + 1) as f64;
        let lower = b.vertex(Color::White, x, s as f64);
        let upper = b.vertex(Color::Black, x, (s + 1) as f64);
        on_line[s].push((j + 1, lower));
        on_line[s + 1].push((j + 1, upper));
        rungs.push((lower, upper));
    }
    let mut left_ends = Vec::new();
    let mut right_ends = Vec::new();
    for i in 1..=n {
        let y = i as f64;
        let l = b.vertex(Color::White, 0.0, y);
        let r = b.vertex(Color::White, (k + 1) as f64, y);
        let mut chain = vec![l];
        chain.extend(on_line[i].iter().map(|&(_, v)| v));
        chain.push(r);
        for w in chain.windows(2) {
            b.edge(w[0], w[1]);
        }
        left_ends.push(l);
        right_ends.push(r);
    }
    for (lower, upper) in rungs {
        b.edge(lower, upper);
    }
    // boundary: up the right side (lines 1..n), then down the left
    for (i, &r) in right_ends.iter().enumerate() {
        b.stub(r, (k + 2) as f64, (i + 1) as f64);
    }
    for (i, &l) in left_ends.iter().enumerate().rev() {
        b.stub(l, -1.0, (i + 1) as f64);
    }
    b.finish()
}

/// Which puncture a double-word letter belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tau {
    Zero,
    Infinity,
}

/// Concentric-circle graph of a double word, cut to a disk along a ray.
/// Circle i (1-based, innermost first) carries a white vertex on the
/// positive x-axis; the j-th letter adds a radial rung at phase
/// 2 pi j / (k+1) joining the two circles nearest its puncture, black
/// endpoint closest to the puncture. The cut exposes paired stubs,
/// labeled 1..n up one side of the cut and n+1..2n back down the other.
pub fn double_word_graph(n: usize, word: &[(usize, Tau)]) -> Result<PlabicGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadIndex(String::from("need at least one circle")));
    }
    for &(s, _) in word {
        if s == 0 || s >= n + 1 {
            return Err(GraphError::BadIndex(format!("letter s_{s} out of range")));
        }
    }
    // letters touching circles i and i+1 need i+1 <= n
    for &(s, _) in word {
        if s + 1 > n {
            return Err(GraphError::BadIndex(format!(
                "letter s_{s} needs circle {} of {n}",
                s + 1
            )));
        }
    }
    let k = word.len();
    let tau = 2.0 * core::f64::consts::PI;
    let cut_phase = tau * (k as f64 + 0.5) / (k as f64 + 1.0);
    let mut b = Builder::default();
    // vertices per circle, keyed by phase
    let mut on_circle: Vec<Vec<(f64, VertexId)>> = vec![Vec::new(); n + 1];
    for i in 1..=n {
        let w = b.vertex(Color::White, i as f64, 0.0);
        on_circle[i].push((0.0, w));
    }
    for (j, &(s, t)) in word.iter().enumerate() {
        let phase = tau * (j + 1) as f64 / (k as f64 + 1.0);
        let (inner, outer) = match t {
            Tau::Zero => (s, s + 1),
            Tau::Infinity => (n - s, n + 1 - s),
        };
        let (ci, co) = match t {
            // black at the endpoint closest to the puncture
            Tau::Zero => (Color::Black, Color::White),
            Tau::Infinity => (Color::White, Color::Black),
        };
        let vi = b.vertex(ci, inner as f64 * libm::cos(phase), inner as f64 * libm::sin(phase));
        let vo = b.vertex(co, outer as f64 * libm::cos(phase), outer as f64 * libm::sin(phase));
        b.edge(vi, vo);
        on_circle[inner].push((phase, vi));
        on_circle[outer].push((phase, vo));
    }
    // circle arcs from one cut side to the other, and the paired stubs
    let mut side_a = Vec::new();
    let mut side_b = Vec::new();
    for i in 1..=n {
        let radius = i as f64;
        let mut pts = on_circle[i].clone();
        pts.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        // cut sits after the last letter phase and before full turn
        let first = pts[0].1;
        let last = pts[pts.len() - 1].1;
        for w in pts.windows(2) {
            b.edge(w[0].1, w[1].1);
        }
        // stubs toward the cut on both sides
        let eps = 0.2;
        let a = b.vertex(
            Color::Boundary,
            radius * libm::cos(cut_phase - eps),
            radius * libm::sin(cut_phase - eps),
        );
        b.edge(last, a);
        side_a.push(a);
        let bb = b.vertex(
            Color::Boundary,
            radius * libm::cos(cut_phase + eps),
            radius * libm::sin(cut_phase + eps),
        );
        b.edge(first, bb);
        side_b.push(bb);
    }
    // counterclockwise: out along side B (inner to outer), back along
    // side A (outer to inner)
    for &v in side_b.iter() {
        b.boundary.push(v);
    }
    for &v in side_a.iter().rev() {
        b.boundary.push(v);
    }
    b.finish()
}

/// The triangular graph of rank n embedded in one triangle. Rank one is
/// the trivalent black star with three boundary whites; for larger rank
/// the upward cells of the n^2-triangle subdivision carry white centers,
/// the downward cells black centers, and each side carries n boundary
/// whites attached to its adjacent upward cells. Every boundary white
/// carries a stub, labeled counterclockwise around the triangle.
pub fn triangle_graph(n: usize) -> Result<PlabicGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadIndex(String::from("rank must be positive")));
    }
    let mut b = Builder::default();
    if n == 1 {
        let c = b.vertex(Color::Black, 0.0, 0.0);
        let angles = [90.0f64, 210.0, 330.0];
        for a in angles {
            let (x, y) = dir(a);
            let w = b.vertex(Color::White, x, y);
            b.edge(c, w);
            b.stub(w, 1.6 * x, 1.6 * y);
        }
        return b.finish();
    }
    // corners of the big triangle
    let ca = dir(90.0);
    let cb = dir(210.0);
    let cc = dir(330.0);
    let bary = |a: f64, bq: f64, c: f64| -> (f64, f64) {
        let s = a + bq + c;
        (
            (a * ca.0 + bq * cb.0 + c * cc.0) / s,
            (a * ca.1 + bq * cb.1 + c * cc.1) / s,
        )
    };
    let m = n as i64;
    // white centers of upward cells (a+b+c = n-1)
    let mut white: BTreeMap<(i64, i64, i64), VertexId> = BTreeMap::new();
    for a in 0..m {
        for bq in 0..(m - a) {
            let c = m - 1 - a - bq;
            let p = bary(a as f64 + 1.0 / 3.0, bq as f64 + 1.0 / 3.0, c as f64 + 1.0 / 3.0);
            white.insert((a, bq, c), b.vertex(Color::White, p.0, p.1));
        }
    }
    // black centers of downward cells (a+b+c = n-2), joined to the three
    // neighboring upward cells
    for a in 0..(m - 1) {
        for bq in 0..(m - 1 - a) {
            let c = m - 2 - a - bq;
            let p = bary(a as f64 + 2.0 / 3.0, bq as f64 + 2.0 / 3.0, c as f64 + 2.0 / 3.0);
            let v = b.vertex(Color::Black, p.0, p.1);
            for w in [(a + 1, bq, c), (a, bq + 1, c), (a, bq, c + 1)] {
                b.edge(v, white[&w]);
            }
        }
    }
    // boundary whites: n per side, counterclockwise side order A->B,
    // B->C, C->A; each attaches to the upward cell on that side.
    let mut add_side = |b: &mut Builder, cell: &dyn Fn(i64) -> (i64, i64, i64), ends: ((f64, f64), (f64, f64))| {
        for t in 0..m {
            let (p, q) = ends;
            let frac = (t as f64 + 0.5) / n as f64;
            let x = p.0 + (q.0 - p.0) * frac;
            let y = p.1 + (q.1 - p.1) * frac;
            let w = b.vertex(Color::White, x, y);
            b.edge(w, white[&cell(t)]);
            b.stub(w, 1.25 * x, 1.25 * y);
        }
    };
    add_side(&mut b, &|t| (m - 1 - t, t, 0), (ca, cb));
    add_side(&mut b, &|t| (0, m - 1 - t, t), (cb, cc));
    add_side(&mut b, &|t| (t, 0, m - 1 - t), (cc, ca));
    b.finish()
}

fn dir(degrees: f64) -> (f64, f64) {
    let r = degrees * core::f64::consts::PI / 180.0;
    (libm::cos(r), libm::sin(r))
}

/// A triangulation of the convex polygon with vertices 1..n, as triangles
/// of 1-based vertex labels.
pub type Triangulation = Vec<(usize, usize, usize)>;

/// The fan triangulation from vertex 1.
pub fn fan_triangulation(n: usize) -> Triangulation {
    (2..n).map(|i| (1, i, i + 1)).collect()
}

/// Check that a triangle list is an ideal triangulation of the polygon.
fn validate_triangulation(n: usize, tris: &Triangulation) -> Result<(), GraphError> {
    if n < 3 || tris.len() != n - 2 {
        return Err(GraphError::BadIndex(format!(
            "{} triangles cannot triangulate a {n}-gon",
            tris.len()
        )));
    }
    let mut edge_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(a, bq, c) in tris {
        let mut t = [a, bq, c];
        t.sort_unstable();
        if t[0] == t[1] || t[1] == t[2] || t[0] == 0 || t[2] > n {
            return Err(GraphError::BadIndex(format!("bad triangle {a},{bq},{c}")));
        }
        for (x, y) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            *edge_count.entry((x, y)).or_insert(0) += 1;
        }
    }
    for ((x, y), c) in edge_count {
        let boundary_edge = y == x + 1 || (x == 1 && y == n);
        let want = if boundary_edge { 1 } else { 2 };
        if c != want {
            return Err(GraphError::BadIndex(format!(
                "edge {x}-{y} bounds {c} triangles, want {want}"
            )));
        }
    }
    Ok(())
}

/// Assemble copies of the rank-n triangle graph over an ideal polygon
/// triangulation, identifying the white vertices on shared diagonals.
/// For rank one this is the classical dictionary: one black vertex per
/// triangle, white vertices at the polygon corners carrying the stubs.
pub fn polygon_assembly(n: usize, ngon: usize, tris: &Triangulation) -> Result<PlabicGraph, GraphError> {
    validate_triangulation(ngon, tris)?;
    let tau = 2.0 * core::f64::consts::PI;
    let corner = |i: usize| -> (f64, f64) {
        let a = tau * (0.25 + (i as f64 - 1.0) / ngon as f64);
        (libm::cos(a), libm::sin(a))
    };
    let mut b = Builder::default();
    if n == 1 {
        let mut whites = Vec::with_capacity(ngon);
        for i in 1..=ngon {
            let (x, y) = corner(i);
            whites.push(b.vertex(Color::White, x, y));
        }
        for &(p, q, r) in tris {
            let (cx, cy) = centroid(corner(p), corner(q), corner(r));
            let v = b.vertex(Color::Black, cx, cy);
            // order the three corners counterclockwise around the centroid
            b.edge(v, whites[p - 1]);
            b.edge(v, whites[q - 1]);
            b.edge(v, whites[r - 1]);
        }
        for (i, &w) in whites.iter().enumerate() {
            let (x, y) = corner(i + 1);
            b.stub(w, 1.3 * x, 1.3 * y);
        }
        return b.finish();
    }
    // rank >= 2: place a triangle graph in each face, sharing the n side
    // whites along every diagonal.
    let mut side_whites: BTreeMap<(usize, usize, i64), VertexId> = BTreeMap::new();
    for &(p, q, r) in tris {
        let (pa, pb, pc) = (corner(p), corner(q), corner(r));
        let bary = |a: f64, bb: f64, c: f64| -> (f64, f64) {
            let s = a + bb + c;
            (
                (a * pa.0 + bb * pb.0 + c * pc.0) / s,
                (a * pa.1 + bb * pb.1 + c * pc.1) / s,
            )
        };
        let m = n as i64;
        let mut white: BTreeMap<(i64, i64, i64), VertexId> = BTreeMap::new();
        for a in 0..m {
            for bb in 0..(m - a) {
                let c = m - 1 - a - bb;
                let pnt = bary(a as f64 + 1.0 / 3.0, bb as f64 + 1.0 / 3.0, c as f64 + 1.0 / 3.0);
                white.insert((a, bb, c), b.vertex(Color::White, pnt.0, pnt.1));
            }
        }
        for a in 0..(m - 1) {
            for bb in 0..(m - 1 - a) {
                let c = m - 2 - a - bb;
                let pnt = bary(a as f64 + 2.0 / 3.0, bb as f64 + 2.0 / 3.0, c as f64 + 2.0 / 3.0);
                let v = b.vertex(Color::Black, pnt.0, pnt.1);
                for w in [(a + 1, bb, c), (a, bb + 1, c), (a, bb, c + 1)] {
                    b.edge(v, white[&w]);
                }
            }
        }
        // sides: (corner x, corner y, position t counted from min(x, y))
        let sides: [((usize, usize), (f64, f64), (f64, f64), &dyn Fn(i64) -> (i64, i64, i64)); 3] = [
            ((p, q), pa, pb, &|t| (m - 1 - t, t, 0)),
            ((q, r), pb, pc, &|t| (0, m - 1 - t, t)),
            ((p, r), pa, pc, &|t| (m - 1 - t, 0, t)),
        ];
        for (ends, e0, e1, cell) in sides {
            let (lo, hi) = (ends.0.min(ends.1), ends.0.max(ends.1));
            for t in 0..m {
                // position counted from the lower-numbered corner
                let from_lo = if ends.0 == lo { t } else { m - 1 - t };
                let key = (lo, hi, from_lo);
                let v = *side_whites.entry(key).or_insert_with(|| {
                    let frac = (t as f64 + 0.5) / n as f64;
                    let x = e0.0 + (e1.0 - e0.0) * frac;
                    let y = e0.1 + (e1.1 - e0.1) * frac;
                    b.vertex(Color::White, x, y)
                });
                b.edge(v, white[&cell(t)]);
            }
        }
    }
    // stubs on polygon sides, counterclockwise
    for i in 1..=ngon {
        let j = if i == ngon { 1 } else { i + 1 };
        let (lo, hi) = (i.min(j), i.max(j));
        for t in 0..n as i64 {
            let from_lo = t;
            let v = side_whites[&(lo, hi, from_lo)];
            // outward position
            let e0 = corner(lo);
            let e1 = corner(hi);
            let frac = (t as f64 + 0.5) / n as f64;
            let x = e0.0 + (e1.0 - e0.0) * frac;
            let y = e0.1 + (e1.1 - e0.1) * frac;
            b.stub(v, 1.3 * x, 1.3 * y);
        }
    }
    b.finish()
}

fn centroid(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> (f64, f64) {
    ((a.0 + b.0 + c.0) / 3.0, (a.1 + b.1 + c.1) / 3.0)
}

/// Reduced graph of the big positroid cell of Gr(k, n): a k x (n-k)
/// checkerboard grid with stubs down the last column and along the last
/// row (the corner carries both), labeled counterclockwise.
pub fn big_cell(k: usize, n: usize) -> Result<PlabicGraph, GraphError> {
    if k == 0 || k >= n {
        return Err(GraphError::BadIndex(format!("need 0 < k < n, got ({k}, {n})")));
    }
    // Rank one and corank one are stars; the grid degenerates there.
    if k == 1 || k + 1 == n {
        let mut b = Builder::default();
        let tau = 2.0 * core::f64::consts::PI;
        if k == 1 {
            let c = b.vertex(Color::White, 0.0, 0.0);
            for i in 0..n {
                let a = tau * i as f64 / n as f64;
                b.stub(c, libm::cos(a), libm::sin(a));
            }
        } else {
            let c = b.vertex(Color::Black, 0.0, 0.0);
            for i in 0..n {
                let a = tau * i as f64 / n as f64;
                let (x, y) = (libm::cos(a), libm::sin(a));
                let w = b.vertex(Color::White, x, y);
                b.edge(c, w);
                b.stub(w, 1.3 * x, 1.3 * y);
            }
        }
        return b.finish();
    }
    // General case: stack boundary bridges over a ring of lollipops,
    // following a reduced word for the shift-by-k permutation. Each
    // bridge at (a, a+1) precomposes the boundary matching with the
    // transposition, so the word's product is the big-cell matching;
    // a reduced word keeps the graph reduced. The seed lollipop leaves
    // are pruned afterwards (strands just turn around them).
    let mut perm: Vec<usize> = (0..n).map(|i| (i + k) % n + 1).collect();
    let mut word = Vec::new();
    loop {
        // smallest a whose value sits right of the value a+1
        let posn = |p: &[usize], v: usize| p.iter().position(|&x| x == v).unwrap();
        let mut chosen = None;
        for a in 1..n {
            if posn(&perm, a) > posn(&perm, a + 1) {
                chosen = Some(a);
                break;
            }
        }
        match chosen {
            None => break,
            Some(a) => {
                let (pa, pb) = (posn(&perm, a), posn(&perm, a + 1));
                perm.swap(pa, pb);
                word.push(a);
            }
        }
    }
    let mut g = lollipop_ring(n)?;
    for a in word {
        g = add_bridge(&g, a)?;
    }
    Ok(prune_internal_leaves(&g))
}

/// A ring of white lollipops: boundary label i attached to its own
/// internal white leaf.
fn lollipop_ring(n: usize) -> Result<PlabicGraph, GraphError> {
    let mut b = Builder::default();
    let tau = 2.0 * core::f64::consts::PI;
    for i in 0..n {
        let a = tau * i as f64 / n as f64;
        let w = b.vertex(Color::White, 0.7 * libm::cos(a), 0.7 * libm::sin(a));
        b.stub(w, libm::cos(a), libm::sin(a));
    }
    b.finish()
}

/// Insert a bridge between boundary labels a and a+1 (1-based, linear):
/// a new white vertex on leg a and a new black vertex on leg a+1 joined
/// by an edge. The boundary matching picks up the transposition of the
/// two labels.
pub fn add_bridge(g: &PlabicGraph, a: usize) -> Result<PlabicGraph, GraphError> {
    let n = g.boundary_count();
    if a == 0 || a >= n {
        return Err(GraphError::BadIndex(format!("bridge position {a} of {n}")));
    }
    let bi = g.boundary()[a - 1];
    let bj = g.boundary()[a];
    let di = g.rotation(bi)[0];
    let dj = g.rotation(bj)[0];
    let (ei, ej) = (g.edge_of(di), g.edge_of(dj));
    let ai = g.vertex_of(g.involution(di)); // old inner endpoint of leg a
    let aj = g.vertex_of(g.involution(dj));
    let mut colors: Vec<Color> = (0..g.vertex_count()).map(|v| g.color(v)).collect();
    let w = colors.len();
    colors.push(Color::White);
    let bk = colors.len();
    colors.push(Color::Black);
    // reuse stub-edge slots for the inner halves so rotations at the old
    // inner endpoints keep their edge ids
    let mut edges: Vec<(usize, usize)> = (0..g.edge_count()).map(|e| g.endpoints(e)).collect();
    let swap_end = |pair: &mut (usize, usize), from: usize, to: usize| {
        if pair.0 == from {
            pair.0 = to;
        } else {
            pair.1 = to;
        }
    };
    swap_end(&mut edges[ei], bi, w); // now joins old inner part to w
    swap_end(&mut edges[ej], bj, bk);
    let stub_i = edges.len();
    edges.push((w, bi));
    let stub_j = edges.len();
    edges.push((bk, bj));
    let bridge = edges.len();
    edges.push((w, bk));
    let mut rotations: Vec<Vec<usize>> = (0..g.vertex_count())
        .map(|v| g.rotation(v).iter().map(|&d| g.edge_of(d)).collect())
        .collect();
    rotations[bi] = vec![stub_i];
    rotations[bj] = vec![stub_j];
    // counterclockwise at the new vertices: outward stub, then the side
    // toward the partner, then inward.
    rotations.push(vec![stub_i, bridge, ei]); // at w
    rotations.push(vec![stub_j, ej, bridge]); // at bk
    if ai == bi || aj == bj {
        return Err(GraphError::BadIndex(String::from("leg is a bare stub")));
    }
    PlabicGraph::from_edge_lists(colors, &edges, &rotations, g.boundary().to_vec())
}

/// Remove internal degree-one vertices not adjacent to the boundary
/// (strands turn around such leaves, so the boundary matching is
/// unchanged; genuine lollipops hanging off a stub are kept).
pub fn prune_internal_leaves(g: &PlabicGraph) -> PlabicGraph {
    let mut cur = g.clone();
    loop {
        let mut target = None;
        for v in 0..cur.vertex_count() {
            if cur.color(v) == Color::Boundary || cur.degree(v) != 1 {
                continue;
            }
            let d = cur.rotation(v)[0];
            let other = cur.vertex_of(cur.involution(d));
            if cur.color(other) == Color::Boundary {
                continue;
            }
            if cur.degree(other) <= 1 {
                continue; // isolated dumbbell, leave it alone
            }
            target = Some((v, cur.edge_of(d)));
            break;
        }
        let Some((v, dead_edge)) = target else {
            return cur;
        };
        let mut colors = Vec::new();
        let mut vmap = vec![usize::MAX; cur.vertex_count()];
        for x in 0..cur.vertex_count() {
            if x != v {
                vmap[x] = colors.len();
                colors.push(cur.color(x));
            }
        }
        let mut emap = vec![usize::MAX; cur.edge_count()];
        let mut edges = Vec::new();
        for e in 0..cur.edge_count() {
            if e == dead_edge {
                continue;
            }
            let (x, y) = cur.endpoints(e);
            emap[e] = edges.len();
            edges.push((vmap[x], vmap[y]));
        }
        let mut rotations = Vec::new();
        for x in 0..cur.vertex_count() {
            if x == v {
                continue;
            }
            rotations.push(
                cur.rotation(x)
                    .iter()
                    .map(|&d| cur.edge_of(d))
                    .filter(|&e| e != dead_edge)
                    .map(|e| emap[e])
                    .collect::<Vec<_>>(),
            );
        }
        let boundary = cur.boundary().iter().map(|&b| vmap[b]).collect();
        match PlabicGraph::from_edge_lists(colors, &edges, &rotations, boundary) {
            Ok(next) => cur = next,
            Err(_) => return cur,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{dual_quiver, faces};
    use crate::strands::{is_reduced, zig_zag_strands};

    #[test]
    fn empty_wiring_word_makes_bars() {
        let g = wiring_graph(2, &[]).unwrap();
        assert!(g.validate().is_ok(), "{:?}", g.validate());
        assert_eq!(g.boundary_count(), 4);
        let (_, trip) = zig_zag_strands(&g).unwrap();
        assert!(trip.is_bijection());
    }

    #[test]
    fn wiring_graph_matches_three_strand_picture() {
        let g = wiring_graph(3, &[2, 1, 2]).unwrap();
        assert!(g.validate().is_ok(), "{:?}", g.validate());
        // 6 line-end whites, 3 rung whites, 3 rung blacks, 6 stubs
        let whites = (0..g.vertex_count())
            .filter(|&v| g.color(v) == Color::White)
            .count();
        let blacks = (0..g.vertex_count())
            .filter(|&v| g.color(v) == Color::Black)
            .count();
        assert_eq!(whites, 9);
        assert_eq!(blacks, 3);
        assert_eq!(g.boundary_count(), 6);
        assert!(is_reduced(&g).unwrap().is_reduced());
    }

    #[test]
    fn nonreduced_word_has_parallel_bigon() {
        // s_1 s_1 is not reduced: the strand diagram acquires a bigon
        let g = wiring_graph(2, &[1, 1]).unwrap();
        let rep = is_reduced(&g).unwrap();
        assert!(rep.violations.iter().any(|v| v.condition() == 3));
    }

    #[test]
    fn double_word_circle_is_a_bar() {
        let g = double_word_graph(1, &[]).unwrap();
        assert!(g.validate().is_ok(), "{:?}", g.validate());
        assert_eq!(g.boundary_count(), 2);
    }

    #[test]
    fn double_word_single_letter_structure() {
        let g = double_word_graph(2, &[(1, Tau::Infinity)]).unwrap();
        assert!(g.validate().is_ok(), "{:?}", g.validate());
        // 2 circle whites + rung (white inner, black outer) + 4 stubs
        let blacks: Vec<_> = (0..g.vertex_count())
            .filter(|&v| g.color(v) == Color::Black)
            .collect();
        assert_eq!(blacks.len(), 1);
        assert_eq!(g.boundary_count(), 4);
        // the black endpoint sits on the outer circle for tau = infinity
        let g0 = double_word_graph(2, &[(1, Tau::Zero)]).unwrap();
        assert!(g0.validate().is_ok());
    }

    #[test]
    fn double_word_opposite_phases() {
        let g = double_word_graph(2, &[(1, Tau::Zero), (1, Tau::Infinity)]).unwrap();
        assert!(g.validate().is_ok(), "{:?}", g.validate());
        let blacks = (0..g.vertex_count())
            .filter(|&v| g.color(v) == Color::Black)
            .count();
        assert_eq!(blacks, 2);
    }

    #[test]
    fn rank_one_triangle_is_the_black_star() {
        let g = triangle_graph(1).unwrap();
        assert!(g.validate().is_ok());
        let (_, trip) = zig_zag_strands(&g).unwrap();
        assert_eq!(trip.mapping, vec![3, 1, 2]);
    }

    #[test]
    fn rank_three_triangle_counts() {
        let g = triangle_graph(3).unwrap();
        assert!(g.validate().is_ok(), "{:?}", g.validate());
        let blacks = (0..g.vertex_count())
            .filter(|&v| g.color(v) == Color::Black)
            .count();
        let whites = (0..g.vertex_count())
            .filter(|&v| g.color(v) == Color::White)
            .count();
        assert_eq!(blacks, 3);
        assert_eq!(whites, 6 + 9);
        // one hexagonal interior face, dual to the single interior point
        // of the nine-triangle subdivision
        let fs = faces(&g).unwrap();
        assert_eq!(fs.interior_count(), 1);
        let hex = fs.interior_faces().next().unwrap();
        assert_eq!(hex.boundary_walk.len(), 6);
        // each side's strands cross to the opposite side
        let (_, trip) = zig_zag_strands(&g).unwrap();
        assert!(trip.is_bijection());
        for i in 1..=9usize {
            let side = (i - 1) / 3;
            let tside = (trip.apply(i) - 1) / 3;
            assert_ne!(side, tside, "strand {i} stays on its side");
        }
    }

    #[test]
    fn pentagon_fan_is_the_a2_graph() {
        let g = polygon_assembly(1, 5, &fan_triangulation(5)).unwrap();
        assert!(g.validate().is_ok(), "{:?}", g.validate());
        let fs = faces(&g).unwrap();
        assert_eq!(fs.interior_count(), 2);
        assert_eq!(fs.boundary_count(), 5);
        let q = dual_quiver(&g).unwrap();
        assert_eq!(q.rank(), 2);
        let total: i64 = q.arrow_count[0].iter().map(|x| x.abs()).sum();
        assert_eq!(total, 1, "{:?}", q.arrow_count);
        let (_, trip) = zig_zag_strands(&g).unwrap();
        assert_eq!(trip.mapping, vec![3, 4, 5, 1, 2]);
        assert!(is_reduced(&g).unwrap().is_reduced());
    }

    #[test]
    fn big_cell_trips_shift_by_k() {
        for (k, n) in [
            (1usize, 3usize),
            (1, 4),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 6),
            (3, 7),
            (2, 9),
            (4, 9),
        ] {
            let g = big_cell(k, n).unwrap();
            assert!(g.validate().is_ok(), "({k},{n}): {:?}", g.validate());
            let (_, trip) = zig_zag_strands(&g).unwrap();
            for i in 1..=n {
                assert_eq!(trip.apply(i), (i + k - 1) % n + 1, "({k},{n}) at {i}");
            }
            assert!(is_reduced(&g).unwrap().is_reduced(), "({k},{n})");
        }
    }
}
