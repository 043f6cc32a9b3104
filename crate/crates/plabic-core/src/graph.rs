//! Embedded bicolored graphs on a disk as combinatorial maps.
//!
//! A graph is stored as a set of darts (half-edges): edge `e` owns darts
//! `2e` and `2e+1`, so the involution pairing the two darts of an edge is
//! `d ^ 1`. Every vertex carries a counterclockwise rotation of its
//! incident darts. Boundary vertices are degree-one stubs listed in
//! counterclockwise order; their position in that list is the boundary
//! label (1-based).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;

pub type VertexId = usize;
pub type DartId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    White,
    Black,
    Boundary,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
            Color::Boundary => Color::Boundary,
        }
    }
}

/// A bicolored combinatorial map on a disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlabicGraph {
    /// Vertex owning each dart; dart `2e` and `2e+1` belong to edge `e`.
    vertex_of: Vec<VertexId>,
    /// Color per vertex.
    color: Vec<Color>,
    /// Counterclockwise rotation at each vertex, as dart lists.
    rotation: Vec<Vec<DartId>>,
    /// Boundary vertices in counterclockwise order; index = label - 1.
    boundary: Vec<VertexId>,
}

impl PlabicGraph {
    /// Assemble a graph from edges given as vertex pairs and per-vertex
    /// rotations given as edge lists (a self-loop lists its edge twice).
    pub fn from_edge_lists(
        colors: Vec<Color>,
        edges: &[(VertexId, VertexId)],
        rotations_by_edge: &[Vec<EdgeId>],
        boundary: Vec<VertexId>,
    ) -> Result<PlabicGraph, GraphError> {
        let nv = colors.len();
        if rotations_by_edge.len() != nv {
            return Err(GraphError::BadIndex(format!(
                "{} rotations for {} vertices",
                rotations_by_edge.len(),
                nv
            )));
        }
        let mut vertex_of = vec![usize::MAX; 2 * edges.len()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= nv || v >= nv {
                return Err(GraphError::BadIndex(format!("edge {e} endpoint out of range")));
            }
            vertex_of[2 * e] = u;
            vertex_of[2 * e + 1] = v;
        }
        // Translate rotations from edge ids to dart ids.
        let mut used = vec![false; 2 * edges.len()];
        let mut rotation: Vec<Vec<DartId>> = Vec::with_capacity(nv);
        for (v, rot) in rotations_by_edge.iter().enumerate() {
            let mut darts = Vec::with_capacity(rot.len());
            for &e in rot {
                if e >= edges.len() {
                    return Err(GraphError::BadIndex(format!("rotation of {v} names edge {e}")));
                }
                let (a, b) = (2 * e, 2 * e + 1);
                let d = if vertex_of[a] == v && !used[a] {
                    a
                } else if vertex_of[b] == v && !used[b] {
                    b
                } else {
                    return Err(GraphError::BadIndex(format!(
                        "edge {e} not incident (or over-used) at vertex {v}"
                    )));
                };
                used[d] = true;
                darts.push(d);
            }
            rotation.push(darts);
        }
        Ok(PlabicGraph {
            vertex_of,
            color: colors,
            rotation,
            boundary,
        })
    }

    pub fn dart_count(&self) -> usize {
        self.vertex_of.len()
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_of.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.color.len()
    }

    /// Number of boundary stubs (= the n of the disk picture).
    pub fn boundary_count(&self) -> usize {
        self.boundary.len()
    }

    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    /// 1-based boundary label of a vertex, if it is a boundary vertex.
    pub fn boundary_label(&self, v: VertexId) -> Option<usize> {
        self.boundary.iter().position(|&b| b == v).map(|i| i + 1)
    }

    pub fn involution(&self, d: DartId) -> DartId {
        d ^ 1
    }

    pub fn edge_of(&self, d: DartId) -> EdgeId {
        d / 2
    }

    pub fn vertex_of(&self, d: DartId) -> VertexId {
        self.vertex_of[d]
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.color[v]
    }

    pub fn rotation(&self, v: VertexId) -> &[DartId] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    /// Endpoints of an edge (tail of dart 2e, tail of dart 2e+1).
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.vertex_of[2 * e], self.vertex_of[2 * e + 1])
    }

    /// An edge is mixed if its endpoints are white and black.
    pub fn is_mixed_edge(&self, e: EdgeId) -> bool {
        let (u, v) = self.endpoints(e);
        matches!(
            (self.color[u], self.color[v]),
            (Color::White, Color::Black) | (Color::Black, Color::White)
        )
    }

    /// An edge touching a boundary vertex.
    pub fn is_stub_edge(&self, e: EdgeId) -> bool {
        let (u, v) = self.endpoints(e);
        self.color[u] == Color::Boundary || self.color[v] == Color::Boundary
    }

    /// Position of dart `d` in its vertex rotation.
    fn rot_index(&self, d: DartId) -> usize {
        let v = self.vertex_of[d];
        self.rotation[v]
            .iter()
            .position(|&x| x == d)
            .expect("dart missing from its rotation")
    }

    /// Counterclockwise successor of `d` around its vertex.
    pub fn rot_next(&self, d: DartId) -> DartId {
        let v = self.vertex_of[d];
        let rot = &self.rotation[v];
        let i = self.rot_index(d);
        rot[(i + 1) % rot.len()]
    }

    /// Clockwise successor (rotation predecessor) of `d`.
    pub fn rot_prev(&self, d: DartId) -> DartId {
        let v = self.vertex_of[d];
        let rot = &self.rotation[v];
        let i = self.rot_index(d);
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// Validate all structural invariants; report-valued.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let nd = self.dart_count();
        // Every dart in exactly one rotation.
        let mut owner = vec![0usize; nd];
        for (v, rot) in self.rotation.iter().enumerate() {
            for &d in rot {
                if d >= nd {
                    violations.push(format!("rotation of vertex {v} names unknown dart {d}"));
                    continue;
                }
                owner[d] += 1;
                if self.vertex_of[d] != v {
                    violations.push(format!("dart {d} sits in rotation of {v} but belongs to {}", self.vertex_of[d]));
                }
            }
        }
        for (d, &c) in owner.iter().enumerate() {
            if c == 0 {
                violations.push(format!("dart {d} missing from all rotations"));
            } else if c > 1 {
                violations.push(format!("dart {d} multiply owned"));
            }
        }
        // Boundary vertices: flagged color, degree one, no duplicates.
        for (i, &b) in self.boundary.iter().enumerate() {
            if b >= self.vertex_count() {
                violations.push(format!("boundary entry {i} out of range"));
                continue;
            }
            if self.color[b] != Color::Boundary {
                violations.push(format!("boundary vertex {b} not colored boundary"));
            }
            if self.rotation[b].len() != 1 {
                violations.push(format!(
                    "boundary vertex {b} has degree {} (want 1)",
                    self.rotation[b].len()
                ));
            }
        }
        for (v, &c) in self.color.iter().enumerate() {
            let on_list = self.boundary.contains(&v);
            if (c == Color::Boundary) != on_list {
                violations.push(format!("vertex {v} boundary color/list mismatch"));
            }
        }
        let mut sorted = self.boundary.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.boundary.len() {
            violations.push(String::from("duplicate boundary vertex"));
        }
        if !violations.is_empty() {
            return ValidationReport { violations };
        }
        // Every component must reach the boundary circle (components are
        // allowed to be disjoint when they partition the boundary without
        // crossings, as in direct sums; the closed-map Euler check below
        // rejects interleaved components).
        if self.vertex_count() > 0 {
            let mut seen = vec![false; self.vertex_count()];
            let mut stack: Vec<usize> = self.boundary.clone();
            for &b in &self.boundary {
                seen[b] = true;
            }
            while let Some(v) = stack.pop() {
                for &d in &self.rotation[v] {
                    let w = self.vertex_of[self.involution(d)];
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if seen.iter().any(|&s| !s) {
                violations.push(String::from("component not attached to the boundary"));
            }
        }
        if violations.is_empty() {
            // Disk type: the map closed off with the boundary circle must be
            // a sphere, so V - E + F = 2 on the augmented map.
            let faces = FaceSet::build(self);
            let n = self.boundary.len();
            let v_aug = self.vertex_count();
            let e_aug = self.edge_count() + n;
            let f_aug = faces.faces.len() + 1; // plus the outer face
            if v_aug as i64 - e_aug as i64 + f_aug as i64 != 2 {
                violations.push(format!(
                    "not of disk type: V - E + F = {} on the closed map",
                    v_aug as i64 - e_aug as i64 + f_aug as i64
                ));
            }
        }
        ValidationReport { violations }
    }

    /// Validate and error out on failure.
    pub fn require_valid(&self) -> Result<(), GraphError> {
        let rep = self.validate();
        if rep.is_ok() {
            Ok(())
        } else {
            Err(GraphError::InvalidGraph(rep.violations.join("; ")))
        }
    }

    /// Recolor one vertex in place (used by the square move).
    pub fn set_color(&mut self, v: VertexId, c: Color) {
        self.color[v] = c;
    }

    /// Contract an internal degree-two vertex, merging its two edges.
    /// Refuses when the contraction would create a self-loop or when the
    /// vertex is not an internal degree-two vertex.
    pub fn contract_degree2(&self, v: VertexId) -> Option<PlabicGraph> {
        if self.color[v] == Color::Boundary || self.rotation[v].len() != 2 {
            return None;
        }
        let (d0, d1) = (self.rotation[v][0], self.rotation[v][1]);
        let a = self.involution(d0);
        let b = self.involution(d1);
        let (u, w) = (self.vertex_of[a], self.vertex_of[b]);
        if u == v || w == v || u == w {
            return None;
        }
        // Rebuild without vertex v; edges of d0, d1 merge into one new edge
        // whose darts take the rotation slots of a (at u) and b (at w).
        let dead_edges = [self.edge_of(d0), self.edge_of(d1)];
        let mut edge_map = vec![usize::MAX; self.edge_count()];
        let mut new_edges: Vec<(VertexId, VertexId)> = Vec::new();
        for e in 0..self.edge_count() {
            if dead_edges.contains(&e) {
                continue;
            }
            edge_map[e] = new_edges.len();
            new_edges.push(self.endpoints(e));
        }
        let merged = new_edges.len();
        new_edges.push((u, w));

        let mut vmap = vec![usize::MAX; self.vertex_count()];
        let mut colors = Vec::new();
        for x in 0..self.vertex_count() {
            if x != v {
                vmap[x] = colors.len();
                colors.push(self.color[x]);
            }
        }
        let remap_edges = |old: &(VertexId, VertexId)| (vmap[old.0], vmap[old.1]);
        let new_edges: Vec<(VertexId, VertexId)> = new_edges.iter().map(remap_edges).collect();

        let mut rotations: Vec<Vec<EdgeId>> = Vec::new();
        for x in 0..self.vertex_count() {
            if x == v {
                continue;
            }
            let rot = self.rotation[x]
                .iter()
                .map(|&d| {
                    if d == a || d == b {
                        merged
                    } else {
                        edge_map[self.edge_of(d)]
                    }
                })
                .collect();
            rotations.push(rot);
        }
        let boundary = self.boundary.iter().map(|&b| vmap[b]).collect();
        PlabicGraph::from_edge_lists(colors, &new_edges, &rotations, boundary).ok()
    }

    /// Split a vertex along the corner `(d, rot_next(d))`: the two darts of
    /// that corner move to a new vertex of the same color, joined to the
    /// old one by a fresh edge. Faces are preserved; the face at the corner
    /// gains the new edge on its walk. Returns the new graph.
    pub fn split_corner(&self, d: DartId) -> Result<PlabicGraph, GraphError> {
        let v = self.vertex_of[d];
        if self.color[v] == Color::Boundary {
            return Err(GraphError::BadIndex(String::from("cannot split a boundary stub")));
        }
        let d2 = self.rot_next(d);
        if d2 == d {
            return Err(GraphError::BadIndex(String::from("vertex too small to split")));
        }
        let mut edges: Vec<(VertexId, VertexId)> = (0..self.edge_count()).map(|e| self.endpoints(e)).collect();
        let mut colors = self.color.clone();
        let new_v = colors.len();
        colors.push(self.color[v]);
        let link = edges.len();
        edges.push((v, new_v));
        // Move the endpoints of the corner darts to the new vertex.
        let mut vertex_of = self.vertex_of.clone();
        vertex_of.push(v);
        vertex_of.push(new_v);
        vertex_of[d] = new_v;
        vertex_of[d2] = new_v;
        let fix = |x: DartId| -> VertexId { vertex_of[x] };
        let mut new_edges = Vec::with_capacity(edges.len());
        for (e, _) in edges.iter().enumerate() {
            new_edges.push((fix(2 * e), fix(2 * e + 1)));
        }
        // Rotations: at v replace the contiguous pair (d, d2) by the link
        // edge; the new vertex reads [d, d2, link] counterclockwise.
        let mut rotations: Vec<Vec<EdgeId>> = Vec::with_capacity(colors.len());
        for x in 0..self.vertex_count() {
            if x == v {
                let mut rot = Vec::new();
                let old = &self.rotation[v];
                let i = old.iter().position(|&y| y == d).unwrap();
                // start after d2 and walk around, then insert the link.
                let len = old.len();
                rot.push(link);
                for k in 2..len {
                    rot.push(self.edge_of(old[(i + k) % len]));
                }
                rotations.push(rot);
            } else {
                rotations.push(self.rotation[x].iter().map(|&y| self.edge_of(y)).collect());
            }
        }
        rotations.push(vec![self.edge_of(d), self.edge_of(d2), link]);
        // Self-loops at v complicate the edge-list translation; the graphs
        // this operation runs on never carry them.
        PlabicGraph::from_edge_lists(colors, &new_edges, &rotations, self.boundary.clone())
    }
}

/// Report from `validate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// One face of the disk picture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    /// Graph darts on the walk, in order; the face lies on the left of
    /// each dart read as tail-to-head.
    pub boundary_walk: Vec<DartId>,
    /// True when the walk meets no boundary stub and no boundary arc.
    pub is_interior: bool,
}

/// All faces of the graph, computed on the map closed off by the boundary
/// circle. Boundary arcs between consecutive stubs separate the n boundary
/// faces; the face outside the circle is dropped.
#[derive(Debug, Clone)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    /// Face on the left of each dart (tail-to-head).
    face_of_dart: Vec<FaceId>,
}

impl FaceSet {
    /// Walk the faces of the closed map. `rot_next(involution(d))` is the
    /// next dart of the face on the left of `d`.
    pub fn build(g: &PlabicGraph) -> FaceSet {
        let n = g.boundary_count();
        let nd = g.dart_count();
        // Augmented darts: graph darts 0..nd, then circle darts. Circle
        // edge i joins boundary vertex i to i+1; dart nd+2i sits at vertex
        // boundary[i] heading forward, nd+2i+1 at boundary[(i+1)%n].
        let total = nd + 2 * n;
        let invol = |d: DartId| -> DartId { d ^ 1 };
        // rotation at boundary vertex i (counterclockwise, interior to the
        // left of the circle): [toward i+1, stub, toward i-1].
        let rot_next_aug = |d: DartId| -> DartId {
            if d < nd {
                let v = g.vertex_of(d);
                if g.color(v) != Color::Boundary {
                    return g.rot_next(d);
                }
                // stub dart at boundary vertex i: next ccw is the dart
                // toward i-1, i.e. the reverse dart of circle edge i-1.
                let i = g.boundary_label(v).unwrap() - 1;
                let prev = (i + n - 1) % n;
                nd + 2 * prev + 1
            } else {
                let k = d - nd;
                let i = k / 2;
                if k % 2 == 0 {
                    // forward dart at vertex i: next ccw is the stub there.
                    g.rotation(g.boundary()[i])[0]
                } else {
                    // backward dart at vertex i+1: next ccw is forward dart
                    // of circle edge i+1.
                    let j = (i + 1) % n;
                    nd + 2 * j
                }
            }
        };
        let mut face_of = vec![usize::MAX; total];
        let mut faces: Vec<Face> = Vec::new();
        for start in 0..total {
            if face_of[start] != usize::MAX {
                continue;
            }
            let mut walk_all = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = faces.len();
                walk_all.push(d);
                d = rot_next_aug(invol(d));
                if d == start {
                    break;
                }
            }
            let graph_darts: Vec<DartId> = walk_all.iter().copied().filter(|&x| x < nd).collect();
            let has_circle = walk_all.len() != graph_darts.len();
            let has_stub = graph_darts
                .iter()
                .any(|&x| g.color(g.vertex_of(x)) == Color::Boundary || g.color(g.vertex_of(invol(x))) == Color::Boundary);
            faces.push(Face {
                id: 0,
                boundary_walk: graph_darts,
                is_interior: !has_circle && !has_stub,
            });
        }
        // Drop the pure-circle outer face (walk of backward circle darts).
        let mut keep: Vec<Face> = Vec::new();
        let mut remap = vec![usize::MAX; faces.len()];
        for (i, f) in faces.into_iter().enumerate() {
            let pure_outer = f.boundary_walk.is_empty() && n > 0;
            if pure_outer {
                continue;
            }
            remap[i] = keep.len();
            keep.push(f);
        }
        for (i, f) in keep.iter_mut().enumerate() {
            f.id = i;
        }
        let face_of_dart = (0..nd).map(|d| remap[face_of[d]]).collect();
        FaceSet {
            faces: keep,
            face_of_dart,
        }
    }

    /// Face on the left of dart `d` read tail-to-head.
    pub fn left_face(&self, d: DartId) -> FaceId {
        self.face_of_dart[d]
    }

    /// Face on the right of dart `d`.
    pub fn right_face(&self, d: DartId) -> FaceId {
        self.face_of_dart[d ^ 1]
    }

    pub fn interior_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.is_interior)
    }

    pub fn interior_count(&self) -> usize {
        self.faces.iter().filter(|f| f.is_interior).count()
    }

    pub fn boundary_count(&self) -> usize {
        self.faces.iter().filter(|f| !f.is_interior).count()
    }
}

/// Compute the faces of a valid graph.
pub fn faces(g: &PlabicGraph) -> Result<FaceSet, GraphError> {
    g.require_valid()?;
    Ok(FaceSet::build(g))
}

/// Dual quiver on interior faces: antisymmetric arrow-count matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    /// Interior face ids, in face order; quiver vertex i is `vertices[i]`.
    pub vertices: Vec<FaceId>,
    /// `arrow_count[i][j]` = arrows i -> j minus arrows j -> i.
    pub arrow_count: Vec<Vec<i64>>,
}

impl Quiver {
    pub fn rank(&self) -> usize {
        self.vertices.len()
    }
}

/// Build the dual quiver: one vertex per interior face; every edge with
/// one white and one black endpoint contributes an arrow crossing it with
/// the white endpoint on its right. Arrows touching boundary faces are
/// dropped; oriented 2-cycles cancel in the count matrix.
pub fn dual_quiver(g: &PlabicGraph) -> Result<Quiver, GraphError> {
    g.require_valid()?;
    let fs = FaceSet::build(g);
    let vertices: Vec<FaceId> = fs.interior_faces().map(|f| f.id).collect();
    let mut index = vec![usize::MAX; fs.faces.len()];
    for (i, &f) in vertices.iter().enumerate() {
        index[f] = i;
    }
    let m = vertices.len();
    let mut arrow_count = vec![vec![0i64; m]; m];
    for e in 0..g.edge_count() {
        if !g.is_mixed_edge(e) {
            continue;
        }
        // dart with white tail
        let d = if g.color(g.vertex_of(2 * e)) == Color::White {
            2 * e
        } else {
            2 * e + 1
        };
        // Arrow from the face left of (white -> black) to the face on its
        // right: the crossing then keeps the white endpoint on its right.
        let from = fs.left_face(d);
        let to = fs.right_face(d);
        let (fi, ti) = (index[from], index[to]);
        if fi == usize::MAX || ti == usize::MAX {
            continue;
        }
        arrow_count[fi][ti] += 1;
        arrow_count[ti][fi] -= 1;
    }
    Ok(Quiver {
        vertices,
        arrow_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Single black vertex joined to three boundary stubs.
    pub fn star3_black() -> PlabicGraph {
        PlabicGraph::from_edge_lists(
            vec![Color::Black, Color::Boundary, Color::Boundary, Color::Boundary],
            &[(0, 1), (0, 2), (0, 3)],
            &[vec![0, 1, 2], vec![0], vec![1], vec![2]],
            vec![1, 2, 3],
        )
        .unwrap()
    }

    #[test]
    fn star_is_valid_with_three_boundary_faces() {
        let g = star3_black();
        assert!(g.validate().is_ok());
        let fs = FaceSet::build(&g);
        assert_eq!(fs.interior_count(), 0);
        assert_eq!(fs.boundary_count(), 3);
    }

    #[test]
    fn dart_multiply_owned_is_reported() {
        // The same edge appears in two rotations of vertex 0 but the graph
        // only has one dart there.
        let g = PlabicGraph {
            vertex_of: vec![0, 1, 0, 2],
            color: vec![Color::Black, Color::Boundary, Color::Boundary],
            rotation: vec![vec![0, 2, 0], vec![1], vec![3]],
            boundary: vec![1, 2],
        };
        let rep = g.validate();
        assert!(!rep.is_ok());
        assert!(rep.violations.iter().any(|v| v.contains("multiply owned")));
    }

    #[test]
    fn euler_disk_check_rejects_crossed_boundary_order() {
        // A path between two boundary vertices listed in an order that
        // cannot bound a disk with a third stub in between.
        let g = PlabicGraph::from_edge_lists(
            vec![
                Color::White,
                Color::Black,
                Color::Boundary,
                Color::Boundary,
                Color::Boundary,
                Color::Boundary,
            ],
            &[(0, 2), (0, 3), (1, 4), (1, 5), (0, 1)],
            &[
                vec![0, 4, 1],
                vec![2, 4, 3],
                vec![0],
                vec![1],
                vec![2],
                vec![3],
            ],
            // interleaved stubs force a crossing, which is not planar
            vec![2, 4, 3, 5],
        )
        .unwrap();
        assert!(!g.validate().is_ok());
    }

    #[test]
    fn contraction_preserves_validity() {
        // white - black path with a bivalent white in the middle.
        let g = PlabicGraph::from_edge_lists(
            vec![
                Color::Black,
                Color::White,
                Color::Black,
                Color::Boundary,
                Color::Boundary,
                Color::Boundary,
                Color::Boundary,
            ],
            &[(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)],
            &[
                vec![0, 2, 3],
                vec![0, 1],
                vec![1, 4, 5],
                vec![2],
                vec![3],
                vec![4],
                vec![5],
            ],
            vec![3, 4, 5, 6],
        )
        .unwrap();
        assert!(g.validate().is_ok());
        let h = g.contract_degree2(1).unwrap();
        assert!(h.validate().is_ok());
        assert_eq!(h.edge_count(), g.edge_count() - 1);
        assert_eq!(h.vertex_count(), g.vertex_count() - 1);
    }
}
