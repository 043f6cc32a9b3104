//! The square move: local recoloring of a quadrilateral face, exact
//! coordinate transport, and the 2 x 4 matrix oracle.
//!
//! The graph-level move splits each of the four face vertices so the
//! recolored corner vertex is trivalent and joined to the rest of its
//! old vertex by a fresh link edge. All pre-existing edges keep the
//! colors of their endpoints, so reference directions and weights away
//! from the face are untouched; the link edges become mixed after the
//! recoloring.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, GraphError};
use crate::graph::{Color, DartId, FaceId, FaceSet, PlabicGraph};
use crate::Rat;

/// The 2 x 4 matrix of generization maps, columns labeled S, W, N, E.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixModel {
    pub s: [Rat; 2],
    pub w: [Rat; 2],
    pub n: [Rat; 2],
    pub e: [Rat; 2],
}

impl MatrixModel {
    pub fn from_ints(s: [i64; 2], w: [i64; 2], n: [i64; 2], e: [i64; 2]) -> MatrixModel {
        let f = |a: [i64; 2]| [crate::rat_int(a[0]), crate::rat_int(a[1])];
        MatrixModel {
            s: f(s),
            w: f(w),
            n: f(n),
            e: f(e),
        }
    }

    /// Minor of the columns (a, b), in that order.
    pub fn minor(&self, a: Col, b: Col) -> Rat {
        let x = self.col(a);
        let y = self.col(b);
        x[0].clone() * y[1].clone() - x[1].clone() * y[0].clone()
    }

    fn col(&self, c: Col) -> &[Rat; 2] {
        match c {
            Col::S => &self.s,
            Col::W => &self.w,
            Col::N => &self.n,
            Col::E => &self.e,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Col {
    S,
    W,
    N,
    E,
}

/// Corner values of the local model, in positive convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerCoords {
    pub ne: Rat,
    pub es: Rat,
    pub sw: Rat,
    pub wn: Rat,
    pub middle: Rat,
}

/// Both coordinate charts of the local model, read off the matrix of
/// generization maps, plus the two-term relation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCoords {
    pub x: CornerCoords,
    pub y: CornerCoords,
    pub plucker_ok: bool,
}

/// Compute the corner coordinates of both charts from the matrix model:
/// X from minors against the S/N columns, Y against W/E, the middle
/// values from the corner products, and the two-term relation
/// `D_SN D_EW = D_SE D_NW + D_SW D_EN`.
pub fn matrix_oracle_coords(m: &MatrixModel) -> Result<OracleCoords, AlgebraError> {
    use Col::*;
    let need = [(S, W), (W, N), (N, E), (E, S), (S, N), (W, E)];
    for (a, b) in need {
        if m.minor(a, b).is_zero() {
            return Err(AlgebraError::ZeroMinor(format!("{a:?}{b:?}")));
        }
    }
    let x_ne = m.minor(S, N) / m.minor(S, E);
    let x_es = m.minor(N, E) / m.minor(N, S);
    let x_sw = m.minor(N, S) / m.minor(N, W);
    let x_wn = m.minor(S, W) / m.minor(S, N);
    let y_ne = m.minor(W, N) / m.minor(W, E);
    let y_es = m.minor(W, E) / m.minor(W, S);
    let y_sw = m.minor(E, S) / m.minor(E, W);
    let y_wn = m.minor(E, W) / m.minor(E, N);
    let x_m = -(x_wn.clone() * x_ne.clone() * x_es.clone() * x_sw.clone()).recip();
    let y_m = -(y_wn.clone() * y_ne.clone() * y_es.clone() * y_sw.clone()).recip();
    let plucker_ok = m.minor(S, N) * m.minor(E, W)
        == m.minor(S, E) * m.minor(N, W) + m.minor(S, W) * m.minor(E, N);
    Ok(OracleCoords {
        x: CornerCoords {
            ne: x_ne,
            es: x_es,
            sw: x_sw,
            wn: x_wn,
            middle: x_m,
        },
        y: CornerCoords {
            ne: y_ne,
            es: y_es,
            sw: y_sw,
            wn: y_wn,
            middle: y_m,
        },
        plucker_ok,
    })
}

/// Apply the local transport to corner values in positive convention:
/// given the Y chart, produce the X chart. Errors when Y_M = -1 (the
/// image fails to be alternating there).
pub fn transport_corners(y: &CornerCoords) -> Result<CornerCoords, AlgebraError> {
    if y.middle == -Rat::one() {
        return Err(AlgebraError::Pole(String::from("Y_M = -1 is degenerate")));
    }
    if y.middle.is_zero() {
        return Err(AlgebraError::ZeroValue(String::from("Y_M must be nonzero")));
    }
    let plus = Rat::one() + y.middle.clone();
    let plus_inv = Rat::one() + y.middle.clone().recip();
    Ok(CornerCoords {
        ne: y.ne.clone() * plus.clone(),
        es: y.es.clone() / plus_inv.clone(),
        sw: y.sw.clone() * plus,
        wn: y.wn.clone() / plus_inv,
        middle: y.middle.clone().recip(),
    })
}

/// Coordinate convention for face coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    Standard,
    Positive,
}

/// Nonzero rationals attached to faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCoordinates {
    pub values: BTreeMap<FaceId, Rat>,
    pub convention: Convention,
}

impl FaceCoordinates {
    pub fn new(values: BTreeMap<FaceId, Rat>, convention: Convention) -> Result<Self, AlgebraError> {
        if values.values().any(|v| v.is_zero()) {
            return Err(AlgebraError::ZeroValue(String::from("face coordinate")));
        }
        Ok(FaceCoordinates { values, convention })
    }

    pub fn get(&self, f: FaceId) -> Option<&Rat> {
        self.values.get(&f)
    }

    /// Flip between the two conventions (negate every value).
    pub fn toggled(&self) -> FaceCoordinates {
        FaceCoordinates {
            values: self.values.iter().map(|(k, v)| (*k, -v.clone())).collect(),
            convention: match self.convention {
                Convention::Standard => Convention::Positive,
                Convention::Positive => Convention::Standard,
            },
        }
    }
}

/// The four neighbor faces of the local model, as faces of an ambient
/// graph; repetitions are allowed and multiply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CornerFaces {
    pub ne: FaceId,
    pub es: FaceId,
    pub sw: FaceId,
    pub wn: FaceId,
}

/// Transport face coordinates through a square move at face `f`, in
/// positive convention, with the four corners labeled by the caller.
/// The input is the Y chart; the output is the X chart. A face serving
/// several corners receives all of the corresponding factors; faces
/// away from the move are unchanged.
pub fn transport_coords(
    fc: &FaceCoordinates,
    f: FaceId,
    corners: &CornerFaces,
) -> Result<FaceCoordinates, AlgebraError> {
    if fc.convention != Convention::Positive {
        return Err(AlgebraError::SizeMismatch(String::from(
            "transport_coords expects positive-convention coordinates",
        )));
    }
    let y_m = fc
        .get(f)
        .ok_or_else(|| AlgebraError::BadIndex(format!("no coordinate for face {f}")))?
        .clone();
    if y_m == -Rat::one() {
        return Err(AlgebraError::Pole(String::from("Y_M = -1 is degenerate")));
    }
    for c in [corners.ne, corners.es, corners.sw, corners.wn] {
        if c == f {
            return Err(AlgebraError::BadIndex(String::from(
                "a corner face coincides with the middle face",
            )));
        }
    }
    let plus = Rat::one() + y_m.clone();
    let plus_inv_inv = (Rat::one() + y_m.clone().recip()).recip();
    let mut values = fc.values.clone();
    let apply = |values: &mut BTreeMap<FaceId, Rat>, face: FaceId, factor: &Rat| -> Result<(), AlgebraError> {
        let v = values
            .get_mut(&face)
            .ok_or_else(|| AlgebraError::BadIndex(format!("no coordinate for face {face}")))?;
        *v *= factor.clone();
        Ok(())
    };
    apply(&mut values, corners.ne, &plus)?;
    apply(&mut values, corners.sw, &plus)?;
    apply(&mut values, corners.es, &plus_inv_inv)?;
    apply(&mut values, corners.wn, &plus_inv_inv)?;
    values.insert(f, y_m.recip());
    FaceCoordinates::new(values, Convention::Positive)
}

/// Result of a square move: the new graph plus correspondences for the
/// surviving darts and faces (face ids are recomputed).
#[derive(Debug, Clone)]
pub struct SquareMoveResult {
    pub graph: PlabicGraph,
    /// Old face id -> new face id, matched on surviving darts.
    pub face_map: Vec<FaceId>,
    /// New id of the moved face.
    pub moved_face: FaceId,
    /// The four recolored corner vertices in the new graph, in face-walk
    /// order.
    pub corner_vertices: Vec<usize>,
    /// Link edges created by the corner splits (mixed after recoloring).
    pub link_edges: Vec<usize>,
}

/// Quadrilateral face data needed to apply or transport a move.
pub(crate) struct SquareFace {
    /// Walk darts of the face, tails at the four corner vertices.
    pub walk: [DartId; 4],
}

pub(crate) fn square_face(g: &PlabicGraph, fs: &FaceSet, f: FaceId) -> Result<SquareFace, GraphError> {
    let face = fs
        .faces
        .get(f)
        .ok_or_else(|| GraphError::BadFace(format!("no face {f}")))?;
    if !face.is_interior {
        return Err(GraphError::BadFace(format!("face {f} is not interior")));
    }
    if face.boundary_walk.len() != 4 {
        return Err(GraphError::BadFace(format!(
            "face {f} has {} sides, want 4",
            face.boundary_walk.len()
        )));
    }
    let walk: [DartId; 4] = [
        face.boundary_walk[0],
        face.boundary_walk[1],
        face.boundary_walk[2],
        face.boundary_walk[3],
    ];
    let mut tails = [0usize; 4];
    for (i, &d) in walk.iter().enumerate() {
        tails[i] = g.vertex_of(d);
    }
    let mut sorted = tails;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(GraphError::BadFace(format!("face {f} revisits a vertex")));
    }
    for i in 0..4 {
        let a = g.color(tails[i]);
        let b = g.color(tails[(i + 1) % 4]);
        if a == Color::Boundary || b == Color::Boundary || a == b {
            return Err(GraphError::BadFace(format!(
                "face {f} does not alternate white and black"
            )));
        }
    }
    Ok(SquareFace { walk })
}

/// Perform the square move at an interior quadrilateral face with four
/// distinct internal vertices of alternating colors. Vertices of degree
/// three and higher are handled alike: each corner is split off as a
/// trivalent vertex before the recoloring, so the local picture is the
/// standard one and the trip permutation is preserved.
pub fn square_move(g: &PlabicGraph, f: FaceId) -> Result<SquareMoveResult, GraphError> {
    g.require_valid()?;
    let fs = FaceSet::build(g);
    let sq = square_face(g, &fs, f)?;
    // Track the face correspondence by surviving darts (splits preserve
    // dart ids of existing edges; link edges get fresh ids).
    let mut work = g.clone();
    let mut corner_vertices = Vec::with_capacity(4);
    let mut link_edges = Vec::with_capacity(4);
    for &d in sq.walk.iter() {
        let link = work.edge_count(); // the split appends the link edge
        work = work
            .split_corner(d)
            .map_err(|e| GraphError::InvalidGraph(format!("corner split failed: {e}")))?;
        corner_vertices.push(work.vertex_of(d));
        link_edges.push(link);
    }
    for &v in &corner_vertices {
        let c = work.color(v);
        work.set_color(v, c.flip());
    }
    work.require_valid()?;
    let new_fs = FaceSet::build(&work);
    let mut face_map = Vec::with_capacity(fs.faces.len());
    for face in &fs.faces {
        let d = face
            .boundary_walk
            .first()
            .copied()
            .expect("interior faces of a stubbed graph have nonempty walks");
        face_map.push(new_fs.left_face(d));
    }
    let moved_face = face_map[f];
    Ok(SquareMoveResult {
        graph: work,
        face_map,
        moved_face,
        corner_vertices,
        link_edges,
    })
}

/// Signed corner multiplicities of a quadrilateral face: for each walk
/// dart, +1 toward the face on its right when the tail is black, -1
/// when the tail is white. These are the pairings of the neighbor face
/// classes with the face class in the seed of the graph.
pub fn corner_exponents(
    g: &PlabicGraph,
    fs: &FaceSet,
    f: FaceId,
) -> Result<BTreeMap<FaceId, i64>, GraphError> {
    let sq = square_face(g, fs, f)?;
    let mut out: BTreeMap<FaceId, i64> = BTreeMap::new();
    for &d in sq.walk.iter() {
        let tail = g.vertex_of(d);
        let neighbor = fs.right_face(d);
        let sign = if g.color(tail) == Color::Black { 1 } else { -1 };
        *out.entry(neighbor).or_insert(0) += sign;
    }
    Ok(out)
}

/// Transport positive face coordinates forward through a square move at
/// `f`: given the chart of the graph before the move, produce the chart
/// after it (values indexed by the old face ids; compose with the move's
/// `face_map` to reindex). Pole at X_M = -1.
pub fn transport_forward(
    g: &PlabicGraph,
    fs: &FaceSet,
    fc: &FaceCoordinates,
    f: FaceId,
) -> Result<FaceCoordinates, AlgebraError> {
    if fc.convention != Convention::Positive {
        return Err(AlgebraError::SizeMismatch(String::from(
            "transport_forward expects positive-convention coordinates",
        )));
    }
    let exps = corner_exponents(g, fs, f)
        .map_err(|e| AlgebraError::SizeMismatch(format!("not a movable face: {e}")))?;
    let x_m = fc
        .get(f)
        .ok_or_else(|| AlgebraError::BadIndex(format!("no coordinate for face {f}")))?
        .clone();
    if x_m == -Rat::one() {
        return Err(AlgebraError::Pole(String::from("X_M = -1 is degenerate")));
    }
    let plus = Rat::one() + x_m.clone();
    let mut values = fc.values.clone();
    for (face, c) in exps {
        let v = values
            .get_mut(&face)
            .ok_or_else(|| AlgebraError::BadIndex(format!("no coordinate for face {face}")))?;
        // Y_F = X_F * X_M^{[c]_+} * (1 + X_M)^{-c}
        let mut factor = Rat::one();
        for _ in 0..c.max(0) {
            factor *= x_m.clone();
        }
        if c >= 0 {
            for _ in 0..c {
                factor /= plus.clone();
            }
        } else {
            for _ in 0..(-c) {
                factor *= plus.clone();
            }
        }
        *v *= factor;
    }
    values.insert(f, x_m.recip());
    FaceCoordinates::new(values, Convention::Positive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int};

    fn oracle_example() -> MatrixModel {
        MatrixModel::from_ints([1, 0], [1, 1], [0, 1], [-1, 1])
    }

    #[test]
    fn oracle_matches_hand_minors() {
        let m = oracle_example();
        let oc = matrix_oracle_coords(&m).unwrap();
        assert_eq!(oc.x.ne, rat_int(1));
        assert_eq!(oc.x.es, rat_int(-1));
        assert_eq!(oc.x.sw, rat_int(1));
        assert_eq!(oc.x.wn, rat_int(1));
        assert_eq!(oc.x.middle, rat_int(1));
        assert_eq!(oc.y.ne, rat(1, 2));
        assert_eq!(oc.y.es, rat_int(-2));
        assert_eq!(oc.y.sw, rat(1, 2));
        assert_eq!(oc.y.wn, rat_int(2));
        assert_eq!(oc.y.middle, rat_int(1));
        assert!(oc.plucker_ok);
    }

    #[test]
    fn transport_reproduces_oracle() {
        let oc = matrix_oracle_coords(&oracle_example()).unwrap();
        let x = transport_corners(&oc.y).unwrap();
        assert_eq!(x, oc.x);
    }

    #[test]
    fn transport_trivial_substitution() {
        let y = CornerCoords {
            ne: rat_int(3),
            es: rat_int(5),
            sw: rat_int(7),
            wn: rat_int(11),
            middle: rat_int(1),
        };
        let x = transport_corners(&y).unwrap();
        assert_eq!(x.ne, rat_int(6));
        assert_eq!(x.es, rat(5, 2));
        assert_eq!(x.sw, rat_int(14));
        assert_eq!(x.wn, rat(11, 2));
        assert_eq!(x.middle, rat_int(1));
    }

    #[test]
    fn zero_minor_is_reported() {
        // E proportional to N
        let m = MatrixModel::from_ints([1, 0], [1, 1], [0, 1], [0, 2]);
        assert!(matches!(
            matrix_oracle_coords(&m),
            Err(AlgebraError::ZeroMinor(_))
        ));
    }

    #[test]
    fn degenerate_middle_is_a_pole() {
        let y = CornerCoords {
            ne: rat_int(1),
            es: rat_int(1),
            sw: rat_int(1),
            wn: rat_int(1),
            middle: rat_int(-1),
        };
        assert!(matches!(transport_corners(&y), Err(AlgebraError::Pole(_))));
    }
}
