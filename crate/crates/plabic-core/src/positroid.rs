//! Cyclic rank matrices, positroid membership, and grid fronts.
//!
//! The rank matrix of a k-plane is drawn on the plane with matrix entry
//! (i, j) occupying the unit cell [j, j+1] x [-i, -i+1]. Walls separate
//! cells with different entries: vertical walls where the rank jumps
//! along a row (co-oriented leftward, toward the smaller value) and
//! horizontal walls where it drops down a column (co-oriented downward).
//! Corners where a vertical wall from below meets a horizontal wall from
//! the left are smoothed; four-wall points are transverse crossings. The
//! boundary circle cuts the 2n walls adjacent to the diagonal, producing
//! n strands whose endpoint pairing is the boundary matching.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::strands::TripPermutation;
use crate::Rat;

/// Incremental exact-rank tracker via Gaussian elimination.
#[derive(Debug, Clone, Default)]
pub struct RatBasis {
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RatBasis {
    pub fn new() -> Self {
        RatBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis; if a nonzero remainder survives,
    /// insert it and report growth.
    pub fn add(&mut self, v: &[Rat]) -> bool {
        let mut v: Vec<Rat> = v.to_vec();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if !v[p].is_zero() {
                let c = v[p].clone() / row[p].clone();
                for (x, y) in v.iter_mut().zip(row.iter()) {
                    *x -= c.clone() * y.clone();
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push(v);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }
}

/// Rank of an exact rational matrix given by rows.
pub fn matrix_rank(rows: &[Vec<Rat>]) -> usize {
    let mut b = RatBasis::new();
    for r in rows {
        b.add(r);
    }
    b.rank()
}

/// The cyclic rank matrix of type (k, n), stored on the fundamental
/// window: row i (1-based) holds r_{ij} for j = i-1 .. i+n-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicRankMatrix {
    pub k: usize,
    pub n: usize,
    /// `window[i-1][j - (i-1)]`, each row of length n + 1.
    pub window: Vec<Vec<i64>>,
}

impl CyclicRankMatrix {
    pub fn new(k: usize, n: usize, window: Vec<Vec<i64>>) -> CyclicRankMatrix {
        CyclicRankMatrix { k, n, window }
    }

    /// Entry r_{ij} for arbitrary integer indices, via the defining
    /// periodicity and the boundary conditions.
    pub fn entry(&self, i: i64, j: i64) -> i64 {
        let n = self.n as i64;
        // shift i into [1, n]
        let shift = (i - 1).div_euclid(n);
        let (i, j) = (i - shift * n, j - shift * n);
        if j < i {
            0
        } else if j >= i + n - 1 {
            self.k as i64
        } else {
            self.window[(i - 1) as usize][(j - (i - 1)) as usize]
        }
    }

    /// The big positroid cell: r_{ij} = min(j - i + 1, k) clipped.
    pub fn big_cell(k: usize, n: usize) -> CyclicRankMatrix {
        let mut window = Vec::with_capacity(n);
        for _ in 0..n {
            let row: Vec<i64> = (0..=n as i64).map(|o| o.min(k as i64)).collect();
            window.push(row);
        }
        CyclicRankMatrix { k, n, window }
    }
}

/// One violated condition, with the witnessing lattice point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrmViolation {
    Shape(String),
    C1 { i: i64, j: i64 },
    C2 { i: i64, j: i64 },
    C3 { i: i64, j: i64 },
    C4 { i: i64, j: i64 },
    NonzeroDiagonal { i: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrmReport {
    pub violations: Vec<CrmViolation>,
}

impl CrmReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the five characterizing conditions plus the standing assumption
/// that single columns are nonzero. Periodicity holds by representation;
/// the modularity condition C4 is checked on the band j > i (for j = i
/// its hypothesis degenerates to the empty column interval, where it
/// would contradict the nonzero-diagonal assumption).
pub fn validate_crm(r: &CyclicRankMatrix) -> CrmReport {
    let mut violations = Vec::new();
    let n = r.n as i64;
    if r.n == 0 || r.window.len() != r.n || r.window.iter().any(|row| row.len() != r.n + 1) {
        violations.push(CrmViolation::Shape(format!(
            "window must be {} rows of length {}",
            r.n,
            r.n + 1
        )));
        return CrmReport { violations };
    }
    for i in 1..=n {
        if r.entry(i, i - 1) != 0 {
            violations.push(CrmViolation::C1 { i, j: i - 1 });
        }
        if r.entry(i, i + n - 1) != r.k as i64 {
            violations.push(CrmViolation::C2 { i, j: i + n - 1 });
        }
        if r.entry(i, i) == 0 {
            violations.push(CrmViolation::NonzeroDiagonal { i });
        }
        for j in i..=(i + n - 1) {
            let step_right = r.entry(i, j) - r.entry(i, j - 1);
            if !(0..=1).contains(&step_right) {
                violations.push(CrmViolation::C3 { i, j });
            }
            let step_down = r.entry(i, j) - r.entry(i + 1, j);
            if !(0..=1).contains(&step_down) {
                violations.push(CrmViolation::C3 { i, j });
            }
        }
        for j in (i + 1)..=(i + n) {
            let a = r.entry(i, j - 1);
            let b = r.entry(i, j);
            let c = r.entry(i + 1, j - 1);
            let d = r.entry(i + 1, j);
            if c == d && c == a && b != c {
                violations.push(CrmViolation::C4 { i, j });
            }
        }
    }
    CrmReport { violations }
}

/// Cyclic rank matrix of the span profile of a k x n matrix of exact
/// rationals, given by rows. Errors on rank-deficient input and on zero
/// columns (the standing assumption of the stratification).
pub fn rank_matrix_from_point(m: &[Vec<Rat>]) -> Result<CyclicRankMatrix, AlgebraError> {
    let k = m.len();
    if k == 0 {
        return Err(AlgebraError::SizeMismatch(String::from("empty matrix")));
    }
    let n = m[0].len();
    if m.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::SizeMismatch(String::from("ragged matrix")));
    }
    if n == 0 || k > n {
        return Err(AlgebraError::SizeMismatch(format!("bad shape {k} x {n}")));
    }
    let col = |j: usize| -> Vec<Rat> { (0..k).map(|i| m[i][j % n].clone()).collect() };
    for j in 0..n {
        if col(j).iter().all(|x| x.is_zero()) {
            return Err(AlgebraError::ZeroColumn(j + 1));
        }
    }
    let full: Vec<Vec<Rat>> = (0..n).map(col).collect();
    if matrix_rank(&full) != k {
        return Err(AlgebraError::RankDeficient(format!("rank < {k}")));
    }
    let mut window = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n + 1);
        row.push(0i64); // j = i - 1: empty span
        let mut basis = RatBasis::new();
        for j in i..(i + n) {
            basis.add(&col(j - 1)); // 1-based j -> 0-based column
            row.push(basis.rank() as i64);
        }
        window.push(row);
    }
    Ok(CyclicRankMatrix { k, n, window })
}

/// Membership test for the stratum labeled by `r`.
pub fn point_in_stratum(m: &[Vec<Rat>], r: &CyclicRankMatrix) -> Result<bool, AlgebraError> {
    let got = rank_matrix_from_point(m)?;
    Ok(got == *r)
}

/// Wall pieces of the grid front, named by matrix indices. A vertical
/// wall (i, j) separates entries (i, j-1) and (i, j) and occupies
/// x = j, y in (-i, -i+1); a horizontal wall (i, j) separates (i, j)
/// from (i+1, j) and occupies y = -i, x in (j, j+1). Stored indices are
/// reduced to the fundamental rows 1..n under the gluing translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridFront {
    pub k: usize,
    pub n: usize,
    pub vertical_segments: Vec<(i64, i64)>,
    pub horizontal_segments: Vec<(i64, i64)>,
    /// Smoothed corner points, as the (i, j) of the defining condition
    /// r_{ij} = r_{(i+1)j} = r_{i(j-1)} = r_{(i+1)(j-1)} + 1.
    pub smoothed_corners: Vec<(i64, i64)>,
    /// Transverse double points, same indexing.
    pub crossings: Vec<(i64, i64)>,
    /// The strip 1/2 < x + y < k + 1/2, in units of one half.
    pub strip_halves: (i64, i64),
    /// Strand paths, one per boundary label: the wall sequence from the
    /// horizontal cut end of that label to a vertical cut end.
    pub strands: Vec<Vec<Wall>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wall {
    Vertical { i: i64, j: i64 },
    Horizontal { i: i64, j: i64 },
}

fn reduce_pair(n: i64, i: i64, j: i64) -> (i64, i64) {
    let shift = (i - 1).div_euclid(n);
    (i - shift * n, j - shift * n)
}

/// Build the grid front of a valid cyclic rank matrix and read off the
/// boundary matching by tracing strands: rightward along horizontal
/// walls, straight through crossings, turning at smoothed corners, and
/// exiting down the vertical wall cut by the boundary circle.
pub fn grid_front(r: &CyclicRankMatrix) -> Result<(GridFront, TripPermutation), AlgebraError> {
    let rep = validate_crm(r);
    if !rep.is_ok() {
        return Err(AlgebraError::SizeMismatch(format!(
            "invalid cyclic rank matrix: {:?}",
            rep.violations
        )));
    }
    let n = r.n as i64;
    let mut vertical = Vec::new();
    let mut horizontal = Vec::new();
    let mut corners = Vec::new();
    let mut crossings = Vec::new();
    for i in 1..=n {
        for j in i..=(i + n - 1) {
            if r.entry(i, j - 1) < r.entry(i, j) {
                vertical.push((i, j));
            }
            if r.entry(i, j) > r.entry(i + 1, j) {
                horizontal.push((i, j));
            }
        }
        for j in (i + 1)..=(i + n) {
            let a = r.entry(i, j - 1);
            let b = r.entry(i, j);
            let c = r.entry(i + 1, j - 1);
            let d = r.entry(i + 1, j);
            if b == d && b == a && b == c + 1 {
                corners.push((i, j));
            }
            if b - c == 2 {
                crossings.push((i, j));
            }
        }
    }
    let has_v = |i: i64, j: i64| r.entry(i, j - 1) < r.entry(i, j);
    let has_h = |i: i64, j: i64| r.entry(i, j) > r.entry(i + 1, j);
    let mut mapping = vec![0usize; r.n];
    let mut strands = Vec::with_capacity(r.n);
    for start in 1..=n {
        // Start on horizontal wall (start, start), moving right.
        let mut walls = Vec::new();
        let (mut i, mut j) = (start, start);
        let mut moving_right = true;
        walls.push(Wall::Horizontal { i, j });
        let target = loop {
            if walls.len() > 4 * r.n * r.n + 8 {
                return Err(AlgebraError::SizeMismatch(String::from(
                    "grid front strand failed to terminate",
                )));
            }
            if moving_right {
                // lattice point (j+1, -i): up V(i,j+1), down V(i+1,j+1),
                // ahead H(i,j+1); behind is the wall we are on.
                let up = has_v(i, j + 1);
                let down = has_v(i + 1, j + 1);
                let ahead = has_h(i, j + 1);
                if ahead && (up == down) {
                    j += 1; // straight through (crossing or plain run)
                } else if down && !ahead && !up {
                    i += 1;
                    j += 1;
                    moving_right = false; // smoothed corner, turn down
                } else {
                    return Err(AlgebraError::SizeMismatch(format!(
                        "inconsistent walls right of H({i},{j})"
                    )));
                }
            } else {
                // moving down on V(i, j): the diagonal wall is cut by the
                // boundary circle.
                if i == j {
                    break i;
                }
                // lattice point (j, -i): down V(i+1,j), left H(i,j-1),
                // right H(i,j); behind (up) is the wall we are on.
                let down = has_v(i + 1, j);
                let left = has_h(i, j - 1);
                let right = has_h(i, j);
                if down && (left == right) {
                    i += 1;
                } else {
                    return Err(AlgebraError::SizeMismatch(format!(
                        "inconsistent walls below V({i},{j})"
                    )));
                }
            }
            let w = if moving_right {
                Wall::Horizontal { i, j }
            } else {
                Wall::Vertical { i, j }
            };
            walls.push(w);
        };
        let label = (target - 1).rem_euclid(n) as usize;
        mapping[(start - 1) as usize] = label + 1;
        strands.push(walls);
    }
    let reduce_all =
        |v: Vec<(i64, i64)>| -> Vec<(i64, i64)> { v.into_iter().map(|(i, j)| reduce_pair(n, i, j)).collect() };
    let front = GridFront {
        k: r.k,
        n: r.n,
        vertical_segments: reduce_all(vertical),
        horizontal_segments: reduce_all(horizontal),
        smoothed_corners: reduce_all(corners),
        crossings: reduce_all(crossings),
        strip_halves: (1, 2 * r.k as i64 + 1),
        strands,
    };
    Ok((front, TripPermutation { mapping }))
}

/// Reconstruct the cyclic rank matrix of type (k, n) whose boundary
/// matching is the given permutation. The bounded affine lift of the
/// matching is unique once zero columns are forbidden (a fixed label
/// must lift across the full period), and the window entry r_{ij}
/// counts the a in [i, j] whose lift exceeds j. Errors when the lift
/// total disagrees with k*n or the result fails validation.
pub fn r_from_matching(matching: &[usize], k: usize) -> Result<CyclicRankMatrix, AlgebraError> {
    let n = matching.len();
    if n == 0 || k == 0 || k >= n {
        return Err(AlgebraError::SizeMismatch(format!("bad type ({k}, {n})")));
    }
    let mut seen = vec![false; n];
    for &t in matching {
        if t == 0 || t > n || seen[t - 1] {
            return Err(AlgebraError::SizeMismatch(String::from(
                "matching is not a permutation",
            )));
        }
        seen[t - 1] = true;
    }
    let mut f = vec![0i64; n];
    let mut total = 0i64;
    for i in 1..=n {
        let t = matching[i - 1] as i64;
        let mut v = t;
        while v <= i as i64 {
            v += n as i64;
        }
        f[i - 1] = v;
        total += v - i as i64;
    }
    if total != (k * n) as i64 {
        return Err(AlgebraError::SizeMismatch(format!(
            "matching has lift total {total}, want {}",
            k * n
        )));
    }
    let fext = |a: i64| -> i64 {
        let shift = (a - 1).div_euclid(n as i64);
        f[(a - 1 - shift * n as i64) as usize] + shift * n as i64
    };
    let mut window = Vec::with_capacity(n);
    for i in 1..=n as i64 {
        let mut row = Vec::with_capacity(n + 1);
        for j in (i - 1)..(i + n as i64) {
            if j < i {
                row.push(0);
            } else {
                let cnt = (i..=j).filter(|&a| fext(a) > j).count() as i64;
                row.push(cnt.min(k as i64));
            }
        }
        window.push(row);
    }
    let r = CyclicRankMatrix { k, n, window };
    let rep = validate_crm(&r);
    if !rep.is_ok() {
        return Err(AlgebraError::SizeMismatch(format!(
            "matching does not define a positroid: {:?}",
            rep.violations
        )));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat_int;

    fn ex_gr35() -> Vec<Vec<Rat>> {
        let rows = [[0, 1, 1, 1, 1], [0, 0, 1, 1, 1], [1, 0, 0, 0, 0]];
        rows.iter()
            .map(|r| r.iter().map(|&x| rat_int(x)).collect())
            .collect()
    }

    #[test]
    fn gr35_rank_matrix_values() {
        let r = rank_matrix_from_point(&ex_gr35()).unwrap();
        assert!(validate_crm(&r).is_ok());
        assert_eq!(r.entry(1, 3), 3);
        assert_eq!(r.entry(2, 5), 2);
        assert_eq!(r.entry(3, 5), 1);
        assert_eq!(r.entry(3, 6), 2);
        assert_eq!(r.entry(4, 6), 2);
        assert_eq!(r.entry(5, 7), 3);
    }

    #[test]
    fn gr35_matching_is_the_affine_shift() {
        let r = rank_matrix_from_point(&ex_gr35()).unwrap();
        let (front, trip) = grid_front(&r).unwrap();
        // lifts (6, 7, 4, 5, 8): residues (1, 2, 4, 5, 3)
        assert_eq!(trip.mapping, vec![1, 2, 4, 5, 3]);
        assert_eq!(front.strands.len(), 5);
    }

    #[test]
    fn big_cell_matching_shifts_by_k() {
        for (k, n) in [(1usize, 2usize), (2, 5), (3, 5), (2, 4), (4, 9)] {
            let r = CyclicRankMatrix::big_cell(k, n);
            assert!(validate_crm(&r).is_ok(), "({k},{n})");
            let (_, trip) = grid_front(&r).unwrap();
            for i in 1..=n {
                assert_eq!(trip.apply(i), (i + k - 1) % n + 1, "({k},{n}) at {i}");
            }
        }
    }

    #[test]
    fn k1_n2_front_is_two_parallel_arcs() {
        let r = CyclicRankMatrix::big_cell(1, 2);
        let (front, trip) = grid_front(&r).unwrap();
        assert_eq!(trip.mapping, vec![2, 1]);
        // each strand is a single corner: one horizontal, one vertical
        for s in &front.strands {
            assert_eq!(s.len(), 2);
        }
        assert!(front.crossings.is_empty());
    }

    #[test]
    fn zero_column_is_rejected() {
        let m = vec![
            vec![rat_int(1), rat_int(0), rat_int(0)],
            vec![rat_int(0), rat_int(0), rat_int(1)],
        ];
        assert_eq!(rank_matrix_from_point(&m), Err(AlgebraError::ZeroColumn(2)));
    }

    #[test]
    fn rank_deficiency_is_rejected() {
        let m = vec![
            vec![rat_int(1), rat_int(2), rat_int(3)],
            vec![rat_int(2), rat_int(4), rat_int(6)],
        ];
        assert!(matches!(
            rank_matrix_from_point(&m),
            Err(AlgebraError::RankDeficient(_))
        ));
    }

    #[test]
    fn c3_and_c4_violations_are_reported() {
        let mut r = CyclicRankMatrix::big_cell(2, 4);
        r.window[0][2] = 0;
        let rep = validate_crm(&r);
        assert!(rep
            .violations
            .iter()
            .any(|v| matches!(v, CrmViolation::C3 { .. })));

        // break C4: r_{i,i+3} = 2 while r_{i,i+2} = r_{i+1,i+2} = r_{i+1,i+3} = 1
        let mut w = CyclicRankMatrix::big_cell(1, 4);
        w.k = 2;
        for row in w.window.iter_mut() {
            row[4] = 2;
        }
        let rep = validate_crm(&w);
        assert!(
            rep.violations
                .iter()
                .any(|v| matches!(v, CrmViolation::C4 { .. })),
            "{:?}",
            rep.violations
        );
    }

    #[test]
    fn point_membership_follows_rank_profile() {
        let m = ex_gr35();
        let r = rank_matrix_from_point(&m).unwrap();
        assert!(point_in_stratum(&m, &r).unwrap());
        let big = CyclicRankMatrix::big_cell(3, 5);
        assert!(!point_in_stratum(&m, &big).unwrap());
    }

    #[test]
    fn matching_round_trip_small() {
        for (k, n) in [(1usize, 2usize), (2, 4), (2, 5), (3, 5)] {
            let r = CyclicRankMatrix::big_cell(k, n);
            let (_, trip) = grid_front(&r).unwrap();
            let back = r_from_matching(&trip.mapping, k).unwrap();
            assert_eq!(back, r, "({k},{n})");
        }
        let r = rank_matrix_from_point(&ex_gr35()).unwrap();
        let (_, trip) = grid_front(&r).unwrap();
        let back = r_from_matching(&trip.mapping, 3).unwrap();
        assert_eq!(back, r);
    }
}
