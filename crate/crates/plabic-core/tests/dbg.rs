use plabic_core::graph::{Color, PlabicGraph};
use plabic_core::strands::{is_reduced, zig_zag_strands};

/// grid with stubs on a chosen subset of perimeter slots (CCW order),
/// parametrized by parity and the skip set.
fn grid(k: usize, cols: usize, parity: usize, stubs: &[(usize, usize)]) -> Option<PlabicGraph> {
    // vertices at (c+1, -(r+1)): r = 0 top
    let mut colors = vec![];
    let mut pos = vec![];
    let mut edges = vec![];
    let idx = |r: usize, c: usize| r * cols + c;
    for r in 0..k {
        for c in 0..cols {
            colors.push(if (r + c) % 2 == parity { Color::Black } else { Color::White });
            pos.push(((c + 1) as f64, -((r + 1) as f64)));
        }
    }
    for r in 0..k {
        for c in 0..cols {
            if c + 1 < cols { edges.push((idx(r, c), idx(r, c + 1))); }
            if r + 1 < k { edges.push((idx(r, c), idx(r + 1, c))); }
        }
    }
    let mut boundary = vec![];
    for &(r, c) in stubs {
        let v = idx(r, c);
        let b = colors.len();
        // stub direction outward
        let dx: f64 = if c == cols - 1 && r != k - 1 { 1.0 } else if c == 0 && r != 0 { -1.0 } else { 0.0 };
        let dy: f64 = if r == k - 1 { -1.0 } else if r == 0 && dx == 0.0 { 1.0 } else { 0.0 };
        let (dx, dy) = if dx == 0.0 && dy == 0.0 { (0.0, -1.0) } else { (dx, dy) };
        colors.push(Color::Boundary);
        pos.push((pos[v].0 + 0.5 * dx, pos[v].1 + 0.5 * dy));
        edges.push((v, b));
        boundary.push(b);
    }
    // rotations by angle
    let mut rotations = vec![vec![]; colors.len()];
    let mut ang: Vec<Vec<(f64, usize)>> = vec![vec![]; colors.len()];
    for (e, &(u, v)) in edges.iter().enumerate() {
        let a = (pos[v].1 - pos[u].1).atan2(pos[v].0 - pos[u].0);
        let b2 = (pos[u].1 - pos[v].1).atan2(pos[u].0 - pos[v].0);
        ang[u].push((a, e));
        ang[v].push((b2, e));
    }
    for (v, list) in ang.iter_mut().enumerate() {
        list.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        rotations[v] = list.iter().map(|&(_, e)| e).collect();
    }
    PlabicGraph::from_edge_lists(colors, &edges, &rotations, boundary).ok()
}

/// perimeter slots CCW starting at bottom-left corner
fn perimeter(k: usize, cols: usize) -> Vec<(usize, usize)> {
    let mut out = vec![];
    for c in 0..cols { out.push((k - 1, c)); }           // bottom L->R
    for r in (0..k - 1).rev() { out.push((r, cols - 1)); } // right up
    for c in (0..cols - 1).rev() { out.push((0, c)); }     // top R->L
    for r in 1..k - 1 { out.push((r, 0)); }               // left down
    out
}

#[test]
fn search_stub_rules() {
    for (k, n) in [(2usize, 6usize), (3, 7), (2, 7), (4, 8)] {
        let cols = n - k;
        let per = perimeter(k, cols);
        println!("== ({k},{n}) perimeter {:?}", per);
        let m = per.len();
        // try all ways to skip (m - n) slots
        let skip = m - n;
        let mut found = 0;
        for mask in 0u32..(1 << m) {
            if (mask.count_ones() as usize) != skip { continue; }
            let stubs: Vec<_> = (0..m).filter(|i| mask & (1 << i) == 0).map(|i| per[i]).collect();
            for parity in 0..2 {
                if let Some(g) = grid(k, cols, parity, &stubs) {
                    if !g.validate().is_ok() { continue; }
                    if let Ok((_, trip)) = zig_zag_strands(&g) {
                        let want: Vec<usize> = (1..=n).map(|i| (i + k - 1) % n + 1).collect();
                        if trip.mapping == want && is_reduced(&g).unwrap().is_reduced() {
                            println!("  parity {parity} skip-mask {:0width$b} stubs {:?}", mask, stubs, width = m);
                            found += 1;
                        }
                    }
                }
            }
        }
        println!("  found {found}");
    }
}
