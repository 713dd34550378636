//! Construction of the strongly regular graphs with parameters (25, 12, 5, 6).
//!
//! Seeds come from algebraic constructions (the Paley graph over GF(25) and
//! Latin square graphs of order 5) and from randomized backtracking. The set
//! is closed under complement, Godsil–McKay switching (which preserves the
//! spectrum and hence, for these parameters, strong regularity) and passage
//! through the two-graphs on 26 points. Classes are deduplicated by
//! canonical form.

use std::collections::BTreeSet;

use igel::families::srg_params;
use igel::Graph;

use crate::canon::{canonical_rows, graph_of, rows_of, Rows};

pub const N: usize = 25;
pub const K: usize = 12;
pub const LAMBDA: usize = 5;
pub const MU: usize = 6;

/// Paley graph on GF(25) = GF(5)[s] / (s^2 - 2).
pub fn paley25() -> Graph {
    let mul = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        ((a * c + 2 * b * d) % 5, (a * d + b * c) % 5)
    };
    let mut square = [[false; 5]; 5];
    for a in 0..5 {
        for b in 0..5 {
            if (a, b) != (0, 0) {
                let (x, y) = mul((a, b), (a, b));
                square[x][y] = true;
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..25 {
        for v in u + 1..25 {
            let (du, dv) = ((u / 5 + 5 - v / 5) % 5, (u % 5 + 5 - v % 5) % 5);
            if square[du][dv] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(25, edges).unwrap()
}

/// All reduced Latin squares of order 5.
fn reduced_latin_squares() -> Vec<[[usize; 5]; 5]> {
    fn fill(sq: &mut [[usize; 5]; 5], cell: usize, out: &mut Vec<[[usize; 5]; 5]>) {
        if cell == 25 {
            out.push(*sq);
            return;
        }
        let (r, c) = (cell / 5, cell % 5);
        if r == 0 || c == 0 {
            sq[r][c] = r.max(c);
            let ok = (0..c).all(|j| sq[r][j] != sq[r][c]) && (0..r).all(|i| sq[i][c] != sq[r][c]);
            if ok {
                fill(sq, cell + 1, out);
            }
            return;
        }
        for s in 0..5 {
            if (0..c).all(|j| sq[r][j] != s) && (0..r).all(|i| sq[i][c] != s) {
                sq[r][c] = s;
                fill(sq, cell + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    fill(&mut [[0; 5]; 5], 0, &mut out);
    out
}

/// Cells adjacent when they share a row, a column or a symbol.
fn latin_square_graph(sq: &[[usize; 5]; 5]) -> Graph {
    let mut edges = Vec::new();
    for a in 0..25 {
        for b in a + 1..25 {
            let (ra, ca, rb, cb) = (a / 5, a % 5, b / 5, b % 5);
            if ra == rb || ca == cb || sq[ra][ca] == sq[rb][cb] {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(25, edges).unwrap()
}

pub fn latin_square_graphs() -> Vec<Graph> {
    reduced_latin_squares()
        .iter()
        .map(latin_square_graph)
        .collect()
}

fn is_target(g: &Graph) -> bool {
    srg_params(g).map(|p| p.tuple()) == Some((N, K, LAMBDA, MU))
}

/// Godsil–McKay switches with one or two switching cells. A cell `C` of
/// even size induces a regular subgraph; with two cells each vertex of one
/// cell has a constant number of neighbors in the other. Every remaining
/// vertex has 0, half or all of each cell as neighbors and swaps its
/// adjacency to every cell it sees exactly half of.
pub fn gm_switches(rows: &[u32]) -> Vec<Rows> {
    let n = rows.len();
    let mut out = Vec::new();
    for size in [4usize, 6, 8] {
        let mut pick = Vec::with_capacity(size);
        subsets(n, size, 0, 0, &mut pick, &mut |mask| {
            if let Some(next) = gm_apply(rows, &[mask]) {
                out.push(next);
            }
        });
    }
    for size in [4usize, 6] {
        let mut pick = Vec::with_capacity(size);
        subsets(n, size, 0, 0, &mut pick, &mut |first| {
            gm_pairs(rows, first, 4, &mut out)
        });
    }
    out
}

fn subsets(
    n: usize,
    size: usize,
    from: usize,
    mask: u32,
    pick: &mut Vec<usize>,
    f: &mut dyn FnMut(u32),
) {
    if pick.len() == size {
        f(mask);
        return;
    }
    for x in from..=n - (size - pick.len()) {
        pick.push(x);
        subsets(n, size, x + 1, mask | 1 << x, pick, f);
        pick.pop();
    }
}

fn induces_regular(rows: &[u32], mask: u32) -> bool {
    let mut it = (0..rows.len()).filter(|&x| mask >> x & 1 == 1);
    let first = it.next().map(|x| (rows[x] & mask).count_ones());
    it.all(|x| Some((rows[x] & mask).count_ones()) == first)
}

/// Two-cell switches whose first cell is `first` and second has `size2`
/// vertices.
fn gm_pairs(rows: &[u32], first: u32, size2: usize, out: &mut Vec<Rows>) {
    let n = rows.len();
    if !induces_regular(rows, first) {
        return;
    }
    let s1 = first.count_ones();
    let count = |x: usize| (rows[x] & first).count_ones();
    let outside: Vec<usize> = (0..n).filter(|&x| first >> x & 1 == 0).collect();
    let bad: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&x| !matches!(count(x), c if c == 0 || 2 * c == s1 || c == s1))
        .collect();
    if bad.is_empty() || bad.len() > size2 || bad.iter().any(|&x| count(x) != count(bad[0])) {
        return;
    }
    let c = count(bad[0]);
    let pool: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&x| count(x) == c && !bad.contains(&x))
        .collect();
    let need = size2 - bad.len();
    if pool.len() < need {
        return;
    }
    let base: u32 = bad.iter().fold(0, |m, &x| m | 1 << x);
    let mut pick = Vec::new();
    subsets(pool.len(), need, 0, 0, &mut pick, &mut |sel| {
        let second = (0..pool.len())
            .filter(|&i| sel >> i & 1 == 1)
            .fold(base, |m, i| m | 1 << pool[i]);
        if !induces_regular(rows, second) {
            return;
        }
        let back: Vec<u32> = (0..n)
            .filter(|&x| first >> x & 1 == 1)
            .map(|x| (rows[x] & second).count_ones())
            .collect();
        if back.iter().any(|&b| b != back[0]) {
            return;
        }
        if let Some(next) = gm_apply(rows, &[first, second]) {
            out.push(next);
        }
    });
}

/// Applies a switch over `cells`; `None` if some vertex outside them sees a
/// cell other than 0, half or all, or nothing would change.
fn gm_apply(rows: &[u32], cells: &[u32]) -> Option<Rows> {
    let all = cells.iter().fold(0u32, |m, &c| m | c);
    if cells.len() == 1 && !induces_regular(rows, cells[0]) {
        return None;
    }
    let mut next = rows.to_vec();
    let mut changed = false;
    for (x, &r) in rows.iter().enumerate() {
        if all >> x & 1 == 1 {
            continue;
        }
        for &cell in cells {
            let size = cell.count_ones();
            match (r & cell).count_ones() {
                c if c == 0 || c == size => {}
                c if 2 * c == size => {
                    changed = true;
                    next[x] ^= cell;
                    for (y, ny) in next.iter_mut().enumerate() {
                        if cell >> y & 1 == 1 {
                            *ny ^= 1 << x;
                        }
                    }
                }
                _ => return None,
            }
        }
    }
    changed.then_some(next)
}

/// For each point of a graph on 26 vertices, Seidel-switch to isolate it
/// and delete it.
pub fn two_graph_descendants(ext: &[u32]) -> Vec<Rows> {
    let m = ext.len();
    let full: u32 = (1u32 << m) - 1;
    (0..m)
        .map(|x| {
            let s = ext[x];
            let switched: Vec<u32> = (0..m)
                .map(|v| {
                    let flip = if s >> v & 1 == 1 { full & !s } else { s };
                    (ext[v] ^ flip) & !(1 << v)
                })
                .collect();
            let keep: Vec<usize> = (0..m).filter(|&v| v != x).collect();
            keep.iter()
                .map(|&v| {
                    keep.iter()
                        .enumerate()
                        .fold(0u32, |acc, (j, &w)| acc | (switched[v] >> w & 1) << j)
                })
                .collect()
        })
        .collect()
}

/// Descendants of the two-graph of `G + isolated point`.
pub fn descendants(rows: &[u32]) -> Vec<Rows> {
    let mut ext = rows.to_vec();
    ext.push(0);
    two_graph_descendants(&ext)
}

/// The (26, 10, 3, 4) graphs in the switching class of `G + point`: switching
/// sets are 10-sets inducing a cubic subgraph with every other vertex having
/// 6 neighbors inside.
pub fn regular_members(rows: &[u32]) -> Vec<Rows> {
    fn grow(rows: &[u32], from: usize, set: u32, out: &mut Vec<Rows>) {
        let n = rows.len();
        let size = set.count_ones() as usize;
        if size == 10 {
            let ok = (0..n).all(|v| {
                let c = (rows[v] & set).count_ones();
                if set >> v & 1 == 1 {
                    c == 3
                } else {
                    c == 6
                }
            });
            if ok {
                let mut ext = rows.to_vec();
                ext.push(0);
                let m = n + 1;
                let full: u32 = (1u32 << m) - 1;
                let switched = (0..m)
                    .map(|v| {
                        let flip = if set >> v & 1 == 1 { full & !set } else { set };
                        (ext[v] ^ flip) & !(1 << v)
                    })
                    .collect();
                out.push(switched);
            }
            return;
        }
        for x in from..n {
            if 10 - size > n - x {
                return;
            }
            let next = set | 1 << x;
            if (rows[x] & set).count_ones() > 3 {
                continue;
            }
            let over = (0..n).any(|v| next >> v & 1 == 1 && (rows[v] & next).count_ones() > 3);
            if over {
                continue;
            }
            grow(rows, x + 1, next, out);
        }
    }
    let mut out = Vec::new();
    grow(rows, 0, 0, &mut out);
    out
}

fn complement_rows(rows: &[u32]) -> Rows {
    let n = rows.len();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    rows.iter()
        .enumerate()
        .map(|(v, &r)| !r & full & !(1 << v))
        .collect()
}

/// Small xorshift generator for the randomized search.
pub struct XorShift(pub u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// Canonical forms of every (25,12,5,6) graph reachable from the seeds.
pub struct Catalog {
    pub classes: BTreeSet<Rows>,
    wider: BTreeSet<Rows>,
}

impl Catalog {
    pub fn new() -> Self {
        Catalog {
            classes: BTreeSet::new(),
            wider: BTreeSet::new(),
        }
    }

    /// Inserts `g` if it has the target parameters; true if it was new.
    pub fn insert(&mut self, g: &Graph) -> bool {
        if !is_target(g) {
            return false;
        }
        self.classes.insert(canonical_rows(&rows_of(g)))
    }

    /// Closes the catalog under complement, switching and descendants.
    pub fn close(&mut self) {
        let mut frontier: Vec<Rows> = self.classes.iter().cloned().collect();
        while let Some(rows) = frontier.pop() {
            let mut candidates = gm_switches(&rows);
            candidates.extend(descendants(&rows));
            candidates.push(complement_rows(&rows));
            for member in regular_members(&rows) {
                if !self.wider.insert(canonical_rows(&member)) {
                    continue;
                }
                candidates.extend(two_graph_descendants(&member));
                for other in gm_switches(&member) {
                    if self.wider.insert(canonical_rows(&other)) {
                        candidates.extend(two_graph_descendants(&other));
                    }
                }
            }
            for c in candidates {
                let g = graph_of(&c);
                if !is_target(&g) {
                    continue;
                }
                let canon = canonical_rows(&c);
                if self.classes.insert(canon.clone()) {
                    frontier.push(canon);
                }
            }
        }
    }

    pub fn wider_len(&self) -> usize {
        self.wider.len()
    }

    pub fn graphs(&self) -> Vec<Graph> {
        let mut out: Vec<Graph> = self.classes.iter().map(|r| graph_of(r)).collect();
        out.sort_by_cached_key(igel::write_graph6);
        out
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paley_is_target() {
        assert!(is_target(&paley25()));
    }

    #[test]
    fn latin_square_graphs_are_target() {
        let sq = reduced_latin_squares();
        assert_eq!(sq.len(), 56);
        assert!(latin_square_graphs().iter().all(is_target));
    }

    #[test]
    fn switching_preserves_target() {
        let rows = rows_of(&paley25());
        for s in gm_switches(&rows).into_iter().take(50) {
            assert!(is_target(&graph_of(&s)));
        }
    }
}
