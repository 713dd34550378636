//! Randomized row-by-row backtracking for strongly regular graphs.
//!
//! Row `i` is chosen once rows `0..i` are fixed, so its intersection with
//! every earlier row is known exactly and must equal `lambda` or `mu`.
//! Partial common-neighbor counts between later vertices prune early. Column
//! choices are tried in random order and each attempt has a node budget, so
//! repeated attempts sample different solutions.

use crate::srg::XorShift;

pub struct Params {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

struct State<'a> {
    p: &'a Params,
    rows: Vec<u32>,
    /// Common neighbors among vertices `0..=i` for every pair.
    common: Vec<Vec<u8>>,
    rng: XorShift,
    budget: u64,
}

impl State<'_> {
    fn target(&self, i: usize, j: usize) -> usize {
        if self.rows[i] >> j & 1 == 1 {
            self.p.lambda
        } else {
            self.p.mu
        }
    }

    /// Chooses the columns of row `i` beyond `i`, starting at `col`.
    fn fill_row(&mut self, i: usize, col: usize, counts: &mut Vec<usize>) -> bool {
        if self.budget == 0 {
            return false;
        }
        self.budget -= 1;
        let n = self.p.n;
        let weight = self.rows[i].count_ones() as usize;
        if weight > self.p.k || weight + (n - col) < self.p.k {
            return false;
        }
        let free: u32 = if col >= n {
            0
        } else {
            ((1u64 << n) - (1u64 << col)) as u32
        };
        for j in 0..i {
            let t = self.target(i, j);
            if counts[j] > t || counts[j] + ((self.rows[j] & free).count_ones() as usize) < t {
                return false;
            }
        }
        if col == n {
            return self.place(i);
        }
        let first = self.rng.below(2) == 0;
        for take in [first, !first] {
            if take {
                if (self.rows[col].count_ones() as usize) >= self.p.k {
                    continue;
                }
                self.rows[i] |= 1 << col;
                self.rows[col] |= 1 << i;
                for (j, c) in counts.iter_mut().enumerate().take(i) {
                    *c += (self.rows[j] >> col & 1) as usize;
                }
            }
            if self.fill_row(i, col + 1, counts) {
                return true;
            }
            if take {
                self.rows[i] &= !(1 << col);
                self.rows[col] &= !(1 << i);
                for (j, c) in counts.iter_mut().enumerate().take(i) {
                    *c -= (self.rows[j] >> col & 1) as usize;
                }
            }
            if self.budget == 0 {
                return false;
            }
        }
        false
    }

    /// Row `i` is complete: update partial counts and recurse.
    fn place(&mut self, i: usize) -> bool {
        let n = self.p.n;
        let nb: Vec<usize> = (i + 1..n).filter(|&x| self.rows[i] >> x & 1 == 1).collect();
        let cap = self.p.lambda.max(self.p.mu) as u8;
        let mut ok = true;
        for (a, &x) in nb.iter().enumerate() {
            for &y in &nb[a + 1..] {
                self.common[x][y] += 1;
                if self.common[x][y] > cap {
                    ok = false;
                }
            }
        }
        if ok && self.search(i + 1) {
            return true;
        }
        for (a, &x) in nb.iter().enumerate() {
            for &y in &nb[a + 1..] {
                self.common[x][y] -= 1;
            }
        }
        false
    }

    fn search(&mut self, i: usize) -> bool {
        if i == self.p.n {
            return true;
        }
        let saved = self.rows.clone();
        let mut counts: Vec<usize> = (0..i)
            .map(|j| (self.rows[i] & self.rows[j]).count_ones() as usize)
            .collect();
        if self.fill_row(i, i + 1, &mut counts) {
            return true;
        }
        self.rows = saved;
        false
    }
}

/// One randomized attempt; returns adjacency rows of a solution.
pub fn attempt(p: &Params, seed: u64, budget: u64) -> Option<Vec<u32>> {
    let n = p.n;
    let mut rows = vec![0u32; n];
    // Vertex 0 is adjacent to 1..=k; vertex 1 sees the next lambda of them
    // and the first k - 1 - lambda non-neighbors of 0.
    let mut fixed: Vec<(usize, usize)> = (1..=p.k).map(|v| (0, v)).collect();
    fixed.extend((2..2 + p.lambda).map(|v| (1, v)));
    fixed.extend((p.k + 1..p.k + 1 + (p.k - 1 - p.lambda)).map(|v| (1, v)));
    for (u, v) in fixed {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    let mut common = vec![vec![0u8; n]; n];
    for i in 0..2 {
        let nb: Vec<usize> = (i + 1..n).filter(|&x| rows[i] >> x & 1 == 1).collect();
        for (a, &x) in nb.iter().enumerate() {
            for &y in &nb[a + 1..] {
                common[x][y] += 1;
            }
        }
    }
    let mut s = State {
        p,
        rows,
        common,
        rng: XorShift(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1),
        budget,
    };
    s.search(2).then_some(s.rows)
}
