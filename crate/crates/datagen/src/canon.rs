//! Canonical labeling for small graphs (n <= 32) by individualization and
//! refinement.
//!
//! The search tree is label-invariant: targets are the first non-singleton
//! cell, children individualize each vertex of it, and every node carries an
//! invariant (the refined partition's key table). The canonical form is the
//! lexicographically largest `(invariant path, permuted adjacency rows)` over
//! all leaves, so subtrees whose invariant prefix is already smaller than the
//! best one are skipped.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use igel::Graph;

pub type Rows = Vec<u32>;

pub fn rows_of(g: &Graph) -> Rows {
    assert!(g.n() <= 32, "canonical labeling limited to 32 vertices");
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | (1 << w)))
        .collect()
}

pub fn graph_of(rows: &[u32]) -> Graph {
    let n = rows.len();
    let edges = (0..n).flat_map(|u| {
        (u + 1..n)
            .filter(move |&v| rows[u] >> v & 1 == 1)
            .map(move |v| (u, v))
    });
    Graph::from_edges(n, edges).expect("rows describe a simple graph")
}

/// Ranks `keys`; returns colors and a hash of the sorted key table.
fn relabel(keys: &[Vec<u32>]) -> (Vec<u32>, u64, usize) {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut colors = vec![0u32; keys.len()];
    let mut hasher = DefaultHasher::new();
    let mut classes = 0usize;
    let mut prev: Option<&Vec<u32>> = None;
    for &v in &order {
        if prev != Some(&keys[v]) {
            classes += 1;
            keys[v].hash(&mut hasher);
        }
        prev = Some(&keys[v]);
        colors[v] = classes as u32 - 1;
        hasher.write_u32(colors[v]);
    }
    (colors, hasher.finish(), classes)
}

/// Refines `colors` to the coarsest equitable refinement.
fn refine(rows: &[u32], colors: Vec<u32>) -> (Vec<u32>, u64) {
    let n = rows.len();
    let mut colors = colors;
    let mut classes = {
        let mut c = colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    let mut inv = 0u64;
    loop {
        let keys: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut k = vec![colors[v]];
                let mut nb: Vec<u32> = (0..n)
                    .filter(|&w| rows[v] >> w & 1 == 1)
                    .map(|w| colors[w])
                    .collect();
                nb.sort_unstable();
                k.extend(nb);
                k
            })
            .collect();
        let (next, h, cls) = relabel(&keys);
        inv = inv.rotate_left(7) ^ h;
        colors = next;
        if cls == classes {
            return (colors, inv);
        }
        classes = cls;
    }
}

struct Search<'a> {
    rows: &'a [u32],
    best_path: Vec<u64>,
    best: Option<Rows>,
}

impl Search<'_> {
    fn leaf_rows(&self, colors: &[u32]) -> Rows {
        let n = self.rows.len();
        let mut out = vec![0u32; n];
        for u in 0..n {
            let mut r = 0u32;
            for w in 0..n {
                if self.rows[u] >> w & 1 == 1 {
                    r |= 1 << colors[w];
                }
            }
            out[colors[u] as usize] = r;
        }
        out
    }

    fn visit(&mut self, colors: Vec<u32>, path: &mut Vec<u64>) {
        // Prune on invariant prefix.
        let depth = path.len();
        if self.best.is_some() {
            let cmp = path[..].cmp(&self.best_path[..depth.min(self.best_path.len())]);
            if cmp == std::cmp::Ordering::Less {
                return;
            }
            if cmp == std::cmp::Ordering::Greater {
                self.best = None;
            }
        }
        let n = self.rows.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1);
        match target {
            None => {
                let leaf = self.leaf_rows(&colors);
                let better = match &self.best {
                    None => true,
                    Some(b) => {
                        path[..] > self.best_path[..]
                            || (path[..] == self.best_path[..] && leaf > *b)
                    }
                };
                if better {
                    self.best = Some(leaf);
                    self.best_path = path.clone();
                }
            }
            Some(cell) => {
                for x in 0..n {
                    if colors[x] as usize != cell {
                        continue;
                    }
                    let split: Vec<u32> =
                        (0..n).map(|v| 2 * colors[v] + u32::from(v != x)).collect();
                    let (refined, inv) = refine(self.rows, split);
                    path.push(inv);
                    self.visit(refined, path);
                    path.pop();
                }
            }
        }
    }
}

/// Canonical adjacency rows: isomorphic graphs map to identical rows.
pub fn canonical_rows(rows: &[u32]) -> Rows {
    let (colors, inv) = refine(rows, vec![0; rows.len()]);
    let mut search = Search {
        rows,
        best_path: Vec::new(),
        best: None,
    };
    let mut path = vec![inv];
    search.visit(colors, &mut path);
    search.best.unwrap_or_default()
}
