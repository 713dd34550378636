//! All graphs on `n` vertices up to isomorphism, by vertex augmentation.
//!
//! Every graph on `k + 1` vertices is some graph on `k` vertices plus one
//! vertex, so extending each class representative with every neighbor subset
//! and deduplicating by canonical form yields every class exactly once.

use std::collections::HashSet;

use igel::Graph;

use crate::canon::{canonical_rows, graph_of, Rows};

/// Canonical adjacency rows of every graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Rows> {
    assert!(n <= 10, "augmentation is only practical for tiny n");
    let mut level: Vec<Rows> = vec![Vec::new()];
    for k in 0..n {
        let mut next: HashSet<Rows> = HashSet::new();
        for rows in &level {
            for mask in 0u32..(1 << k) {
                let mut ext: Rows = rows.clone();
                for (v, r) in ext.iter_mut().enumerate() {
                    if mask >> v & 1 == 1 {
                        *r |= 1 << k;
                    }
                }
                ext.push(mask);
                next.insert(canonical_rows(&ext));
            }
        }
        let mut sorted: Vec<Rows> = next.into_iter().collect();
        sorted.sort();
        level = sorted;
    }
    level
}

/// Every connected graph on `n` vertices, ordered by graph6 record.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = all_graphs(n)
        .iter()
        .map(|r| graph_of(r))
        .filter(Graph::is_connected)
        .collect();
    out.sort_by_cached_key(igel::write_graph6);
    out
}
