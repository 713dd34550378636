//! Naive reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use igel::families::{gen_gnp, random_permutation};
use igel::gamma::GammaVertexEncoding;
use igel::{Graph, VertexEncoding};

pub type Counts = BTreeMap<(usize, usize), usize>;
pub type GammaCounts = BTreeMap<(usize, usize, usize), usize>;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Distances over an adjacency matrix, `usize::MAX` when unreachable.
pub fn distances(a: &[Vec<bool>], s: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; a.len()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for w in 0..a.len() {
            if a[u][w] && d[w] == usize::MAX {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

/// The ego-network of `v` as an explicit adjacency matrix over its members,
/// with distances recomputed inside it.
pub struct Ego {
    pub adj: Vec<Vec<bool>>,
    pub dist: Vec<usize>,
}

pub fn ego(g: &Graph, v: usize, alpha: usize) -> Ego {
    let a = matrix(g);
    let d = distances(&a, v);
    let members: Vec<usize> = (0..g.n()).filter(|&u| d[u] <= alpha).collect();
    let adj: Vec<Vec<bool>> = members
        .iter()
        .map(|&x| members.iter().map(|&y| a[x][y]).collect())
        .collect();
    let root = members.iter().position(|&u| u == v).unwrap();
    let dist = distances(&adj, root);
    Ego { adj, dist }
}

pub fn naive_encode(g: &Graph, v: usize, alpha: usize) -> Counts {
    let e = ego(g, v, alpha);
    let mut out = Counts::new();
    for (i, row) in e.adj.iter().enumerate() {
        let deg = row.iter().filter(|&&b| b).count();
        *out.entry((e.dist[i], deg)).or_default() += 1;
    }
    out
}

pub fn naive_gamma(g: &Graph, v: usize, alpha: usize) -> GammaCounts {
    let e = ego(g, v, alpha);
    let mut out = GammaCounts::new();
    for (i, row) in e.adj.iter().enumerate() {
        let layer = |p: usize| {
            (0..row.len())
                .filter(|&j| row[j] && e.dist[j] == e.dist[i] + p)
                .count()
        };
        *out.entry((e.dist[i], layer(0), layer(1))).or_default() += 1;
    }
    out
}

/// Edges of the materialized ego-network.
pub fn ego_edges(g: &Graph, v: usize, alpha: usize) -> usize {
    let e = ego(g, v, alpha);
    e.adj
        .iter()
        .map(|r| r.iter().filter(|&&b| b).count())
        .sum::<usize>()
        / 2
}

pub fn counts(e: &VertexEncoding) -> Counts {
    e.entries()
        .iter()
        .map(|x| ((x.distance as usize, x.degree as usize), x.count as usize))
        .collect()
}

pub fn gamma_counts(e: &GammaVertexEncoding) -> GammaCounts {
    e.entries()
        .iter()
        .map(|x| ((x.distance, x.same_layer, x.outward), x.count))
        .collect()
}

pub fn counts_of(items: &[(usize, usize, usize)]) -> Counts {
    items.iter().map(|&(a, b, c)| ((a, b), c)).collect()
}

/// Random graph number `i` of a mixed-density family with at most
/// `max_n` vertices.
pub fn random_graph(i: u64, max_n: usize) -> Graph {
    let n = 1 + (i as usize * 7 + 3) % max_n;
    let p = [0.1, 0.25, 0.4, 0.6, 0.85][(i % 5) as usize];
    gen_gnp(n, p, i).unwrap()
}

pub fn permuted(g: &Graph, seed: u64) -> (Graph, Vec<usize>) {
    let perm = random_permutation(g.n(), seed);
    (g.permute(&perm).unwrap(), perm)
}

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

pub fn load_collection(name: &str) -> igel::GraphCollection {
    let text = std::fs::read_to_string(data_path(name)).unwrap();
    igel::parse_graph6_collection(&text).unwrap()
}

/// Proptest strategy for small simple graphs.
pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (0..=max_n).prop_flat_map(arb_graph_on)
}

/// Graphs on exactly `n` vertices, each edge present with probability 1/2.
pub fn arb_graph_on(n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    let pairs = if n < 2 { 0 } else { n * (n - 1) / 2 };
    proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
        let mut edges = Vec::new();
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[k] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, edges).unwrap()
    })
}
