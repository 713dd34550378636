//! Ego-network `(distance, degree)` encodings.
//!
//! The encoding of a root `v` at depth `alpha` is the multiset of
//! `(l(u, v), deg_E(u))` over every `u` within `alpha` hops, where `deg_E`
//! is the degree inside the subgraph induced by those vertices. Edges between
//! two vertices at distance exactly `alpha` count toward both degrees.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{self, Execution};

const UNSEEN: u32 = u32::MAX;

/// Reusable BFS buffers. `dist` is kept all-`UNSEEN` between explorations.
#[derive(Debug, Default, Clone)]
pub(crate) struct BfsScratch {
    dist: Vec<u32>,
    order: Vec<usize>,
    pairs: Vec<(u32, u32)>,
}

impl BfsScratch {
    pub(crate) fn new(n: usize) -> Self {
        BfsScratch {
            dist: vec![UNSEEN; n],
            order: Vec::new(),
            pairs: Vec::new(),
        }
    }

    /// Breadth-first search from `root` truncated at depth `alpha`. Afterwards
    /// `order()` lists the ball in BFS order (non-decreasing distance).
    pub(crate) fn explore(&mut self, g: &Graph, root: usize, alpha: usize) {
        if self.dist.len() < g.n() {
            self.dist.resize(g.n(), UNSEEN);
        }
        self.clear();
        let alpha = alpha.min(u32::MAX as usize - 1) as u32;
        self.dist[root] = 0;
        self.order.push(root);
        let mut head = 0;
        while head < self.order.len() {
            let u = self.order[head];
            head += 1;
            let du = self.dist[u];
            if du == alpha {
                // Distances are non-decreasing along `order`.
                break;
            }
            for &w in g.neighbors(u) {
                let w = w as usize;
                if self.dist[w] == UNSEEN {
                    self.dist[w] = du + 1;
                    self.order.push(w);
                }
            }
        }
    }

    fn clear(&mut self) {
        for &u in &self.order {
            self.dist[u] = UNSEEN;
        }
        self.order.clear();
    }

    #[inline]
    pub(crate) fn order(&self) -> &[usize] {
        &self.order
    }

    /// Distance of `u` from the last root, if inside the ball.
    #[inline]
    pub(crate) fn distance(&self, u: usize) -> Option<usize> {
        match self.dist.get(u) {
            Some(&d) if d != UNSEEN => Some(d as usize),
            _ => None,
        }
    }
}

/// One `(distance, degree)` pair with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreeEntry {
    pub distance: u32,
    pub degree: u32,
    pub count: u32,
}

/// Serialization used for hashing and equality of graph-level encodings.
pub trait CanonicalBytes {
    fn write_canonical(&self, out: &mut Vec<u8>);

    fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.write_canonical(&mut out);
        out
    }
}

pub(crate) fn put_u64(out: &mut Vec<u8>, x: usize) {
    out.extend_from_slice(&(x as u64).to_le_bytes());
}

/// Multiset of `(distance, degree)` pairs for one root vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexEncoding {
    alpha: usize,
    /// Sorted by `(distance, degree)`, counts strictly positive.
    entries: Box<[DegreeEntry]>,
}

impl VertexEncoding {
    /// Builds an encoding from `(distance, degree, count)` triples, merging
    /// repeated pairs and dropping zero counts.
    pub fn from_counts<I>(alpha: usize, counts: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        let mut raw: Vec<_> = counts.into_iter().filter(|t| t.2 > 0).collect();
        raw.sort_unstable();
        let mut entries: Vec<DegreeEntry> = Vec::with_capacity(raw.len());
        for (distance, degree, count) in raw {
            let (distance, degree, count) = (distance as u32, degree as u32, count as u32);
            match entries.last_mut() {
                Some(e) if e.distance == distance && e.degree == degree => e.count += count,
                _ => entries.push(DegreeEntry {
                    distance,
                    degree,
                    count,
                }),
            }
        }
        VertexEncoding {
            alpha,
            entries: entries.into(),
        }
    }

    /// Sorts `pairs` in place and run-length encodes them.
    fn from_pairs(alpha: usize, pairs: &mut [(u32, u32)]) -> Self {
        pairs.sort_unstable();
        let distinct = 1 + pairs.windows(2).filter(|w| w[0] != w[1]).count();
        let mut entries: Vec<DegreeEntry> = Vec::with_capacity(distinct);
        for &(distance, degree) in pairs.iter() {
            match entries.last_mut() {
                Some(e) if e.distance == distance && e.degree == degree => e.count += 1,
                _ => entries.push(DegreeEntry {
                    distance,
                    degree,
                    count: 1,
                }),
            }
        }
        VertexEncoding {
            alpha,
            entries: entries.into(),
        }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn entries(&self) -> &[DegreeEntry] {
        &self.entries
    }

    /// Multiplicity of `(distance, degree)`.
    pub fn count(&self, distance: usize, degree: usize) -> usize {
        self.entries
            .binary_search_by(|e| (e.distance as usize, e.degree as usize).cmp(&(distance, degree)))
            .map_or(0, |i| self.entries[i].count as usize)
    }

    /// Number of vertices in the ego-network.
    pub fn vertex_count(&self) -> usize {
        self.entries.iter().map(|e| e.count as usize).sum()
    }

    /// Sum of induced degrees, i.e. twice the ego-network's edge count.
    pub fn degree_sum(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.degree as usize * e.count as usize)
            .sum()
    }

    /// Number of ego-network vertices at exactly `distance` hops.
    pub fn layer_size(&self, distance: usize) -> usize {
        self.entries
            .iter()
            .filter(|e| e.distance as usize == distance)
            .map(|e| e.count as usize)
            .sum()
    }
}

impl CanonicalBytes for VertexEncoding {
    fn write_canonical(&self, out: &mut Vec<u8>) {
        put_u64(out, self.entries.len());
        for e in &self.entries {
            put_u64(out, e.distance as usize);
            put_u64(out, e.degree as usize);
            put_u64(out, e.count as usize);
        }
    }
}

impl fmt::Display for VertexEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}, {}): {}", e.distance, e.degree, e.count)?;
        }
        f.write_str("}")
    }
}

pub(crate) fn check_alpha(alpha: usize) -> Result<()> {
    if alpha == 0 {
        Err(Error::ZeroAlpha)
    } else {
        Ok(())
    }
}

fn encode_with(g: &Graph, v: usize, alpha: usize, scratch: &mut BfsScratch) -> VertexEncoding {
    scratch.explore(g, v, alpha);
    let mut pairs = std::mem::take(&mut scratch.pairs);
    pairs.clear();
    pairs.extend(scratch.order().iter().map(|&u| {
        let du = scratch.distance(u).unwrap();
        let degree = if du < alpha {
            // Every neighbor of an interior vertex lies in the ball.
            g.deg(u)
        } else {
            g.neighbors(u)
                .iter()
                .filter(|&&w| scratch.distance(w as usize).is_some())
                .count()
        };
        (du as u32, degree as u32)
    }));
    let enc = VertexEncoding::from_pairs(alpha, &mut pairs);
    scratch.pairs = pairs;
    enc
}

/// Encodes the `alpha`-depth ego-network of `v` with a single truncated BFS.
pub fn igel_encode_vertex(g: &Graph, v: usize, alpha: usize) -> Result<VertexEncoding> {
    g.check_vertex(v)?;
    check_alpha(alpha)?;
    let mut scratch = BfsScratch::new(g.n());
    Ok(encode_with(g, v, alpha, &mut scratch))
}

/// Encodes every vertex; element `v` belongs to vertex `v`.
pub fn igel_encode_all(g: &Graph, alpha: usize) -> Result<Vec<VertexEncoding>> {
    igel_encode_all_with(g, alpha, Execution::default())
}

pub fn igel_encode_all_with(
    g: &Graph,
    alpha: usize,
    exec: Execution,
) -> Result<Vec<VertexEncoding>> {
    check_alpha(alpha)?;
    // Encode a breadth-first relabeling so that balls of consecutive roots
    // share cache lines; encodings are label-invariant.
    let order = g.bfs_order();
    let mut rank = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let local = g.permute(&rank)?;
    Ok(par::map_init_ordered(
        exec,
        &order,
        || BfsScratch::new(g.n()),
        |scratch, v| encode_with(&local, rank[v], alpha, scratch),
    ))
}

/// Sparse feature vector of one encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SparseVector {
    pub dim: usize,
    pub d_cap: usize,
    /// Ascending indices, strictly positive values.
    pub entries: Vec<(usize, usize)>,
}

impl SparseVector {
    pub(crate) fn from_unsorted(dim: usize, d_cap: usize, mut raw: Vec<(usize, usize)>) -> Self {
        raw.sort_unstable();
        let mut entries: Vec<(usize, usize)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            match entries.last_mut() {
                Some(last) if last.0 == i => last.1 += v,
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|e| e.1 > 0);
        SparseVector {
            dim,
            d_cap,
            entries,
        }
    }

    pub fn get(&self, index: usize) -> usize {
        self.entries
            .binary_search_by_key(&index, |e| e.0)
            .map_or(0, |i| self.entries[i].1)
    }
}

/// `index:value` pairs separated by single spaces.
impl fmt::Display for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (i, v)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}:{v}")?;
        }
        Ok(())
    }
}

/// Places each `(distance, degree)` count at `distance * (d_cap + 1) +
/// min(degree, d_cap)`, summing collisions introduced by the cap.
pub fn vectorize(enc: &VertexEncoding, d_cap: usize) -> Result<SparseVector> {
    if d_cap == 0 {
        return Err(Error::ZeroDegreeCap);
    }
    let width = d_cap + 1;
    let raw = enc
        .entries
        .iter()
        .map(|e| {
            (
                e.distance as usize * width + (e.degree as usize).min(d_cap),
                e.count as usize,
            )
        })
        .collect();
    Ok(SparseVector::from_unsorted(
        (enc.alpha + 1) * width,
        d_cap,
        raw,
    ))
}

/// Sorted multiset of vertex encodings for a whole graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphEncoding<E = VertexEncoding> {
    alpha: usize,
    /// Sorted by canonical bytes.
    vertices: Vec<E>,
    bytes: Vec<u8>,
}

impl<E: CanonicalBytes> GraphEncoding<E> {
    pub fn from_vertices(alpha: usize, vertices: Vec<E>) -> Self {
        let mut keyed: Vec<(Vec<u8>, E)> = vertices
            .into_iter()
            .map(|e| (e.canonical_bytes(), e))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let mut bytes = Vec::new();
        put_u64(&mut bytes, alpha);
        put_u64(&mut bytes, keyed.len());
        for (b, _) in &keyed {
            bytes.extend_from_slice(b);
        }
        GraphEncoding {
            alpha,
            vertices: keyed.into_iter().map(|(_, e)| e).collect(),
            bytes,
        }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// Vertex encodings in canonical order.
    pub fn vertices(&self) -> &[E] {
        &self.vertices
    }

    /// Byte-stable serialization; equal iff the multisets are equal.
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }
}

impl<E: CanonicalBytes + PartialEq> GraphEncoding<E> {
    /// Distinct vertex encodings with their multiplicities, canonical order.
    pub fn multiplicities(&self) -> Vec<(&E, usize)> {
        let mut out: Vec<(&E, usize)> = Vec::new();
        for e in &self.vertices {
            match out.last_mut() {
                Some((last, c)) if *last == e => *c += 1,
                _ => out.push((e, 1)),
            }
        }
        out
    }
}

impl<E: CanonicalBytes> CanonicalBytes for GraphEncoding<E> {
    fn write_canonical(&self, out: &mut Vec<u8>) {
        put_u64(out, self.bytes.len());
        out.extend_from_slice(&self.bytes);
    }
}

pub fn encode_graph(g: &Graph, alpha: usize) -> Result<GraphEncoding> {
    encode_graph_with(g, alpha, Execution::default())
}

pub fn encode_graph_with(g: &Graph, alpha: usize, exec: Execution) -> Result<GraphEncoding> {
    Ok(GraphEncoding::from_vertices(
        alpha,
        igel_encode_all_with(g, alpha, exec)?,
    ))
}

pub fn igel_equivalent(g1: &Graph, g2: &Graph, alpha: usize) -> Result<bool> {
    Ok(encode_graph(g1, alpha)?.bytes() == encode_graph(g2, alpha)?.bytes())
}

/// Tuple of graph-level encodings, one per depth.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConcatEncoding {
    pub components: Vec<GraphEncoding>,
}

impl CanonicalBytes for ConcatEncoding {
    fn write_canonical(&self, out: &mut Vec<u8>) {
        put_u64(out, self.components.len());
        for c in &self.components {
            c.write_canonical(out);
        }
    }
}

pub fn encode_graph_concat(g: &Graph, alphas: &[usize]) -> Result<ConcatEncoding> {
    encode_graph_concat_with(g, alphas, Execution::default())
}

pub fn encode_graph_concat_with(
    g: &Graph,
    alphas: &[usize],
    exec: Execution,
) -> Result<ConcatEncoding> {
    if alphas.is_empty() {
        return Err(Error::EmptyAlphaList);
    }
    alphas.iter().try_for_each(|&a| check_alpha(a))?;
    let components = alphas
        .iter()
        .map(|&a| encode_graph_with(g, a, exec))
        .collect::<Result<_>>()?;
    Ok(ConcatEncoding { components })
}
