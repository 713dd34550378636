//! Immutable simple undirected graphs in compressed sparse row form.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph with dense vertex ids `0..n`.
///
/// Adjacency is stored as one contiguous array of `u32` neighbor ids, sliced
/// per vertex by `u32` offsets, so both `n` and `2m` are limited to
/// `u32::MAX`. Every neighbor list is sorted ascending, there are no
/// self-loops or parallel edges, and `u ∈ adj(v) ⟺ v ∈ adj(u)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

/// Eccentricity-based diameter. Disconnected graphs have no finite diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Disconnected => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Disconnected => f.write_str("inf"),
        }
    }
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge iterator.
    ///
    /// Duplicate edges (in either orientation) collapse to one. Self-loops and
    /// endpoints `>= n` are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > u32::MAX as usize {
            return Err(Error::InvalidParameters(format!(
                "{n} vertices exceeds the supported maximum"
            )));
        }
        let mut pairs = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            pairs.push((u, v));
            pairs.push((v, u));
        }
        pairs.sort_unstable();
        pairs.dedup();
        if pairs.len() > u32::MAX as usize {
            return Err(Error::InvalidParameters(format!(
                "{} edges exceeds the supported maximum",
                pairs.len() / 2
            )));
        }
        Ok(Self::from_sorted_arcs(n, &pairs))
    }

    /// `arcs` must be sorted, deduplicated, symmetric and fit `u32` offsets.
    fn from_sorted_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        assert!(arcs.len() <= u32::MAX as usize, "too many arcs");
        let mut offsets = vec![0u32; n + 1];
        for &(u, _) in arcs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = arcs.iter().map(|&(_, v)| v as u32).collect();
        Graph { offsets, targets }
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    /// Sorted neighbors of `v`. Panics if `v >= n`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).map(move |v| self.deg(v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    ///
    /// `perm` must be a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::InvalidParameters(format!(
                "permutation of length {} for graph with {n} vertices",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
        }
        let mut inverse = vec![0; n];
        for (v, &p) in perm.iter().enumerate() {
            inverse[p] = v;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(self.targets.len());
        offsets.push(0);
        for &v in &inverse {
            let start = targets.len();
            targets.extend(self.neighbors(v).iter().map(|&w| perm[w as usize] as u32));
            targets[start..].sort_unstable();
            offsets.push(targets.len() as u32);
        }
        Ok(Graph { offsets, targets })
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Self {
        let n = self.n();
        let mut arcs = Vec::with_capacity(n * n.saturating_sub(1) - self.targets.len());
        for u in 0..n {
            let nb = self.neighbors(u);
            let mut k = 0;
            for v in 0..n {
                if k < nb.len() && nb[k] as usize == v {
                    k += 1;
                } else if v != u {
                    arcs.push((u, v));
                }
            }
        }
        Self::from_sorted_arcs(n, &arcs)
    }

    /// Shortest-path distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in self.neighbors(u) {
                let w = w as usize;
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Exact diameter via all-pairs BFS.
    ///
    /// The empty graph and single vertices have diameter 0.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n() {
            for d in self.bfs_distances(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Disconnected,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Every vertex once, component by component in breadth-first order.
    /// Consecutive vertices tend to have overlapping neighborhoods, which
    /// keeps per-root traversals cache-friendly.
    pub fn bfs_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let start = order.len();
            order.push(s);
            let mut head = start;
            while head < order.len() {
                let u = order[head];
                head += 1;
                for &w in self.neighbors(u) {
                    let w = w as usize;
                    if !seen[w] {
                        seen[w] = true;
                        order.push(w);
                    }
                }
            }
        }
        order
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    ///
    /// Panics if the union exceeds the `u32` size limits.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = u32::try_from(self.n() + other.n()).map(|_| self.n() as u32);
        let base = u32::try_from(self.targets.len() + other.targets.len())
            .map(|_| self.targets.len() as u32);
        let (shift, base) = (
            shift.expect("too many vertices"),
            base.expect("too many arcs"),
        );
        let mut offsets = self.offsets.clone();
        offsets.extend(other.offsets[1..].iter().map(|&o| o + base));
        let mut targets = self.targets.clone();
        targets.extend(other.targets.iter().map(|&t| t + shift));
        Graph { offsets, targets }
    }

    /// The subgraph induced by `vertices`, relabeled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut arcs = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.neighbors(v) {
                let w = w as usize;
                if index[w] != usize::MAX {
                    arcs.push((i, index[w]));
                }
            }
        }
        arcs.sort_unstable();
        Self::from_sorted_arcs(vertices.len(), &arcs)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn triangle_basics() {
        let g = triangle();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        for v in 0..3 {
            assert_eq!(g.degree(v).unwrap(), 2);
        }
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.diameter(), Diameter::Finite(1));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(
            Graph::from_edges(1, [(0, 0)]),
            Err(Error::SelfLoop { vertex: 0 })
        );
    }

    #[test]
    fn degree_out_of_range() {
        assert!(matches!(
            triangle().degree(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn star_degrees() {
        let g = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(g.degree(0).unwrap(), 4);
        assert_eq!(g.degree(3).unwrap(), 1);
        assert_eq!(g.max_degree(), 4);
    }

    #[test]
    fn cycle_six_diameter() {
        let g = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.diameter(), Diameter::Finite(3));
    }

    #[test]
    fn disjoint_triangles_are_disconnected() {
        let g = triangle().disjoint_union(&triangle());
        assert_eq!(g.n(), 6);
        assert_eq!(g.m(), 6);
        assert_eq!(g.neighbors(4), &[3, 5]);
        assert_eq!(g.diameter(), Diameter::Disconnected);
        assert!(!g.is_connected());
    }

    #[test]
    fn complement_of_path() {
        let p = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = p.complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 3)]);
        assert_eq!(c.complement(), p);
    }

    #[test]
    fn permute_preserves_structure() {
        let p = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let q = p.permute(&[3, 2, 1, 0]).unwrap();
        assert_eq!(q, p);
        assert!(p.permute(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let h = g.induced_subgraph(&[5, 0, 1]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
