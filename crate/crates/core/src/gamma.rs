//! Layer-aware extension of the ego-network encoding.
//!
//! Each vertex `u` of the ego-network of `v` is recorded as
//! `(l(u, v), d0, d1)`, where `d0` counts edges from `u` to vertices in the
//! same distance layer and `d1` counts edges to the next layer outward. Edges
//! back toward the root are not recorded. At the outermost layer `d1` is 0.

use std::fmt;

use serde::Serialize;

use crate::encode::{
    check_alpha, put_u64, BfsScratch, CanonicalBytes, GraphEncoding, SparseVector,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{self, Execution};

/// Relative layer offset for [`rel_degree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    /// Neighbors at the same distance from the root (`p = 0`).
    Same,
    /// Neighbors one hop further from the root (`p = 1`).
    Outward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GammaEntry {
    pub distance: usize,
    pub same_layer: usize,
    pub outward: usize,
    pub count: usize,
}

/// Multiset of `(distance, same-layer degree, outward degree)` triples.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GammaVertexEncoding {
    alpha: usize,
    entries: Vec<GammaEntry>,
}

impl GammaVertexEncoding {
    pub fn from_counts<I>(alpha: usize, counts: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, usize, usize)>,
    {
        let mut raw: Vec<_> = counts.into_iter().filter(|t| t.3 > 0).collect();
        raw.sort_unstable();
        let mut entries: Vec<GammaEntry> = Vec::new();
        for (distance, same_layer, outward, count) in raw {
            match entries.last_mut() {
                Some(e)
                    if (e.distance, e.same_layer, e.outward) == (distance, same_layer, outward) =>
                {
                    e.count += count
                }
                _ => entries.push(GammaEntry {
                    distance,
                    same_layer,
                    outward,
                    count,
                }),
            }
        }
        GammaVertexEncoding { alpha, entries }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn entries(&self) -> &[GammaEntry] {
        &self.entries
    }

    pub fn count(&self, distance: usize, same_layer: usize, outward: usize) -> usize {
        self.entries
            .iter()
            .find(|e| (e.distance, e.same_layer, e.outward) == (distance, same_layer, outward))
            .map_or(0, |e| e.count)
    }

    pub fn vertex_count(&self) -> usize {
        self.entries.iter().map(|e| e.count).sum()
    }
}

impl CanonicalBytes for GammaVertexEncoding {
    fn write_canonical(&self, out: &mut Vec<u8>) {
        put_u64(out, self.entries.len());
        for e in &self.entries {
            put_u64(out, e.distance);
            put_u64(out, e.same_layer);
            put_u64(out, e.outward);
            put_u64(out, e.count);
        }
    }
}

impl fmt::Display for GammaVertexEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(
                f,
                "({}, {}, {}): {}",
                e.distance, e.same_layer, e.outward, e.count
            )?;
        }
        f.write_str("}")
    }
}

fn layer_degrees(g: &Graph, u: usize, scratch: &BfsScratch) -> (usize, usize, usize) {
    let du = scratch.distance(u).unwrap();
    let (mut same, mut out) = (0, 0);
    for &w in g.neighbors(u) {
        match scratch.distance(w as usize) {
            Some(dw) if dw == du => same += 1,
            Some(dw) if dw == du + 1 => out += 1,
            _ => {}
        }
    }
    (du, same, out)
}

fn encode_with(g: &Graph, v: usize, alpha: usize, scratch: &mut BfsScratch) -> GammaVertexEncoding {
    scratch.explore(g, v, alpha);
    let triples = scratch
        .order()
        .iter()
        .map(|&u| {
            let (d, same, out) = layer_degrees(g, u, scratch);
            (d, same, out, 1)
        })
        .collect::<Vec<_>>();
    GammaVertexEncoding::from_counts(alpha, triples)
}

/// Number of edges from `u` into the given layer relative to `u`'s own
/// distance from `root`, counted inside the `alpha`-depth ego-network.
pub fn rel_degree(g: &Graph, u: usize, root: usize, layer: Layer, alpha: usize) -> Result<usize> {
    g.check_vertex(u)?;
    g.check_vertex(root)?;
    check_alpha(alpha)?;
    let mut scratch = BfsScratch::new(g.n());
    scratch.explore(g, root, alpha);
    if scratch.distance(u).is_none() {
        return Err(Error::OutsideEgoNetwork {
            vertex: u,
            root,
            alpha,
        });
    }
    let (_, same, out) = layer_degrees(g, u, &scratch);
    Ok(match layer {
        Layer::Same => same,
        Layer::Outward => out,
    })
}

pub fn gamma_encode_vertex(g: &Graph, v: usize, alpha: usize) -> Result<GammaVertexEncoding> {
    g.check_vertex(v)?;
    check_alpha(alpha)?;
    let mut scratch = BfsScratch::new(g.n());
    Ok(encode_with(g, v, alpha, &mut scratch))
}

pub fn gamma_encode_all(g: &Graph, alpha: usize) -> Result<Vec<GammaVertexEncoding>> {
    gamma_encode_all_with(g, alpha, Execution::default())
}

pub fn gamma_encode_all_with(
    g: &Graph,
    alpha: usize,
    exec: Execution,
) -> Result<Vec<GammaVertexEncoding>> {
    check_alpha(alpha)?;
    Ok(par::map_init(
        exec,
        g.n(),
        || BfsScratch::new(g.n()),
        |scratch, v| encode_with(g, v, alpha, scratch),
    ))
}

pub fn encode_graph_gamma(g: &Graph, alpha: usize) -> Result<GraphEncoding<GammaVertexEncoding>> {
    encode_graph_gamma_with(g, alpha, Execution::default())
}

pub fn encode_graph_gamma_with(
    g: &Graph,
    alpha: usize,
    exec: Execution,
) -> Result<GraphEncoding<GammaVertexEncoding>> {
    Ok(GraphEncoding::from_vertices(
        alpha,
        gamma_encode_all_with(g, alpha, exec)?,
    ))
}

pub fn gamma_equivalent(g1: &Graph, g2: &Graph, alpha: usize) -> Result<bool> {
    Ok(encode_graph_gamma(g1, alpha)?.bytes() == encode_graph_gamma(g2, alpha)?.bytes())
}

/// Index `((distance * (c + 1)) + min(d0, c)) * (c + 1) + min(d1, c)` with
/// `c = d_cap`; dimension `(alpha + 1) * (c + 1)^2`.
pub fn vectorize_gamma(enc: &GammaVertexEncoding, d_cap: usize) -> Result<SparseVector> {
    if d_cap == 0 {
        return Err(Error::ZeroDegreeCap);
    }
    let w = d_cap + 1;
    let raw = enc
        .entries
        .iter()
        .map(|e| {
            (
                (e.distance * w + e.same_layer.min(d_cap)) * w + e.outward.min(d_cap),
                e.count,
            )
        })
        .collect();
    Ok(SparseVector::from_unsorted(
        (enc.alpha + 1) * w * w,
        d_cap,
        raw,
    ))
}
