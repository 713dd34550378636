//! Collection-level distinguishability surveys and pairwise comparison.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::encode::{
    encode_graph_concat_with, encode_graph_with, CanonicalBytes, GraphEncoding, VertexEncoding,
};
use crate::error::{Error, Result};
use crate::families::{brute_force_isomorphic, ORACLE_MAX_VERTICES};
use crate::gamma::{encode_graph_gamma_with, GammaVertexEncoding};
use crate::graph::Graph;
use crate::io::GraphCollection;
use crate::par::{self, Execution};
use crate::wl::{wl_certificate, wl_joint_refine};

/// Which encoder a survey or comparison uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EncoderSpec {
    Wl { max_iters: Option<usize> },
    Igel { alpha: usize },
    IgelConcat { alphas: Vec<usize> },
    Gamma { alpha: usize },
}

/// `alpha` as it appears in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum AlphaField {
    Single(usize),
    List(Vec<usize>),
}

impl EncoderSpec {
    pub fn method_name(&self) -> &'static str {
        match self {
            EncoderSpec::Wl { .. } => "wl",
            EncoderSpec::Igel { .. } => "igel",
            EncoderSpec::IgelConcat { .. } => "igel_concat",
            EncoderSpec::Gamma { .. } => "gamma",
        }
    }

    pub fn alpha_field(&self) -> Option<AlphaField> {
        match self {
            EncoderSpec::Wl { .. } => None,
            EncoderSpec::Igel { alpha } | EncoderSpec::Gamma { alpha } => {
                Some(AlphaField::Single(*alpha))
            }
            EncoderSpec::IgelConcat { alphas } => Some(AlphaField::List(alphas.clone())),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            EncoderSpec::Wl { .. } => Ok(()),
            EncoderSpec::Igel { alpha } | EncoderSpec::Gamma { alpha } => {
                if *alpha == 0 {
                    Err(Error::ZeroAlpha)
                } else {
                    Ok(())
                }
            }
            EncoderSpec::IgelConcat { alphas } => {
                if alphas.is_empty() {
                    Err(Error::EmptyAlphaList)
                } else if alphas.contains(&0) {
                    Err(Error::ZeroAlpha)
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Canonical bytes of `g` under this encoder: equal bytes iff the encoder
    /// cannot tell the graphs apart.
    pub fn canonical_bytes(&self, g: &Graph, exec: Execution) -> Result<Vec<u8>> {
        Ok(match self {
            EncoderSpec::Wl { max_iters } => wl_certificate(g, *max_iters),
            EncoderSpec::Igel { alpha } => encode_graph_with(g, *alpha, exec)?.bytes().to_vec(),
            EncoderSpec::IgelConcat { alphas } => {
                encode_graph_concat_with(g, alphas, exec)?.canonical_bytes()
            }
            EncoderSpec::Gamma { alpha } => {
                encode_graph_gamma_with(g, *alpha, exec)?.bytes().to_vec()
            }
        })
    }
}

/// Graphs whose canonical encodings are byte-identical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bucket {
    /// First 128 bits of SHA-256 over the canonical bytes, hex encoded.
    pub hash: String,
    pub graphs: Vec<usize>,
}

impl Bucket {
    pub fn pairs(&self) -> usize {
        let k = self.graphs.len();
        k * k.saturating_sub(1) / 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyReport {
    pub spec: EncoderSpec,
    pub collection_size: usize,
    /// Every bucket, ordered by smallest member index.
    pub buckets: Vec<Bucket>,
    /// Sum over buckets of `C(|bucket|, 2)`.
    pub indistinguishable_pairs: usize,
    /// Colliding pairs confirmed isomorphic by the exact oracle, when run.
    pub verified_isomorphic_pairs: Option<usize>,
    pub elapsed: Duration,
}

impl SurveyReport {
    /// Buckets holding more than one graph.
    pub fn collisions(&self) -> impl Iterator<Item = &Bucket> {
        self.buckets.iter().filter(|b| b.graphs.len() > 1)
    }

    /// Report object in the line-oriented JSON layout. `errors` is only set
    /// when the caller knows the collection is pairwise non-isomorphic.
    pub fn summary(
        &self,
        collection: &str,
        known_non_isomorphic: bool,
        detail: bool,
    ) -> SurveySummary {
        SurveySummary {
            collection: collection.to_string(),
            method: self.spec.method_name().to_string(),
            alpha: self.spec.alpha_field(),
            graphs: self.collection_size,
            buckets: self.buckets.len(),
            indistinguishable_pairs: self.indistinguishable_pairs,
            verified_isomorphic_pairs: self.verified_isomorphic_pairs,
            errors: known_non_isomorphic.then_some(self.indistinguishable_pairs),
            elapsed_ms: self.elapsed.as_millis() as u64,
            bucket_detail: detail.then(|| self.collisions().cloned().collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveySummary {
    pub collection: String,
    pub method: String,
    pub alpha: Option<AlphaField>,
    pub graphs: usize,
    pub buckets: usize,
    pub indistinguishable_pairs: usize,
    pub verified_isomorphic_pairs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub errors: Option<usize>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bucket_detail: Option<Vec<Bucket>>,
}

fn digest128(bytes: &[u8]) -> [u8; 16] {
    let full = Sha256::digest(bytes);
    let mut out = [0u8; 16];
    out.copy_from_slice(&full[..16]);
    out
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn run_survey(
    coll: &GraphCollection,
    spec: &EncoderSpec,
    verify: bool,
) -> Result<SurveyReport> {
    run_survey_with(coll, spec, verify, Execution::default())
}

/// Encodes every graph, buckets by a 128-bit digest and confirms each bucket
/// by full byte comparison, so digest collisions cannot merge distinct
/// encodings.
pub fn run_survey_with(
    coll: &GraphCollection,
    spec: &EncoderSpec,
    verify: bool,
    exec: Execution,
) -> Result<SurveyReport> {
    if coll.is_empty() {
        return Err(Error::EmptyCollection);
    }
    spec.validate()?;
    if verify {
        let too_large: Vec<usize> = coll
            .graphs
            .iter()
            .enumerate()
            .filter(|(_, g)| g.n() > ORACLE_MAX_VERTICES)
            .map(|(i, _)| i)
            .collect();
        if !too_large.is_empty() {
            return Err(Error::VerifyTooLarge {
                limit: ORACLE_MAX_VERTICES,
                graphs: too_large,
            });
        }
    }
    let start = Instant::now();

    // Graphs are encoded in parallel; each encoding itself runs sequentially.
    let encoded = par::map(exec, coll.len(), |i| {
        spec.canonical_bytes(&coll.graphs[i], Execution::Sequential)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let mut by_digest: BTreeMap<[u8; 16], Vec<usize>> = BTreeMap::new();
    for (i, bytes) in encoded.iter().enumerate() {
        by_digest.entry(digest128(bytes)).or_default().push(i);
    }
    let mut buckets = Vec::new();
    for (digest, members) in by_digest {
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for i in members {
            match groups.iter_mut().find(|g| encoded[g[0]] == encoded[i]) {
                Some(g) => g.push(i),
                None => groups.push(vec![i]),
            }
        }
        for graphs in groups {
            buckets.push(Bucket {
                hash: hex(&digest),
                graphs,
            });
        }
    }
    buckets.sort_by_key(|b| b.graphs[0]);
    let indistinguishable_pairs = buckets.iter().map(Bucket::pairs).sum();

    let verified_isomorphic_pairs = if verify {
        let pairs: Vec<(usize, usize)> = buckets
            .iter()
            .flat_map(|b| {
                b.graphs
                    .iter()
                    .enumerate()
                    .flat_map(move |(k, &x)| b.graphs[k + 1..].iter().map(move |&y| (x, y)))
            })
            .collect();
        let results = par::map(exec, pairs.len(), |k| {
            let (x, y) = pairs[k];
            brute_force_isomorphic(&coll.graphs[x], &coll.graphs[y])
        });
        let mut iso = 0;
        for r in results {
            iso += usize::from(r?);
        }
        Some(iso)
    } else {
        None
    };

    Ok(SurveyReport {
        spec: spec.clone(),
        collection_size: coll.len(),
        buckets,
        indistinguishable_pairs,
        verified_isomorphic_pairs,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Distinguished,
    Equivalent,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Distinguished => "distinguished",
            Verdict::Equivalent => "equivalent",
        })
    }
}

/// Evidence for a `Distinguished` verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// First refinement iteration at which the color histograms differ.
    WlIteration(usize),
    /// A vertex encoding whose multiplicity differs between the graphs.
    Igel {
        alpha: usize,
        encoding: VertexEncoding,
        left: usize,
        right: usize,
    },
    Gamma {
        alpha: usize,
        encoding: GammaVertexEncoding,
        left: usize,
        right: usize,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::WlIteration(k) => write!(f, "histograms differ at iteration {k}"),
            Witness::Igel {
                alpha,
                encoding,
                left,
                right,
            } => write!(
                f,
                "alpha={alpha} encoding {encoding} occurs {left} vs {right} times"
            ),
            Witness::Gamma {
                alpha,
                encoding,
                left,
                right,
            } => write!(
                f,
                "alpha={alpha} encoding {encoding} occurs {left} vs {right} times"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl Comparison {
    fn equivalent() -> Self {
        Comparison {
            verdict: Verdict::Equivalent,
            witness: None,
        }
    }

    fn distinguished(w: Witness) -> Self {
        Comparison {
            verdict: Verdict::Distinguished,
            witness: Some(w),
        }
    }
}

/// First vertex encoding, in canonical order, whose multiplicities differ.
fn first_difference<E>(a: &GraphEncoding<E>, b: &GraphEncoding<E>) -> Option<(E, usize, usize)>
where
    E: CanonicalBytes + PartialEq + Clone,
{
    let ma = a.multiplicities();
    let mb = b.multiplicities();
    let (mut i, mut j) = (0, 0);
    while i < ma.len() || j < mb.len() {
        let ka = ma.get(i).map(|x| x.0.canonical_bytes());
        let kb = mb.get(j).map(|x| x.0.canonical_bytes());
        match (ka, kb) {
            (Some(x), Some(y)) if x == y => {
                if ma[i].1 != mb[j].1 {
                    return Some((ma[i].0.clone(), ma[i].1, mb[j].1));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => return Some((ma[i].0.clone(), ma[i].1, 0)),
            (Some(_), None) => return Some((ma[i].0.clone(), ma[i].1, 0)),
            _ => return Some((mb[j].0.clone(), 0, mb[j].1)),
        }
    }
    None
}

pub fn pairwise_compare(g1: &Graph, g2: &Graph, spec: &EncoderSpec) -> Result<Comparison> {
    spec.validate()?;
    let exec = Execution::default();
    Ok(match spec {
        EncoderSpec::Wl { max_iters } => match wl_joint_refine(g1, g2, *max_iters).distinguished_at
        {
            Some(k) => Comparison::distinguished(Witness::WlIteration(k)),
            None => Comparison::equivalent(),
        },
        EncoderSpec::Igel { alpha } => igel_compare(g1, g2, *alpha, exec)?,
        EncoderSpec::IgelConcat { alphas } => {
            for &alpha in alphas {
                let c = igel_compare(g1, g2, alpha, exec)?;
                if c.verdict == Verdict::Distinguished {
                    return Ok(c);
                }
            }
            Comparison::equivalent()
        }
        EncoderSpec::Gamma { alpha } => {
            let a = encode_graph_gamma_with(g1, *alpha, exec)?;
            let b = encode_graph_gamma_with(g2, *alpha, exec)?;
            match first_difference(&a, &b) {
                Some((encoding, left, right)) => Comparison::distinguished(Witness::Gamma {
                    alpha: *alpha,
                    encoding,
                    left,
                    right,
                }),
                None => Comparison::equivalent(),
            }
        }
    })
}

fn igel_compare(g1: &Graph, g2: &Graph, alpha: usize, exec: Execution) -> Result<Comparison> {
    let a = encode_graph_with(g1, alpha, exec)?;
    let b = encode_graph_with(g2, alpha, exec)?;
    Ok(match first_difference(&a, &b) {
        Some((encoding, left, right)) => Comparison::distinguished(Witness::Igel {
            alpha,
            encoding,
            left,
            right,
        }),
        None => Comparison::equivalent(),
    })
}
