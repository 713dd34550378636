//! Edge-list and graph6 ingestion, plus the writers used by the CLI.
//!
//! graph6 follows the nauty format: a size field `N(n)` (one byte for
//! `n <= 62`, `~` plus three bytes up to 258047, `~~` plus six bytes beyond),
//! then the upper triangle of the adjacency matrix read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte, each byte
//! offset by 63 and the final byte zero-padded.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Options for [`parse_edge_list`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeListOptions {
    /// Whether ids in the file start at 0 (otherwise they start at 1).
    pub zero_indexed: bool,
    /// Declared vertex count. When set, ids are taken as-is and must be in
    /// range; isolated vertices are kept. When unset, the ids that appear are
    /// compacted to `0..n` in ascending order.
    pub vertices: Option<usize>,
}

impl Default for EdgeListOptions {
    fn default() -> Self {
        EdgeListOptions {
            zero_indexed: true,
            vertices: None,
        }
    }
}

/// A parsed edge list together with the id mapping applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: Graph,
    /// `original_ids[v]` is the id that dense vertex `v` had in the input.
    pub original_ids: Vec<u64>,
}

impl EdgeList {
    /// True when dense ids differ from the ids written in the file.
    pub fn is_reindexed(&self) -> bool {
        self.original_ids
            .iter()
            .enumerate()
            .any(|(v, &id)| id != v as u64)
    }
}

/// Parses whitespace-separated `u v` lines. Blank lines and lines starting
/// with `#` or `%` are skipped.
pub fn parse_edge_list(text: &str, options: EdgeListOptions) -> Result<EdgeList> {
    let offset = if options.zero_indexed { 0 } else { 1 };
    let mut raw = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let mut endpoint = || -> Result<u64> {
            let tok = tokens.next().ok_or_else(|| Error::Parse {
                line: lineno,
                message: "expected two vertex ids".into(),
            })?;
            let id: u64 = tok.parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid vertex id {tok:?}"),
            })?;
            if id < offset {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("vertex id {id} below the first id {offset}"),
                });
            }
            Ok(id - offset)
        };
        let u = endpoint()?;
        let v = endpoint()?;
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse {
                line: lineno,
                message: format!("unexpected token {extra:?} after edge"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                message: format!("self-loop on vertex {}", u + offset),
            });
        }
        if let Some(n) = options.vertices {
            for id in [u, v] {
                if id >= n as u64 {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!(
                            "vertex id {} out of declared range ({n} vertices)",
                            id + offset
                        ),
                    });
                }
            }
        }
        raw.push((u, v));
    }

    match options.vertices {
        Some(n) => {
            let graph = Graph::from_edges(n, raw.iter().map(|&(u, v)| (u as usize, v as usize)))?;
            let original_ids = (0..n as u64).map(|v| v + offset).collect();
            Ok(EdgeList {
                graph,
                original_ids,
            })
        }
        None => {
            let mut dense: BTreeMap<u64, usize> = BTreeMap::new();
            for &(u, v) in &raw {
                dense.insert(u, 0);
                dense.insert(v, 0);
            }
            for (i, slot) in dense.values_mut().enumerate() {
                *slot = i;
            }
            let graph =
                Graph::from_edges(dense.len(), raw.iter().map(|(u, v)| (dense[u], dense[v])))?;
            let original_ids = dense.keys().map(|&id| id + offset).collect();
            Ok(EdgeList {
                graph,
                original_ids,
            })
        }
    }
}

/// Writes `u v` lines for every edge with `u < v`, ascending.
pub fn write_edge_list(graph: &Graph, zero_indexed: bool) -> String {
    let offset = usize::from(!zero_indexed);
    let mut out = String::new();
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{} {}", u + offset, v + offset);
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6_byte(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::Graph6(format!("byte {b} outside [63, 126]")))
    }
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(record: &str) -> Result<Graph> {
    let record = record.trim_end();
    let record = record.strip_prefix(GRAPH6_HEADER).unwrap_or(record);
    let bytes = record.as_bytes();
    match bytes.first() {
        None => return Err(Error::Graph6("empty record".into())),
        Some(b':') => return Err(Error::Graph6("sparse6 records are not supported".into())),
        Some(b'&') => {
            return Err(Error::Graph6(
                "digraph6 records are not supported: input must be undirected".into(),
            ))
        }
        _ => {}
    }

    let (n, header_len) = if bytes[0] != 126 {
        (g6_byte(bytes[0])? as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | g6_byte(b)? as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | g6_byte(b)? as usize;
        }
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let payload_len = bits.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() < payload_len {
        return Err(Error::Graph6(format!(
            "truncated record: expected {payload_len} payload bytes, found {}",
            payload.len()
        )));
    }
    if payload.len() > payload_len {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after payload",
            payload.len() - payload_len
        )));
    }

    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    let mut k = 0usize;
    for &b in payload {
        let x = g6_byte(b)?;
        for shift in (0..6).rev() {
            let bit = (x >> shift) & 1;
            if k < bits {
                if bit == 1 {
                    edges.push((i, j));
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if bit == 1 {
                return Err(Error::Graph6("nonzero padding bits".into()));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn size_field(n: usize, out: &mut String) {
    let push6 = |out: &mut String, value: usize, groups: u32| {
        for g in (0..groups).rev() {
            out.push((((value >> (6 * g)) & 0x3f) as u8 + 63) as char);
        }
    };
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        push6(out, n, 3);
    } else {
        out.push_str("~~");
        push6(out, n, 6);
    }
}

/// Encodes `graph` as a single graph6 record without a trailing newline.
pub fn write_graph6(graph: &Graph) -> String {
    let n = graph.n();
    let mut out = String::new();
    size_field(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(graph.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// An ordered set of graphs read from one source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCollection {
    pub graphs: Vec<Graph>,
    pub labels: Option<Vec<String>>,
    pub source: String,
}

impl GraphCollection {
    pub fn new(graphs: Vec<Graph>, source: impl Into<String>) -> Self {
        GraphCollection {
            graphs,
            labels: None,
            source: source.into(),
        }
    }

    /// Attaches per-graph labels, which must be unique and one per graph.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.graphs.len() {
            return Err(Error::InvalidParameters(format!(
                "{} labels for {} graphs",
                labels.len(),
                self.graphs.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

/// Parses one graph6 record per line. Any malformed line rejects the whole
/// input; the error carries the 1-based line number.
pub fn parse_graph6_collection(text: &str) -> Result<GraphCollection> {
    let mut graphs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?;
        graphs.push(g);
    }
    Ok(GraphCollection::new(graphs, "graph6"))
}

/// One record per line, newline-terminated.
pub fn write_graph6_collection<'a, I>(graphs: I) -> String
where
    I: IntoIterator<Item = &'a Graph>,
{
    let mut out = String::new();
    for g in graphs {
        out.push_str(&write_graph6(g));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Graph> {
        parse_edge_list(text, EdgeListOptions::default()).map(|e| e.graph)
    }

    #[test]
    fn edge_list_triangle() {
        let g = parse("0 1\n1 2\n2 0").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn edge_list_duplicate_collapsed() {
        assert_eq!(parse("0 1\n0 1").unwrap().m(), 1);
        assert_eq!(parse("0 1\n1 0").unwrap().m(), 1);
    }

    #[test]
    fn edge_list_self_loop_reports_line() {
        let err = parse("0 1\n\n0 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn edge_list_bad_token() {
        assert!(matches!(parse("0 x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("0"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse("0 1 2.5"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse("-1 2"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn edge_list_comments_skipped() {
        let g = parse("# header\n% other\n\n0 1\n  # indented\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn edge_list_out_of_declared_range() {
        let opts = EdgeListOptions {
            zero_indexed: true,
            vertices: Some(3),
        };
        assert!(matches!(
            parse_edge_list("0 1\n1 3", opts),
            Err(Error::Parse { line: 2, .. })
        ));
        let ok = parse_edge_list("0 1", opts).unwrap();
        assert_eq!(ok.graph.n(), 3);
        assert!(!ok.is_reindexed());
    }

    #[test]
    fn edge_list_one_indexed() {
        let opts = EdgeListOptions {
            zero_indexed: false,
            vertices: None,
        };
        let e = parse_edge_list("1 2\n2 3", opts).unwrap();
        assert_eq!(e.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(e.original_ids, vec![1, 2, 3]);
        assert!(e.is_reindexed());
        assert!(parse_edge_list("0 1", opts).is_err());
    }

    #[test]
    fn edge_list_sparse_ids_reindexed() {
        let e = parse_edge_list("10 30\n30 20", EdgeListOptions::default()).unwrap();
        assert_eq!(e.original_ids, vec![10, 20, 30]);
        assert_eq!(e.graph.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn edge_list_order_irrelevant() {
        assert_eq!(
            parse("2 0\n1 2\n0 1").unwrap(),
            parse("0 1\n1 2\n0 2").unwrap()
        );
    }

    #[test]
    fn graph6_k2() {
        // 'A' = size 2, '_' - 63 = 0b100000: the single pair (0,1) is set.
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn graph6_five_vertex_star() {
        // 'D' = 5 -> 10 bits. '?' = 000000, '{' = 111100. Pair order
        // (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),(0,4),(1,4),(2,4),(3,4): the last
        // four bits are set, which is the star centred on vertex 4.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 4), (1, 4), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn graph6_empty_graph() {
        let g = parse_graph6("?").unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(write_graph6(&g), "?");
    }

    #[test]
    fn graph6_header_accepted() {
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap().m(), 1);
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("D?").is_err(), "truncated");
        assert!(parse_graph6("D?{?").is_err(), "trailing byte");
        assert!(parse_graph6("A`").is_err(), "nonzero padding");
        assert!(parse_graph6("A\x7f").is_err(), "byte > 126");
        assert!(parse_graph6("D? {").is_err(), "byte < 63");
        assert!(parse_graph6(":Fa@x^").is_err(), "sparse6");
        assert!(parse_graph6("&A_").is_err(), "digraph6");
        assert!(parse_graph6("~??").is_err(), "truncated size");
    }

    #[test]
    fn graph6_large_size_field() {
        let n = 70;
        let g = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_writes_known_record() {
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn collection_counts_and_line_errors() {
        let c = parse_graph6_collection("A_\n\nA?\nD?{\n").unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.graphs[1].m(), 0);
        let err = parse_graph6_collection("A_\nA?\nD?\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(parse_graph6_collection("").unwrap().is_empty());
    }

    #[test]
    fn collection_labels_unique() {
        let c = GraphCollection::new(vec![Graph::empty(1), Graph::empty(2)], "test");
        assert!(c.clone().with_labels(vec!["a".into(), "b".into()]).is_ok());
        assert_eq!(
            c.with_labels(vec!["a".into(), "a".into()]),
            Err(Error::DuplicateLabel("a".into()))
        );
    }
}
