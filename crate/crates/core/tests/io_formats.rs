mod common;

use igel::io::{parse_edge_list, write_edge_list, write_graph6_collection, EdgeListOptions};
use igel::{parse_graph6, parse_graph6_collection, write_graph6, Error, Graph};
use proptest::prelude::*;

use common::{arb_graph, load_collection};

/// Independent graph6 decoder for records with `n <= 62`.
fn decode_small(record: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = record.as_bytes();
    let n = (bytes[0] - 63) as usize;
    let bits: Vec<bool> = bytes[1..]
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |i| (b - 63) >> i & 1 == 1))
        .collect();
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
    (n, edges)
}

fn opts(zero_indexed: bool, vertices: Option<usize>) -> EdgeListOptions {
    EdgeListOptions {
        zero_indexed,
        vertices,
    }
}

#[test]
fn edge_list_basic() {
    let parsed = parse_edge_list("# triangle\n0 1\n1 2\n\n2 0\n", opts(true, None)).unwrap();
    assert_eq!(parsed.graph.n(), 3);
    assert_eq!(parsed.graph.m(), 3);
    assert!(!parsed.is_reindexed());
}

#[test]
fn edge_list_one_indexed() {
    let parsed = parse_edge_list("1 2\n2 3\n", opts(false, None)).unwrap();
    assert_eq!(
        parsed.graph.edges().collect::<Vec<_>>(),
        vec![(0, 1), (1, 2)]
    );
    assert_eq!(parsed.original_ids, vec![1, 2, 3]);
    assert!(parse_edge_list("0 1\n", opts(false, None)).is_err());
}

#[test]
fn edge_list_compacts_sparse_ids() {
    let parsed = parse_edge_list("10 30\n30 20\n% comment\n", opts(true, None)).unwrap();
    assert_eq!(parsed.original_ids, vec![10, 20, 30]);
    assert_eq!(
        parsed.graph.edges().collect::<Vec<_>>(),
        vec![(0, 2), (1, 2)]
    );
    assert!(parsed.is_reindexed());
}

#[test]
fn edge_list_declared_vertices_keep_isolated() {
    let parsed = parse_edge_list("0 1\n", opts(true, Some(4))).unwrap();
    assert_eq!(parsed.graph.n(), 4);
    assert_eq!(parsed.graph.degree(3).unwrap(), 0);
    let err = parse_edge_list("0 1\n1 4\n", opts(true, Some(4))).unwrap_err();
    assert!(matches!(err, Error::Parse { line: 2, .. }));
}

#[test]
fn edge_list_duplicates_collapse() {
    let parsed = parse_edge_list("0 1\n1 0\n0 1\n", opts(true, None)).unwrap();
    assert_eq!(parsed.graph.m(), 1);
}

#[test]
fn edge_list_errors_carry_line_numbers() {
    for (text, line) in [
        ("0 1\n1 x\n", 2),
        ("0 1\n\n2 2\n", 3),
        ("0\n", 1),
        ("0 1 2\n", 1),
        ("# c\n-1 2\n", 2),
    ] {
        match parse_edge_list(text, opts(true, None)) {
            Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn edge_list_empty_input() {
    let parsed = parse_edge_list("# nothing\n", opts(true, None)).unwrap();
    assert_eq!(parsed.graph.n(), 0);
}

#[test]
fn edge_list_writer_sorted() {
    let g = Graph::from_edges(6, [(5, 0), (2, 1)]).unwrap();
    assert_eq!(write_edge_list(&g, true), "0 5\n1 2\n");
    assert_eq!(write_edge_list(&g, false), "1 6\n2 3\n");
}

#[test]
fn graph6_k2() {
    let g = parse_graph6("A_").unwrap();
    assert_eq!(g.n(), 2);
    assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    assert_eq!(write_graph6(&g), "A_");
}

#[test]
fn graph6_matches_hand_decoder() {
    let g = parse_graph6("D?{").unwrap();
    let (n, edges) = decode_small("D?{");
    assert_eq!(n, 5);
    assert_eq!(edges, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    assert_eq!(g.edges().collect::<Vec<_>>(), edges);
}

#[test]
fn graph6_zero_and_one_vertices() {
    let g = parse_graph6("?").unwrap();
    assert_eq!(g.n(), 0);
    assert_eq!(write_graph6(&Graph::empty(0)), "?");
    assert_eq!(parse_graph6("@").unwrap().n(), 1);
}

#[test]
fn graph6_header_and_whitespace() {
    let g = parse_graph6(">>graph6<<A_\r\n").unwrap();
    assert_eq!(g.m(), 1);
}

#[test]
fn graph6_rejects_bad_records() {
    for bad in ["", ":Fa@x^", "&A_", "A", "A_?", "A\u{7f}"] {
        assert!(parse_graph6(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn graph6_long_size_fields() {
    for n in [63, 200] {
        let g = igel::families::gen_cycle(n).unwrap();
        let text = write_graph6(&g);
        assert!(text.starts_with('~'));
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }
}

#[test]
fn collection_line_numbers() {
    let err = parse_graph6_collection("A_\nD?{\nD?\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
    let ok = parse_graph6_collection("A_\n\nD?{\n").unwrap();
    assert_eq!(ok.len(), 2);
    assert!(parse_graph6_collection("").unwrap().is_empty());
}

#[test]
fn collection_writer_round_trip() {
    let graphs = vec![parse_graph6("A_").unwrap(), parse_graph6("D?{").unwrap()];
    let text = write_graph6_collection(&graphs);
    assert_eq!(text, "A_\nD?{\n");
    assert_eq!(parse_graph6_collection(&text).unwrap().graphs, graphs);
}

#[test]
fn bundled_collections() {
    let g8 = load_collection("graph8c.g6");
    assert_eq!(g8.len(), 11117);
    assert!(g8.graphs.iter().all(|g| g.n() == 8 && g.is_connected()));
    let sr = load_collection("sr25.g6");
    assert_eq!(sr.len(), 15);
    for g in &sr.graphs {
        let p = igel::families::srg_params(g).unwrap();
        assert_eq!(p.tuple(), (25, 12, 5, 6));
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let text = write_graph6(&g);
        prop_assert_eq!(&parse_graph6(&text).unwrap(), &g);
        let (n, edges) = decode_small(&text);
        prop_assert_eq!(n, g.n());
        let mut ours: Vec<_> = g.edges().collect();
        ours.sort_by_key(|&(u, v)| (v, u));
        prop_assert_eq!(edges, ours);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(15), zero in any::<bool>()) {
        let text = write_edge_list(&g, zero);
        let parsed = parse_edge_list(&text, opts(zero, Some(g.n()))).unwrap();
        prop_assert_eq!(parsed.graph, g);
    }
}
