mod common;

use inclusion_core::graph::io::{
    graph6_records, parse_edge_list, parse_graph, parse_graph6_line, write_edge_list, write_graph6, GraphFormat,
};
use inclusion_core::Graph;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
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
            Graph::new(n, edges).unwrap()
        })
    })
}

fn same(a: &Graph, b: &Graph) -> bool {
    let mut ea: Vec<_> = a.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut eb: Vec<_> = b.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    ea.sort_unstable();
    eb.sort_unstable();
    a.n() == b.n() && ea == eb
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in arb_graph(64)) {
        let text = write_graph6(&g);
        let back = parse_graph6_line(&text, 1).unwrap();
        prop_assert!(same(&g, &back));
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(64)) {
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        prop_assert!(same(&g, &back));
    }

    #[test]
    fn formats_agree(g in arb_graph(40)) {
        let a = parse_graph(&write_graph6(&g), GraphFormat::Graph6).unwrap();
        let b = parse_graph(&write_edge_list(&g), GraphFormat::EdgeList).unwrap();
        prop_assert!(same(&a, &b));
    }

    #[test]
    fn garbage_never_panics(s in "\\PC{0,40}") {
        let _ = parse_graph(&s, GraphFormat::Graph6);
        let _ = parse_graph(&s, GraphFormat::EdgeList);
    }
}

#[test]
fn size_header_boundaries() {
    // 62 uses the 1-byte header, 63 the 4-byte one
    for n in [0, 1, 2, 62, 63, 64] {
        let g = Graph::new(n, (1..n).map(|v| (v - 1, v)).collect::<Vec<_>>()).unwrap();
        let text = write_graph6(&g);
        let header = if n < 63 { 1 } else { 4 };
        assert_eq!(text.len(), header + (n * n.saturating_sub(1) / 2).div_ceil(6));
        assert!(same(&g, &parse_graph6_line(&text, 1).unwrap()));
    }
}

#[test]
fn known_encodings() {
    // standard examples: K3 is "Bw", C5 is "Dhc"
    let k3 = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
    assert_eq!(write_graph6(&k3), "Bw");
    let c5 = parse_graph6_line("Dhc", 1).unwrap();
    assert_eq!(c5.edge_count(), 5);
    assert!((0..5).all(|v| c5.degree(v) == 2));
}

#[test]
fn stream_reports_line_numbers() {
    let records: Vec<_> = graph6_records("Bw\n\nDhc\n!!\n").collect();
    assert_eq!(records.len(), 3);
    assert_eq!(records[0].0, 1);
    assert_eq!(records[1].0, 3);
    assert!(records[2].1.is_err());
}

#[test]
fn edge_list_comments_and_header() {
    let g = parse_edge_list("# triangle plus isolated vertex\n4\n0 1\n1 2\n\n2 0\n").unwrap();
    assert_eq!((g.n(), g.edge_count()), (4, 3));
    assert!(parse_edge_list("3\n0 3\n").is_err());
    assert!(parse_edge_list("0 1\n1 0\n").is_err());
    assert!(parse_edge_list("1 1\n").is_err());
}
