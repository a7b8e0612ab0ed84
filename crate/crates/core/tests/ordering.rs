mod common;

use inclusion_core::graph::ordering::{min_degree_last_ordering, VertexOrdering};
use inclusion_core::Graph;
use rand::Rng;

#[test]
fn min_degree_last_on_random_graphs() {
    let mut rng = common::rng(7);
    for _ in 0..300 {
        let n = rng.gen_range(3..=40);
        let p = rng.gen_range(0.05..0.6);
        let g = common::random_connected(n, p, &mut rng);
        let ord = min_degree_last_ordering(&g);
        assert_eq!(ord.violation(&g), None);
        // prefix check from scratch: each vertex has the least degree among
        // its prefix
        let order = ord.order();
        for i in 0..n {
            let prefix = &order[..=i];
            let deg = |x: usize| g.neighbours(x).filter(|w| prefix.contains(w)).count();
            assert!(prefix.iter().all(|&w| deg(w) >= deg(order[i])));
        }
    }
}

#[test]
fn bad_orderings_are_reported() {
    // path 0-1-2: the middle vertex may not come last, where it has degree 2
    // against the endpoints' 1
    let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    assert!(VertexOrdering::from_order(vec![0, 2, 1]).violation(&g).is_some());
    assert!(VertexOrdering::from_order(vec![0, 1]).violation(&g).is_some());
    assert!(VertexOrdering::from_order(vec![0, 0, 1]).violation(&g).is_some());
    assert_eq!(VertexOrdering::from_order(vec![1, 0, 2]).violation(&g), None);
}
