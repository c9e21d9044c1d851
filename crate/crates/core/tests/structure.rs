use std::collections::BTreeSet;

use proptest::prelude::*;
use temporal_disjoint::build_temporal_graph;
use temporal_disjoint::structure::{
    decompose_segments, direction_changes, interesting_vertices, line_order, min_feedback_edge_set,
    prune_degree_one, underlying_graph, StaticGraph,
};
use temporal_disjoint::{TemporalWalk, Vertex};

fn sg(n: usize, edges: &[(Vertex, Vertex)]) -> StaticGraph {
    StaticGraph::new(n, edges.iter().copied())
}

fn set<T: Ord + Copy>(xs: &[T]) -> BTreeSet<T> {
    xs.iter().copied().collect()
}

#[test]
fn underlying_edges() {
    let g = build_temporal_graph(3, 7, &[(0, 1, 1), (0, 1, 7), (1, 2, 2)]).unwrap();
    assert_eq!(underlying_graph(&g).edges, set(&[(0, 1), (1, 2)]));
    let empty = build_temporal_graph(3, 0, &[]).unwrap();
    assert!(underlying_graph(&empty).edges.is_empty());
    let tri = build_temporal_graph(3, 3, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
    assert_eq!(underlying_graph(&tri), sg(3, &[(0, 1), (1, 2), (0, 2)]));
}

#[test]
fn feedback_sets() {
    assert!(min_feedback_edge_set(&sg(4, &[(0, 1), (1, 2), (1, 3)])).is_empty());
    assert_eq!(min_feedback_edge_set(&sg(3, &[(0, 1), (1, 2), (0, 2)])).len(), 1);
    let k4 = sg(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let f = min_feedback_edge_set(&k4);
    assert_eq!(f.len(), 3);
    assert!(k4.without(&f).is_forest());
}

#[test]
fn pruning() {
    let path = sg(4, &[(0, 1), (1, 2), (2, 3)]);
    assert_eq!(prune_degree_one(&path, &set(&[1, 2])).edges, set(&[(1, 2)]));
    let cycle = sg(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
    assert_eq!(prune_degree_one(&cycle, &BTreeSet::new()), cycle);
    // Center 0 with leaves 1, 2, 3.
    let star = sg(4, &[(0, 1), (0, 2), (0, 3)]);
    assert_eq!(prune_degree_one(&star, &set(&[0, 1])).edges, set(&[(0, 1)]));
}

#[test]
fn interesting_examples() {
    let star = sg(4, &[(0, 1), (0, 2), (0, 3)]);
    assert_eq!(interesting_vertices(&star, &set(&[1, 2]), &BTreeSet::new()), set(&[0, 1, 2]));
    let tri = sg(3, &[(0, 1), (1, 2), (0, 2)]);
    assert_eq!(interesting_vertices(&tri, &set(&[0]), &set(&[(1, 2)])), set(&[0, 1, 2]));
    let edge = sg(2, &[(0, 1)]);
    assert_eq!(interesting_vertices(&edge, &set(&[0, 1]), &BTreeSet::new()), set(&[0, 1]));
}

#[test]
fn decomposition_examples() {
    let tri = sg(3, &[(0, 1), (1, 2), (0, 2)]);
    let dec = decompose_segments(&tri, &set(&[0, 1, 2]), &set(&[(1, 2)])).unwrap();
    let segs: BTreeSet<(Vec<Vertex>, bool)> = dec.segments.iter().map(|s| (s.vertices.clone(), s.is_feedback)).collect();
    assert_eq!(segs, [(vec![0, 1], false), (vec![0, 2], false), (vec![1, 2], true)].into_iter().collect());

    let path = sg(4, &[(0, 1), (1, 2), (2, 3)]);
    let dec = decompose_segments(&path, &set(&[0, 3]), &BTreeSet::new()).unwrap();
    assert_eq!(dec.segments.len(), 1);
    assert_eq!(dec.segments[0].vertices, vec![0, 1, 2, 3]);

    let two = sg(4, &[(0, 1), (2, 3)]);
    assert_eq!(decompose_segments(&two, &set(&[0, 1, 2, 3]), &BTreeSet::new()).unwrap().segments.len(), 2);
}

#[test]
fn decomposition_needs_branch_vertices() {
    let star = sg(4, &[(0, 1), (0, 2), (0, 3)]);
    assert!(decompose_segments(&star, &set(&[1, 2, 3]), &BTreeSet::new()).is_err());
}

#[test]
fn line_orders() {
    assert_eq!(line_order(&sg(3, &[(0, 1), (1, 2)])), Some(vec![0, 1, 2]));
    assert_eq!(line_order(&sg(3, &[(2, 0), (0, 1)])), Some(vec![1, 0, 2]));
    assert_eq!(line_order(&sg(3, &[(0, 1), (1, 2), (0, 2)])), None);
    assert_eq!(line_order(&sg(4, &[(0, 1), (0, 2), (0, 3)])), None);
}

#[test]
fn direction_change_counts() {
    let order = [0, 1, 2];
    let w = |hops: &[(u32, Vertex)]| TemporalWalk::from_hops(0, hops);
    assert_eq!(direction_changes(&w(&[(1, 1), (2, 2)]), &order).unwrap(), 0);
    assert_eq!(direction_changes(&w(&[(1, 1), (2, 0)]), &order).unwrap(), 1);
    let zig = w(&[(1, 1), (2, 2), (3, 1), (4, 0), (5, 1)]);
    assert_eq!(direction_changes(&zig, &order).unwrap(), 2);
    assert!(direction_changes(&w(&[(1, 5)]), &order).is_err());
}

fn arb_static(max_n: usize) -> impl Strategy<Value = StaticGraph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::btree_set((0..n, 0..n), 0..2 * n)
            .prop_map(move |es| StaticGraph::new(n, es.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b)))))
    })
}

/// Random connected graph: a random tree plus `extra` chords.
fn arb_connected() -> impl Strategy<Value = (StaticGraph, BTreeSet<Vertex>)> {
    (3usize..=12).prop_flat_map(|n| {
        let parents = proptest::collection::vec(any::<proptest::sample::Index>(), n - 1);
        let chords = proptest::collection::vec((0..n, 0..n), 0..=3);
        let terms = proptest::collection::btree_set(0..n, 1..=4);
        (parents, chords, terms).prop_map(move |(ps, cs, terms)| {
            let mut edges = BTreeSet::new();
            for (i, p) in ps.iter().enumerate() {
                let v = i + 1;
                let u = p.index(v);
                edges.insert((u.min(v), u.max(v)));
            }
            for (a, b) in cs {
                if a != b {
                    edges.insert((a.min(b), a.max(b)));
                }
            }
            (StaticGraph::new(n, edges), terms)
        })
    })
}

proptest! {
    #[test]
    fn feedback_set_is_minimum(g in arb_static(9)) {
        let f = min_feedback_edge_set(&g);
        prop_assert!(g.without(&f).is_forest());
        prop_assert_eq!(f.len() + g.n, g.edges.len() + g.components());
    }

    #[test]
    fn pruning_is_idempotent(g in arb_static(9), keep in proptest::collection::btree_set(0usize..9, 0..3)) {
        let once = prune_degree_one(&g, &keep);
        prop_assert_eq!(prune_degree_one(&once, &keep), once);
    }

    #[test]
    fn segments_cover_every_edge_once(g in arb_static(12), terms in proptest::collection::btree_set(0usize..12, 0..4)) {
        let terms: BTreeSet<Vertex> = terms.into_iter().filter(|&v| v < g.n).collect();
        let f = min_feedback_edge_set(&g);
        let d = interesting_vertices(&g, &terms, &f);
        let dec = decompose_segments(&g, &d, &f).unwrap();
        let mut all: Vec<(Vertex, Vertex)> = dec.segments.iter().flat_map(|s| s.edges().collect::<Vec<_>>()).collect();
        all.sort();
        let expect: Vec<_> = g.edges.iter().copied().collect();
        prop_assert_eq!(all, expect);
        for s in &dec.segments {
            for v in &s.vertices[1..s.vertices.len() - 1] {
                prop_assert!(!d.contains(v));
            }
        }
    }

    #[test]
    fn segment_count_envelope((g, terms) in arb_connected()) {
        let pruned = prune_degree_one(&g, &terms);
        let f = min_feedback_edge_set(&pruned);
        prop_assume!(f.len() <= 3);
        let d = interesting_vertices(&pruned, &terms, &f);
        let dec = decompose_segments(&pruned, &d, &f).unwrap();
        let plain = dec.segments.iter().filter(|s| !s.is_feedback).count();
        prop_assert!(plain <= 2 * (f.len() + d.len()));
        for s in &dec.segments {
            prop_assert!(d.contains(&s.first()) && d.contains(&s.last()));
        }
    }
}
