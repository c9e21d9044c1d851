mod common;

use temporal_disjoint::generators::random::rng_from_seed;
use temporal_disjoint::oracle::solve_exhaustive;
use temporal_disjoint::verifier::{is_valid_solution, verify_solution, ViolationKind};
use temporal_disjoint::walk::occupancy_or_empty;
use temporal_disjoint::{build_temporal_graph, Error, Instance, Mode, Solution, TemporalWalk};

fn triangle() -> Instance {
    let g = build_temporal_graph(3, 3, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
    Instance::new(g, vec![(0, 2), (0, 2)], Mode::Paths).unwrap()
}

fn triangle_solution() -> Solution {
    Solution {
        walks: vec![TemporalWalk::from_hops(0, &[(1, 1), (2, 2)]), TemporalWalk::from_hops(0, &[(3, 2)])],
    }
}

#[test]
fn hand_checked_solution_is_ok() {
    assert!(verify_solution(&triangle(), &triangle_solution()).unwrap().is_empty());
}

#[test]
fn swapped_walks_have_wrong_endpoints() {
    let g = build_temporal_graph(4, 2, &[(0, 1, 1), (2, 3, 2)]).unwrap();
    let inst = Instance::new(g, vec![(0, 1), (2, 3)], Mode::Walks).unwrap();
    let good = Solution { walks: vec![TemporalWalk::from_hops(0, &[(1, 1)]), TemporalWalk::from_hops(2, &[(2, 3)])] };
    assert!(is_valid_solution(&inst, &good));
    let swapped = Solution { walks: vec![good.walks[1].clone(), good.walks[0].clone()] };
    let v = verify_solution(&inst, &swapped).unwrap();
    assert_eq!(v.len(), 2);
    assert!(v.iter().all(|x| matches!(x.kind, ViolationKind::WrongEndpoints { .. })));
}

#[test]
fn shared_endpoint_is_an_intersection() {
    let g = build_temporal_graph(4, 3, &[(0, 1, 1), (1, 2, 2), (3, 1, 2), (1, 2, 3)]).unwrap();
    let inst = Instance::new(g, vec![(0, 2), (3, 2)], Mode::Walks).unwrap();
    let sol = Solution {
        walks: vec![TemporalWalk::from_hops(0, &[(1, 1), (2, 2)]), TemporalWalk::from_hops(3, &[(2, 1), (3, 2)])],
    };
    let v = verify_solution(&inst, &sol).unwrap();
    let hits: Vec<_> = v.iter().filter(|x| matches!(x.kind, ViolationKind::Intersection { .. })).collect();
    assert!(hits.iter().any(|x| x.kind == ViolationKind::Intersection { pair_i: 0, pair_j: 1, vertex: 1, overlap: (2, 2) }));
    assert!(v[0].to_string().starts_with("Intersection: "));
}

#[test]
fn every_violation_is_reported() {
    let inst = triangle();
    let bad = Solution {
        walks: vec![TemporalWalk::from_hops(0, &[(1, 1), (1, 2)]), TemporalWalk::from_hops(0, &[(1, 1), (2, 2)])],
    };
    let v = verify_solution(&inst, &bad).unwrap();
    assert!(v.iter().any(|x| matches!(x.kind, ViolationKind::NotAWalk { pair: 0 })));
    assert!(v.iter().any(|x| matches!(x.kind, ViolationKind::Intersection { .. })));
}

#[test]
fn paths_mode_rejects_revisits() {
    let g = build_temporal_graph(2, 3, &[(0, 1, 1), (0, 1, 2), (0, 1, 3)]).unwrap();
    let inst = Instance::new(g, vec![(0, 1)], Mode::Paths).unwrap();
    let sol = Solution { walks: vec![TemporalWalk::from_hops(0, &[(1, 1), (2, 0), (3, 1)])] };
    let v = verify_solution(&inst, &sol).unwrap();
    assert!(matches!(v[..], [ref x] if matches!(x.kind, ViolationKind::NotAPath { pair: 0 })));
    assert!(is_valid_solution(&inst.with_mode(Mode::Walks), &sol));
}

#[test]
fn arity_mismatch() {
    let sol = Solution { walks: vec![TemporalWalk::empty(0)] };
    assert_eq!(verify_solution(&triangle(), &sol), Err(Error::ArityMismatch { expected: 2, got: 1 }));
}

#[test]
fn empty_walk_verifies_only_for_trivial_pairs() {
    let g = build_temporal_graph(2, 1, &[(0, 1, 1)]).unwrap();
    let ok = Instance::new(g.clone(), vec![(1, 1), (0, 1)], Mode::Paths).unwrap();
    let sol = Solution { walks: vec![TemporalWalk::empty(1), TemporalWalk::from_hops(0, &[(1, 1)])] };
    assert!(is_valid_solution(&ok, &sol));
    let bad = Instance::new(g, vec![(0, 1)], Mode::Paths).unwrap();
    assert!(!is_valid_solution(&bad, &Solution { walks: vec![TemporalWalk::empty(0)] }));
}

#[test]
fn verification_is_repeatable() {
    let (inst, sol) = (triangle(), triangle_solution());
    assert_eq!(verify_solution(&inst, &sol), verify_solution(&inst, &sol));
}

#[test]
fn shifting_a_label_into_another_walk_gives_one_intersection() {
    let mut rng = rng_from_seed(77);
    let mut mutated = 0;
    for _ in 0..400 {
        let inst = common::general(&mut rng, Mode::Walks);
        let Some(sol) = solve_exhaustive(&inst).unwrap() else { continue };
        assert!(is_valid_solution(&inst, &sol));
        // Retime the final transition of one walk so it lands inside another walk's
        // occupancy of the same vertex, when the graph offers such a time edge.
        'outer: for i in 0..sol.walks.len() {
            let Some(last) = sol.walks[i].transitions.last().copied() else { continue };
            for (j, other) in sol.walks.iter().enumerate() {
                if j == i {
                    continue;
                }
                for iv in occupancy_or_empty(other) {
                    if iv.vertex != last.to {
                        continue;
                    }
                    for t in iv.from..=iv.to {
                        let prev = sol.walks[i].transitions.iter().rev().nth(1).map_or(0, |p| p.t);
                        if t <= prev || t == last.t || !inst.graph.has_time_edge(last.from, last.to, t) {
                            continue;
                        }
                        let mut bad = sol.clone();
                        bad.walks[i].transitions.last_mut().unwrap().t = t;
                        let v = verify_solution(&inst, &bad).unwrap();
                        let (lo, hi) = (i.min(j), i.max(j));
                        let at = v
                            .iter()
                            .filter(|x| matches!(x.kind, ViolationKind::Intersection { pair_i, pair_j, .. } if (pair_i, pair_j) == (lo, hi)))
                            .count();
                        assert_eq!(at, 1, "{v:?}");
                        assert!(v.iter().all(|x| matches!(x.kind, ViolationKind::Intersection { .. })));
                        mutated += 1;
                        break 'outer;
                    }
                }
            }
        }
    }
    assert!(mutated > 0);
}
