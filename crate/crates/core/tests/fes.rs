mod common;

use temporal_disjoint::fes::{
    decompose_instance, enumerate_configurations, enumerate_valid_orderings, realize, realize_traced, solve_tdp_fes,
    solve_tdp_fes_with, Configuration,
};
use temporal_disjoint::generators::random::rng_from_seed;
use temporal_disjoint::generators::{gen_mcc_paths, ColoredGraph};
use temporal_disjoint::oracle::solve_exhaustive;
use temporal_disjoint::verifier::is_valid_solution;
use temporal_disjoint::{build_temporal_graph, Error, Instance, Mode, TemporalWalk};

fn paths(n: usize, t: u32, edges: &[(usize, usize, u32)], pairs: &[(usize, usize)]) -> Instance {
    Instance::new(build_temporal_graph(n, t, edges).unwrap(), pairs.to_vec(), Mode::Paths).unwrap()
}

fn configs(inst: &Instance) -> Vec<Configuration> {
    enumerate_configurations(&decompose_instance(inst).unwrap(), inst).unwrap()
}

const TRI: [(usize, usize, u32); 3] = [(0, 1, 1), (1, 2, 2), (0, 2, 3)];

#[test]
fn configuration_counts() {
    assert_eq!(configs(&paths(3, 2, &[(0, 1, 1), (1, 2, 2)], &[(0, 2)])).len(), 1);
    assert_eq!(configs(&paths(3, 3, &TRI, &[(0, 2)])).len(), 2);
    assert_eq!(configs(&paths(3, 3, &TRI, &[(0, 2), (0, 2)])).len(), 4);
}

#[test]
fn configuration_routes_are_simple_paths() {
    let inst = paths(3, 3, &TRI, &[(0, 2)]);
    let mut routes: Vec<Vec<usize>> = configs(&inst).into_iter().map(|c| c.routes[0].vertices.clone()).collect();
    routes.sort();
    assert_eq!(routes, vec![vec![0, 1, 2], vec![0, 2]]);
}

#[test]
fn ordering_counts() {
    let one = paths(3, 2, &[(0, 1, 1), (1, 2, 2)], &[(0, 2)]);
    let dec = decompose_instance(&one).unwrap();
    assert_eq!(enumerate_valid_orderings(&dec, &configs(&one)[0]).len(), 1);

    let shared = paths(3, 2, &[(0, 1, 1), (1, 2, 2)], &[(0, 2), (0, 2)]);
    let dec = decompose_instance(&shared).unwrap();
    let ords = enumerate_valid_orderings(&dec, &configs(&shared)[0]);
    assert_eq!(ords.len(), 2);
    for o in &ords {
        let first = o.per_vertex[&0][0];
        assert!(o.per_vertex.values().all(|order| order[0] == first));
    }
}

#[test]
fn disjoint_segments_order_freely() {
    // Two separate edges 0-1 and 2-3: every interleaving is fine.
    let inst = paths(4, 2, &[(0, 1, 1), (2, 3, 2)], &[(0, 1), (2, 3)]);
    let dec = decompose_instance(&inst).unwrap();
    let ords = enumerate_valid_orderings(&dec, &configs(&inst)[0]);
    assert_eq!(ords.len(), 1);
    assert!(realize(&inst, &configs(&inst)[0], &ords[0]).is_some());
}

#[test]
fn realize_examples() {
    let line = paths(3, 2, &[(0, 1, 1), (1, 2, 2)], &[(0, 2)]);
    let cfg = &configs(&line)[0];
    let ord = &enumerate_valid_orderings(&decompose_instance(&line).unwrap(), cfg)[0];
    let sol = realize(&line, cfg, ord).unwrap();
    assert_eq!(sol.walks, vec![TemporalWalk::from_hops(0, &[(1, 1), (2, 2)])]);

    let down = paths(3, 2, &[(0, 1, 2), (1, 2, 1)], &[(0, 2)]);
    let cfg = &configs(&down)[0];
    let ord = &enumerate_valid_orderings(&decompose_instance(&down).unwrap(), cfg)[0];
    assert_eq!(realize(&down, cfg, ord), None);
}

#[test]
fn triangle_agrees_with_oracle() {
    let inst = paths(3, 3, &TRI, &[(0, 2), (0, 2)]);
    assert!(solve_exhaustive(&inst).unwrap().is_some());
    let dec = decompose_instance(&inst).unwrap();
    let found = configs(&inst)
        .iter()
        .find_map(|c| enumerate_valid_orderings(&dec, c).iter().find_map(|o| realize(&inst, c, o)))
        .unwrap();
    assert!(is_valid_solution(&inst, &found));
    assert!(is_valid_solution(&inst, &solve_tdp_fes(&inst).unwrap().unwrap()));
}

#[test]
fn unreachable_pair_is_no_without_candidates() {
    let inst = paths(4, 1, &[(0, 1, 1)], &[(0, 3)]);
    let (sol, stats) = solve_tdp_fes_with(&inst, 10).unwrap();
    assert_eq!(sol, None);
    assert_eq!(stats.candidates, 0);
}

#[test]
fn walks_mode_is_rejected() {
    let inst = paths(3, 3, &TRI, &[(0, 2)]).with_mode(Mode::Walks);
    assert!(matches!(solve_tdp_fes(&inst), Err(Error::PreconditionViolated(_))));
}

#[test]
fn cap_reports_resource_limit() {
    let inst = paths(3, 3, &TRI, &[(0, 2), (0, 2), (0, 2)]);
    assert!(matches!(solve_tdp_fes_with(&inst, 1), Err(Error::ResourceLimit { .. })));
}

#[test]
fn working_graph_only_shrinks() {
    let mut rng = rng_from_seed(4242);
    let mut traced = 0;
    for _ in 0..150 {
        let inst = common::sparse(&mut rng);
        let dec = decompose_instance(&inst).unwrap();
        let Ok(cfgs) = enumerate_configurations(&dec, &inst) else { continue };
        for cfg in cfgs.iter().take(4) {
            for ord in enumerate_valid_orderings(&dec, cfg).iter().take(4) {
                let mut trace = Vec::new();
                realize_traced(&inst, cfg, ord, &mut trace);
                assert!(trace.windows(2).all(|w| w[1] <= w[0]), "{trace:?}");
                traced += 1;
            }
        }
    }
    assert!(traced > 50);
}

#[test]
fn forest_yes_instances_get_valid_paths() {
    let mut rng = rng_from_seed(5150);
    let mut yes = 0;
    for _ in 0..200 {
        let inst = common::sparse(&mut rng);
        let want = solve_exhaustive(&inst).unwrap().is_some();
        let got = solve_tdp_fes(&inst).unwrap();
        assert_eq!(got.is_some(), want);
        if let Some(sol) = got {
            assert!(is_valid_solution(&inst, &sol));
            yes += 1;
        }
    }
    assert!(yes > 20);
}

#[test]
fn clique_construction_yes_instance() {
    let g = ColoredGraph::complete(2, 2);
    let (inst, _) = gen_mcc_paths(&g).unwrap();
    match solve_tdp_fes(&inst) {
        Ok(Some(sol)) => assert!(is_valid_solution(&inst, &sol)),
        Ok(None) => panic!("solver said NO on a yes instance"),
        Err(e) => panic!("solver stopped: {e}"),
    }
}
