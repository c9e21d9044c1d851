mod common;

use proptest::prelude::*;
use temporal_disjoint::format::{emit_instance, emit_solution, parse_instance, parse_solution};
use temporal_disjoint::generators::random::rng_from_seed;
use temporal_disjoint::oracle::solve_exhaustive;
use temporal_disjoint::{build_temporal_graph, Error, Instance, Mode, Solution, TemporalWalk};

const LINE: &str = "tgf 1\nn 3\nT 2\nm 2\ne 0 1 1\ne 1 2 2\nk 1\np 0 2\n";

#[test]
fn parses_the_documented_example() {
    let inst = parse_instance(LINE, Mode::Paths).unwrap();
    let g = build_temporal_graph(3, 2, &[(0, 1, 1), (1, 2, 2)]).unwrap();
    assert_eq!(inst, Instance::new(g, vec![(0, 2)], Mode::Paths).unwrap());
    assert_eq!(emit_instance(&inst), LINE);
}

#[test]
fn comments_and_blank_lines_are_skipped() {
    let text = "# a line\ntgf 1\n\nn 3   # three vertices\nT 2\nm 2\ne 0 1 1\n  e 1 2 2\nk 1\np 0 2\n\n# end\n";
    assert_eq!(parse_instance(text, Mode::Walks).unwrap(), parse_instance(LINE, Mode::Walks).unwrap());
}

fn parse_err_line(text: &str) -> usize {
    match parse_instance(text, Mode::Paths) {
        Err(Error::Parse { line, .. }) => line,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn errors_name_the_line() {
    assert_eq!(parse_err_line("tgf 2\n"), 1);
    assert_eq!(parse_err_line("tgf 1\nn x\n"), 2);
    assert_eq!(parse_err_line("tgf 1\nn 3\nT 2\nm 2\ne 0 1 1\nk 1\n"), 6);
    assert_eq!(parse_err_line("tgf 1\nn 3\nT 2\nm 1\ne 0 0 1\nk 0\n"), 5);
    assert_eq!(parse_err_line(&format!("{LINE}p 1 2\n")), 9);
    assert_eq!(parse_err_line("tgf 1\nn 3\nT 2\nm 0\nk 1\np 0 7\n"), 6);
}

#[test]
fn truncated_file_is_an_error() {
    assert!(matches!(parse_instance("tgf 1\nn 3\n", Mode::Paths), Err(Error::Parse { .. })));
    assert!(matches!(parse_solution("sol 1\nk 2\nw 0 1\n"), Err(Error::Parse { .. })));
}

#[test]
fn solution_text() {
    let sol = Solution { walks: vec![TemporalWalk::from_hops(0, &[(1, 1), (2, 2)]), TemporalWalk::empty(4)] };
    let text = emit_solution(&sol);
    assert_eq!(text, "sol 1\nk 2\nw 2 0 1 1 2 2\nw 0 4\n");
    assert_eq!(parse_solution(&text).unwrap(), sol);
    assert!(matches!(parse_solution("sol 1\nk 1\nw 2 0 1 1\n"), Err(Error::Parse { line: 3, .. })));
}

#[test]
fn solver_output_round_trips() {
    let mut rng = rng_from_seed(31337);
    for _ in 0..100 {
        let inst = common::general(&mut rng, Mode::Walks);
        let back = parse_instance(&emit_instance(&inst), Mode::Walks).unwrap();
        assert_eq!(back, inst);
        if let Some(sol) = solve_exhaustive(&inst).unwrap() {
            assert_eq!(parse_solution(&emit_solution(&sol)).unwrap(), sol);
        }
    }
}

fn arb_instance() -> impl Strategy<Value = Instance> {
    (2usize..=8, 1u32..=10).prop_flat_map(|(n, t)| {
        let edges = proptest::collection::btree_set((0..n, 0..n, 1..=t), 0..20);
        let pairs = proptest::collection::vec((0..n, 0..n), 0..4);
        (edges, pairs, any::<bool>()).prop_map(move |(es, pairs, walks)| {
            let es: Vec<_> = es.into_iter().filter(|&(a, b, _)| a < b).collect();
            let mode = if walks { Mode::Walks } else { Mode::Paths };
            Instance::new(build_temporal_graph(n, t, &es).unwrap(), pairs, mode).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn emitted_instances_parse_back(inst in arb_instance()) {
        let text = emit_instance(&inst);
        prop_assert_eq!(parse_instance(&text, inst.mode).unwrap(), inst.clone());
        prop_assert_eq!(emit_instance(&parse_instance(&text, inst.mode).unwrap()), text);
    }
}
