mod common;

use proptest::prelude::*;
use tokenjump::instances::{generate, Family, FamilySpec};
use tokenjump::mis::find_independent_set_exact;
use tokenjump::{find_k3t_witness, fpt, shortest_sequence, Move, ReconfigSequence};

#[test]
fn planar_corpus_is_k33_free() {
    let mut cases = common::random_planar(300, 5);
    cases.extend(common::named());
    cases.extend(common::gadgets());
    for case in &cases {
        assert!(find_k3t_witness(case.inst.graph(), 3).is_none(), "{}", case.label);
    }
}

#[test]
fn planar_graphs_have_quarter_size_independent_sets() {
    let cases = common::random_planar(300, 6);
    for case in cases.iter().chain(&common::named()) {
        let g = case.inst.graph();
        let s = g.order() / 4;
        let found = find_independent_set_exact(g, s);
        assert!(found.is_some_and(|set| set.len() == s), "{}", case.label);
    }
}

#[test]
fn generation_is_deterministic() {
    for text in [
        "family=random-planar,rows=3,cols=4,k=2,seed=1",
        "family=grid,rows=4,cols=4,k=3,seed=7",
        "family=path,n=9,k=3,seed=2",
        "family=cycle,n=8,k=3,seed=4",
    ] {
        let spec: FamilySpec = text.parse().unwrap();
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap(), "{text}");
        let round: FamilySpec = spec.to_string().parse().unwrap();
        assert_eq!(round, spec);
    }
}

#[test]
fn canonical_no_from_cycle_family() {
    let spec: FamilySpec = "family=cycle,n=4,start=0:2,target=1:3".parse().unwrap();
    let inst = generate(&spec).unwrap();
    assert!(shortest_sequence(inst.graph(), inst.start(), inst.target())
        .unwrap()
        .is_none());
    assert_eq!(fpt::solve(&inst).unwrap().answer, tokenjump::Answer::No);
}

fn corruptions(seq: &ReconfigSequence) -> Vec<ReconfigSequence> {
    let mut out = Vec::new();
    let moves = &seq.moves;
    for i in 0..moves.len() {
        // drop a move
        let mut dropped = moves.clone();
        dropped.remove(i);
        out.push(ReconfigSequence::new(dropped));
        // reverse a move
        let mut reversed = moves.clone();
        reversed[i] = Move::new(moves[i].to, moves[i].from);
        out.push(ReconfigSequence::new(reversed));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn corrupted_sequences_are_rejected(rows in 2usize..4, cols in 2usize..5, k in 1usize..3, seed in 0u64..1000) {
        let spec = FamilySpec::new(Family::RandomPlanar { rows, cols, p: 0.5 }, k).with_seed(seed);
        let Ok(inst) = generate(&spec) else { return Ok(()) };
        let Some(seq) = shortest_sequence(inst.graph(), inst.start(), inst.target()).unwrap() else { return Ok(()) };
        prop_assert!(inst.verify(&seq).is_valid());
        // shortest sequences have no redundant moves, so dropping or
        // reversing any one of them must break the replay
        for bad in corruptions(&seq) {
            prop_assert!(!inst.verify(&bad).is_valid(), "{:?}", bad);
        }
        // redirect a move onto an occupied vertex
        if let Some(m) = seq.moves.first() {
            if let Some(occupied) = inst.start().iter().find(|&v| v != m.from) {
                let mut moves = seq.moves.clone();
                moves[0] = Move::new(m.from, occupied);
                prop_assert!(!inst.verify(&ReconfigSequence::new(moves)).is_valid());
            }
        }
    }
}
