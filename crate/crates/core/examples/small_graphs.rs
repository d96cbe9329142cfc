//! Exhaustive check on every connected graph of small order: the solver and
//! the breadth-first oracle agree on all independent pairs.

use tokenjump::instances::GraphCatalog;
use tokenjump::{bfs_reachable, find_k3t_witness, fpt, Answer, Instance, Mode, TokenSet};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let mut cat = GraphCatalog::new();
    for n in 1..=max {
        let graphs = cat.connected(n);
        let (mut pairs, mut no) = (0, 0);
        for g in graphs.iter().filter(|g| find_k3t_witness(g, 3).is_none()) {
            let sets: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|&(a, b)| !g.has_edge(a, b))
                .collect();
            for &(a, b) in &sets {
                for &(c, d) in &sets {
                    let inst = Instance::new(
                        g.clone(),
                        TokenSet::new([a, b]).unwrap(),
                        TokenSet::new([c, d]).unwrap(),
                        3,
                        Mode::Planar,
                    )
                    .unwrap();
                    let answer = fpt::solve(&inst).unwrap().answer;
                    let truth = bfs_reachable(inst.graph(), inst.start(), inst.target()).unwrap();
                    assert_eq!(answer == Answer::Yes, truth);
                    pairs += 1;
                    no += usize::from(!truth);
                }
            }
        }
        println!(
            "order {n}: {} connected graphs, {pairs} two-token pairs, {no} unreachable",
            graphs.len()
        );
    }
}
