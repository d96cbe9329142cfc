//! Exact reachability and shortest sequences by breadth-first search over
//! configurations, including the two classic NO instances.

use tokenjump::oracle::Oracle;
use tokenjump::{Graph, OracleError, TokenSet};

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn ts(v: &[usize]) -> TokenSet {
    TokenSet::new(v.iter().copied()).unwrap()
}

fn main() {
    let p3 = Graph::with_vertex_ids([1, 2, 3], [(1, 2), (2, 3)]).unwrap();
    let seq = Oracle::new(&p3).shortest(&ts(&[1]), &ts(&[3])).unwrap().unwrap();
    let moves: Vec<_> = seq.moves.iter().map(|m| (m.from, m.to)).collect();
    println!("P3 {{1}} -> {{3}}: {moves:?}");

    let c4 = cycle(4);
    let c6 = cycle(6);
    for (name, g, a, b) in [
        ("C4", &c4, ts(&[0, 2]), ts(&[1, 3])),
        ("C6", &c6, ts(&[0, 2, 4]), ts(&[1, 3, 5])),
    ] {
        let (seq, stats) = Oracle::new(g).search(&a, &b).unwrap();
        println!(
            "{name} {a} -> {b}: {} after visiting {} sets",
            if seq.is_some() { "reachable" } else { "unreachable" },
            stats.visited
        );
    }

    // a 5x5 grid with 4 tokens, and what happens under a tiny budget
    let grid = Graph::from_edges(
        25,
        (0..25).flat_map(|v| {
            let mut e = Vec::new();
            if v % 5 < 4 {
                e.push((v, v + 1));
            }
            if v < 20 {
                e.push((v, v + 5));
            }
            e
        }),
    )
    .unwrap();
    let (a, b) = (ts(&[0, 2, 4, 12]), ts(&[20, 22, 24, 6]));
    let (seq, stats) = Oracle::new(&grid).search(&a, &b).unwrap();
    println!(
        "grid {a} -> {b}: {} moves, {} sets visited",
        seq.unwrap().len(),
        stats.visited
    );
    match Oracle::new(&grid).with_budget(100).shortest(&a, &b) {
        Err(e @ OracleError::ResourceExhausted { .. }) => println!("with budget 100: {e}"),
        other => println!("with budget 100: {other:?}"),
    }
}
