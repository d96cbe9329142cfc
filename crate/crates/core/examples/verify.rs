//! Replaying sequences and locating the first illegal move.

use tokenjump::{verify_sequence, Graph, ReconfigSequence, TokenSet};

fn main() {
    let g = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
    let start = TokenSet::new([0, 2]).unwrap();
    let target = TokenSet::new([1, 4]).unwrap();
    let attempts: [(&str, ReconfigSequence); 5] = [
        ("good", [(0, 4), (2, 1)].into_iter().collect()),
        ("adjacent", [(0, 3)].into_iter().collect()),
        ("absent", [(4, 3)].into_iter().collect()),
        ("occupied", [(0, 2)].into_iter().collect()),
        ("incomplete", [(0, 4)].into_iter().collect()),
    ];
    for (name, seq) in attempts {
        let report = verify_sequence(&g, &start, &target, &seq);
        match report.violation {
            None => println!("{name:>10}: valid"),
            Some(v) => println!("{name:>10}: move {} {}", v.index, v.kind),
        }
    }
}
