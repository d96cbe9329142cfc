//! Step 3: a class whose key holds two start tokens cannot host a buffer,
//! so it is cut down to its `beta` smallest members before the final search.

use tokenjump::fpt::{self, kernelize, Reduction};
use tokenjump::instances::{generate, FamilySpec};
use tokenjump::shortest_sequence;

fn main() {
    let m: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(25);
    let spec: FamilySpec = format!("family=k2m-gadget,k=2,m={m}").parse().unwrap();
    let inst = generate(&spec).unwrap();
    let kz = kernelize(&inst).unwrap();
    println!(
        "{spec}: {} vertices, beta = {}",
        inst.graph().order(),
        kz.thresholds.beta
    );
    for cls in &kz.classes {
        println!("  class key {:?}: {} members", cls.key, cls.members.len());
    }
    if let Reduction::Kernel { graph, deleted, .. } = &kz.reduction {
        println!("  deleted {deleted:?}, kernel order {}", graph.order());
    }

    let out = fpt::solve(&inst).unwrap();
    let full = shortest_sequence(inst.graph(), inst.start(), inst.target()).unwrap();
    println!("answer {} at {}", out.answer, out.decided_at);
    let moves: Vec<_> = out
        .sequence
        .iter()
        .flat_map(|s| &s.moves)
        .map(|m| (m.from, m.to))
        .collect();
    println!("  kernel sequence {moves:?}");
    println!("  shortest on the full graph: {:?}", full.map(|s| s.len()));
}
