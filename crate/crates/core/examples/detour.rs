//! Search small graphs for a shortest sequence that has to move a token
//! sitting on a vertex shared by start and target.

use tokenjump::instances::find_detour_instance;

fn main() {
    let k = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let found = find_detour_instance(8, k).expect("search stays within budget");
    let Some(d) = found else {
        println!("no detour instance with k = {k} on at most 8 vertices");
        return;
    };
    let inst = &d.instance;
    println!(
        "graph: {} vertices, edges {:?}",
        inst.graph().order(),
        inst.graph().edges().collect::<Vec<_>>()
    );
    println!("start {}  target {}", inst.start(), inst.target());
    println!(
        "|start \\ target| = {}, shortest = {}",
        d.direct,
        d.shortest.len()
    );
    for m in &d.shortest.moves {
        println!("  {} -> {}", m.from, m.to);
    }
    match &d.frozen {
        None => println!("with shared tokens frozen: unreachable"),
        Some(seq) => println!("with shared tokens frozen: {} moves", seq.len()),
    }
}
