//! Buffer schedules: a free independent set far from the tokens (step 1),
//! and one inside a large neighborhood class next to a shared token (step 2).

use tokenjump::fpt::{self, kernelize, Reduction};
use tokenjump::instances::{generate, FamilySpec};

fn show(spec: &str) {
    let spec: FamilySpec = spec.parse().unwrap();
    let inst = generate(&spec).unwrap();
    let kz = kernelize(&inst).unwrap();
    if let Reduction::Buffer {
        at, buffer, w0, wr, ..
    } = &kz.reduction
    {
        println!("{spec}");
        println!("  found at {at}; buffer {buffer:?}, w0 {w0:?}, wr {wr:?}");
    }
    let out = fpt::solve(&inst).unwrap();
    let seq = out.sequence.unwrap();
    println!("  {} -> {} in {} moves:", inst.start(), inst.target(), seq.len());
    for m in &seq.moves {
        println!("    {} -> {}", m.from, m.to);
    }
    assert!(inst.verify(&seq).is_valid());
}

fn main() {
    for k in 1..=3 {
        show(&format!("family=buffer-gadget,k={k}"));
    }
    show("family=star-gadget,k=2");
    show("family=star-gadget,k=3");
}
