//! K3,t-forbidden graphs: Ramsey thresholds, the general kernel bound, and
//! the forbiddance gate.

use tokenjump::fpt::{self, compute_thresholds, kernel_size_bound};
use tokenjump::instances::{generate, FamilySpec};
use tokenjump::{find_k3t_witness, Graph, Mode};

fn main() {
    for (k, t) in [(1, 3), (2, 3), (1, 4), (2, 5)] {
        let th = compute_thresholds(k, Mode::General, t).unwrap();
        let bound = kernel_size_bound(k, Mode::General, t)
            .map(|b| b.to_string())
            .unwrap_or_else(|e| e.to_string());
        println!(
            "k={k} t={t}: alpha={} beta={} kernel bound {bound}",
            th.alpha, th.beta
        );
    }
    println!(
        "planar: f1(1)={} f1(2)={}",
        kernel_size_bound(1, Mode::Planar, 3).unwrap(),
        kernel_size_bound(2, Mode::Planar, 3).unwrap()
    );

    // K3,4 contains K3,3 but not K3,5
    let k34 = Graph::from_edges(7, (0..3).flat_map(|a| (3..7).map(move |b| (a, b)))).unwrap();
    for t in [3, 4, 5] {
        match find_k3t_witness(&k34, t) {
            Some(w) => println!("K3,4 contains K3,{t}: {w}"),
            None => println!("K3,4 is K3,{t}-free"),
        }
    }

    let spec: FamilySpec = "family=k2m-gadget,k=2,m=25,mode=general,t=4".parse().unwrap();
    let inst = generate(&spec).unwrap();
    let out = fpt::solve(&inst).unwrap();
    println!(
        "{spec}: {} at {}, beta = {}",
        out.answer, out.decided_at, out.thresholds.beta
    );
}
