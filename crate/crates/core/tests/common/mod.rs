#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tokenjump::instances::{generate, Family, FamilySpec, GraphCatalog};
use tokenjump::{find_k3t_witness, Graph, Instance, Mode, TokenSet, Vertex};

pub struct Case {
    pub label: String,
    pub inst: Instance,
}

pub fn ts(v: &[Vertex]) -> TokenSet {
    TokenSet::new(v.iter().copied()).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn independent_sets(g: &Graph, k: usize) -> Vec<Vec<Vertex>> {
    let n = g.capacity();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(g: &Graph, n: usize, k: usize, from: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            if cur.iter().all(|&w| !g.has_edge(v, w)) {
                cur.push(v);
                go(g, n, k, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    go(g, n, k, 0, &mut cur, &mut out);
    out
}

/// Every connected K3,3-free graph of order `1..=max_order` with every
/// ordered pair of independent `k`-sets, for each `k` in `ks`.
pub fn exhaustive(max_order: usize, ks: &[usize]) -> Vec<Case> {
    let mut cat = GraphCatalog::new();
    let mut out = Vec::new();
    for n in 1..=max_order {
        for (gi, g) in cat.connected(n).into_iter().enumerate() {
            if find_k3t_witness(&g, 3).is_some() {
                continue;
            }
            for &k in ks {
                let sets = independent_sets(&g, k);
                for a in &sets {
                    for b in &sets {
                        let inst = Instance::new(g.clone(), ts(a), ts(b), 3, Mode::Planar).unwrap();
                        out.push(Case {
                            label: format!("order {n} graph #{gi} k={k} {a:?}->{b:?}"),
                            inst,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Seeded random-planar instances with at most 14 vertices and k in 1..=3.
pub fn random_planar(count: usize, seed: u64) -> Vec<Case> {
    const SHAPES: [(usize, usize); 8] = [(2, 4), (2, 5), (3, 3), (2, 6), (2, 7), (3, 4), (4, 3), (3, 4)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let (rows, cols) = SHAPES[rng.gen_range(0..SHAPES.len())];
        let p = [0.35, 0.5, 0.65, 0.8][rng.gen_range(0..4)];
        let k = rng.gen_range(1..=3);
        let spec = FamilySpec::new(Family::RandomPlanar { rows, cols, p }, k).with_seed(rng.gen());
        // dense draws may have too small an independence number
        if let Ok(inst) = generate(&spec) {
            out.push(Case {
                label: spec.to_string(),
                inst,
            });
        }
    }
    out
}

/// The three gadget families for several `k`, and K2,m variants that keep
/// reaching the shrinking step: extra edges inside the class, targets moved
/// into the class, and a second oversized class.
pub fn gadgets() -> Vec<Case> {
    let mut out = Vec::new();
    let mut push = |spec: FamilySpec| {
        let inst = generate(&spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
        out.push(Case {
            label: spec.to_string(),
            inst,
        });
    };
    for k in 1..=3 {
        push(FamilySpec::new(Family::BufferGadget, k));
        push(FamilySpec::new(Family::StarGadget { m: 10 * k + 5 }, k));
    }
    for k in 2..=3 {
        for m in [10 * k - 1, 10 * k, 10 * k + 1, 10 * k + 5] {
            push(FamilySpec::new(Family::K2mGadget { m }, k));
        }
    }
    for m in [21, 25, 30] {
        push(FamilySpec::new(Family::K2mGadget { m }, 2).with_sets(vec![0, 1], vec![4, 5]));
        push(FamilySpec::new(Family::K2mGadget { m }, 2).with_sets(vec![0, 1], vec![2, 6]));
        push(FamilySpec::new(Family::StarGadget { m }, 2).with_sets(vec![0, 1], vec![3, 4]));
    }

    // K2,m with a path through the class (class members of degree <= 4)
    for (m, k) in [(25, 2), (30, 2), (35, 3)] {
        let first = 2 * k;
        let mut g = Graph::from_edges(first + m, (first..first + m).flat_map(|c| [(0, c), (1, c)])).unwrap();
        for c in first..first + m - 1 {
            g.add_edge(c, c + 1).unwrap();
        }
        let start: Vec<Vertex> = (0..k).collect();
        let target: Vec<Vertex> = (k..2 * k).collect();
        let inst = Instance::new_checked(g, ts(&start), ts(&target), 3, Mode::Planar).unwrap();
        out.push(Case {
            label: format!("k2m-path m={m} k={k}"),
            inst,
        });
    }

    // seeded perturbations: random path edges inside the class, targets
    // drawn from the class or the isolated pair
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut made = 0;
    while made < 60 {
        let m = rng.gen_range(20..=34);
        let mut g = Graph::from_edges(4 + m, (4..4 + m).flat_map(|c| [(0, c), (1, c)])).unwrap();
        for c in 4..3 + m {
            if rng.gen_bool(0.4) {
                g.add_edge(c, c + 1).unwrap();
            }
        }
        let pool: Vec<Vertex> = (2..4 + m).collect();
        let a = pool[rng.gen_range(0..pool.len())];
        let b = pool[rng.gen_range(0..pool.len())];
        if a == b || g.has_edge(a, b) {
            continue;
        }
        let Ok(inst) = Instance::new_checked(g, ts(&[0, 1]), ts(&[a, b]), 3, Mode::Planar) else {
            continue;
        };
        out.push(Case {
            label: format!("k2m-noise m={m} target {a},{b}"),
            inst,
        });
        made += 1;
    }

    // two disjoint K2,25 blocks sharing nothing, k=4
    let mut g = Graph::new(58);
    for c in 4..29 {
        g.add_edge(0, c).unwrap();
        g.add_edge(1, c).unwrap();
    }
    for c in 33..58 {
        g.add_edge(29, c).unwrap();
        g.add_edge(30, c).unwrap();
    }
    let inst = Instance::new_checked(g, ts(&[0, 1, 29, 30]), ts(&[2, 3, 31, 32]), 3, Mode::Planar).unwrap();
    out.push(Case {
        label: "double k2m k=4".into(),
        inst,
    });
    out
}

/// Small NO and detour-style instances on cycles and grids.
pub fn named() -> Vec<Case> {
    let mut out = Vec::new();
    out.push(Case {
        label: "C4".into(),
        inst: Instance::new(cycle(4), ts(&[0, 2]), ts(&[1, 3]), 3, Mode::Planar).unwrap(),
    });
    out.push(Case {
        label: "C6".into(),
        inst: Instance::new(cycle(6), ts(&[0, 2, 4]), ts(&[1, 3, 5]), 3, Mode::Planar).unwrap(),
    });
    for seed in 0..10 {
        for (rows, cols, k) in [(3, 3, 2), (3, 4, 3), (4, 4, 3)] {
            let spec = FamilySpec::new(Family::Grid { rows, cols }, k).with_seed(seed);
            out.push(Case {
                label: spec.to_string(),
                inst: generate(&spec).unwrap(),
            });
        }
    }
    out
}
