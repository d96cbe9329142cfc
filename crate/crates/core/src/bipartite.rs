//! Detection of K₃,ₜ subgraphs by common-neighborhood enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

/// Three vertices together with at least `t` common neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteWitness {
    pub left: [Vertex; 3],
    pub right: Vec<Vertex>,
}

impl fmt::Display for BipartiteWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "left {:?} fully joined to right {:?}", self.left, self.right)
    }
}

impl BipartiteWitness {
    /// Checks that the witness really is a complete bipartite subgraph of `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let distinct =
            self.left[0] != self.left[1] && self.left[1] != self.left[2] && self.left[0] != self.left[2];
        distinct
            && self.right.iter().all(|r| !self.left.contains(r))
            && self
                .left
                .iter()
                .all(|&a| self.right.iter().all(|&b| g.has_edge(a, b)))
    }
}

/// Returns a K₃,ₜ witness if `g` has one, scanning triples `a < b < c` in
/// lexicographic order and reporting the first with `t` or more common
/// neighbors. The witness lists every common neighbor of the triple.
///
/// Only pairs that already share `t` neighbors are extended, so the cost is
/// governed by the number of such pairs rather than `n³`.
pub fn find_k3t_witness(g: &Graph, t: usize) -> Option<BipartiteWitness> {
    let cap = g.capacity();
    let mut common = vec![0usize; cap];
    let mut touched = Vec::new();
    for a in g.vertices() {
        // count paths a - x - b for every b > a
        for &x in g.neighbors(a) {
            for &b in g.neighbors(x) {
                if b > a {
                    if common[b] == 0 {
                        touched.push(b);
                    }
                    common[b] += 1;
                }
            }
        }
        let mut partners: Vec<Vertex> = touched.iter().copied().filter(|&b| common[b] >= t).collect();
        for &b in &touched {
            common[b] = 0;
        }
        touched.clear();
        partners.sort_unstable();

        for (i, &b) in partners.iter().enumerate() {
            let ab = intersect(g.neighbors(a), g.neighbors(b));
            for &c in &partners[i + 1..] {
                let abc = intersect(&ab, g.neighbors(c));
                if abc.len() >= t {
                    return Some(BipartiteWitness {
                        left: [a, b, c],
                        right: abc,
                    });
                }
            }
        }
    }
    None
}

fn intersect(x: &[Vertex], y: &[Vertex]) -> Vec<Vertex> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(x[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
