//! Search for instances whose shortest sequences must move a shared token.

use crate::bipartite::find_k3t_witness;
use crate::error::OracleError;
use crate::graph::{Graph, Vertex};
use crate::instance::{Instance, Mode, TokenSet};
use crate::oracle::Oracle;
use crate::sequence::ReconfigSequence;

use super::enumerate::GraphCatalog;

/// An instance where `I₀ ∩ Iᵣ ≠ ∅` and every shortest sequence is longer
/// than `|I₀ ∖ Iᵣ|`, together with its certificates.
#[derive(Debug, Clone)]
pub struct DetourInstance {
    pub instance: Instance,
    /// `|I₀ ∖ Iᵣ|`, the trivial lower bound.
    pub direct: usize,
    /// A shortest sequence on the full graph.
    pub shortest: ReconfigSequence,
    /// Shortest sequence when the shared tokens may not move; `None` if the
    /// target is then unreachable.
    pub frozen: Option<ReconfigSequence>,
}

impl DetourInstance {
    /// Whether the frozen search confirms that a shared token has to move.
    pub fn shared_token_must_move(&self) -> bool {
        self.frozen
            .as_ref()
            .is_none_or(|seq| seq.len() > self.shortest.len())
    }
}

fn independent_k_sets(g: &Graph, k: usize) -> Vec<Vec<Vertex>> {
    fn grow(g: &Graph, k: usize, from: Vertex, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..g.capacity() {
            if g.contains(v) && cur.iter().all(|&w| !g.has_edge(v, w)) {
                cur.push(v);
                grow(g, k, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(g, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Exhaustively scans connected K₃,₃-free graphs of order `1..=max_n`
/// (smallest order first) and their independent `k`-set pairs for a
/// detour. Returns the first one found, or `None`.
pub fn find_detour_instance(max_n: usize, k: usize) -> Result<Option<DetourInstance>, OracleError> {
    let mut catalog = GraphCatalog::new();
    for n in 1..=max_n {
        for g in catalog.connected(n) {
            if find_k3t_witness(&g, 3).is_some() {
                continue;
            }
            if let Some(found) = detour_in(&g, k)? {
                return Ok(Some(found));
            }
        }
    }
    Ok(None)
}

fn detour_in(g: &Graph, k: usize) -> Result<Option<DetourInstance>, OracleError> {
    let sets = independent_k_sets(g, k);
    let oracle = Oracle::new(g);
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            let start = TokenSet::new(a.iter().copied()).expect("distinct");
            let target = TokenSet::new(b.iter().copied()).expect("distinct");
            let shared: Vec<Vertex> = start.intersection(&target).collect();
            if shared.is_empty() {
                continue;
            }
            let direct = start.difference(&target).count();
            let Some(shortest) = oracle.shortest(&start, &target)? else {
                continue;
            };
            if shortest.len() <= direct {
                continue;
            }
            let frozen = Oracle::new(g).with_frozen(shared).shortest(&start, &target)?;
            let instance = Instance::new(g.clone(), start, target, 3, Mode::Planar)?;
            let found = DetourInstance {
                instance,
                direct,
                shortest,
                frozen,
            };
            if found.shared_token_must_move() {
                return Ok(Some(found));
            }
        }
    }
    Ok(None)
}
