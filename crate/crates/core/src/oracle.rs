//! Exact Token Jumping by breadth-first search over the configuration graph.
//!
//! Configurations (size-`k` independent sets) are generated on demand and
//! deduplicated through a hash map keyed by their sorted form; the full
//! configuration graph is never built. Successors are produced in a fixed
//! order (ascending token, then ascending destination), so shortest
//! sequences are reproducible.

use std::collections::{HashMap, VecDeque};

use crate::error::OracleError;
use crate::graph::{Graph, Vertex};
use crate::instance::{validate_pair, TokenSet};
use crate::sequence::{Move, ReconfigSequence};

/// Default cap on visited configurations.
pub const DEFAULT_NODE_BUDGET: usize = 50_000_000;

#[derive(Debug, Clone)]
pub struct Oracle<'g> {
    graph: &'g Graph,
    budget: usize,
    frozen: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStats {
    pub visited: usize,
}

struct Node {
    parent: u32,
    mv: Move,
}

impl<'g> Oracle<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Oracle {
            graph,
            budget: DEFAULT_NODE_BUDGET,
            frozen: Vec::new(),
        }
    }

    /// Maximum number of distinct configurations to visit before failing
    /// with [`OracleError::ResourceExhausted`].
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    /// Tokens on these vertices never move.
    pub fn with_frozen<I: IntoIterator<Item = Vertex>>(mut self, frozen: I) -> Self {
        self.frozen = frozen.into_iter().collect();
        self.frozen.sort_unstable();
        self.frozen.dedup();
        self
    }

    pub fn reachable(&self, start: &TokenSet, target: &TokenSet) -> Result<bool, OracleError> {
        Ok(self.shortest(start, target)?.is_some())
    }

    /// A minimum-length sequence from `start` to `target`, or `None` if the
    /// target is unreachable.
    pub fn shortest(
        &self,
        start: &TokenSet,
        target: &TokenSet,
    ) -> Result<Option<ReconfigSequence>, OracleError> {
        self.search(start, target).map(|(seq, _)| seq)
    }

    pub fn search(
        &self,
        start: &TokenSet,
        target: &TokenSet,
    ) -> Result<(Option<ReconfigSequence>, SearchStats), OracleError> {
        validate_pair(self.graph, start, target)?;
        if start == target {
            return Ok((Some(ReconfigSequence::default()), SearchStats { visited: 1 }));
        }
        // a frozen vertex that is occupied now but not in the target can never clear
        if self
            .frozen
            .iter()
            .any(|&f| start.contains(f) && !target.contains(f))
        {
            return Ok((None, SearchStats { visited: 1 }));
        }

        let g = self.graph;
        let k = start.len();
        let live: Vec<Vertex> = g.vertices().collect();
        let mut frozen_mask = vec![false; g.capacity()];
        for &f in &self.frozen {
            if f < frozen_mask.len() {
                frozen_mask[f] = true;
            }
        }

        let mut index: HashMap<Box<[Vertex]>, u32> = HashMap::new();
        let mut configs: Vec<Box<[Vertex]>> = Vec::new();
        let mut nodes: Vec<Node> = Vec::new();
        let mut queue = VecDeque::new();

        let root: Box<[Vertex]> = start.as_slice().into();
        index.insert(root.clone(), 0);
        configs.push(root);
        nodes.push(Node {
            parent: u32::MAX,
            mv: Move::new(0, 0),
        });
        queue.push_back(0u32);

        // blocked[v] counts tokens whose closed neighborhood contains v
        let mut blocked = vec![0u32; g.capacity()];
        let mut next = Vec::with_capacity(k);

        while let Some(cur) = queue.pop_front() {
            let config = configs[cur as usize].clone();
            for &u in config.iter() {
                blocked[u] += 1;
                for &w in g.neighbors(u) {
                    blocked[w] += 1;
                }
            }
            for (i, &u) in config.iter().enumerate() {
                if frozen_mask[u] {
                    continue;
                }
                // lift u: its own contributions no longer block
                blocked[u] -= 1;
                for &w in g.neighbors(u) {
                    blocked[w] -= 1;
                }
                for &v in &live {
                    if v == u || blocked[v] != 0 {
                        continue;
                    }
                    next.clear();
                    next.extend(
                        config
                            .iter()
                            .enumerate()
                            .filter(|&(j, _)| j != i)
                            .map(|(_, &x)| x),
                    );
                    let pos = next.partition_point(|&x| x < v);
                    next.insert(pos, v);
                    if index.contains_key(next.as_slice()) {
                        continue;
                    }
                    if configs.len() >= self.budget {
                        return Err(OracleError::ResourceExhausted { budget: self.budget });
                    }
                    let id = configs.len() as u32;
                    let key: Box<[Vertex]> = next.as_slice().into();
                    index.insert(key.clone(), id);
                    configs.push(key);
                    nodes.push(Node {
                        parent: cur,
                        mv: Move::new(u, v),
                    });
                    if next.as_slice() == target.as_slice() {
                        let stats = SearchStats {
                            visited: configs.len(),
                        };
                        return Ok((Some(reconstruct(&nodes, id)), stats));
                    }
                    queue.push_back(id);
                }
                blocked[u] += 1;
                for &w in g.neighbors(u) {
                    blocked[w] += 1;
                }
            }
            for &u in config.iter() {
                blocked[u] -= 1;
                for &w in g.neighbors(u) {
                    blocked[w] -= 1;
                }
            }
        }
        Ok((
            None,
            SearchStats {
                visited: configs.len(),
            },
        ))
    }
}

fn reconstruct(nodes: &[Node], mut id: u32) -> ReconfigSequence {
    let mut moves = Vec::new();
    while nodes[id as usize].parent != u32::MAX {
        moves.push(nodes[id as usize].mv);
        id = nodes[id as usize].parent;
    }
    moves.reverse();
    ReconfigSequence::new(moves)
}

/// Is `target` reachable from `start` by token jumps?
pub fn bfs_reachable(g: &Graph, start: &TokenSet, target: &TokenSet) -> Result<bool, OracleError> {
    Oracle::new(g).reachable(start, target)
}

/// A shortest reconfiguration sequence, or `None` when unreachable.
pub fn shortest_sequence(
    g: &Graph,
    start: &TokenSet,
    target: &TokenSet,
) -> Result<Option<ReconfigSequence>, OracleError> {
    Oracle::new(g).shortest(start, target)
}
