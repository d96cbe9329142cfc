//! All graphs of small order up to isomorphism.
//!
//! Graphs of order `n` are grown from those of order `n − 1` by adding a
//! vertex with every possible neighborhood, then deduplicated by a canonical
//! code: the minimum edge bitstring over all vertex orders compatible with
//! color refinement. Practical up to order 8 or 9.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Largest order whose edge set fits in a `u64` code.
pub const MAX_ORDER: usize = 11;

fn pair_bit(i: usize, j: usize) -> u32 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    (j * (j - 1) / 2 + i) as u32
}

fn decode(code: u64, n: usize) -> Vec<u16> {
    let mut adj = vec![0u16; n];
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Stable coloring by iterated neighbor-color multisets.
fn refine(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut color = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| color[w])
                    .collect();
                nc.sort_unstable();
                (color[v], nc)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let ranked: Vec<&(usize, Vec<usize>)> = distinct.into_iter().collect();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| ranked.binary_search(&s).expect("signature was ranked"))
            .collect();
        let count = ranked.len();
        color = next;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

fn canonical_code(adj: &[u16]) -> u64 {
    let n = adj.len();
    let color = refine(adj);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let max_color = color.iter().copied().max().unwrap_or(0);
    for c in 0..=max_color {
        let cell: Vec<usize> = (0..n).filter(|&v| color[v] == c).collect();
        if !cell.is_empty() {
            cells.push(cell);
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut best = u64::MAX;
    permute_cells(adj, &cells, 0, &mut vec![false; n], &mut order, &mut best);
    best
}

fn permute_cells(
    adj: &[u16],
    cells: &[Vec<usize>],
    cell: usize,
    used: &mut Vec<bool>,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if cell == cells.len() {
        let mut code = 0u64;
        for j in 1..order.len() {
            for i in 0..j {
                if adj[order[i]] >> order[j] & 1 == 1 {
                    code |= 1 << pair_bit(i, j);
                }
            }
        }
        *best = (*best).min(code);
        return;
    }
    let members = &cells[cell];
    let placed = members.iter().filter(|&&v| used[v]).count();
    if placed == members.len() {
        permute_cells(adj, cells, cell + 1, used, order, best);
        return;
    }
    for &v in members {
        if !used[v] {
            used[v] = true;
            order.push(v);
            permute_cells(adj, cells, cell, used, order, best);
            order.pop();
            used[v] = false;
        }
    }
}

/// Canonical codes of all graphs of each order, computed on demand.
#[derive(Debug, Clone)]
pub struct GraphCatalog {
    levels: Vec<Vec<u64>>,
}

impl Default for GraphCatalog {
    fn default() -> Self {
        GraphCatalog::new()
    }
}

impl GraphCatalog {
    pub fn new() -> Self {
        // order 0: the empty graph
        GraphCatalog {
            levels: vec![vec![0]],
        }
    }

    fn codes(&mut self, order: usize) -> &[u64] {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        while self.levels.len() <= order {
            let n = self.levels.len();
            let mut next = BTreeSet::new();
            for &code in &self.levels[n - 1] {
                let base = decode(code, n - 1);
                for mask in 0u16..(1 << (n - 1)) {
                    let mut adj = base.clone();
                    adj.push(mask);
                    for (i, row) in adj.iter_mut().enumerate().take(n - 1) {
                        if mask >> i & 1 == 1 {
                            *row |= 1 << (n - 1);
                        }
                    }
                    next.insert(canonical_code(&adj));
                }
            }
            self.levels.push(next.into_iter().collect());
        }
        &self.levels[order]
    }

    /// Every graph of the given order, one per isomorphism class.
    pub fn all(&mut self, order: usize) -> Vec<Graph> {
        self.codes(order)
            .iter()
            .map(|&code| to_graph(code, order))
            .collect()
    }

    /// Every connected graph of the given order, one per isomorphism class.
    pub fn connected(&mut self, order: usize) -> Vec<Graph> {
        let mut out = self.all(order);
        out.retain(Graph::is_connected);
        out
    }
}

fn to_graph(code: u64, n: usize) -> Graph {
    let mut g = Graph::new(n);
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                g.add_edge(i, j).expect("ids are in range");
            }
        }
    }
    g
}

/// Connected graphs of order `1..=max_order`, in order of increasing size.
pub fn connected_graphs_up_to(max_order: usize) -> Vec<Graph> {
    let mut cat = GraphCatalog::new();
    (1..=max_order).flat_map(|n| cat.connected(n)).collect()
}
