//! Undirected simple graphs over stable integer vertex ids.
//!
//! Ids are dense `0..capacity` at construction, but vertices can be deleted
//! (kernelization does this) without renumbering the survivors, so a
//! sequence computed on a kernel is valid verbatim on the original graph.

use std::collections::BTreeSet;

use crate::error::GraphError;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    /// Sorted neighbor lists, indexed by vertex id. Empty for dead ids.
    adj: Vec<Vec<Vertex>>,
    live: Vec<bool>,
    order: usize,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on vertices `0..n`.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            live: vec![true; n],
            order: n,
            edge_count: 0,
        }
    }

    /// Graph on `0..n` with the given edges. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph whose live vertices are exactly `ids`; other ids below the
    /// largest one are dead.
    pub fn with_vertex_ids<V, E>(ids: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let ids: BTreeSet<Vertex> = ids.into_iter().collect();
        let cap = ids.iter().next_back().map_or(0, |&v| v + 1);
        let mut g = Graph {
            adj: vec![Vec::new(); cap],
            live: vec![false; cap],
            order: ids.len(),
            edge_count: 0,
        };
        for &v in &ids {
            g.live[v] = true;
        }
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `{u, v}`. Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(true)
            }
        }
    }

    /// Deletes `v` together with all incident edges.
    pub fn remove_vertex(&mut self, v: Vertex) -> Result<(), GraphError> {
        self.check(v)?;
        let nbrs = std::mem::take(&mut self.adj[v]);
        for &w in &nbrs {
            if let Ok(pos) = self.adj[w].binary_search(&v) {
                self.adj[w].remove(pos);
            }
        }
        self.edge_count -= nbrs.len();
        self.live[v] = false;
        self.order -= 1;
        Ok(())
    }

    /// One past the largest id ever allocated.
    pub fn capacity(&self) -> usize {
        self.adj.len()
    }

    /// Number of live vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// True when the live ids are exactly `0..capacity`.
    pub fn is_dense(&self) -> bool {
        self.order == self.adj.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.live.get(v).copied().unwrap_or(false)
    }

    pub fn check(&self, v: Vertex) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Live vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.adj.len()).filter(move |&v| self.live[v])
    }

    /// Sorted neighbor list of `v` (empty for unknown ids).
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.adj.get(v).map_or(&[], |n| n.as_slice())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent(&self, s: &[Vertex]) -> Result<bool, GraphError> {
        for &v in s {
            self.check(v)?;
        }
        Ok(s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v))))
    }

    /// `N(S) = ⋃ N(v)`; may intersect `s`.
    pub fn open_neighborhood(&self, s: &[Vertex]) -> Result<BTreeSet<Vertex>, GraphError> {
        let mut out = BTreeSet::new();
        for &v in s {
            self.check(v)?;
            out.extend(self.adj[v].iter().copied());
        }
        Ok(out)
    }

    /// `N[S] = ⋃ (N(v) ∪ {v})`.
    pub fn closed_neighborhood(&self, s: &[Vertex]) -> Result<BTreeSet<Vertex>, GraphError> {
        let mut out = self.open_neighborhood(s)?;
        out.extend(s.iter().copied());
        Ok(out)
    }

    /// Subgraph induced by `keep`, with ids preserved.
    pub fn induced(&self, keep: &[Vertex]) -> Result<Graph, GraphError> {
        let mut mask = vec![false; self.adj.len()];
        for &v in keep {
            self.check(v)?;
            mask[v] = true;
        }
        let mut g = Graph {
            adj: vec![Vec::new(); self.adj.len()],
            live: mask.clone(),
            order: 0,
            edge_count: 0,
        };
        for v in 0..self.adj.len() {
            if !mask[v] {
                continue;
            }
            g.order += 1;
            g.adj[v] = self.adj[v].iter().copied().filter(|&w| mask[w]).collect();
            g.edge_count += g.adj[v].len();
        }
        g.edge_count /= 2;
        Ok(g)
    }

    /// True when the live vertices form one connected component.
    pub fn is_connected(&self) -> bool {
        let Some(root) = self.vertices().next() else {
            return true;
        };
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![root];
        seen[root] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.order
    }
}
