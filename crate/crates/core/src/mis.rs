//! Exact search for an independent set of a prescribed size.
//!
//! Branch and bound over a bitset representation: at every node the
//! minimum-degree candidate `v` is chosen and the search branches on which
//! vertex of `N[v]` joins the set (some vertex of `N[v]` lies in every
//! maximal independent set). A greedy pass supplies the lower bound and a
//! greedy clique cover the upper bound.
//!
//! The solver only calls this on vertex sets whose size is bounded by a
//! function of `k`, which keeps the exponential worst case fixed-parameter.

use crate::graph::{Graph, Vertex};

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn intersect_count(&self, other: &Bits) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn minus(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + tz)
            })
        })
    }
}

struct Search {
    /// Closed neighborhoods in local indices.
    closed: Vec<Bits>,
}

impl Search {
    fn min_degree(&self, cand: &Bits) -> Option<usize> {
        cand.iter().min_by_key(|&v| self.closed[v].intersect_count(cand))
    }

    fn greedy(&self, mut cand: Bits, out: &mut Vec<usize>, want: usize) {
        while out.len() < want {
            let Some(v) = self.min_degree(&cand) else { break };
            out.push(v);
            cand = cand.minus(&self.closed[v]);
        }
    }

    /// Number of cliques in a greedy clique cover of `cand`; an upper bound
    /// on the independence number of `G[cand]`.
    fn clique_cover(&self, cand: &Bits) -> usize {
        let mut cliques: Vec<Bits> = Vec::new();
        for v in cand.iter() {
            // a clique's common closed neighborhood is where it can grow
            match cliques.iter_mut().find(|c| c.0[v / 64] >> (v % 64) & 1 == 1) {
                Some(c) => *c = c.and(&self.closed[v]),
                None => cliques.push(self.closed[v].and(cand)),
            }
        }
        cliques.len()
    }

    fn run(&self, cand: Bits, chosen: &mut Vec<usize>, want: usize) -> bool {
        if chosen.len() == want {
            return true;
        }
        let need = want - chosen.len();
        if cand.count() < need || self.clique_cover(&cand) < need {
            return false;
        }
        let mark = chosen.len();
        self.greedy(cand.clone(), chosen, want);
        if chosen.len() == want {
            return true;
        }
        chosen.truncate(mark);

        let v = self.min_degree(&cand).expect("candidates are non-empty");
        let mut rest = cand;
        for w in self.closed[v].and(&rest).iter().collect::<Vec<_>>() {
            chosen.push(w);
            if self.run(rest.minus(&self.closed[w]), chosen, want) {
                return true;
            }
            chosen.pop();
            // every set containing w has been ruled out
            rest.remove(w);
            if rest.count() < need {
                return false;
            }
        }
        false
    }
}

/// An independent set of exactly `size` vertices of `g`, if one exists.
/// The result is sorted; the search is deterministic.
pub fn find_independent_set_exact(g: &Graph, size: usize) -> Option<Vec<Vertex>> {
    let vs: Vec<Vertex> = g.vertices().collect();
    find_independent_set_among(g, &vs, size)
}

/// Like [`find_independent_set_exact`], restricted to `G[among]`.
/// Ids in `among` that are not live vertices are ignored.
pub fn find_independent_set_among(g: &Graph, among: &[Vertex], size: usize) -> Option<Vec<Vertex>> {
    let mut vs: Vec<Vertex> = among.iter().copied().filter(|&v| g.contains(v)).collect();
    vs.sort_unstable();
    vs.dedup();
    if size == 0 {
        return Some(Vec::new());
    }
    if vs.len() < size {
        return None;
    }
    let n = vs.len();
    let mut local = vec![usize::MAX; g.capacity()];
    for (i, &v) in vs.iter().enumerate() {
        local[v] = i;
    }
    let closed = vs
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut b = Bits::empty(n);
            b.insert(i);
            for &w in g.neighbors(v) {
                if local[w] != usize::MAX {
                    b.insert(local[w]);
                }
            }
            b
        })
        .collect();
    let search = Search { closed };
    let mut chosen = Vec::with_capacity(size);
    if search.run(Bits::full(n), &mut chosen, size) {
        let mut out: Vec<Vertex> = chosen.into_iter().map(|i| vs[i]).collect();
        out.sort_unstable();
        Some(out)
    } else {
        None
    }
}
