//! Named instance families and the `key=value` spec language.
//!
//! ```text
//! family=grid,rows=4,cols=4,k=3,seed=7
//! family=cycle,n=4,start=0:2,target=1:3
//! family=k2m-gadget,k=2,m=25
//! family=random-planar,rows=3,cols=4,p=0.6,k=2,seed=11
//! ```
//!
//! Keys: `family`, `rows`, `cols`, `n`, `m`, `p`, `k`, `seed`, `start`,
//! `target` (ids joined by `:`), `mode`, `t`. Unset token sets are sampled
//! from the seed; `k` may be omitted when both sets are explicit.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::error::{GraphError, InstanceError};
use crate::graph::{Graph, Vertex};
use crate::instance::{Instance, Mode, TokenSet};
use crate::mis::find_independent_set_exact;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("bad family spec: {0}")]
    Spec(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

impl From<GraphError> for GenError {
    fn from(e: GraphError) -> Self {
        GenError::Instance(e.into())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Grid {
        rows: usize,
        cols: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// Shared token on a hub `u = 0` with `m` pendant-like neighbors.
    StarGadget {
        m: usize,
    },
    /// Two start tokens `0, 1` with `m` common neighbors.
    K2mGadget {
        m: usize,
    },
    /// `4k` isolated vertices next to a blocked core.
    BufferGadget,
    /// Random subgraph of a triangulated `rows × cols` grid.
    RandomPlanar {
        rows: usize,
        cols: usize,
        p: f64,
    },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Grid { .. } => "grid",
            Family::Cycle { .. } => "cycle",
            Family::Path { .. } => "path",
            Family::StarGadget { .. } => "star-gadget",
            Family::K2mGadget { .. } => "k2m-gadget",
            Family::BufferGadget => "buffer-gadget",
            Family::RandomPlanar { .. } => "random-planar",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub k: Option<usize>,
    pub seed: u64,
    pub start: Option<Vec<Vertex>>,
    pub target: Option<Vec<Vertex>>,
    pub mode: Mode,
    pub t: usize,
}

impl FamilySpec {
    pub fn new(family: Family, k: usize) -> Self {
        FamilySpec {
            family,
            k: Some(k),
            seed: 0,
            start: None,
            target: None,
            mode: Mode::Planar,
            t: 3,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_sets(mut self, start: Vec<Vertex>, target: Vec<Vertex>) -> Self {
        self.k = Some(start.len());
        self.start = Some(start);
        self.target = Some(target);
        self
    }

    fn k(&self) -> Result<usize, GenError> {
        self.k
            .or_else(|| self.start.as_ref().map(Vec::len))
            .or_else(|| self.target.as_ref().map(Vec::len))
            .ok_or_else(|| GenError::Spec("missing `k`".into()))
    }
}

fn parse_ids(key: &str, s: &str) -> Result<Vec<Vertex>, GenError> {
    s.split(':')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| GenError::Spec(format!("`{key}` expects ids joined by `:`, got `{s}`")))
        })
        .collect()
}

fn join_ids(ids: &[Vertex]) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(":")
}

impl FromStr for FamilySpec {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut kv = BTreeMap::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| GenError::Spec(format!("`{part}` is not key=value")))?;
            if kv.insert(key.trim(), value.trim()).is_some() {
                return Err(GenError::Spec(format!("`{key}` given twice")));
            }
        }
        let mut take = |key: &str| kv.remove(key);
        fn num<T: FromStr>(key: &str, v: Option<&str>) -> Result<Option<T>, GenError> {
            v.map(|v| {
                v.parse()
                    .map_err(|_| GenError::Spec(format!("bad value `{v}` for `{key}`")))
            })
            .transpose()
        }
        fn need<T>(key: &str, family: &str, v: Option<T>) -> Result<T, GenError> {
            v.ok_or_else(|| GenError::Spec(format!("{family} needs `{key}`")))
        }

        let name = take("family").ok_or_else(|| GenError::Spec("missing `family`".into()))?;
        let rows: Option<usize> = num("rows", take("rows"))?;
        let cols: Option<usize> = num("cols", take("cols"))?;
        let n: Option<usize> = num("n", take("n"))?;
        let m: Option<usize> = num("m", take("m"))?;
        let p: Option<f64> = num("p", take("p"))?;
        let k: Option<usize> = num("k", take("k"))?;
        let seed: Option<u64> = num("seed", take("seed"))?;
        let t: Option<usize> = num("t", take("t"))?;
        let mode = take("mode")
            .map(|v| v.parse::<Mode>().map_err(GenError::Spec))
            .transpose()?
            .unwrap_or_default();
        let start = take("start").map(|v| parse_ids("start", v)).transpose()?;
        let target = take("target").map(|v| parse_ids("target", v)).transpose()?;
        if let Some(key) = kv.keys().next() {
            return Err(GenError::Spec(format!("unknown key `{key}`")));
        }

        let unused = |key: &str, present: bool| {
            if present {
                Err(GenError::Spec(format!("`{key}` does not apply to {name}")))
            } else {
                Ok(())
            }
        };
        let family = match name {
            "grid" | "random-planar" => {
                unused("n", n.is_some())?;
                unused("m", m.is_some())?;
                let rows = need("rows", name, rows)?;
                let cols = need("cols", name, cols)?;
                if name == "grid" {
                    unused("p", p.is_some())?;
                    Family::Grid { rows, cols }
                } else {
                    let p = p.unwrap_or(0.6);
                    if !(0.0..=1.0).contains(&p) {
                        return Err(GenError::Spec(format!("p = {p} outside [0, 1]")));
                    }
                    Family::RandomPlanar { rows, cols, p }
                }
            }
            "cycle" | "path" => {
                for (key, present) in [
                    ("rows", rows.is_some()),
                    ("cols", cols.is_some()),
                    ("m", m.is_some()),
                    ("p", p.is_some()),
                ] {
                    unused(key, present)?;
                }
                let n = need("n", name, n)?;
                if name == "cycle" {
                    if n < 3 {
                        return Err(GenError::Spec(format!("a cycle needs n >= 3, got {n}")));
                    }
                    Family::Cycle { n }
                } else {
                    Family::Path { n }
                }
            }
            "star-gadget" | "k2m-gadget" | "buffer-gadget" => {
                for (key, present) in [
                    ("rows", rows.is_some()),
                    ("cols", cols.is_some()),
                    ("n", n.is_some()),
                    ("p", p.is_some()),
                ] {
                    unused(key, present)?;
                }
                let k = need("k", name, k)?;
                let m = m.unwrap_or(10 * k + 5);
                match name {
                    "star-gadget" => Family::StarGadget { m },
                    "k2m-gadget" => Family::K2mGadget { m },
                    _ => {
                        unused("m", m != 10 * k + 5)?;
                        Family::BufferGadget
                    }
                }
            }
            other => return Err(GenError::Spec(format!("unknown family `{other}`"))),
        };
        Ok(FamilySpec {
            family,
            k,
            seed: seed.unwrap_or(0),
            start,
            target,
            mode,
            t: t.unwrap_or(3),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family={}", self.family.name())?;
        match &self.family {
            Family::Grid { rows, cols } => write!(f, ",rows={rows},cols={cols}")?,
            Family::Cycle { n } | Family::Path { n } => write!(f, ",n={n}")?,
            Family::StarGadget { m } | Family::K2mGadget { m } => write!(f, ",m={m}")?,
            Family::BufferGadget => {}
            Family::RandomPlanar { rows, cols, p } => write!(f, ",rows={rows},cols={cols},p={p}")?,
        }
        if let Some(k) = self.k {
            write!(f, ",k={k}")?;
        }
        write!(f, ",seed={}", self.seed)?;
        if let Some(s) = &self.start {
            write!(f, ",start={}", join_ids(s))?;
        }
        if let Some(s) = &self.target {
            write!(f, ",target={}", join_ids(s))?;
        }
        if self.mode != Mode::Planar || self.t != 3 {
            write!(f, ",mode={},t={}", self.mode, self.t)?;
        }
        Ok(())
    }
}

fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut g = Graph::new(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                g.add_edge(id(r, c), id(r, c + 1)).expect("in range");
            }
            if r + 1 < rows {
                g.add_edge(id(r, c), id(r + 1, c)).expect("in range");
            }
        }
    }
    g
}

/// Grid plus one diagonal per cell; each edge kept with probability `p`.
fn random_planar(rows: usize, cols: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut g = Graph::new(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let mut nbrs = Vec::with_capacity(3);
            if c + 1 < cols {
                nbrs.push(id(r, c + 1));
            }
            if r + 1 < rows {
                nbrs.push(id(r + 1, c));
            }
            if c + 1 < cols && r + 1 < rows {
                nbrs.push(id(r + 1, c + 1));
            }
            for w in nbrs {
                if rng.gen_bool(p) {
                    g.add_edge(id(r, c), w).expect("in range");
                }
            }
        }
    }
    g
}

/// A uniformly shuffled greedy independent set of size `k`, retried a few
/// times; falls back to the exact finder so any feasible `k` succeeds.
fn sample_independent_set(g: &Graph, k: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Vertex>, GenError> {
    let Some(exact) = find_independent_set_exact(g, k) else {
        return Err(GenError::Infeasible(format!(
            "no independent set of size {k} in a graph of order {}",
            g.order()
        )));
    };
    let mut order: Vec<Vertex> = g.vertices().collect();
    for _ in 0..32 {
        order.shuffle(rng);
        let mut chosen: Vec<Vertex> = Vec::with_capacity(k);
        for &v in &order {
            if chosen.len() == k {
                break;
            }
            if chosen.iter().all(|&w| !g.has_edge(v, w)) {
                chosen.push(v);
            }
        }
        if chosen.len() == k {
            return Ok(chosen);
        }
    }
    Ok(exact)
}

/// Builds the instance a spec describes and checks it against its mode.
pub fn generate(spec: &FamilySpec) -> Result<Instance, GenError> {
    let k = spec.k()?;
    if k == 0 {
        return Err(GenError::Spec("k must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let range = |from: usize, to: usize| (from..to).collect::<Vec<_>>();

    let (graph, fixed) = match spec.family {
        Family::Grid { rows, cols } => (grid(rows, cols), None),
        Family::Cycle { n } => (Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?, None),
        Family::Path { n } => (Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?, None),
        Family::RandomPlanar { rows, cols, p } => (random_planar(rows, cols, p, &mut rng), None),
        Family::StarGadget { m } => {
            // start {u, p_1..p_{k-1}}, target {u, q_1..q_{k-1}}
            let first_c = 2 * k - 1;
            let g = Graph::from_edges(first_c + m, (first_c..first_c + m).map(|c| (0, c)))?;
            let mut target = vec![0];
            target.extend(k..2 * k - 1);
            (g, Some((range(0, k), target)))
        }
        Family::K2mGadget { m } => {
            if k < 2 {
                return Err(GenError::Infeasible("k2m-gadget needs k >= 2".into()));
            }
            let first_c = 2 * k;
            let g = Graph::from_edges(first_c + m, (first_c..first_c + m).flat_map(|c| [(0, c), (1, c)]))?;
            (g, Some((range(0, k), range(k, 2 * k))))
        }
        Family::BufferGadget => {
            let g = Graph::from_edges(6 * k, [(0, k)])?;
            (g, Some((range(0, k), range(k, 2 * k))))
        }
    };

    let (mut start, mut target) = match fixed {
        Some((s, t)) => (Some(s), Some(t)),
        None => (None, None),
    };
    if let Some(s) = &spec.start {
        start = Some(s.clone());
    }
    if let Some(t) = &spec.target {
        target = Some(t.clone());
    }
    let start = match start {
        Some(s) => s,
        None => sample_independent_set(&graph, k, &mut rng)?,
    };
    let target = match target {
        Some(t) => t,
        None => sample_independent_set(&graph, k, &mut rng)?,
    };
    if start.len() != k || target.len() != k {
        return Err(GenError::Spec(format!(
            "k = {k} but the token sets have sizes {} and {}",
            start.len(),
            target.len()
        )));
    }
    let start = TokenSet::new(start)?;
    let target = TokenSet::new(target)?;
    Ok(Instance::new_checked(graph, start, target, spec.t, spec.mode)?)
}
