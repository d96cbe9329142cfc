use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bipartite::find_k3t_witness;
use crate::error::{GraphError, InstanceError};
use crate::graph::{Graph, Vertex};
use crate::sequence::{verify_sequence, ReconfigSequence, VerifyReport};

/// Which graph class the solver assumes, and hence which thresholds it uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// K₃,₃-forbidden inputs (every planar graph), linear thresholds.
    #[default]
    Planar,
    /// K₃,ₜ-forbidden inputs, Ramsey thresholds.
    General,
}

impl Mode {
    /// Size of the right side of the forbidden complete bipartite graph.
    pub fn forbidden_t(self, t: usize) -> usize {
        match self {
            Mode::Planar => 3,
            Mode::General => t,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Planar => "planar",
            Mode::General => "general",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "planar" => Ok(Mode::Planar),
            "general" | "k3t-general" => Ok(Mode::General),
            other => Err(format!("unknown mode `{other}` (expected planar or general)")),
        }
    }
}

/// A configuration: a canonical sorted set of token positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct TokenSet(Vec<Vertex>);

impl TokenSet {
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self, GraphError> {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0]));
        }
        Ok(TokenSet(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    /// Members not in `other`, ascending.
    pub fn difference<'a>(&'a self, other: &'a TokenSet) -> impl Iterator<Item = Vertex> + 'a {
        self.iter().filter(move |&v| !other.contains(v))
    }

    pub fn intersection<'a>(&'a self, other: &'a TokenSet) -> impl Iterator<Item = Vertex> + 'a {
        self.iter().filter(move |&v| other.contains(v))
    }
}

impl TryFrom<Vec<Vertex>> for TokenSet {
    type Error = GraphError;

    fn try_from(v: Vec<Vertex>) -> Result<Self, Self::Error> {
        TokenSet::new(v)
    }
}

impl From<TokenSet> for Vec<Vertex> {
    fn from(t: TokenSet) -> Self {
        t.0
    }
}

impl fmt::Display for TokenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A Token Jumping instance: a graph with start and target configurations.
///
/// Construction checks sizes and independence. K₃,ₜ-forbiddance is a
/// separate, more expensive check ([`Instance::check_forbiddance`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    start: TokenSet,
    target: TokenSet,
    t: usize,
    mode: Mode,
}

impl Instance {
    pub fn new(
        graph: Graph,
        start: TokenSet,
        target: TokenSet,
        t: usize,
        mode: Mode,
    ) -> Result<Self, InstanceError> {
        validate_pair(&graph, &start, &target)?;
        if t < 3 {
            return Err(InstanceError::InvalidT(t));
        }
        Ok(Instance {
            graph,
            start,
            target,
            t,
            mode,
        })
    }

    /// [`Instance::new`] followed by [`Instance::check_forbiddance`].
    pub fn new_checked(
        graph: Graph,
        start: TokenSet,
        target: TokenSet,
        t: usize,
        mode: Mode,
    ) -> Result<Self, InstanceError> {
        let inst = Instance::new(graph, start, target, t, mode)?;
        inst.check_forbiddance()?;
        Ok(inst)
    }

    /// Fails with a witness if the graph contains K₃,₃ (planar mode) or
    /// K₃,ₜ (general mode).
    pub fn check_forbiddance(&self) -> Result<(), InstanceError> {
        let t = self.mode.forbidden_t(self.t);
        match find_k3t_witness(&self.graph, t) {
            None => Ok(()),
            Some(witness) => Err(InstanceError::NotForbidden {
                mode: self.mode,
                t,
                witness,
            }),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn start(&self) -> &TokenSet {
        &self.start
    }

    pub fn target(&self) -> &TokenSet {
        &self.target
    }

    /// Number of tokens.
    pub fn k(&self) -> usize {
        self.start.len()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_t(mut self, t: usize) -> Result<Self, InstanceError> {
        if t < 3 {
            return Err(InstanceError::InvalidT(t));
        }
        self.t = t;
        Ok(self)
    }

    /// Same configurations on a different host graph (e.g. a kernel).
    pub fn with_graph(&self, graph: Graph) -> Result<Self, InstanceError> {
        Instance::new(graph, self.start.clone(), self.target.clone(), self.t, self.mode)
    }

    /// Swaps start and target.
    pub fn reversed(&self) -> Self {
        Instance {
            graph: self.graph.clone(),
            start: self.target.clone(),
            target: self.start.clone(),
            t: self.t,
            mode: self.mode,
        }
    }

    pub fn verify(&self, seq: &ReconfigSequence) -> VerifyReport {
        verify_sequence(&self.graph, &self.start, &self.target, seq)
    }
}

pub(crate) fn validate_pair(graph: &Graph, start: &TokenSet, target: &TokenSet) -> Result<(), InstanceError> {
    if start.is_empty() {
        return Err(InstanceError::EmptyTokenSet);
    }
    if start.len() != target.len() {
        return Err(InstanceError::SizeMismatch {
            start: start.len(),
            target: target.len(),
        });
    }
    if !graph.is_independent(start.as_slice())? {
        return Err(InstanceError::StartNotIndependent);
    }
    if !graph.is_independent(target.as_slice())? {
        return Err(InstanceError::TargetNotIndependent);
    }
    Ok(())
}
