//! Reconfiguration sequences and their replay-based verification.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};
use crate::instance::TokenSet;

/// A single token jump. Serializes as `[from, to]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[Vertex; 2]", into = "[Vertex; 2]")]
pub struct Move {
    pub from: Vertex,
    pub to: Vertex,
}

impl Move {
    pub fn new(from: Vertex, to: Vertex) -> Self {
        Move { from, to }
    }
}

impl From<[Vertex; 2]> for Move {
    fn from([from, to]: [Vertex; 2]) -> Self {
        Move { from, to }
    }
}

impl From<Move> for [Vertex; 2] {
    fn from(m: Move) -> Self {
        [m.from, m.to]
    }
}

impl From<(Vertex, Vertex)> for Move {
    fn from((from, to): (Vertex, Vertex)) -> Self {
        Move { from, to }
    }
}

/// Moves in application order. JSON form: `{"moves":[[from,to],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ReconfigSequence {
    pub moves: Vec<Move>,
}

impl ReconfigSequence {
    pub fn new(moves: Vec<Move>) -> Self {
        ReconfigSequence { moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Replays the moves from `start` without checking legality, returning
    /// every intermediate configuration (including `start`).
    pub fn configurations(&self, start: &TokenSet) -> Vec<BTreeSet<Vertex>> {
        let mut cur: BTreeSet<Vertex> = start.iter().collect();
        let mut out = vec![cur.clone()];
        for m in &self.moves {
            cur.remove(&m.from);
            cur.insert(m.to);
            out.push(cur.clone());
        }
        out
    }
}

impl<M: Into<Move>> FromIterator<M> for ReconfigSequence {
    fn from_iter<I: IntoIterator<Item = M>>(iter: I) -> Self {
        ReconfigSequence {
            moves: iter.into_iter().map(Into::into).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    MoveFromAbsentVertex,
    MoveToOccupiedVertex,
    /// The destination is not a vertex of the graph.
    UnknownVertex,
    IntermediateNotIndependent,
    WrongFinalSet,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::MoveFromAbsentVertex => "move-from-absent-vertex",
            ViolationKind::MoveToOccupiedVertex => "move-to-occupied-vertex",
            ViolationKind::UnknownVertex => "unknown-vertex",
            ViolationKind::IntermediateNotIndependent => "intermediate-not-independent",
            ViolationKind::WrongFinalSet => "wrong-final-set",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Index of the offending move; `moves.len()` for a wrong final set.
    pub index: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub violation: Option<Violation>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Replays `seq` from `start` and reports the first illegal step, if any.
///
/// `start` is assumed independent in `g`; every move must take a token off
/// an occupied vertex onto a free one without creating an adjacent pair,
/// and the last configuration must equal `target`.
pub fn verify_sequence(
    g: &Graph,
    start: &TokenSet,
    target: &TokenSet,
    seq: &ReconfigSequence,
) -> VerifyReport {
    let fail = |index, kind| VerifyReport {
        violation: Some(Violation { index, kind }),
    };
    let mut cur: BTreeSet<Vertex> = start.iter().collect();
    for (i, m) in seq.moves.iter().enumerate() {
        if !cur.contains(&m.from) {
            return fail(i, ViolationKind::MoveFromAbsentVertex);
        }
        if cur.contains(&m.to) {
            return fail(i, ViolationKind::MoveToOccupiedVertex);
        }
        if !g.contains(m.to) {
            return fail(i, ViolationKind::UnknownVertex);
        }
        cur.remove(&m.from);
        if cur.iter().any(|&w| g.has_edge(w, m.to)) {
            return fail(i, ViolationKind::IntermediateNotIndependent);
        }
        cur.insert(m.to);
    }
    if !cur.iter().copied().eq(target.iter()) {
        return fail(seq.len(), ViolationKind::WrongFinalSet);
    }
    VerifyReport { violation: None }
}
