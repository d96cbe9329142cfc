//! Fixed-parameter Token Jumping for K₃,ₜ-forbidden graphs.
//!
//! With `core = I₀ ∪ Iᵣ`, the vertices split into the core, the fringe
//! `A = N(core) ∖ core`, and the remote part `R = V ∖ N[core]`.
//!
//! 1. If `|R| ≥ α`, an independent `k`-set inside `R` is a buffer that no
//!    token can conflict with: route every token through it. YES.
//! 2. Otherwise, fringe vertices are grouped by their neighbor set inside
//!    `V ∖ A`. A class of at least `β` members whose key holds at most one
//!    start and at most one target vertex yields a buffer as well. YES.
//! 3. Any other class larger than `β` is cut down to its `β` smallest ids;
//!    this never changes the answer.
//! 4. The remaining kernel has order bounded by a function of `k`, and is
//!    decided by [`crate::oracle`].
//!
//! The answer NO is produced only in step 4. Every YES comes with a
//! sequence that has been replayed against the original instance.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ArithmeticError, SolveError};
use crate::graph::{Graph, Vertex};
use crate::instance::{Instance, Mode, TokenSet};
use crate::mis::find_independent_set_among;
use crate::oracle::{Oracle, DEFAULT_NODE_BUDGET};
use crate::ramsey::{binomial, ramsey_upper};
use crate::sequence::{Move, ReconfigSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    /// Remote-part size that guarantees a `k`-buffer.
    pub alpha: u128,
    /// Class size that guarantees a buffer and bounds the shrunk classes.
    pub beta: u128,
    pub mode: Mode,
    pub t: usize,
}

impl Thresholds {
    /// Size of the independent set requested from a large class.
    pub fn class_buffer_size(&self, k: usize) -> usize {
        match self.mode {
            Mode::Planar => 2 * k,
            Mode::General => (2 * self.t + 1) * k,
        }
    }
}

/// Planar mode: `α = 4k`, `β = 10k`. General mode:
/// `α = R(k, t+3)`, `β = R((2t+1)k, t+3)` with the binomial Ramsey bound.
pub fn compute_thresholds(k: usize, mode: Mode, t: usize) -> Result<Thresholds, ArithmeticError> {
    if k == 0 {
        return Err(ArithmeticError::InvalidArgument("k must be positive".into()));
    }
    if t < 3 {
        return Err(ArithmeticError::InvalidArgument(format!(
            "t must be at least 3, got {t}"
        )));
    }
    let k = k as u128;
    let (alpha, beta) = match mode {
        Mode::Planar => (4 * k, 10 * k),
        Mode::General => {
            let t = t as u128;
            let clique = t + 3;
            let big = (2 * t + 1)
                .checked_mul(k)
                .ok_or(ArithmeticError::Overflow("class buffer size"))?;
            (ramsey_upper(k, clique)?, ramsey_upper(big, clique)?)
        }
    };
    Ok(Thresholds { alpha, beta, mode, t })
}

/// `core = I₀ ∪ Iᵣ`, `fringe = N(core) ∖ core`, `remote = V ∖ N[core]`,
/// each sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub core: Vec<Vertex>,
    pub fringe: Vec<Vertex>,
    pub remote: Vec<Vertex>,
}

impl Partition {
    pub fn new(g: &Graph, start: &TokenSet, target: &TokenSet) -> Self {
        let mut label = vec![Region::Remote; g.capacity()];
        for v in start.iter().chain(target.iter()) {
            label[v] = Region::Core;
        }
        for v in start.iter().chain(target.iter()) {
            for &w in g.neighbors(v) {
                if label[w] == Region::Remote {
                    label[w] = Region::Fringe;
                }
            }
        }
        let mut part = Partition {
            core: Vec::new(),
            fringe: Vec::new(),
            remote: Vec::new(),
        };
        for v in g.vertices() {
            match label[v] {
                Region::Core => part.core.push(v),
                Region::Fringe => part.fringe.push(v),
                Region::Remote => part.remote.push(v),
            }
        }
        part
    }

    /// `V ∖ A` as a membership mask over ids.
    fn outside_fringe_mask(&self, cap: usize) -> Vec<bool> {
        let mut mask = vec![false; cap];
        for &v in self.core.iter().chain(&self.remote) {
            mask[v] = true;
        }
        mask
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Region {
    Core,
    Fringe,
    Remote,
}

pub fn compute_partition(inst: &Instance) -> Partition {
    Partition::new(inst.graph(), inst.start(), inst.target())
}

/// Fringe vertices sharing one neighbor set `key` inside `V ∖ A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodClass {
    pub key: Vec<Vertex>,
    pub members: Vec<Vertex>,
}

impl NeighborhoodClass {
    fn key_hits(&self, set: &TokenSet) -> Vec<Vertex> {
        self.key.iter().copied().filter(|&v| set.contains(v)).collect()
    }

    /// At most one key vertex in the start set and at most one in the target.
    pub fn admits_buffer(&self, start: &TokenSet, target: &TokenSet) -> bool {
        self.key_hits(start).len() <= 1 && self.key_hits(target).len() <= 1
    }
}

/// Groups the fringe by neighbor sets restricted to `V ∖ A`, sorted by key.
pub fn neighborhood_classes(g: &Graph, part: &Partition) -> Vec<NeighborhoodClass> {
    let outside = part.outside_fringe_mask(g.capacity());
    let mut groups: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
    for &v in &part.fringe {
        let key: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| outside[w]).collect();
        groups.entry(key).or_default().push(v);
    }
    groups
        .into_iter()
        .map(|(key, members)| NeighborhoodClass { key, members })
        .collect()
}

fn as_count(x: u128) -> usize {
    usize::try_from(x).unwrap_or(usize::MAX)
}

/// A `k`-buffer inside the remote part, when `|remote| ≥ α`.
///
/// The search runs on the `α` smallest remote ids, which is where the
/// threshold guarantees a solution for K₃,ₜ-forbidden (planar) inputs.
pub fn step1_check(part: &Partition, th: &Thresholds, g: &Graph, k: usize) -> Option<Vec<Vertex>> {
    if (part.remote.len() as u128) < th.alpha {
        return None;
    }
    let window = &part.remote[..as_count(th.alpha).min(part.remote.len())];
    find_independent_set_among(g, window, k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassBuffer {
    pub buffer: Vec<Vertex>,
    /// The key vertex in the start set, if any.
    pub w0: Option<Vertex>,
    /// The key vertex in the target set, if any.
    pub wr: Option<Vertex>,
}

/// A buffer inside a class of at least `β` members whose key admits one.
pub fn step2_check(cls: &NeighborhoodClass, th: &Thresholds, inst: &Instance) -> Option<ClassBuffer> {
    if (cls.members.len() as u128) < th.beta || !cls.admits_buffer(inst.start(), inst.target()) {
        return None;
    }
    let window = &cls.members[..as_count(th.beta).min(cls.members.len())];
    let buffer = find_independent_set_among(inst.graph(), window, th.class_buffer_size(inst.k()))?;
    Some(ClassBuffer {
        buffer,
        w0: cls.key_hits(inst.start()).first().copied(),
        wr: cls.key_hits(inst.target()).first().copied(),
    })
}

/// Routes every token that has to move through `buffer`.
///
/// Tokens on vertices shared by start and target other than `w0`/`wr`
/// stay in place. The token on `w0` (if any) moves first, onto the
/// smallest buffer vertex `w'`; the others follow onto the next buffer
/// vertices. The buffer is then emptied onto the target, with `w'` going
/// last onto `wr` when `wr` is given. Length is at most `2k`.
pub fn build_buffer_sequence(
    g: &Graph,
    start: &TokenSet,
    target: &TokenSet,
    buffer: &[Vertex],
    w0: Option<Vertex>,
    wr: Option<Vertex>,
) -> Result<ReconfigSequence, SolveError> {
    let contract = |msg: String| Err(SolveError::Contract(msg));
    if start == target {
        return Ok(ReconfigSequence::default());
    }
    let mut buffer = buffer.to_vec();
    buffer.sort_unstable();
    buffer.dedup();
    if buffer.len() < start.len() {
        return contract(format!(
            "buffer has {} vertices, need {}",
            buffer.len(),
            start.len()
        ));
    }
    if !g
        .is_independent(&buffer)
        .map_err(|e| SolveError::Contract(e.to_string()))?
    {
        return contract("buffer is not independent".into());
    }
    if let Some(&b) = buffer.iter().find(|&&b| start.contains(b) || target.contains(b)) {
        return contract(format!("buffer vertex {b} holds a start or target token"));
    }
    if w0.is_some_and(|w| !start.contains(w)) || wr.is_some_and(|w| !target.contains(w)) {
        return contract("w0 must be a start vertex and wr a target vertex".into());
    }
    let touches_buffer = |v: Vertex| buffer.iter().any(|&b| g.has_edge(v, b));
    for (side, set, skip) in [("start", start, w0), ("target", target, wr)] {
        if let Some(v) = set.iter().find(|&v| Some(v) != skip && touches_buffer(v)) {
            return contract(format!("{side} vertex {v} is adjacent to the buffer"));
        }
    }

    let keyed = |v: Vertex| Some(v) == w0 || Some(v) == wr;
    let fixed = |v: Vertex| start.contains(v) && target.contains(v) && !keyed(v);
    let mut leaving: Vec<Vertex> = start.iter().filter(|&v| !fixed(v)).collect();
    if let Some(w) = w0 {
        leaving.retain(|&v| v != w);
        leaving.insert(0, w);
    }
    let mut arriving: Vec<Vertex> = target.iter().filter(|&v| !fixed(v)).collect();
    if let Some(w) = wr {
        arriving.retain(|&v| v != w);
        arriving.push(w);
    }
    let m = leaving.len();
    debug_assert_eq!(m, arriving.len());
    let slots = &buffer[..m];

    let mut moves: Vec<Move> = leaving
        .iter()
        .zip(slots)
        .map(|(&u, &b)| Move::new(u, b))
        .collect();
    if wr.is_some() {
        // slots[0] is w' and lands on wr last
        moves.extend(
            slots[1..]
                .iter()
                .zip(&arriving[..m - 1])
                .map(|(&b, &v)| Move::new(b, v)),
        );
        moves.push(Move::new(slots[0], arriving[m - 1]));
    } else {
        moves.extend(slots.iter().zip(&arriving).map(|(&b, &v)| Move::new(b, v)));
    }
    Ok(ReconfigSequence::new(moves))
}

/// Deletes the members of an oversized class beyond the `β` smallest ids.
/// Returns the deleted vertices.
pub fn shrink_class(
    g: &mut Graph,
    cls: &NeighborhoodClass,
    th: &Thresholds,
    inst: &Instance,
) -> Result<Vec<Vertex>, SolveError> {
    if (cls.members.len() as u128) <= th.beta {
        return Err(SolveError::Contract(format!(
            "class of {} members is not larger than beta = {}",
            cls.members.len(),
            th.beta
        )));
    }
    if cls.admits_buffer(inst.start(), inst.target()) {
        return Err(SolveError::Contract(
            "class admits a buffer and must not be shrunk".into(),
        ));
    }
    let mut members = cls.members.clone();
    members.sort_unstable();
    let doomed = members.split_off(as_count(th.beta));
    for &v in &doomed {
        g.remove_vertex(v)
            .map_err(|e| SolveError::Contract(format!("cannot delete class member: {e}")))?;
    }
    Ok(doomed)
}

/// Order bound for the kernel.
///
/// Planar mode: `2^(6k+1) + 180k³`. General mode:
/// `s + β(s + C(s,2)) + (t−1)·2^s` with `s = 2k + α`, which counts `V ∖ A`,
/// classes with keys of size one or two (at most `β` members each), and
/// classes with larger keys (at most `t − 1` members each).
pub fn kernel_size_bound(k: usize, mode: Mode, t: usize) -> Result<u128, ArithmeticError> {
    let overflow = || ArithmeticError::Overflow("kernel size bound");
    let kk = k as u128;
    match mode {
        Mode::Planar => {
            let exp = 6 * kk + 1;
            let pow = u32::try_from(exp)
                .ok()
                .and_then(|e| 2u128.checked_pow(e))
                .ok_or_else(overflow)?;
            let cube = kk
                .checked_pow(3)
                .and_then(|c| c.checked_mul(180))
                .ok_or_else(overflow)?;
            pow.checked_add(cube).ok_or_else(overflow)
        }
        Mode::General => {
            let th = compute_thresholds(k, mode, t)?;
            let s = (2 * kk).checked_add(th.alpha).ok_or_else(overflow)?;
            let keyed = s.checked_add(binomial(s, 2)?).ok_or_else(overflow)?;
            let small_keys = th.beta.checked_mul(keyed).ok_or_else(overflow)?;
            let pow = u32::try_from(s)
                .ok()
                .and_then(|e| 2u128.checked_pow(e))
                .ok_or_else(overflow)?;
            let large_keys = (t as u128 - 1).checked_mul(pow).ok_or_else(overflow)?;
            s.checked_add(small_keys)
                .and_then(|x| x.checked_add(large_keys))
                .ok_or_else(overflow)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DecidedAt {
    /// Start equals target.
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "step-1")]
    Step1,
    #[serde(rename = "step-2")]
    Step2,
    #[serde(rename = "step-4")]
    Step4,
}

impl fmt::Display for DecidedAt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecidedAt::Trivial => "trivial",
            DecidedAt::Step1 => "step-1",
            DecidedAt::Step2 => "step-2",
            DecidedAt::Step4 => "step-4",
        })
    }
}

/// What steps 1–3 produced.
#[derive(Debug, Clone)]
pub enum Reduction {
    /// A buffer was found; the instance is a YES.
    Buffer {
        at: DecidedAt,
        buffer: Vec<Vertex>,
        w0: Option<Vertex>,
        wr: Option<Vertex>,
        sequence: ReconfigSequence,
    },
    /// No buffer; the graph was shrunk to a kernel.
    Kernel {
        graph: Graph,
        deleted: Vec<Vertex>,
        shrunk_classes: usize,
    },
}

#[derive(Debug, Clone)]
pub struct Kernelization {
    pub thresholds: Thresholds,
    pub partition: Partition,
    pub classes: Vec<NeighborhoodClass>,
    pub reduction: Reduction,
}

/// Runs steps 1–3: buffer detection and class shrinking.
pub fn kernelize(inst: &Instance) -> Result<Kernelization, SolveError> {
    let k = inst.k();
    let th = compute_thresholds(k, inst.mode(), inst.t())?;
    let part = compute_partition(inst);
    let classes = neighborhood_classes(inst.graph(), &part);
    let g = inst.graph();
    let done = |at, buffer: Vec<Vertex>, w0, wr, sequence| Reduction::Buffer {
        at,
        buffer,
        w0,
        wr,
        sequence,
    };

    if let Some(buffer) = step1_check(&part, &th, g, k) {
        let seq = build_buffer_sequence(g, inst.start(), inst.target(), &buffer, None, None)?;
        return Ok(Kernelization {
            thresholds: th,
            partition: part,
            classes,
            reduction: done(DecidedAt::Step1, buffer, None, None, seq),
        });
    }

    let mut kernel = g.clone();
    let mut deleted = Vec::new();
    let mut shrunk = 0;
    for cls in &classes {
        if (cls.members.len() as u128) < th.beta {
            continue;
        }
        if cls.key.len() > 2 {
            return Err(SolveError::Invariant(format!(
                "class with key {:?} has {} >= beta members; the graph contains K3,{}",
                cls.key,
                cls.members.len(),
                inst.mode().forbidden_t(inst.t())
            )));
        }
        if cls.admits_buffer(inst.start(), inst.target()) {
            if let Some(cb) = step2_check(cls, &th, inst) {
                let seq =
                    build_buffer_sequence(&kernel, inst.start(), inst.target(), &cb.buffer, cb.w0, cb.wr)?;
                return Ok(Kernelization {
                    thresholds: th,
                    partition: part,
                    classes,
                    reduction: done(DecidedAt::Step2, cb.buffer, cb.w0, cb.wr, seq),
                });
            }
            // no buffer found (possible only without the forbiddance
            // guarantee); the class is kept whole
            continue;
        }
        if cls.key.len() != 2 {
            return Err(SolveError::Invariant(format!(
                "class key {:?} refuses a buffer but does not have two vertices",
                cls.key
            )));
        }
        if (cls.members.len() as u128) > th.beta {
            deleted.extend(shrink_class(&mut kernel, cls, &th, inst)?);
            shrunk += 1;
        }
    }
    deleted.sort_unstable();
    Ok(Kernelization {
        thresholds: th,
        partition: part,
        classes,
        reduction: Reduction::Kernel {
            graph: kernel,
            deleted,
            shrunk_classes: shrunk,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Visited-configuration cap for the step-4 search.
    pub node_budget: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub answer: Answer,
    pub decided_at: DecidedAt,
    /// Present exactly when the answer is YES.
    pub sequence: Option<ReconfigSequence>,
    /// The kernel searched in step 4.
    pub kernel: Option<Graph>,
    pub deleted: Vec<Vertex>,
    pub thresholds: Thresholds,
}

/// The JSON document for a [`SolveOutcome`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeReport {
    pub answer: Answer,
    pub decided_at: DecidedAt,
    pub sequence: Option<ReconfigSequence>,
    pub kernel_order: Option<usize>,
    pub kernel_vertices: Option<Vec<Vertex>>,
    pub deleted: Vec<Vertex>,
    pub thresholds: Thresholds,
}

impl SolveOutcome {
    pub fn report(&self) -> OutcomeReport {
        OutcomeReport {
            answer: self.answer,
            decided_at: self.decided_at,
            sequence: self.sequence.clone(),
            kernel_order: self.kernel.as_ref().map(Graph::order),
            kernel_vertices: self.kernel.as_ref().map(|g| g.vertices().collect()),
            deleted: self.deleted.clone(),
            thresholds: self.thresholds,
        }
    }
}

pub fn solve(inst: &Instance) -> Result<SolveOutcome, SolveError> {
    solve_with(inst, &SolveOptions::default())
}

/// Decides `inst`, assuming it satisfies its mode's forbiddance condition.
pub fn solve_with(inst: &Instance, opts: &SolveOptions) -> Result<SolveOutcome, SolveError> {
    let th = compute_thresholds(inst.k(), inst.mode(), inst.t())?;
    if inst.start() == inst.target() {
        return Ok(SolveOutcome {
            answer: Answer::Yes,
            decided_at: DecidedAt::Trivial,
            sequence: Some(ReconfigSequence::default()),
            kernel: None,
            deleted: Vec::new(),
            thresholds: th,
        });
    }
    let kz = kernelize(inst)?;
    let outcome = match kz.reduction {
        Reduction::Buffer { at, sequence, .. } => SolveOutcome {
            answer: Answer::Yes,
            decided_at: at,
            sequence: Some(sequence),
            kernel: None,
            deleted: Vec::new(),
            thresholds: th,
        },
        Reduction::Kernel { graph, deleted, .. } => {
            let found = Oracle::new(&graph)
                .with_budget(opts.node_budget)
                .shortest(inst.start(), inst.target());
            let found = match found {
                Ok(found) => found,
                Err(source) => {
                    return Err(SolveError::Oracle {
                        source,
                        kernel: Box::new(graph),
                    })
                }
            };
            SolveOutcome {
                answer: if found.is_some() { Answer::Yes } else { Answer::No },
                decided_at: DecidedAt::Step4,
                sequence: found,
                kernel: Some(graph),
                deleted,
                thresholds: th,
            }
        }
    };
    if let Some(seq) = &outcome.sequence {
        if let Some(v) = inst.verify(seq).violation {
            return Err(SolveError::Invariant(format!(
                "{} sequence failed verification: {} at move {}",
                outcome.decided_at, v.kind, v.index
            )));
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{bfs_reachable, shortest_sequence};

    fn ts(v: &[Vertex]) -> TokenSet {
        TokenSet::new(v.iter().copied()).unwrap()
    }

    fn inst(g: Graph, s: &[Vertex], t: &[Vertex]) -> Instance {
        Instance::new_checked(g, ts(s), ts(t), 3, Mode::Planar).unwrap()
    }

    fn p3() -> Instance {
        inst(
            Graph::with_vertex_ids([1, 2, 3], [(1, 2), (2, 3)]).unwrap(),
            &[1],
            &[3],
        )
    }

    fn c4() -> Instance {
        let g = Graph::with_vertex_ids(1..=4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        inst(g, &[1, 3], &[2, 4])
    }

    /// Ids 1..=12, edge {1,3}, tokens {1,2} -> {3,4}, 5..=12 isolated.
    fn buffer_gadget() -> Instance {
        inst(
            Graph::with_vertex_ids(1..=12, [(1, 3)]).unwrap(),
            &[1, 2],
            &[3, 4],
        )
    }

    /// u=0 in both sets, joined to c = 3..28; p=1 -> q=2.
    fn star_gadget() -> Instance {
        let g = Graph::from_edges(28, (3..28).map(|c| (0, c))).unwrap();
        inst(g, &[0, 1], &[0, 2])
    }

    /// u1=0, u2=1 joined to c = 4..29; r1=2, r2=3 isolated.
    fn k2m_gadget() -> Instance {
        let g = Graph::from_edges(29, (4..29).flat_map(|c| [(0, c), (1, c)])).unwrap();
        inst(g, &[0, 1], &[2, 3])
    }

    #[test]
    fn thresholds() {
        let th = compute_thresholds(2, Mode::Planar, 3).unwrap();
        assert_eq!((th.alpha, th.beta), (8, 20));
        let th = compute_thresholds(1, Mode::Planar, 3).unwrap();
        assert_eq!((th.alpha, th.beta), (4, 10));
        let th = compute_thresholds(1, Mode::General, 3).unwrap();
        assert_eq!((th.alpha, th.beta), (1, 462));
        assert!(th.beta >= th.t as u128);
        assert!(compute_thresholds(0, Mode::Planar, 3).is_err());
        assert!(matches!(
            compute_thresholds(40, Mode::General, 20),
            Err(ArithmeticError::Overflow(_))
        ));
    }

    #[test]
    fn partitions() {
        let p = compute_partition(&p3());
        assert_eq!((p.core, p.fringe, p.remote), (vec![1, 3], vec![2], vec![]));
        let p = compute_partition(&c4());
        assert_eq!((p.core, p.fringe, p.remote), (vec![1, 2, 3, 4], vec![], vec![]));
        let p = compute_partition(&buffer_gadget());
        assert_eq!(p.core, vec![1, 2, 3, 4]);
        assert!(p.fringe.is_empty());
        assert_eq!(p.remote, (5..=12).collect::<Vec<_>>());
    }

    #[test]
    fn classes_follow_restricted_neighborhoods() {
        // V \ A = {1, 2, 3}; fringe a..f = 10..15
        let g = Graph::with_vertex_ids(
            [1, 2, 3, 10, 11, 12, 13, 14, 15],
            [
                (10, 1),
                (11, 1),
                (12, 1),
                (12, 3),
                (13, 2),
                (13, 3),
                (14, 3),
                (15, 3),
            ],
        )
        .unwrap();
        let part = Partition {
            core: vec![1, 2, 3],
            fringe: vec![10, 11, 12, 13, 14, 15],
            remote: vec![],
        };
        let classes = neighborhood_classes(&g, &part);
        let got: Vec<_> = classes
            .iter()
            .map(|c| (c.key.clone(), c.members.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![1], vec![10, 11]),
                (vec![1, 3], vec![12]),
                (vec![2, 3], vec![13]),
                (vec![3], vec![14, 15]),
            ]
        );

        let p = p3();
        let classes = neighborhood_classes(p.graph(), &compute_partition(&p));
        assert_eq!(
            classes,
            vec![NeighborhoodClass {
                key: vec![1, 3],
                members: vec![2]
            }]
        );

        let c = c4();
        assert!(neighborhood_classes(c.graph(), &compute_partition(&c)).is_empty());
    }

    #[test]
    fn step1() {
        let b = buffer_gadget();
        let th = compute_thresholds(2, Mode::Planar, 3).unwrap();
        assert_eq!(
            step1_check(&compute_partition(&b), &th, b.graph(), 2),
            Some(vec![5, 6])
        );
        for i in [p3(), c4()] {
            let th = compute_thresholds(i.k(), Mode::Planar, 3).unwrap();
            assert_eq!(step1_check(&compute_partition(&i), &th, i.graph(), i.k()), None);
        }
    }

    #[test]
    fn step2() {
        let s = star_gadget();
        let th = compute_thresholds(2, Mode::Planar, 3).unwrap();
        let classes = neighborhood_classes(s.graph(), &compute_partition(&s));
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].key, vec![0]);
        assert_eq!(classes[0].members.len(), 25);
        let cb = step2_check(&classes[0], &th, &s).unwrap();
        assert_eq!(cb.buffer, vec![3, 4, 5, 6]);
        assert_eq!((cb.w0, cb.wr), (Some(0), Some(0)));

        let kg = k2m_gadget();
        let classes = neighborhood_classes(kg.graph(), &compute_partition(&kg));
        assert_eq!(classes[0].key, vec![0, 1]);
        assert_eq!(step2_check(&classes[0], &th, &kg), None);

        let mut short = classes[0].clone();
        short.members.truncate(19);
        short.key = vec![0];
        assert_eq!(step2_check(&short, &th, &s), None);
    }

    #[test]
    fn buffer_schedules() {
        let b = buffer_gadget();
        let seq = build_buffer_sequence(b.graph(), b.start(), b.target(), &[5, 6], None, None).unwrap();
        let expect: ReconfigSequence = [(1, 5), (2, 6), (5, 3), (6, 4)].into_iter().collect();
        assert_eq!(seq, expect);
        assert!(b.verify(&seq).is_valid());

        let s = star_gadget();
        let seq =
            build_buffer_sequence(s.graph(), s.start(), s.target(), &[3, 4, 5, 6], Some(0), Some(0)).unwrap();
        let expect: ReconfigSequence = [(0, 3), (1, 4), (4, 2), (3, 0)].into_iter().collect();
        assert_eq!(seq, expect);
        assert!(s.verify(&seq).is_valid());

        let same = build_buffer_sequence(b.graph(), b.start(), b.start(), &[5, 6], None, None).unwrap();
        assert!(same.is_empty());
    }

    #[test]
    fn buffer_schedule_skips_shared_tokens() {
        // 0 stays put; 1 -> 2 routed through remote vertex 4; 1 and 2 adjacent
        let g = Graph::from_edges(8, [(1, 2)]).unwrap();
        let i = inst(g, &[0, 1], &[0, 2]);
        let seq = build_buffer_sequence(i.graph(), i.start(), i.target(), &[4, 5], None, None).unwrap();
        assert_eq!(seq, [(1, 4), (4, 2)].into_iter().collect());
        assert!(i.verify(&seq).is_valid());
    }

    #[test]
    fn buffer_schedule_contracts() {
        let s = star_gadget();
        let g = s.graph();
        // without w0/wr the shared key vertex 0 is adjacent to the buffer
        assert!(build_buffer_sequence(g, s.start(), s.target(), &[3, 4], None, None).is_err());
        assert!(build_buffer_sequence(g, s.start(), s.target(), &[3], Some(0), Some(0)).is_err());
        assert!(build_buffer_sequence(g, s.start(), s.target(), &[1, 3], Some(0), Some(0)).is_err());
        assert!(build_buffer_sequence(g, s.start(), s.target(), &[3, 4], Some(2), Some(0)).is_err());
    }

    #[test]
    fn shrinking() {
        let kg = k2m_gadget();
        let th = compute_thresholds(2, Mode::Planar, 3).unwrap();
        let classes = neighborhood_classes(kg.graph(), &compute_partition(&kg));
        let mut g = kg.graph().clone();
        let deleted = shrink_class(&mut g, &classes[0], &th, &kg).unwrap();
        assert_eq!(deleted, (24..29).collect::<Vec<_>>());
        assert_eq!(g.order(), 24);

        let mut exact = classes[0].clone();
        exact.members.truncate(20);
        assert!(shrink_class(&mut kg.graph().clone(), &exact, &th, &kg).is_err());

        let s = star_gadget();
        let sc = neighborhood_classes(s.graph(), &compute_partition(&s));
        assert!(shrink_class(&mut s.graph().clone(), &sc[0], &th, &s).is_err());
    }

    #[test]
    fn two_oversized_classes_shrink_independently() {
        // keys {0,1} (start pair) and {2,3} (target pair)
        let mut edges = Vec::new();
        for c in 4..29 {
            edges.extend([(0, c), (1, c)]);
        }
        for c in 29..54 {
            edges.extend([(2, c), (3, c)]);
        }
        let g = Graph::from_edges(54, edges).unwrap();
        let i = Instance::new_checked(g, ts(&[0, 1]), ts(&[2, 3]), 3, Mode::Planar).unwrap();
        let kz = kernelize(&i).unwrap();
        let keys: Vec<_> = kz.classes.iter().map(|c| c.key.clone()).collect();
        assert_eq!(keys, vec![vec![0, 1], vec![2, 3]]);
        match kz.reduction {
            Reduction::Kernel {
                graph,
                deleted,
                shrunk_classes,
            } => {
                assert_eq!(shrunk_classes, 2);
                let mut expect: Vec<_> = (24..29).collect();
                expect.extend(49..54);
                assert_eq!(deleted, expect);
                assert_eq!(graph.order(), 44);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn kernel_bounds() {
        assert_eq!(kernel_size_bound(1, Mode::Planar, 3), Ok(308));
        assert_eq!(kernel_size_bound(2, Mode::Planar, 3), Ok(9632));
        // s = 3, C(3,2) = 3: 3 + 462 * 6 + 2 * 8
        assert_eq!(kernel_size_bound(1, Mode::General, 3), Ok(2791));
        assert!(kernel_size_bound(30, Mode::Planar, 3).is_err());
    }

    #[test]
    fn solve_examples() {
        let b = buffer_gadget();
        let out = solve(&b).unwrap();
        assert_eq!((out.answer, out.decided_at), (Answer::Yes, DecidedAt::Step1));
        assert_eq!(out.sequence.as_ref().unwrap().len(), 4);
        assert!(bfs_reachable(b.graph(), b.start(), b.target()).unwrap());

        let c = c4();
        let out = solve(&c).unwrap();
        assert_eq!((out.answer, out.decided_at), (Answer::No, DecidedAt::Step4));
        assert_eq!(out.kernel.as_ref().unwrap().order(), 4);
        assert!(out.sequence.is_none());

        let kg = k2m_gadget();
        let out = solve(&kg).unwrap();
        assert_eq!((out.answer, out.decided_at), (Answer::Yes, DecidedAt::Step4));
        assert_eq!(out.kernel.as_ref().unwrap().order(), 24);
        assert_eq!(out.deleted.len(), 5);
        let expect: ReconfigSequence = [(0, 2), (1, 3)].into_iter().collect();
        assert_eq!(out.sequence.as_ref(), Some(&expect));
        assert_eq!(
            shortest_sequence(kg.graph(), kg.start(), kg.target())
                .unwrap()
                .map(|s| s.len()),
            Some(2)
        );

        let s = star_gadget();
        let out = solve(&s).unwrap();
        assert_eq!((out.answer, out.decided_at), (Answer::Yes, DecidedAt::Step2));
        assert_eq!(out.sequence.unwrap().len(), 4);
    }

    #[test]
    fn identity_short_circuits() {
        let i = inst(Graph::new(3), &[1], &[1]);
        let out = solve(&i).unwrap();
        assert_eq!((out.answer, out.decided_at), (Answer::Yes, DecidedAt::Trivial));
        assert!(out.sequence.unwrap().is_empty());
    }

    #[test]
    fn oracle_exhaustion_keeps_kernel() {
        let kg = k2m_gadget();
        let err = solve_with(&kg, &SolveOptions { node_budget: 2 }).unwrap_err();
        match err {
            SolveError::Oracle { kernel, .. } => assert_eq!(kernel.order(), 24),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn unchecked_k33_is_caught_at_runtime() {
        // K_{3,30} with the three hubs as start tokens: the big class has a 3-vertex key
        let g = Graph::from_edges(36, (6..36).flat_map(|c| [(0, c), (1, c), (2, c)])).unwrap();
        let i = Instance::new(g, ts(&[0, 1, 2]), ts(&[3, 4, 5]), 3, Mode::Planar).unwrap();
        assert!(i.check_forbiddance().is_err());
        assert!(matches!(solve(&i), Err(SolveError::Invariant(_))));
    }

    #[test]
    fn report_json() {
        let out = solve(&c4()).unwrap();
        let v = serde_json::to_value(out.report()).unwrap();
        assert_eq!(v["answer"], "no");
        assert_eq!(v["decided_at"], "step-4");
        assert_eq!(v["kernel_order"], 4);
        assert_eq!(v["thresholds"]["alpha"], 8);
        assert_eq!(v["thresholds"]["mode"], "planar");
    }
}
