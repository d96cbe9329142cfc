//! Token Jumping reconfiguration for independent sets.
//!
//! Given a graph and two independent sets of equal size `k`, decide whether
//! one can be turned into the other by repeatedly moving a single token to an
//! unoccupied vertex so that every intermediate set stays independent.
//!
//! The crate provides:
//!
//! - [`fpt::solve`]: a fixed-parameter algorithm for planar and
//!   K₃,ₜ-forbidden graphs. It looks for a buffer of free vertices far from
//!   the tokens, shrinks oversized neighborhood classes, and finally runs a
//!   breadth-first search on a kernel whose order depends only on `k`.
//! - [`oracle`]: exact reachability and shortest sequences by lazy
//!   breadth-first search over the configuration graph.
//! - [`instances`]: generators for gadget families and random planar
//!   graphs, exhaustive small-graph enumeration, and the `.tj` text format.
//!
//! Every YES answer carries a [`ReconfigSequence`] that can be replayed and
//! checked with [`verify_sequence`].
//!
//! ```
//! use tokenjump::{fpt, instances::{generate, FamilySpec}, Answer};
//!
//! let spec: FamilySpec = "family=buffer-gadget,k=2".parse().unwrap();
//! let inst = generate(&spec).unwrap();
//! let outcome = fpt::solve(&inst).unwrap();
//! assert_eq!(outcome.answer, Answer::Yes);
//! assert!(inst.verify(outcome.sequence.as_ref().unwrap()).is_valid());
//! ```

pub mod bipartite;
pub mod error;
pub mod fpt;
pub mod graph;
pub mod instance;
pub mod instances;
pub mod mis;
pub mod oracle;
pub mod ramsey;
pub mod sequence;

pub use bipartite::{find_k3t_witness, BipartiteWitness};
pub use error::{ArithmeticError, GraphError, InstanceError, OracleError, SolveError};
pub use fpt::{solve, Answer, DecidedAt, SolveOutcome, Thresholds};
pub use graph::{Graph, Vertex};
pub use instance::{Instance, Mode, TokenSet};
pub use mis::find_independent_set_exact;
pub use oracle::{bfs_reachable, shortest_sequence, Oracle};
pub use ramsey::ramsey_upper;
pub use sequence::{verify_sequence, Move, ReconfigSequence, VerifyReport, Violation, ViolationKind};
