//! Command-line front end.
//!
//! Exit status: 0 yes/valid, 1 no/invalid, 2 usage or input error,
//! 3 search budget exhausted.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tokenjump::fpt::{self, Reduction, SolveOptions};
use tokenjump::instances::{self, FamilySpec};
use tokenjump::oracle::{Oracle, DEFAULT_NODE_BUDGET};
use tokenjump::{find_k3t_witness, Answer, Instance, Mode, OracleError, ReconfigSequence, SolveError};

#[derive(Parser)]
#[command(
    name = "tokenjump",
    version,
    about = "Token Jumping reconfiguration of independent sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide reachability with the fixed-parameter algorithm.
    Decide(Target),
    /// Shortest sequence by breadth-first search on the full graph.
    Shortest(Target),
    /// Reachability by breadth-first search on the full graph.
    Oracle(Target),
    /// Replay a JSON sequence file against an instance.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Sequence file, `{"moves":[[from,to],...]}`.
        sequence: PathBuf,
    },
    /// Show the partition, classes, and kernel without the final search.
    Kernel(Target),
    /// Look for a K3,3 (planar mode) or K3,t (general mode) subgraph.
    CheckForbidden(Target),
    /// Write the instance a family spec describes in `.tj` form.
    Gen {
        /// e.g. `family=grid,rows=4,cols=4,k=3,seed=7`
        spec: String,
        /// Output file; standard output if omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[command(flatten)]
        opts: Common,
    },
}

#[derive(Args)]
struct Target {
    /// A `.tj` file or a family spec.
    input: String,
    #[command(flatten)]
    opts: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// Graph class assumed by the solver and the forbiddance check.
    #[arg(long, value_parser = parse_mode)]
    mode: Option<Mode>,
    /// Forbidden K3,t in general mode (at least 3).
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum number of configurations a breadth-first search may visit.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: usize,
    /// Trust the input to be K3,t-forbidden. Unsafe: results on other
    /// graphs are meaningless.
    #[arg(long)]
    skip_check: bool,
    /// Also write the sequence (when there is one) to this JSON file.
    #[arg(long)]
    sequence_out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

enum Failure {
    Input(String),
    Exhausted(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn load(input: &str, opts: &Common) -> Result<Instance, Failure> {
    let mut inst = if input.contains('=') && !Path::new(input).exists() {
        let mut spec: FamilySpec = input.parse().map_err(input_err)?;
        if let Some(mode) = opts.mode {
            spec.mode = mode;
        }
        if let Some(t) = opts.t {
            spec.t = t;
        }
        instances::generate(&spec).map_err(input_err)?
    } else {
        instances::read_instance(input).map_err(input_err)?
    };
    if let Some(mode) = opts.mode {
        inst = inst.with_mode(mode);
    }
    if let Some(t) = opts.t {
        inst = inst.with_t(t).map_err(input_err)?;
    }
    Ok(inst)
}

fn gate(inst: &Instance, opts: &Common) -> Result<(), Failure> {
    if opts.skip_check {
        return Ok(());
    }
    inst.check_forbiddance().map_err(input_err)
}

fn emit(opts: &Common, doc: serde_json::Value, text: String) {
    match opts.format {
        Format::Json => println!("{doc}"),
        Format::Text => print!("{text}"),
    }
}

fn moves_text(seq: &ReconfigSequence) -> String {
    seq.moves
        .iter()
        .map(|m| format!("  {} -> {}\n", m.from, m.to))
        .collect()
}

fn save_sequence(opts: &Common, seq: Option<&ReconfigSequence>) -> Result<(), Failure> {
    if let (Some(path), Some(seq)) = (&opts.sequence_out, seq) {
        instances::write_sequence(seq, path).map_err(input_err)?;
    }
    Ok(())
}

fn oracle_failure(e: OracleError) -> Failure {
    match e {
        OracleError::ResourceExhausted { .. } => Failure::Exhausted(e.to_string()),
        other => input_err(other),
    }
}

fn decide(t: &Target) -> Outcome {
    let inst = load(&t.input, &t.opts)?;
    gate(&inst, &t.opts)?;
    let opts = SolveOptions {
        node_budget: t.opts.budget,
    };
    let outcome = fpt::solve_with(&inst, &opts).map_err(|e| match e {
        SolveError::Oracle {
            source: OracleError::ResourceExhausted { .. },
            ..
        } => Failure::Exhausted(e.to_string()),
        other => input_err(other),
    })?;
    save_sequence(&t.opts, outcome.sequence.as_ref())?;
    let report = outcome.report();
    let mut text = format!("answer: {}\ndecided at: {}\n", outcome.answer, outcome.decided_at);
    if let Some(order) = report.kernel_order {
        text.push_str(&format!("kernel order: {order}\n"));
    }
    if !outcome.deleted.is_empty() {
        text.push_str(&format!("deleted: {:?}\n", outcome.deleted));
    }
    if let Some(seq) = &outcome.sequence {
        text.push_str(&format!("moves: {}\n{}", seq.len(), moves_text(seq)));
    }
    emit(
        &t.opts,
        serde_json::to_value(&report).expect("serializable"),
        text,
    );
    Ok(outcome.answer == Answer::Yes)
}

fn shortest(t: &Target) -> Outcome {
    let inst = load(&t.input, &t.opts)?;
    let seq = Oracle::new(inst.graph())
        .with_budget(t.opts.budget)
        .shortest(inst.start(), inst.target())
        .map_err(oracle_failure)?;
    save_sequence(&t.opts, seq.as_ref())?;
    let answer = if seq.is_some() { Answer::Yes } else { Answer::No };
    let doc = json!({
        "answer": answer,
        "length": seq.as_ref().map(ReconfigSequence::len),
        "sequence": seq,
    });
    let text = match &seq {
        Some(s) => format!("answer: yes\nlength: {}\n{}", s.len(), moves_text(s)),
        None => "answer: no\n".to_string(),
    };
    emit(&t.opts, doc, text);
    Ok(seq.is_some())
}

fn oracle(t: &Target) -> Outcome {
    let inst = load(&t.input, &t.opts)?;
    let (seq, stats) = Oracle::new(inst.graph())
        .with_budget(t.opts.budget)
        .search(inst.start(), inst.target())
        .map_err(oracle_failure)?;
    let answer = if seq.is_some() { Answer::Yes } else { Answer::No };
    let doc = json!({ "answer": answer, "visited": stats.visited });
    let text = format!("answer: {answer}\nvisited: {}\n", stats.visited);
    emit(&t.opts, doc, text);
    Ok(seq.is_some())
}

fn verify(t: &Target, path: &Path) -> Outcome {
    let inst = load(&t.input, &t.opts)?;
    let seq = instances::read_sequence(path).map_err(input_err)?;
    let report = inst.verify(&seq);
    let text = match &report.violation {
        None => format!("valid: {} moves\n", seq.len()),
        Some(v) => format!("invalid: move {}: {}\n", v.index, v.kind),
    };
    let doc = json!({ "valid": report.is_valid(), "violation": report.violation });
    emit(&t.opts, doc, text);
    Ok(report.is_valid())
}

fn kernel(t: &Target) -> Outcome {
    let inst = load(&t.input, &t.opts)?;
    gate(&inst, &t.opts)?;
    if inst.start() == inst.target() {
        let doc = json!({ "reduction": "trivial" });
        emit(&t.opts, doc, "start equals target\n".into());
        return Ok(true);
    }
    let kz = fpt::kernelize(&inst).map_err(input_err)?;
    let classes: Vec<_> = kz
        .classes
        .iter()
        .map(|c| json!({ "key": c.key, "size": c.members.len() }))
        .collect();
    let th = &kz.thresholds;
    let part = &kz.partition;
    let mut text = format!(
        "alpha: {}  beta: {}\ncore: {}  fringe: {}  remote: {}\nclasses: {}\n",
        th.alpha,
        th.beta,
        part.core.len(),
        part.fringe.len(),
        part.remote.len(),
        kz.classes.len()
    );
    for c in &kz.classes {
        text.push_str(&format!("  key {:?}: {} members\n", c.key, c.members.len()));
    }
    let reduction = match &kz.reduction {
        Reduction::Buffer {
            at,
            buffer,
            w0,
            wr,
            sequence,
        } => {
            text.push_str(&format!("buffer at {at}: {buffer:?}\n"));
            json!({
                "kind": "buffer",
                "decided_at": at,
                "buffer": buffer,
                "w0": w0,
                "wr": wr,
                "sequence": sequence,
            })
        }
        Reduction::Kernel {
            graph,
            deleted,
            shrunk_classes,
        } => {
            text.push_str(&format!(
                "kernel order: {} ({} classes shrunk, {} vertices deleted)\n",
                graph.order(),
                shrunk_classes,
                deleted.len()
            ));
            json!({
                "kind": "kernel",
                "kernel_order": graph.order(),
                "kernel_vertices": graph.vertices().collect::<Vec<_>>(),
                "deleted": deleted,
                "shrunk_classes": shrunk_classes,
            })
        }
    };
    let doc = json!({
        "thresholds": th,
        "partition": part,
        "classes": classes,
        "reduction": reduction,
    });
    emit(&t.opts, doc, text);
    Ok(true)
}

fn check_forbidden(t: &Target) -> Outcome {
    let inst = load(&t.input, &t.opts)?;
    let forbidden_t = inst.mode().forbidden_t(inst.t());
    let witness = find_k3t_witness(inst.graph(), forbidden_t);
    let text = match &witness {
        None => format!("no K3,{forbidden_t} subgraph\n"),
        Some(w) => format!("K3,{forbidden_t} found: {w}\n"),
    };
    let doc = json!({
        "forbidden": witness.is_none(),
        "t": forbidden_t,
        "witness": witness.as_ref().map(|w| json!({ "left": w.left, "right": w.right })),
    });
    emit(&t.opts, doc, text);
    Ok(witness.is_none())
}

fn gen(spec: &str, out: Option<&Path>, opts: &Common) -> Outcome {
    let inst = load(spec, opts)?;
    let text = instances::format_instance(&inst).map_err(input_err)?;
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Decide(t) => decide(t),
        Command::Shortest(t) => shortest(t),
        Command::Oracle(t) => oracle(t),
        Command::Verify { target, sequence } => verify(target, sequence),
        Command::Kernel(t) => kernel(t),
        Command::CheckForbidden(t) => check_forbidden(t),
        Command::Gen { spec, out, opts } => gen(spec, out.as_deref(), opts),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Exhausted(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
