//! The `.tj` instance format and JSON sequence files.
//!
//! ```text
//! # C4, the smallest NO instance
//! tj 4 4 2 3
//! e 0 1
//! e 1 2
//! e 2 3
//! e 0 3
//! s 0 2
//! g 1 3
//! ```
//!
//! The header is `tj <n> <m> <k> <t>`. Vertex ids are `0..n`. Exactly `m`
//! edge lines and one `s` (start) and one `g` (target) line of `k` ids each
//! follow, in any order. `#` starts a comment.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::error::InstanceError;
use crate::graph::{Graph, Vertex};
use crate::instance::{Instance, Mode, TokenSet};
use crate::sequence::ReconfigSequence;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Semantic(#[from] InstanceError),
    #[error("vertex {0} is missing; the text format needs ids 0..n")]
    SparseIds(Vertex),
    #[error("sequence file: {0}")]
    Json(#[from] serde_json::Error),
}

impl FileError {
    /// Syntactic problems, as opposed to a well-formed file describing an
    /// invalid instance.
    pub fn is_parse(&self) -> bool {
        matches!(self, FileError::Parse { .. } | FileError::Json(_))
    }
}

fn parse_err(line: usize, reason: impl Into<String>) -> FileError {
    FileError::Parse {
        line,
        reason: reason.into(),
    }
}

struct Header {
    n: usize,
    m: usize,
    k: usize,
    t: usize,
}

fn numbers(line: usize, fields: &[&str]) -> Result<Vec<usize>, FileError> {
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| parse_err(line, format!("`{f}` is not a non-negative integer")))
        })
        .collect()
}

/// Parses `.tj` text. The instance gets [`Mode::Planar`]; switch with
/// [`Instance::with_mode`]. Forbiddance is not checked here.
pub fn parse_instance(text: &str) -> Result<Instance, FileError> {
    let mut header: Option<Header> = None;
    let mut graph = Graph::new(0);
    let mut edges = 0;
    let mut start: Option<TokenSet> = None;
    let mut target: Option<TokenSet> = None;
    let mut last = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let content = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        let Some((&tag, rest)) = fields.split_first() else {
            continue;
        };

        let Some(h) = &header else {
            if tag != "tj" {
                return Err(parse_err(line, "expected header `tj <n> <m> <k> <t>`"));
            }
            if rest.len() != 4 {
                return Err(parse_err(
                    line,
                    format!("header has {} fields, expected 4", rest.len()),
                ));
            }
            let v = numbers(line, rest)?;
            header = Some(Header {
                n: v[0],
                m: v[1],
                k: v[2],
                t: v[3],
            });
            graph = Graph::new(v[0]);
            continue;
        };

        match tag {
            "tj" => return Err(parse_err(line, "second header")),
            "e" => {
                if rest.len() != 2 {
                    return Err(parse_err(line, "edge line needs two ids"));
                }
                let v = numbers(line, rest)?;
                let (u, w) = (v[0], v[1]);
                if u >= h.n || w >= h.n {
                    return Err(parse_err(line, format!("edge {u} {w} outside 0..{}", h.n)));
                }
                if u == w {
                    return Err(parse_err(line, format!("self-loop at {u}")));
                }
                if !graph.add_edge(u, w).expect("ids checked") {
                    return Err(parse_err(line, format!("duplicate edge {u} {w}")));
                }
                edges += 1;
            }
            "s" | "g" => {
                let slot = if tag == "s" { &mut start } else { &mut target };
                if slot.is_some() {
                    return Err(parse_err(line, format!("second `{tag}` line")));
                }
                if rest.len() != h.k {
                    return Err(parse_err(
                        line,
                        format!(
                            "`{tag}` line has {} ids but the header says k = {}",
                            rest.len(),
                            h.k
                        ),
                    ));
                }
                let v = numbers(line, rest)?;
                if let Some(&bad) = v.iter().find(|&&x| x >= h.n) {
                    return Err(parse_err(line, format!("vertex {bad} outside 0..{}", h.n)));
                }
                let set = TokenSet::new(v).map_err(|e| parse_err(line, e.to_string()))?;
                *slot = Some(set);
            }
            other => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
    }

    let Some(h) = header else {
        return Err(parse_err(last.max(1), "missing header"));
    };
    if edges != h.m {
        return Err(parse_err(
            last,
            format!("header promises {} edges, found {edges}", h.m),
        ));
    }
    let start = start.ok_or_else(|| parse_err(last, "missing `s` line"))?;
    let target = target.ok_or_else(|| parse_err(last, "missing `g` line"))?;
    Ok(Instance::new(graph, start, target, h.t, Mode::Planar)?)
}

/// Canonical text: header, edges ascending with `u < v`, then `s` and `g`.
pub fn format_instance(inst: &Instance) -> Result<String, FileError> {
    let g = inst.graph();
    if let Some(missing) = (0..g.capacity()).find(|&v| !g.contains(v)) {
        return Err(FileError::SparseIds(missing));
    }
    let mut out = format!("tj {} {} {} {}\n", g.order(), g.edge_count(), inst.k(), inst.t());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    for (tag, set) in [("s", inst.start()), ("g", inst.target())] {
        out.push_str(tag);
        for v in set.iter() {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    Ok(out)
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> FileError + '_ {
    move |source| FileError::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance, FileError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    parse_instance(&text)
}

pub fn write_instance(inst: &Instance, path: impl AsRef<Path>) -> Result<(), FileError> {
    let path = path.as_ref();
    fs::write(path, format_instance(inst)?).map_err(io_err(path))
}

pub fn read_sequence(path: impl AsRef<Path>) -> Result<ReconfigSequence, FileError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_sequence(seq: &ReconfigSequence, path: impl AsRef<Path>) -> Result<(), FileError> {
    let path = path.as_ref();
    let mut text = serde_json::to_string(seq)?;
    text.push('\n');
    fs::write(path, text).map_err(io_err(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    const C4: &str = "# C4\ntj 4 4 2 3\ne 0 1\ne 1 2\ne 2 3\ne 0 3   # closing edge\ns 0 2\ng 1 3\n";

    #[test]
    fn parses_and_round_trips() {
        let inst = parse_instance(C4).unwrap();
        assert_eq!(inst.graph().edge_count(), 4);
        assert_eq!(inst.start().as_slice(), &[0, 2]);
        let text = format_instance(&inst).unwrap();
        assert_eq!(text, "tj 4 4 2 3\ne 0 1\ne 0 3\ne 1 2\ne 2 3\ns 0 2\ng 1 3\n");
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn dependent_start_is_semantic() {
        let err = parse_instance("tj 4 2 2 3\ne 1 2\ne 2 3\ns 1 2\ng 1 3\n").unwrap_err();
        assert!(!err.is_parse());
        assert_eq!(err.to_string(), "start set not independent");
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let cases = [
            ("tj 4 2 2 3\ne 1 2\ne 2 3\ns 1\ng 1 3\n", 4, "header says k = 2"),
            ("tj 3 1 1 3\ne 0 7\ns 0\ng 1\n", 2, "outside"),
            ("tj 3 2 1 3\ne 0 1\ns 0\ng 2\n", 4, "promises 2 edges"),
            ("e 0 1\n", 1, "expected header"),
            ("tj 3 1 1 3\ne 0 1\ne 1 0\n", 3, "duplicate edge"),
            ("tj 3 0 1 3\nx 0\n", 2, "unknown line type"),
            ("tj 3 0 2 3\ns 0 0\ng 1 2\n", 2, "listed twice"),
            ("tj 3 0 1 3\ns 0\n", 2, "missing `g`"),
            ("tj 3 0 1 3\ns a\ng 1\n", 2, "not a non-negative integer"),
        ];
        for (text, line, needle) in cases {
            match parse_instance(text) {
                Err(FileError::Parse { line: l, reason }) => {
                    assert_eq!(l, line, "{text:?}: {reason}");
                    assert!(reason.contains(needle), "{text:?}: {reason}");
                }
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn sparse_graphs_are_not_written() {
        let g = Graph::with_vertex_ids([1, 2, 3], [(1, 2)]).unwrap();
        let inst = Instance::new(
            g,
            TokenSet::new([1]).unwrap(),
            TokenSet::new([3]).unwrap(),
            3,
            Mode::Planar,
        )
        .unwrap();
        assert!(matches!(format_instance(&inst), Err(FileError::SparseIds(0))));
    }
}
