//! Reading and writing graphs: the graph6 line format (strict — non-minimal
//! order headers and dirty padding bits are rejected, so emit ∘ parse is the
//! identity on valid lines), a whitespace edge-list format, corpus loading
//! from files or sorted directories, and a JSON-lines report writer.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Parsing refuses orders above this; nothing downstream can use them anyway.
pub const MAX_GRAPH6_ORDER: usize = 16_384;

pub const SHIPPED_MAX_ORDER: usize = 8;
/// Connected graphs per order 1..=8; the shipped corpus must match exactly.
pub const SHIPPED_CONNECTED_COUNTS: [usize; SHIPPED_MAX_ORDER] =
    [1, 1, 2, 6, 21, 112, 853, 11_117];

#[derive(Debug, Error)]
pub enum IoError {
    #[error("empty input line")]
    EmptyLine,
    #[error("graph6 byte {byte:#04x} at position {pos} is out of range")]
    BadByte { byte: u8, pos: usize },
    #[error("graph6 line is {found} bytes, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("graph6 order header is not in minimal form")]
    NonMinimalHeader,
    #[error("graph6 padding bits are not zero")]
    DirtyPadding,
    #[error("graph6 order {order} exceeds the supported limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("bad token {token:?} in edge list")]
    BadToken { token: String },
    #[error("edge list has a dangling endpoint (odd token count)")]
    OddTokens,
    #[error("corpus file for order {order} holds {found} connected graphs, expected {expected}")]
    CorpusCount {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("{source_id}: {inner}")]
    Tagged {
        source_id: String,
        #[source]
        inner: Box<IoError>,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl IoError {
    fn tagged(self, source_id: String) -> IoError {
        IoError::Tagged {
            source_id,
            inner: Box::new(self),
        }
    }
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

fn push_groups(out: &mut Vec<u8>, value: u64, groups: usize) {
    for k in (0..groups).rev() {
        out.push(63 + ((value >> (6 * k)) & 63) as u8);
    }
}

fn group_value(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else if n <= 258_047 {
        bytes.push(126);
        push_groups(&mut bytes, n as u64, 3);
    } else {
        bytes.push(126);
        bytes.push(126);
        push_groups(&mut bytes, n as u64, 6);
    }
    // upper triangle, column by column, packed into 6-bit groups
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are ascii")
}

fn parse_order(bytes: &[u8]) -> Result<(usize, usize), IoError> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() < 2 {
        return Err(IoError::Length {
            expected: 4,
            found: bytes.len(),
        });
    }
    if bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(IoError::Length {
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = group_value(&bytes[1..4]) as usize;
        if n <= 62 {
            return Err(IoError::NonMinimalHeader);
        }
        Ok((n, 4))
    } else {
        if bytes.len() < 8 {
            return Err(IoError::Length {
                expected: 8,
                found: bytes.len(),
            });
        }
        let n = group_value(&bytes[2..8]) as usize;
        if n <= 258_047 {
            return Err(IoError::NonMinimalHeader);
        }
        Ok((n, 8))
    }
}

pub fn parse_graph6(line: &str) -> Result<Graph, IoError> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(IoError::EmptyLine);
    }
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(IoError::BadByte { byte, pos });
        }
    }
    let (n, header) = parse_order(bytes)?;
    if n == 0 {
        return Err(GraphError::EmptyGraph.into());
    }
    if n > MAX_GRAPH6_ORDER {
        return Err(IoError::OrderTooLarge {
            order: n,
            limit: MAX_GRAPH6_ORDER,
        });
    }
    let body_bits = n * (n - 1) / 2;
    let expected = header + body_bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(IoError::Length {
            expected,
            found: bytes.len(),
        });
    }
    let mut g = Graph::new(n)?;
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = bytes[header + idx / 6] - 63;
            if group >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            idx += 1;
        }
    }
    if body_bits % 6 != 0 {
        let pad = 6 - body_bits % 6;
        if (bytes[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(IoError::DirtyPadding);
        }
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// edge lists: "n u v u v ..."
// ---------------------------------------------------------------------------

pub fn parse_edge_list(line: &str) -> Result<Graph, IoError> {
    let mut tokens = line.split_whitespace();
    let head = tokens.next().ok_or(IoError::EmptyLine)?;
    let parse_num = |token: &str| -> Result<usize, IoError> {
        token.parse().map_err(|_| IoError::BadToken {
            token: token.to_string(),
        })
    };
    let n = parse_num(head)?;
    let mut g = Graph::new(n)?;
    let rest: Vec<&str> = tokens.collect();
    if rest.len() % 2 != 0 {
        return Err(IoError::OddTokens);
    }
    for pair in rest.chunks(2) {
        g.add_edge(parse_num(pair[0])?, parse_num(pair[1])?)?;
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// corpora
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub source_id: String,
    pub graph: Graph,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Load one file, or every file of a directory in name order. Files with
    /// a `.g6` extension hold graph6 lines; anything else holds edge lists.
    /// Blank lines are skipped; errors carry `file:line` labels.
    pub fn load(path: &Path) -> Result<Corpus, IoError> {
        let mut corpus = Corpus::default();
        if path.is_dir() {
            let mut files: Vec<PathBuf> = fs::read_dir(path)?
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .map(|e| e.path())
                .filter(|p| p.is_file())
                .collect();
            files.sort();
            for file in files {
                corpus.load_file(&file)?;
            }
        } else {
            corpus.load_file(path)?;
        }
        Ok(corpus)
    }

    fn load_file(&mut self, path: &Path) -> Result<(), IoError> {
        let name = path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        let graph6 = path.extension().is_some_and(|e| e == "g6");
        let text = fs::read_to_string(path)
            .map_err(|e| IoError::from(e).tagged(name.clone()))?;
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let source_id = format!("{name}:{}", idx + 1);
            let graph = if graph6 {
                parse_graph6(line)
            } else {
                parse_edge_list(line)
            }
            .map_err(|e| e.tagged(source_id.clone()))?;
            self.entries.push(CorpusEntry { source_id, graph });
        }
        Ok(())
    }
}

pub fn shipped_data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

/// Load the bundled connected-graph corpus for orders 1..=max_order, checking
/// each file against the published connected-graph counts.
pub fn load_shipped_corpus(max_order: usize) -> Result<Corpus, IoError> {
    assert!(
        (1..=SHIPPED_MAX_ORDER).contains(&max_order),
        "shipped corpus covers orders 1..={SHIPPED_MAX_ORDER}"
    );
    let mut corpus = Corpus::default();
    for k in 1..=max_order {
        let part = Corpus::load(&shipped_data_dir().join(format!("connected_n{k}.g6")))?;
        let expected = SHIPPED_CONNECTED_COUNTS[k - 1];
        let connected = part
            .entries
            .iter()
            .filter(|e| e.graph.order() == k && e.graph.is_connected())
            .count();
        if connected != expected || part.len() != expected {
            return Err(IoError::CorpusCount {
                order: k,
                expected,
                found: connected.min(part.len()),
            });
        }
        corpus.entries.extend(part.entries);
    }
    Ok(corpus)
}

// ---------------------------------------------------------------------------
// JSON-lines reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReportHeader {
    pub suite: String,
    pub corpus: String,
    pub started: u64,
}

/// One header line, then one line per record, all compact JSON.
pub fn write_json_lines<W: io::Write>(
    mut out: W,
    header: &impl Serialize,
    records: &[impl Serialize],
) -> Result<(), IoError> {
    serde_json::to_writer(&mut out, header)?;
    writeln!(out)?;
    for record in records {
        serde_json::to_writer(&mut out, record)?;
        writeln!(out)?;
    }
    Ok(())
}
