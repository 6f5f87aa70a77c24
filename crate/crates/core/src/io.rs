//! Canonical text format for families.
//!
//! ```text
//! {
//!   "version": 1,
//!   "vertices": 4,
//!   "a": [
//!     [0, 1],
//!     [2, 3]
//!   ],
//!   "b": [
//!     [0, 2]
//!   ]
//! }
//! ```
//!
//! The document is JSON. Keys appear in the order `version`, `vertices`,
//! `labels` (omitted when absent), `a`, `b`; each edge sits on its own line;
//! indentation is two spaces and the text ends with a newline. Parsing accepts
//! any JSON layout and canonicalizes, reporting what it had to fix.

use std::fmt::{self, Write as _};
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::family::{Family, Side};
use crate::vertex_set::{Edge, VertexSet};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    version: u64,
    vertices: usize,
    #[serde(default)]
    labels: Option<Vec<String>>,
    a: Vec<Vec<usize>>,
    #[serde(default)]
    b: Vec<Vec<usize>>,
}

/// Non-fatal irregularities fixed while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    DuplicateEdges { side: Side, count: usize },
    UnsortedMembers { side: Side, edge: usize },
    RepeatedMember { side: Side, edge: usize },
    UnsortedEdges { side: Side },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::DuplicateEdges { side, count } => {
                write!(f, "side {side}: collapsed {count} duplicate edge(s)")
            }
            Warning::UnsortedMembers { side, edge } => {
                write!(f, "side {side}: members of edge #{edge} were not sorted")
            }
            Warning::RepeatedMember { side, edge } => {
                write!(f, "side {side}: edge #{edge} lists a vertex twice")
            }
            Warning::UnsortedEdges { side } => write!(f, "side {side}: edges were not sorted"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub family: Family,
    pub warnings: Vec<Warning>,
}

fn read_side(side: Side, raw: &[Vec<usize>], warnings: &mut Vec<Warning>) -> Vec<Edge> {
    let mut edges = Vec::with_capacity(raw.len());
    for (i, members) in raw.iter().enumerate() {
        if members.windows(2).any(|w| w[0] == w[1])
            || members.iter().collect::<VertexSet>().len() != members.len()
        {
            warnings.push(Warning::RepeatedMember { side, edge: i });
        } else if members.windows(2).any(|w| w[0] > w[1]) {
            warnings.push(Warning::UnsortedMembers { side, edge: i });
        }
        edges.push(members.iter().collect::<Edge>());
    }
    if edges.windows(2).any(|w| w[0] > w[1]) {
        warnings.push(Warning::UnsortedEdges { side });
    }
    edges
}

pub fn parse(text: &str) -> Result<Parsed> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match value.get("version").and_then(serde_json::Value::as_u64) {
        Some(FORMAT_VERSION) => {}
        Some(v) => return Err(Error::UnsupportedVersion(v)),
        None => return Err(Error::Parse("missing or non-integer \"version\"".into())),
    }
    let file: FamilyFile =
        serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    debug_assert_eq!(file.version, FORMAT_VERSION);
    let mut warnings = Vec::new();
    let a = read_side(Side::A, &file.a, &mut warnings);
    let b = read_side(Side::B, &file.b, &mut warnings);
    let (mut family, collapsed) = Family::from_edges_reporting(file.vertices, a, b)?;
    for (side, count) in [(Side::A, collapsed.a), (Side::B, collapsed.b)] {
        if count > 0 {
            warnings.push(Warning::DuplicateEdges { side, count });
        }
    }
    if let Some(labels) = file.labels {
        family = family.with_labels(labels)?;
    }
    Ok(Parsed { family, warnings })
}

fn write_edges(out: &mut String, key: &str, edges: &[Edge], last: bool) {
    let tail = if last { "" } else { "," };
    if edges.is_empty() {
        let _ = writeln!(out, "  \"{key}\": []{tail}");
        return;
    }
    let _ = writeln!(out, "  \"{key}\": [");
    for (i, e) in edges.iter().enumerate() {
        let members: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        let sep = if i + 1 == edges.len() { "" } else { "," };
        let _ = writeln!(out, "    [{}]{sep}", members.join(", "));
    }
    let _ = writeln!(out, "  ]{tail}");
}

pub fn serialize(family: &Family) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"version\": {FORMAT_VERSION},");
    let _ = writeln!(out, "  \"vertices\": {},", family.vertex_count());
    if let Some(labels) = family.labels() {
        let quoted: Vec<String> = labels
            .iter()
            .map(|l| serde_json::to_string(l).expect("strings serialize"))
            .collect();
        let _ = writeln!(out, "  \"labels\": [{}],", quoted.join(", "));
    }
    write_edges(&mut out, "a", family.side_a(), false);
    write_edges(&mut out, "b", family.side_b(), true);
    out.push_str("}\n");
    out
}

pub fn read_family(path: impl AsRef<Path>) -> Result<Parsed> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn write_family(path: impl AsRef<Path>, family: &Family) -> Result<()> {
    std::fs::write(path, serialize(family))?;
    Ok(())
}
