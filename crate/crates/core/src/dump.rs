//! Whole-tree dumps in JSON, DOT and plain text.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classic_trees::{cw_node, farey_triple_node, sb_node};
use crate::cluster::{tree_d, tree_ddag};
use crate::error::{Error, Result};
use crate::treewalk::{address_to_flipword, flipword_to_address, FlipWord, TreeAddress};
use crate::words::{christoffel_node, cohn_triple_node, combined_cohn_node};

/// Deepest tree a dump will enumerate; `2^(MAX_DEPTH+1) - 1` nodes.
pub const MAX_DEPTH: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeKind {
    SternBrocot,
    CalkinWilf,
    Farey,
    IntersectionVectors,
    InitialIntersectionVectors,
    Christoffel,
    Cohn,
    CohnCombined,
}

impl TreeKind {
    pub const ALL: [TreeKind; 8] = [
        TreeKind::SternBrocot,
        TreeKind::CalkinWilf,
        TreeKind::Farey,
        TreeKind::IntersectionVectors,
        TreeKind::InitialIntersectionVectors,
        TreeKind::Christoffel,
        TreeKind::Cohn,
        TreeKind::CohnCombined,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TreeKind::SternBrocot => "sb",
            TreeKind::CalkinWilf => "cw",
            TreeKind::Farey => "farey",
            TreeKind::IntersectionVectors => "ivec",
            TreeKind::InitialIntersectionVectors => "ivec-init",
            TreeKind::Christoffel => "christoffel",
            TreeKind::Cohn => "cohn",
            TreeKind::CohnCombined => "cohn-combined",
        }
    }

    /// Whether tree edges correspond to flips, so DOT edges carry their label.
    pub fn has_flip_labels(self) -> bool {
        !matches!(self, TreeKind::Cohn | TreeKind::CohnCombined)
    }

    /// The value stored at one vertex.
    pub fn value_at(self, addr: &TreeAddress) -> Result<NodeValue> {
        let word = address_to_flipword(addr);
        Ok(match self {
            TreeKind::SternBrocot => NodeValue::Text(sb_node(addr).to_string()),
            TreeKind::CalkinWilf => NodeValue::Text(cw_node(addr).to_string()),
            TreeKind::Farey => NodeValue::Words(
                farey_triple_node(&word)?.entries().iter().map(ToString::to_string).collect(),
            ),
            TreeKind::IntersectionVectors => NodeValue::Vector(tree_d(&word).to_i64s()?.to_vec()),
            TreeKind::InitialIntersectionVectors => {
                NodeValue::Vector(tree_ddag(&word).to_i64s()?.to_vec())
            }
            TreeKind::Christoffel => {
                let p = christoffel_node(addr);
                NodeValue::Words(vec![p.u.to_string(), p.v.to_string()])
            }
            TreeKind::Cohn => {
                let t = cohn_triple_node(addr);
                NodeValue::Words(vec![t.u.to_string(), t.v.to_string(), t.w.to_string()])
            }
            TreeKind::CohnCombined => NodeValue::Text(combined_cohn_node(addr).to_string()),
        })
    }
}

impl fmt::Display for TreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TreeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TreeKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown tree kind {s:?}")))
    }
}

/// A vertex value: a fraction or word, an integer vector, or a tuple of fractions or words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NodeValue {
    Text(String),
    Vector(Vec<i64>),
    Words(Vec<String>),
}

impl fmt::Display for NodeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeValue::Text(s) => f.write_str(s),
            NodeValue::Vector(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
            NodeValue::Words(w) => write!(f, "({})", w.join(",")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DumpNode {
    pub path: String,
    pub labels: String,
    pub value: NodeValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDump {
    pub kind: String,
    pub depth: usize,
    pub nodes: Vec<DumpNode>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            "text" => Ok(Format::Text),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

impl TreeDump {
    /// All vertices to `depth`, level by level, each level top to bottom.
    pub fn build(kind: TreeKind, depth: usize) -> Result<Self> {
        if depth > MAX_DEPTH {
            return Err(Error::OutOfDomain(format!("depth {depth} exceeds {MAX_DEPTH}")));
        }
        let mut nodes = Vec::with_capacity((1usize << (depth + 1)) - 1);
        for d in 0..=depth {
            for addr in TreeAddress::level(d) {
                nodes.push(DumpNode {
                    path: addr.to_string(),
                    labels: address_to_flipword(&addr).to_string(),
                    value: kind.value_at(&addr)?,
                });
            }
        }
        Ok(Self { kind: kind.name().to_string(), depth, nodes })
    }

    pub fn tree_kind(&self) -> Result<TreeKind> {
        self.kind.parse()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dump serializes") + "\n"
    }

    /// Parses a dump and checks that every path and label string is well formed and consistent.
    pub fn from_json(s: &str) -> Result<Self> {
        let dump: TreeDump =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("tree dump: {e}")))?;
        dump.tree_kind()?;
        let mut seen = std::collections::HashSet::new();
        for node in &dump.nodes {
            let addr: TreeAddress = node.path.parse()?;
            let word: FlipWord = node.labels.parse()?;
            if flipword_to_address(&word)? != addr {
                return Err(Error::Parse(format!(
                    "labels {:?} do not match path {:?}",
                    node.labels, node.path
                )));
            }
            if addr.depth() > dump.depth {
                return Err(Error::Parse(format!("path {:?} deeper than {}", node.path, dump.depth)));
            }
            if !seen.insert(addr) {
                return Err(Error::Parse(format!("duplicate path {:?}", node.path)));
            }
        }
        Ok(dump)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for node in &self.nodes {
            writeln!(out, "{}", node.value).expect("write to string");
        }
        out
    }

    pub fn to_dot(&self) -> Result<String> {
        let kind = self.tree_kind()?;
        let mut out = String::new();
        writeln!(out, "digraph \"{}\" {{", self.kind).expect("write to string");
        writeln!(out, "  rankdir=LR;").expect("write to string");
        for node in &self.nodes {
            writeln!(out, "  \"{}\" [label=\"{}\"];", node.path, node.value).expect("write to string");
        }
        for node in &self.nodes {
            if node.path.is_empty() {
                continue;
            }
            let parent = &node.path[..node.path.len() - 1];
            if kind.has_flip_labels() {
                let label = &node.labels[node.labels.len() - 1..];
                writeln!(out, "  \"{parent}\" -> \"{}\" [label=\"{label}\"];", node.path)
            } else {
                writeln!(out, "  \"{parent}\" -> \"{}\";", node.path)
            }
            .expect("write to string");
        }
        out.push_str("}\n");
        Ok(out)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Dot => self.to_dot(),
            Format::Text => Ok(self.to_text()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_round_trip_through_names() {
        for k in TreeKind::ALL {
            assert_eq!(k.name().parse::<TreeKind>().unwrap(), k);
        }
        assert!("ivec_init".parse::<TreeKind>().is_err());
    }

    #[test]
    fn cw_text_depth_one() {
        let d = TreeDump::build(TreeKind::CalkinWilf, 1).unwrap();
        assert_eq!(d.to_text(), "1/1\n2/1\n1/2\n");
        assert_eq!(TreeDump::build(TreeKind::SternBrocot, 0).unwrap().to_text(), "1/1\n");
    }

    #[test]
    fn initial_vectors_depth_one() {
        let d = TreeDump::build(TreeKind::InitialIntersectionVectors, 1).unwrap();
        let values: Vec<_> = d.nodes.iter().map(|n| n.value.clone()).collect();
        assert_eq!(
            values,
            vec![
                NodeValue::Vector(vec![0, 0, 1]),
                NodeValue::Vector(vec![2, 0, 1]),
                NodeValue::Vector(vec![0, 2, 1]),
            ]
        );
    }

    #[test]
    fn json_round_trips_every_kind() {
        for k in TreeKind::ALL {
            let d = TreeDump::build(k, 4).unwrap();
            assert_eq!(d.nodes.len(), 31);
            let json = d.to_json();
            let back = TreeDump::from_json(&json).unwrap();
            assert_eq!(back, d);
            assert_eq!(back.to_json(), json);
        }
    }

    #[test]
    fn from_json_rejects_inconsistent_nodes() {
        let bad_labels = r#"{"kind":"sb","depth":1,"nodes":[{"path":"R","labels":"2","value":"2/1"}]}"#;
        assert!(TreeDump::from_json(bad_labels).is_err());
        let dup = r#"{"kind":"sb","depth":1,"nodes":[{"path":"","labels":"","value":"1/1"},{"path":"","labels":"","value":"1/1"}]}"#;
        assert!(TreeDump::from_json(dup).is_err());
        let kind = r#"{"kind":"xx","depth":0,"nodes":[]}"#;
        assert!(TreeDump::from_json(kind).is_err());
    }

    #[test]
    fn dot_edges_carry_flip_labels() {
        let dot = TreeDump::build(TreeKind::SternBrocot, 1).unwrap().to_dot().unwrap();
        assert!(dot.contains("\"\" -> \"R\" [label=\"1\"];"), "{dot}");
        assert!(dot.contains("\"\" -> \"L\" [label=\"2\"];"), "{dot}");
        let cohn = TreeDump::build(TreeKind::Cohn, 1).unwrap().to_dot().unwrap();
        assert!(cohn.contains("\"\" -> \"R\";"), "{cohn}");
    }

    #[test]
    fn depth_is_capped() {
        assert!(TreeDump::build(TreeKind::SternBrocot, MAX_DEPTH + 1).is_err());
    }
}
