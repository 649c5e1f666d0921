use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::labeled::{AlphabetMode, BasedGraph, EdgeId, LabeledGraph, Letter, VertexId};
use super::GraphError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeName {
    Involutive,
    Free,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: EdgeId,
    pub inv: EdgeId,
    pub alpha: VertexId,
    pub omega: VertexId,
    pub label: String,
}

/// On-disk form of a graph. Vertices and edges are sorted by id, so saving a
/// loaded canonical file reproduces it byte for byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub mode: ModeName,
    pub alphabet: Vec<String>,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<VertexId>,
}

fn parse_label(alphabet: &[String], mode: AlphabetMode, text: &str) -> Result<Letter, GraphError> {
    let (name, inverse) = match text.strip_suffix("^-1") {
        Some(stem) => (stem, true),
        None => (text, false),
    };
    if inverse && mode == AlphabetMode::Involutive {
        return Err(GraphError::Malformed(format!("inverse label {text:?} in involutive mode")));
    }
    let generator = alphabet
        .iter()
        .position(|a| a == name)
        .ok_or_else(|| GraphError::Malformed(format!("unknown label {text:?}")))?;
    Ok(Letter { generator, inverse })
}

impl GraphFile {
    pub fn from_graph(g: &LabeledGraph, basepoint: Option<VertexId>) -> Self {
        GraphFile {
            mode: match g.mode() {
                AlphabetMode::Involutive => ModeName::Involutive,
                AlphabetMode::Free => ModeName::Free,
            },
            alphabet: g.alphabet().to_vec(),
            vertices: g.vertices().collect(),
            edges: g
                .edges()
                .map(|(id, e)| EdgeRecord {
                    id,
                    inv: e.inv,
                    alpha: e.alpha,
                    omega: e.omega,
                    label: g.format_letter(e.label),
                })
                .collect(),
            basepoint,
        }
    }

    pub fn to_graph(&self) -> Result<(LabeledGraph, Option<VertexId>), GraphError> {
        let mode = match self.mode {
            ModeName::Involutive => AlphabetMode::Involutive,
            ModeName::Free => AlphabetMode::Free,
        };
        let mut g = LabeledGraph::new(mode, self.alphabet.clone());
        for &v in &self.vertices {
            if !g.insert_vertex(v) {
                return Err(GraphError::Malformed(format!("duplicate vertex {v}")));
            }
        }
        let mut records: Vec<&EdgeRecord> = self.edges.iter().collect();
        records.sort_by_key(|r| r.id);
        for r in &records {
            if r.id > r.inv {
                continue;
            }
            let back = records
                .iter()
                .find(|b| b.id == r.inv)
                .ok_or_else(|| GraphError::Malformed(format!("edge {} has no inverse record", r.id)))?;
            let label = parse_label(&self.alphabet, mode, &r.label)?;
            let back_label = parse_label(&self.alphabet, mode, &back.label)?;
            if back.inv != r.id || back.alpha != r.omega || back.omega != r.alpha {
                return Err(GraphError::Malformed(format!("edge {} and {} are not inverse", r.id, r.inv)));
            }
            if back_label != mode.inverse_label(label) {
                return Err(GraphError::Malformed(format!("edge {} has an incompatible inverse label", r.id)));
            }
            g.insert_edge_pair(r.id, r.inv, r.alpha, r.omega, label)?;
        }
        if g.edge_ids().count() != self.edges.len() {
            return Err(GraphError::Malformed("duplicate or unpaired edge records".into()));
        }
        g.validate()?;
        if let Some(b) = self.basepoint {
            if !g.has_vertex(b) {
                return Err(GraphError::Malformed(format!("basepoint {b} is not a vertex")));
            }
        }
        Ok((g, self.basepoint))
    }
}

pub fn graph_to_json(g: &LabeledGraph, basepoint: Option<VertexId>) -> String {
    let mut s = serde_json::to_string_pretty(&GraphFile::from_graph(g, basepoint)).expect("graph serializes");
    s.push('\n');
    s
}

pub fn graph_from_json(text: &str) -> Result<(LabeledGraph, Option<VertexId>), GraphError> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| GraphError::Malformed(e.to_string()))?;
    file.to_graph()
}

pub fn based_from_json(text: &str) -> Result<BasedGraph, GraphError> {
    let (g, b) = graph_from_json(text)?;
    let b = b.or_else(|| g.vertices().next()).unwrap_or(0);
    BasedGraph::new(g, b)
}

/// DOT rendering: one line per geometric edge, the basepoint double-circled.
pub fn graph_to_dot(g: &LabeledGraph, basepoint: Option<VertexId>) -> String {
    let mut out = String::from("digraph G {\n  node [shape=circle, label=\"\"];\n");
    for v in g.vertices() {
        let shape = if Some(v) == basepoint { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  v{v} [shape={shape}, xlabel=\"{v}\"];");
    }
    for e in g.geometric_edges() {
        let edge = g.edge(e);
        let arrow = if g.mode() == AlphabetMode::Involutive { ", dir=none" } else { "" };
        let _ =
            writeln!(out, "  v{} -> v{} [label=\"{}\"{arrow}];", edge.alpha, edge.omega, g.format_letter(edge.label));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::labeled::wedge_graph;

    #[test]
    fn round_trip_is_exact() {
        let names: Vec<String> = vec!["a".into(), "b".into()];
        let (a, b) = (Letter::new(0), Letter::new(1));
        let bg = wedge_graph(AlphabetMode::Free, names, &[vec![a, b.flipped()], vec![b]]).unwrap();
        let text = graph_to_json(&bg.graph, Some(bg.basepoint));
        let (g, base) = graph_from_json(&text).unwrap();
        assert_eq!(g, bg.graph);
        assert_eq!(base, Some(0));
        assert_eq!(graph_to_json(&g, base), text);
        assert!(text.contains("\"b^-1\""));
    }

    #[test]
    fn rejects_broken_involution() {
        let text = r#"{"mode":"involutive","alphabet":["s"],"vertices":[0,1],
            "edges":[{"id":0,"inv":1,"alpha":0,"omega":1,"label":"s"},
                     {"id":1,"inv":0,"alpha":0,"omega":1,"label":"s"}]}"#;
        assert!(graph_from_json(text).is_err());
        let text = r#"{"mode":"involutive","alphabet":["s"],"vertices":[0],
            "edges":[{"id":0,"inv":1,"alpha":0,"omega":0,"label":"s^-1"},
                     {"id":1,"inv":0,"alpha":0,"omega":0,"label":"s"}]}"#;
        assert!(graph_from_json(text).is_err());
    }

    #[test]
    fn dot_marks_basepoint() {
        let names: Vec<String> = vec!["s".into()];
        let bg = wedge_graph(AlphabetMode::Involutive, names, &[vec![Letter::new(0)]]).unwrap();
        let dot = graph_to_dot(&bg.graph, Some(0));
        assert!(dot.contains("v0 [shape=doublecircle"));
        assert!(dot.contains("v0 -> v0 [label=\"s\", dir=none]"));
    }
}
