//! Decomposition files (JSON) and DOT rendering.
//!
//! All ids in a file refer to `Γ` or `Δ`, never to `Θ`, which is rebuilt on
//! load. Edge references in witnesses are written `g:<id>` or `d:<id>`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::assemble::{assemble, Attachment, Decomposition, Witnesses};
use super::marking::Marking;
use super::special::{SpecialGraph, SpecialPath};
use super::{DecompositionError, IdSet};
use crate::coxeter::{CoxeterMatrix, MatrixFile};
use crate::graph::io::GraphFile;
use crate::graph::{EdgeId, GraphPath, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixRef {
    Inline(MatrixFile),
    /// Path to a matrix file, relative to the decomposition file.
    Path(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialPathRecord {
    pub start: VertexId,
    pub edges: Vec<EdgeId>,
    #[serde(rename = "type")]
    pub pair: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaFile {
    pub graph: GraphFile,
    pub special_paths: Vec<SpecialPathRecord>,
}

/// Vertices plus edges; one orientation per edge is enough.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdSetRecord {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachRecord {
    pub vertices: Vec<[VertexId; 2]>,
    pub edges: Vec<[EdgeId; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub matrix: MatrixRef,
    pub gamma: GraphFile,
    pub delta: DeltaFile,
    pub forest: IdSetRecord,
    pub attach: AttachRecord,
    /// `Ω̃`, in `Δ` ids; `Ω` is its image.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marking: Option<IdSetRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<BTreeMap<String, Vec<String>>>,
}

/// A decomposition with the optional marking and witnesses of its file.
#[derive(Clone, Debug)]
pub struct LoadedDecomposition {
    pub decomposition: Decomposition,
    pub marking: Marking,
    pub witnesses: Option<Witnesses>,
}

fn malformed(msg: impl Into<String>) -> DecompositionError {
    DecompositionError::Malformed(msg.into())
}

fn record(g: &crate::graph::LabeledGraph, s: &IdSet) -> IdSetRecord {
    IdSetRecord { vertices: s.vertices.iter().copied().collect(), edges: s.geometric_edges(g).collect() }
}

/// Parses `g:<id>` / `d:<id>`.
pub fn parse_edge_ref(text: &str) -> Result<(bool, EdgeId), DecompositionError> {
    let (side, id) = text.split_once(':').ok_or_else(|| malformed(format!("bad edge reference {text:?}")))?;
    let id: EdgeId = id.parse().map_err(|_| malformed(format!("bad edge reference {text:?}")))?;
    match side {
        "g" => Ok((false, id)),
        "d" => Ok((true, id)),
        _ => Err(malformed(format!("bad edge reference {text:?}"))),
    }
}

pub fn format_edge_ref((on_delta, id): (bool, EdgeId)) -> String {
    format!("{}:{id}", if on_delta { "d" } else { "g" })
}

impl DecompositionFile {
    /// Writes `d` with the matrix inline. `marking` is given in `Δ` ids and
    /// witnesses as edge references.
    pub fn from_parts(
        d: &Decomposition,
        marking: Option<&IdSet>,
        witnesses: Option<&BTreeMap<String, Vec<(bool, EdgeId)>>>,
    ) -> Self {
        let dg = &d.delta.graph;
        DecompositionFile {
            matrix: MatrixRef::Inline(d.matrix.to_file()),
            gamma: GraphFile::from_graph(&d.gamma, d.gamma_basepoint),
            delta: DeltaFile {
                graph: GraphFile::from_graph(dg, None),
                special_paths: d
                    .delta
                    .paths
                    .iter()
                    .map(|sp| SpecialPathRecord {
                        start: sp.path.start,
                        edges: sp.path.edges.clone(),
                        pair: [d.matrix.name(sp.pair.0).to_string(), d.matrix.name(sp.pair.1).to_string()],
                    })
                    .collect(),
            },
            forest: record(dg, &d.forest),
            attach: AttachRecord {
                vertices: d.attach.vertices.iter().map(|(&a, &b)| [a, b]).collect(),
                edges: d.attach.edges.iter().filter(|(&e, _)| e < dg.inv(e)).map(|(&a, &b)| [a, b]).collect(),
            },
            marking: marking.map(|m| record(dg, m)),
            witnesses: witnesses
                .map(|w| w.iter().map(|(k, v)| (k.clone(), v.iter().map(|&r| format_edge_ref(r)).collect())).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("decomposition serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, DecompositionError> {
        serde_json::from_str(text).map_err(|e| malformed(e.to_string()))
    }

    /// Builds the decomposition. A matrix given by path is read relative to
    /// `base_dir`.
    pub fn load(&self, base_dir: Option<&Path>) -> Result<LoadedDecomposition, DecompositionError> {
        let matrix = match &self.matrix {
            MatrixRef::Inline(file) => CoxeterMatrix::from_file(file)?,
            MatrixRef::Path(p) => {
                let full = base_dir.map_or_else(|| Path::new(p).to_path_buf(), |b| b.join(p));
                let text = std::fs::read_to_string(&full)
                    .map_err(|e| malformed(format!("cannot read {}: {e}", full.display())))?;
                CoxeterMatrix::parse_any(&text)?
            }
        };
        let (gamma, gamma_basepoint) = self.gamma.to_graph()?;
        let (dg, _) = self.delta.graph.to_graph()?;
        let mut paths = Vec::new();
        for (i, r) in self.delta.special_paths.iter().enumerate() {
            let pair: Vec<_> = r
                .pair
                .iter()
                .map(|n| matrix.generator(n).ok_or_else(|| malformed(format!("path {i}: unknown generator {n:?}"))))
                .collect::<Result<_, _>>()?;
            paths.push(SpecialPath::new(GraphPath { start: r.start, edges: r.edges.clone() }, pair[0], pair[1]));
        }
        let delta = SpecialGraph::new(dg, paths)?;
        let forest = IdSet {
            vertices: self.forest.vertices.iter().copied().collect(),
            edges: self.forest.edges.iter().copied().collect(),
        };
        let attach = Attachment {
            vertices: self.attach.vertices.iter().map(|&[a, b]| (a, b)).collect(),
            edges: self.attach.edges.iter().map(|&[a, b]| (a, b)).collect(),
        };
        let d = assemble(matrix, gamma, gamma_basepoint, delta, forest, attach)?;
        let marking = match &self.marking {
            Some(r) => {
                let tilde =
                    IdSet { vertices: r.vertices.iter().copied().collect(), edges: r.edges.iter().copied().collect() };
                Marking::from_delta(&d, &tilde)?
            }
            None => Marking::empty(),
        };
        let witnesses = match &self.witnesses {
            Some(w) => {
                let mut out = Witnesses::new();
                for (name, refs) in w {
                    let s = d.matrix.generator(name).ok_or_else(|| malformed(format!("unknown generator {name:?}")))?;
                    let steps = refs.iter().map(|r| parse_edge_ref(r)).collect::<Result<Vec<_>, _>>()?;
                    out.insert(s, d.theta_path(&steps)?);
                }
                Some(out)
            }
            None => None,
        };
        Ok(LoadedDecomposition { decomposition: d, marking, witnesses })
    }
}

pub fn load_decomposition(path: &Path) -> Result<LoadedDecomposition, DecompositionError> {
    let text = std::fs::read_to_string(path).map_err(|e| malformed(format!("cannot read {}: {e}", path.display())))?;
    DecompositionFile::from_json(&text)?.load(path.parent())
}

/// `Γ` and `Δ` side by side. `Δ` is drawn thick and `p` as dotted arrows.
pub fn decomposition_to_dot(d: &Decomposition) -> String {
    let mut out = String::from("digraph D {\n  node [shape=point];\n");
    let name = |l| d.matrix.name(l).to_string();
    out.push_str("  subgraph cluster_gamma {\n    label=\"Γ\";\n");
    for v in d.gamma.vertices() {
        let shape = if Some(v) == d.gamma_basepoint { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "    g{v} [shape={shape}, label=\"\", xlabel=\"{v}\"];");
    }
    for e in d.gamma.geometric_edges() {
        let edge = d.gamma.edge(e);
        let _ = writeln!(
            out,
            "    g{} -> g{} [label=\"{}\", dir=none];",
            edge.alpha,
            edge.omega,
            name(edge.label.generator)
        );
    }
    out.push_str("  }\n  subgraph cluster_delta {\n    label=\"Δ\";\n");
    let dg = &d.delta.graph;
    for v in dg.vertices() {
        let _ = writeln!(out, "    d{v} [shape=circle, label=\"\", xlabel=\"{v}\"];");
    }
    for e in dg.geometric_edges() {
        let edge = dg.edge(e);
        let _ = writeln!(
            out,
            "    d{} -> d{} [label=\"{}\", dir=none, penwidth=3];",
            edge.alpha,
            edge.omega,
            name(edge.label.generator)
        );
    }
    out.push_str("  }\n");
    for (x, px) in &d.attach.vertices {
        let _ = writeln!(out, "  d{x} -> g{px} [style=dotted, constraint=false];");
    }
    out.push_str("}\n");
    out
}
