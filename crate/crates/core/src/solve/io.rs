//! Instance and result JSON.
//!
//! ```text
//! {"graph": {"butterfly": 3}, "mode": "edge"}
//! {"graph": {"n": 4, "edges": [[0,1],[1,2],[2,3]]},
//!  "candidates": [[0,1,2],[1,2,3]], "targets": [0, 3]}
//! ```
//!
//! `graph` is one of `{"butterfly": r}`, `{"complete_bipartite": r}`,
//! `{"n": .., "edges": ..}` or `{"file": path}` (edge list or topology JSON,
//! relative to the instance file). Targets are vertex ids or `[u, v]` edges.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{SolveResult, SolveStatus};
use crate::butterfly::{ButterflyGraph, Topology};
use crate::error::{Error, Result};
use crate::graph::generators::complete_bipartite;
use crate::graph::io::parse_edge_list;
use crate::graph::{CoverMode, Graph, Target};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSource {
    Butterfly { butterfly: u32 },
    CompleteBipartite { complete_bipartite: usize },
    Inline { n: usize, edges: Vec<[usize; 2]> },
    File { file: PathBuf },
}

impl GraphSource {
    pub fn load(&self, base: Option<&Path>) -> Result<Graph> {
        match self {
            GraphSource::Butterfly { butterfly } => {
                Ok(ButterflyGraph::new(*butterfly)?.graph().clone())
            }
            GraphSource::CompleteBipartite {
                complete_bipartite: r,
            } => Ok(complete_bipartite(*r)),
            GraphSource::Inline { n, edges } => Graph::new(*n, edges.iter().map(|&[u, v]| (u, v))),
            GraphSource::File { file } => {
                let path = match base {
                    Some(dir) if file.is_relative() => dir.join(file),
                    _ => file.clone(),
                };
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Instance(format!("{}: {e}", path.display())))?;
                load_graph_text(&text)
            }
        }
    }
}

/// Topology JSON if the text starts with `{`, edge list otherwise.
pub fn load_graph_text(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        Topology::from_json(text)?.to_graph()
    } else {
        parse_edge_list(text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TargetSpec {
    Vertex(usize),
    Edge([usize; 2]),
}

impl From<TargetSpec> for Target {
    fn from(t: TargetSpec) -> Self {
        match t {
            TargetSpec::Vertex(v) => Target::Vertex(v),
            TargetSpec::Edge([u, v]) => Target::edge(u, v),
        }
    }
}

fn vertex_mode() -> CoverMode {
    CoverMode::Vertex
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub graph: GraphSource,
    #[serde(default = "vertex_mode")]
    pub mode: CoverMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub targets: Option<Vec<TargetSpec>>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("instance serializes");
        s.push('\n');
        s
    }

    pub fn target_list(&self) -> Option<Vec<Target>> {
        self.targets
            .as_ref()
            .map(|ts| ts.iter().map(|&t| t.into()).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatusTag {
    Optimal,
    Feasible,
    Infeasible,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultFile {
    pub status: StatusTag,
    pub mode: CoverMode,
    pub size: usize,
    pub lower_bound: usize,
    /// Absent when infeasible.
    pub upper_bound: Option<usize>,
    pub nodes_explored: u64,
    pub paths: Vec<Vec<usize>>,
}

impl ResultFile {
    pub fn from_result(res: &SolveResult) -> Self {
        let status = match res.status {
            SolveStatus::Optimal => StatusTag::Optimal,
            SolveStatus::Feasible(_) => StatusTag::Feasible,
            SolveStatus::Infeasible => StatusTag::Infeasible,
            SolveStatus::BudgetExceeded => StatusTag::BudgetExceeded,
        };
        ResultFile {
            status,
            mode: res.cover.mode,
            size: res.cover.len(),
            lower_bound: res.lower_bound,
            upper_bound: res.interval().map(|(_, hi)| hi),
            nodes_explored: res.nodes_explored,
            paths: res
                .cover
                .paths
                .iter()
                .map(|p| p.vertices().to_vec())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("result serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::{exact_cover, CoverInstance};

    #[test]
    fn parse_variants() {
        let f = InstanceFile::from_json(r#"{"graph":{"butterfly":3},"mode":"edge"}"#).unwrap();
        assert_eq!(f.graph, GraphSource::Butterfly { butterfly: 3 });
        assert_eq!(f.mode, CoverMode::Edge);
        assert_eq!(f.graph.load(None).unwrap().n(), 32);

        let f = InstanceFile::from_json(
            r#"{"graph":{"n":4,"edges":[[0,1],[1,2],[2,3]]},"candidates":[[0,1,2],[1,2,3]],"targets":[0,3]}"#,
        )
        .unwrap();
        assert_eq!(f.mode, CoverMode::Vertex);
        assert_eq!(
            f.target_list().unwrap(),
            vec![Target::Vertex(0), Target::Vertex(3)]
        );
        assert_eq!(InstanceFile::from_json(&f.to_json()).unwrap(), f);

        let f = InstanceFile::from_json(r#"{"graph":{"complete_bipartite":3},"targets":[[0,3]]}"#)
            .unwrap();
        assert_eq!(f.target_list().unwrap(), vec![Target::Edge(0, 3)]);
        assert!(InstanceFile::from_json(r#"{"graph":{"butterfly":3},"bogus":1}"#).is_err());
        assert!(InstanceFile::from_json(r#"{"graph":{"nodes":3}}"#).is_err());
    }

    #[test]
    fn file_source_relative_to_base() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("g.txt"), "0 1\n1 2\n").unwrap();
        let src = GraphSource::File {
            file: "g.txt".into(),
        };
        assert_eq!(src.load(Some(dir.path())).unwrap().edge_count(), 2);
        assert!(matches!(src.load(None), Err(Error::Instance(_))));
    }

    #[test]
    fn result_round_trip() {
        let f = InstanceFile::from_json(
            r#"{"graph":{"n":4,"edges":[[0,1],[1,2],[2,3]]},"candidates":[[0,1,2],[1,2,3]],"targets":[0,3]}"#,
        )
        .unwrap();
        let g = f.graph.load(None).unwrap();
        let inst = CoverInstance::with(&g, f.mode, f.candidates.clone(), f.target_list()).unwrap();
        let res = exact_cover(&inst, 1000);
        let file = ResultFile::from_result(&res);
        assert_eq!(file.status, StatusTag::Optimal);
        assert_eq!(file.size, 2);
        assert_eq!(file.upper_bound, Some(2));
        let text = file.to_json();
        assert!(text.starts_with("{\"status\":\"optimal\""));
        assert_eq!(ResultFile::from_json(&text).unwrap(), file);
    }
}
