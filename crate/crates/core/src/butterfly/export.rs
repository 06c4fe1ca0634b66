//! DOT and JSON topology dumps. Both are byte-stable for equal inputs.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::ButterflyGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// DOT with one `rank=same` group per level and `L<j>R<s>` node ids.
pub fn to_dot(bf: &ButterflyGraph) -> String {
    let g = bf.graph();
    let mut out = format!(
        "graph BF{} {{\n  rankdir=TB;\n  node [shape=circle];\n",
        bf.r()
    );
    for level in 0..=bf.r() {
        let names: Vec<String> = bf.level_vertices(level).map(|c| c.label()).collect();
        writeln!(out, "  {{ rank=same; {}; }}", names.join("; ")).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", bf.coord(u).label(), bf.coord(v).label()).unwrap();
    }
    out.push_str("}\n");
    out
}

/// `{r, vertices, edges}`: vertex labels in id order and edges as id pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Topology {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl Topology {
    pub fn of_butterfly(bf: &ButterflyGraph) -> Self {
        let mut t = Topology::of_graph(bf.graph());
        t.r = Some(bf.r());
        t
    }

    /// Unlabelled graphs get their decimal ids as labels.
    pub fn of_graph(g: &Graph) -> Self {
        let vertices = match g.labels() {
            Some(l) => l.to_vec(),
            None => (0..g.n()).map(|v| v.to_string()).collect(),
        };
        Topology {
            r: None,
            vertices,
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.vertices.len(), self.edges.iter().map(|&[u, v]| (u, v)))?
            .with_labels(self.vertices.clone())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("topology serializes");
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

    #[test]
    fn dot_shape() {
        let bf = ButterflyGraph::new(1).unwrap();
        let dot = to_dot(&bf);
        assert_eq!(
            dot,
            "graph BF1 {\n  rankdir=TB;\n  node [shape=circle];\n  { rank=same; L0R0; L0R1; }\n  { rank=same; L1R0; L1R1; }\n  L0R0 -- L1R0;\n  L0R0 -- L1R1;\n  L0R1 -- L1R0;\n  L0R1 -- L1R1;\n}\n"
        );
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let bf = ButterflyGraph::new(3).unwrap();
        let text = Topology::of_butterfly(&bf).to_json();
        let back = Topology::from_json(&text).unwrap();
        assert_eq!(back.r, Some(3));
        let g = back.to_graph().unwrap();
        assert_eq!(&g, bf.graph());
        let mut again = Topology::of_graph(&g);
        again.r = back.r;
        assert_eq!(again.to_json(), text);
    }
}
