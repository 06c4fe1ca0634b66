use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{check_geodesic, normalize_edge, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverMode {
    Vertex,
    Edge,
}

impl std::fmt::Display for CoverMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CoverMode::Vertex => "vertex",
            CoverMode::Edge => "edge",
        })
    }
}

impl std::str::FromStr for CoverMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertex" => Ok(CoverMode::Vertex),
            "edge" => Ok(CoverMode::Edge),
            other => Err(format!("unknown cover mode `{other}`")),
        }
    }
}

/// An element of the universe a cover has to hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Vertex(VertexId),
    /// Stored with the smaller endpoint first.
    Edge(VertexId, VertexId),
}

impl Target {
    pub fn edge(u: VertexId, v: VertexId) -> Self {
        let (a, b) = normalize_edge(u, v);
        Target::Edge(a, b)
    }

    /// All vertices or all edges of `g`.
    pub fn all(g: &Graph, mode: CoverMode) -> Vec<Target> {
        match mode {
            CoverMode::Vertex => (0..g.n()).map(Target::Vertex).collect(),
            CoverMode::Edge => g.edges().map(|(u, v)| Target::Edge(u, v)).collect(),
        }
    }

    /// Targets of `mode` touched by the vertex sequence `p`.
    pub fn hit_by(p: &[VertexId], mode: CoverMode) -> impl Iterator<Item = Target> + '_ {
        let (verts, edges) = match mode {
            CoverMode::Vertex => (p, &p[..0]),
            CoverMode::Edge => (&p[..0], p),
        };
        verts
            .iter()
            .map(|&v| Target::Vertex(v))
            .chain(edges.windows(2).map(|w| Target::edge(w[0], w[1])))
    }
}

impl std::fmt::Display for Target {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Target::Vertex(v) => write!(f, "{v}"),
            Target::Edge(u, v) => write!(f, "{u}-{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub mode: CoverMode,
    pub total: usize,
    pub covered: usize,
    pub missing: Vec<Target>,
    /// Indices of paths that fail the geodesic test.
    pub invalid_paths: Vec<usize>,
    pub path_count: usize,
    /// No edge is traversed by more than one path.
    pub edge_disjoint: bool,
}

impl CoverageReport {
    pub fn is_valid(&self) -> bool {
        self.missing.is_empty() && self.invalid_paths.is_empty()
    }

    /// Valid edge cover whose paths are pairwise edge-disjoint.
    pub fn is_partition(&self) -> bool {
        self.mode == CoverMode::Edge && self.is_valid() && self.edge_disjoint
    }
}

/// Checks that every path is a geodesic and that together they hit every
/// target. `targets` defaults to every vertex (or every edge) of `g`.
///
/// Edge targets count as covered when some valid-length step of some path
/// traverses them, in either direction.
pub fn coverage_report<P: AsRef<[VertexId]>>(
    g: &Graph,
    paths: &[P],
    mode: CoverMode,
    targets: Option<&[Target]>,
) -> CoverageReport {
    let owned;
    let targets = match targets {
        Some(t) => t,
        None => {
            owned = Target::all(g, mode);
            &owned
        }
    };

    let mut invalid_paths = Vec::new();
    let mut edge_uses: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    let mut hit_vertices = vec![false; g.n()];
    for (i, p) in paths.iter().enumerate() {
        let p = p.as_ref();
        if check_geodesic(g, p).is_err() {
            invalid_paths.push(i);
        }
        for &v in p {
            if v < g.n() {
                hit_vertices[v] = true;
            }
        }
        for w in p.windows(2) {
            if g.has_edge(w[0], w[1]) {
                *edge_uses.entry(normalize_edge(w[0], w[1])).or_insert(0) += 1;
            }
        }
    }

    let missing: Vec<Target> = targets
        .iter()
        .copied()
        .filter(|t| match *t {
            Target::Vertex(v) => !(v < g.n() && hit_vertices[v]),
            Target::Edge(u, v) => !edge_uses.contains_key(&normalize_edge(u, v)),
        })
        .collect();

    CoverageReport {
        mode,
        total: targets.len(),
        covered: targets.len() - missing.len(),
        missing,
        invalid_paths,
        path_count: paths.len(),
        edge_disjoint: edge_uses.values().all(|&c| c == 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{cycle_graph, path_graph};

    #[test]
    fn empty_cover_misses_everything() {
        let g = path_graph(3);
        let r = coverage_report::<Vec<VertexId>>(&g, &[], CoverMode::Vertex, None);
        assert_eq!(r.missing.len(), 3);
        assert_eq!(r.covered + r.missing.len(), r.total);
        assert!(!r.is_valid());
    }

    #[test]
    fn edge_mode_partition_flag() {
        let g = cycle_graph(4);
        let halves = [vec![0, 1, 2], vec![2, 3, 0]];
        let r = coverage_report(&g, &halves, CoverMode::Edge, None);
        assert!(r.is_valid());
        assert!(r.is_partition());

        let overlapping = [vec![0, 1, 2], vec![1, 2, 3], vec![3, 0]];
        let r = coverage_report(&g, &overlapping, CoverMode::Edge, None);
        assert!(r.is_valid());
        assert!(!r.edge_disjoint);
    }

    #[test]
    fn invalid_paths_listed() {
        let g = cycle_graph(5);
        let r = coverage_report(&g, &[vec![0, 1, 2, 3]], CoverMode::Vertex, None);
        assert_eq!(r.invalid_paths, vec![0]);
        assert_eq!(r.missing, vec![Target::Vertex(4)]);
    }

    #[test]
    fn explicit_targets() {
        let g = path_graph(4);
        let t = [Target::edge(3, 2)];
        let r = coverage_report(&g, &[vec![3, 2]], CoverMode::Edge, Some(&t));
        assert!(r.is_valid());
        assert_eq!(r.total, 1);
    }
}
