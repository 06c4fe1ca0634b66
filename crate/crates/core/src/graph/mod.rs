//! Undirected graph substrate shared by every other module.
//!
//! A [`Graph`] is immutable once built. Distances are answered by BFS with a
//! per-source cache, so the first query from a vertex costs `O(|V| + |E|)`
//! and later queries from the same source are lookups.

mod coverage;
mod enumerate;
pub mod generators;
pub mod io;
mod path;

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};

pub use coverage::{coverage_report, CoverMode, CoverageReport, Target};
pub use enumerate::{
    count_geodesics_between, enum_guard, enumerate_geodesics, enumerate_maximal_geodesics,
    geodesics_between, DEFAULT_ENUM_GUARD, ENUM_GUARD_ENV,
};
pub use path::{
    check_geodesic, is_geodesic, is_isometric_cycle, is_maximal_geodesic, GeodesicDefect,
    GeodesicPath,
};

pub type VertexId = usize;

/// An undirected edge stored with the smaller endpoint first.
pub type Edge = (VertexId, VertexId);

/// Distance value for vertices not reachable from the source.
pub const UNREACHABLE: u32 = u32::MAX;

/// Vertex counts above this never get a full all-pairs memo.
const ALL_PAIRS_LIMIT: usize = 1 << 15;
/// Upper bound on cached distance entries (rows × n) for large graphs.
const CACHE_ENTRY_BUDGET: usize = 1 << 24;

#[inline]
pub fn normalize_edge(u: VertexId, v: VertexId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

struct DistanceCache {
    rows: RwLock<HashMap<VertexId, Arc<[u32]>>>,
    capacity: usize,
}

impl DistanceCache {
    fn new(n: usize) -> Self {
        let capacity = if n == 0 {
            0
        } else if n <= ALL_PAIRS_LIMIT && n * n <= CACHE_ENTRY_BUDGET {
            n
        } else {
            (CACHE_ENTRY_BUDGET / n).clamp(16, ALL_PAIRS_LIMIT)
        };
        DistanceCache {
            rows: RwLock::new(HashMap::new()),
            capacity,
        }
    }
}

pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
    cache: DistanceCache,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            adjacency: self.adjacency.clone(),
            edge_count: self.edge_count,
            labels: self.labels.clone(),
            cache: DistanceCache::new(self.adjacency.len()),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edge_count)
            .field("labelled", &self.labels.is_some())
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency && self.labels == other.labels
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph on vertices `0..n`. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range ids are
    /// rejected with the offending edge.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
            edge_count += nbrs.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: edge_count / 2,
            labels: None,
            cache: DistanceCache::new(n),
        })
    }

    /// Attaches external names to the vertices, one per id.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::Parse(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn vertex_by_label(&self, name: &str) -> Option<VertexId> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    /// Histogram of vertex degrees, `degree -> count`, sorted by degree.
    pub fn degree_histogram(&self) -> Vec<(usize, usize)> {
        let mut hist = std::collections::BTreeMap::new();
        for nbrs in &self.adjacency {
            *hist.entry(nbrs.len()).or_insert(0) += 1;
        }
        hist.into_iter().collect()
    }

    /// Fresh BFS from `src` without touching the cache.
    pub fn bfs_distances(&self, src: VertexId) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in &self.adjacency[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Cached distance row for `src`.
    pub fn distances_from(&self, src: VertexId) -> Arc<[u32]> {
        if let Some(row) = self.cache.rows.read().unwrap().get(&src) {
            return Arc::clone(row);
        }
        let row: Arc<[u32]> = self.bfs_distances(src).into();
        let mut rows = self.cache.rows.write().unwrap();
        if rows.len() >= self.cache.capacity {
            rows.clear();
        }
        rows.insert(src, Arc::clone(&row));
        row
    }

    pub fn distance(&self, u: VertexId, v: VertexId) -> u32 {
        if u == v {
            return 0;
        }
        let cache = self.cache.rows.read().unwrap();
        if let Some(row) = cache.get(&u) {
            return row[v];
        }
        if let Some(row) = cache.get(&v) {
            return row[u];
        }
        drop(cache);
        self.distances_from(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Largest finite distance; `None` for a disconnected graph.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for v in 0..self.n() {
            let row = self.bfs_distances(v);
            for &d in &row {
                if d == UNREACHABLE {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }
}
