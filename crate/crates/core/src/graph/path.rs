use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Edge, Graph, VertexId};
use crate::error::{Error, Result};

/// Why a vertex sequence failed the geodesic test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeodesicDefect {
    Empty,
    OutOfRange { vertex: VertexId },
    NotAdjacent { at: usize },
    RepeatedVertex { vertex: VertexId },
    TooLong { length: usize, distance: u32 },
}

impl fmt::Display for GeodesicDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeodesicDefect::Empty => write!(f, "empty vertex sequence"),
            GeodesicDefect::OutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            GeodesicDefect::NotAdjacent { at } => {
                write!(f, "positions {at} and {} are not adjacent", at + 1)
            }
            GeodesicDefect::RepeatedVertex { vertex } => write!(f, "vertex {vertex} repeats"),
            GeodesicDefect::TooLong { length, distance } => {
                write!(f, "length {length} exceeds endpoint distance {distance}")
            }
        }
    }
}

/// Checks that `p` is a walk along edges without repeats whose length equals
/// the distance between its endpoints.
pub fn check_geodesic(g: &Graph, p: &[VertexId]) -> std::result::Result<(), GeodesicDefect> {
    let (&first, &last) = match (p.first(), p.last()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(GeodesicDefect::Empty),
    };
    if let Some(&vertex) = p.iter().find(|&&v| v >= g.n()) {
        return Err(GeodesicDefect::OutOfRange { vertex });
    }
    for (at, pair) in p.windows(2).enumerate() {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(GeodesicDefect::NotAdjacent { at });
        }
    }
    let length = p.len() - 1;
    let distance = g.distance(first, last);
    if length as u64 != distance as u64 {
        // A repeat always makes the walk longer than the distance; report it
        // as the more specific defect.
        let mut seen = p.to_vec();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(GeodesicDefect::RepeatedVertex { vertex: w[0] });
        }
        return Err(GeodesicDefect::TooLong { length, distance });
    }
    Ok(())
}

pub fn is_geodesic(g: &Graph, p: &[VertexId]) -> bool {
    check_geodesic(g, p).is_ok()
}

/// True when the geodesic `p` cannot be extended by one edge at either end.
///
/// Any strictly longer geodesic containing `p` contains a one-edge extension
/// of it, so this endpoint test decides maximality under inclusion.
pub fn is_maximal_geodesic(g: &Graph, p: &[VertexId]) -> Result<bool> {
    check_geodesic(g, p).map_err(Error::NotGeodesic)?;
    let (s, t) = (p[0], p[p.len() - 1]);
    Ok(endpoints_maximal(g, s, t))
}

/// Maximality depends only on the endpoint pair: every `s,t`-geodesic is
/// maximal or none is.
pub(crate) fn endpoints_maximal(g: &Graph, s: VertexId, t: VertexId) -> bool {
    let d = g.distance(s, t);
    let from_t = g.distances_from(t);
    if g.neighbors(s).iter().any(|&x| from_t[x] == d + 1) {
        return false;
    }
    let from_s = g.distances_from(s);
    !g.neighbors(t).iter().any(|&y| from_s[y] == d + 1)
}

/// True when the cycle metric of `c` agrees with the graph metric for every
/// pair of cycle vertices. `c` lists the cycle once, without repeating the
/// first vertex at the end.
pub fn is_isometric_cycle(g: &Graph, c: &[VertexId]) -> Result<bool> {
    let len = c.len();
    if len < 3 {
        return Err(Error::NotACycle("fewer than three vertices"));
    }
    if c.iter().any(|&v| v >= g.n()) {
        return Err(Error::NotACycle("vertex out of range"));
    }
    let mut sorted = c.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotACycle("repeated vertex"));
    }
    if (0..len).any(|i| !g.has_edge(c[i], c[(i + 1) % len])) {
        return Err(Error::NotACycle("consecutive vertices not adjacent"));
    }
    for i in 0..len {
        let row = g.distances_from(c[i]);
        for j in i + 1..len {
            let arc = (j - i).min(len - (j - i));
            if row[c[j]] as usize != arc {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A vertex sequence known to be a shortest path between its endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeodesicPath(Vec<VertexId>);

impl GeodesicPath {
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Self> {
        check_geodesic(g, &vertices).map_err(Error::NotGeodesic)?;
        Ok(GeodesicPath(vertices))
    }

    /// Wraps a sequence produced by a construction that guarantees the
    /// geodesic property. Debug builds check adjacency only; the distance
    /// check costs a BFS and is left to the callers' verification.
    pub(crate) fn trusted(g: &Graph, vertices: Vec<VertexId>) -> Self {
        debug_assert!(
            vertices.windows(2).all(|w| g.has_edge(w[0], w[1])),
            "{vertices:?}"
        );
        GeodesicPath(vertices)
    }

    pub(crate) fn from_raw(vertices: Vec<VertexId>) -> Self {
        GeodesicPath(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 1
    }

    pub fn first(&self) -> VertexId {
        self.0[0]
    }

    pub fn last(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// Edges in traversal order, normalized.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| super::normalize_edge(w[0], w[1]))
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        GeodesicPath(v)
    }

    /// Orientation with the smaller endpoint id first.
    pub fn canonical(self) -> Self {
        if self.last() < self.first() {
            self.reversed()
        } else {
            self
        }
    }
}

impl AsRef<[VertexId]> for GeodesicPath {
    fn as_ref(&self) -> &[VertexId] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete_bipartite, cycle_graph, path_graph};

    #[test]
    fn single_vertex_is_geodesic() {
        let g = path_graph(3);
        assert!(is_geodesic(&g, &[1]));
        assert_eq!(check_geodesic(&g, &[]), Err(GeodesicDefect::Empty));
    }

    #[test]
    fn defects_reported() {
        let g = cycle_graph(4);
        assert_eq!(
            check_geodesic(&g, &[0, 2]),
            Err(GeodesicDefect::NotAdjacent { at: 0 })
        );
        // Walk 0-1-2-3 has length 3 but d(0,3) = 1.
        assert_eq!(
            check_geodesic(&g, &[0, 1, 2, 3]),
            Err(GeodesicDefect::TooLong {
                length: 3,
                distance: 1
            })
        );
        // Closing back onto the start.
        assert_eq!(
            check_geodesic(&g, &[0, 1, 2, 3, 0]),
            Err(GeodesicDefect::RepeatedVertex { vertex: 0 })
        );
        assert_eq!(
            check_geodesic(&g, &[0, 9]),
            Err(GeodesicDefect::OutOfRange { vertex: 9 })
        );
    }

    #[test]
    fn maximality() {
        let g = path_graph(3);
        assert_eq!(is_maximal_geodesic(&g, &[0, 1]), Ok(false));
        assert_eq!(is_maximal_geodesic(&g, &[0, 1, 2]), Ok(true));
        assert!(matches!(
            is_maximal_geodesic(&g, &[0, 2]),
            Err(Error::NotGeodesic(_))
        ));

        let k = complete_bipartite(3);
        // Center 3 on the right side, ends 0 and 1 on the left.
        assert_eq!(is_maximal_geodesic(&k, &[0, 3, 1]), Ok(true));
        assert_eq!(is_maximal_geodesic(&k, &[0, 3]), Ok(false));
    }

    #[test]
    fn isometric_cycles() {
        let c4 = cycle_graph(4);
        assert_eq!(is_isometric_cycle(&c4, &[0, 1, 2, 3]), Ok(true));
        // 6-cycle with chord 0-3.
        let mut edges: Vec<_> = (0..6).map(|v| (v, (v + 1) % 6)).collect();
        edges.push((0, 3));
        let g = Graph::new(6, edges).unwrap();
        assert_eq!(is_isometric_cycle(&g, &[0, 1, 2, 3, 4, 5]), Ok(false));
        assert!(is_isometric_cycle(&g, &[0]).is_err());
        assert!(is_isometric_cycle(&g, &[0, 1, 3]).is_err());
    }

    #[test]
    fn canonical_orientation() {
        let g = path_graph(4);
        let p = GeodesicPath::new(&g, vec![3, 2, 1]).unwrap().canonical();
        assert_eq!(p.vertices(), &[1, 2, 3]);
        assert_eq!(p.len(), 2);
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
    }
}
