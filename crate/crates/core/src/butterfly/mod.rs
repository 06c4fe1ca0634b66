//! The `r`-dimensional butterfly `BF(r)`.
//!
//! Vertices are `[j, s]` with level `j` in `0..=r` and row `s` in
//! `0..2^r`. Between levels `j` and `j + 1` there is a straight edge
//! `[j, s] - [j+1, s]` and a cross edge `[j, s] - [j+1, s ^ 2^(r-1-j)]`, so
//! the edges leaving level 0 flip the most significant row bit and the edges
//! entering level `r` flip the least significant one.
//!
//! The boundary vertices use 1-based names in row order: `u_i = [0, i-1]`
//! and `w_i = [r, i-1]`.

pub mod export;

pub use export::{to_dot, Topology};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GeodesicPath, Graph, VertexId};

/// Largest dimension we are willing to materialize.
pub const MAX_DIMENSION: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u64; 2]", into = "[u64; 2]")]
pub struct ButterflyCoord {
    pub level: u32,
    pub row: u64,
}

impl ButterflyCoord {
    pub const fn new(level: u32, row: u64) -> Self {
        ButterflyCoord { level, row }
    }

    /// Parses a `L<j>R<s>` label.
    pub fn parse_label(label: &str) -> Option<Self> {
        let rest = label.strip_prefix('L')?;
        let (j, s) = rest.split_once('R')?;
        Some(ButterflyCoord::new(j.parse().ok()?, s.parse().ok()?))
    }

    pub fn label(&self) -> String {
        format!("L{}R{}", self.level, self.row)
    }
}

impl From<[u64; 2]> for ButterflyCoord {
    fn from([j, s]: [u64; 2]) -> Self {
        ButterflyCoord::new(j as u32, s)
    }
}

impl From<ButterflyCoord> for [u64; 2] {
    fn from(c: ButterflyCoord) -> Self {
        [c.level as u64, c.row]
    }
}

impl fmt::Display for ButterflyCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.level, self.row)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn opposite(self) -> Self {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// The cross-edge bit between levels `j` and `j + 1`.
#[inline]
pub fn cross_bit(r: u32, j: u32) -> u32 {
    r - 1 - j
}

/// Row at level `j` of the unique geodesic from `[0, u_row]` to
/// `[r, w_row]`: the top `j` bits come from `w_row`, the rest from `u_row`.
pub fn level_row_on_route(u_row: u64, w_row: u64, j: u32, r: u32) -> u64 {
    let full = (1u64 << r) - 1;
    let low = (1u64 << (r - j)) - 1;
    let top = full & !low;
    (w_row & top) | (u_row & low)
}

#[derive(Debug, Clone)]
pub struct ButterflyGraph {
    r: u32,
    graph: Graph,
}

impl ButterflyGraph {
    pub fn new(r: u32) -> Result<Self> {
        if r < 1 {
            return Err(Error::DimensionTooSmall { r, min: 1 });
        }
        if r > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge(r));
        }
        let rows = 1usize << r;
        let n = (r as usize + 1) * rows;
        let mut edges = Vec::with_capacity(2 * r as usize * rows);
        for j in 0..r {
            let flip = 1usize << cross_bit(r, j);
            for s in 0..rows {
                let here = j as usize * rows + s;
                let up = here + rows;
                edges.push((here, up));
                edges.push((here, up - s + (s ^ flip)));
            }
        }
        let labels = (0..n)
            .map(|id| {
                let j = id / rows;
                format!("L{}R{}", j, id % rows)
            })
            .collect();
        let graph = Graph::new(n, edges)?.with_labels(labels)?;
        Ok(ButterflyGraph { r, graph })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `2^r`.
    pub fn rows(&self) -> u64 {
        1u64 << self.r
    }

    pub fn contains(&self, c: ButterflyCoord) -> bool {
        c.level <= self.r && c.row < self.rows()
    }

    pub fn id(&self, c: ButterflyCoord) -> VertexId {
        debug_assert!(self.contains(c), "{c} outside BF({})", self.r);
        c.level as usize * self.rows() as usize + c.row as usize
    }

    pub fn checked_id(&self, c: ButterflyCoord) -> Result<VertexId> {
        if self.contains(c) {
            Ok(self.id(c))
        } else {
            Err(Error::BadCoord {
                level: c.level,
                row: c.row,
            })
        }
    }

    pub fn coord(&self, id: VertexId) -> ButterflyCoord {
        let rows = self.rows() as usize;
        ButterflyCoord::new((id / rows) as u32, (id % rows) as u64)
    }

    pub fn coords(&self, path: &[VertexId]) -> Vec<ButterflyCoord> {
        path.iter().map(|&v| self.coord(v)).collect()
    }

    /// `u_i = [0, i - 1]`, 1-based.
    pub fn u(&self, i: u64) -> ButterflyCoord {
        debug_assert!((1..=self.rows()).contains(&i));
        ButterflyCoord::new(0, i - 1)
    }

    /// `w_i = [r, i - 1]`, 1-based.
    pub fn w(&self, i: u64) -> ButterflyCoord {
        debug_assert!((1..=self.rows()).contains(&i));
        ButterflyCoord::new(self.r, i - 1)
    }

    pub fn level_vertices(&self, level: u32) -> impl Iterator<Item = ButterflyCoord> {
        (0..self.rows()).map(move |s| ButterflyCoord::new(level, s))
    }

    /// Level-0 vertices `u_1 .. u_{2^(r-1)}`.
    pub fn quadrant_a(&self) -> Vec<ButterflyCoord> {
        (1..=self.rows() / 2).map(|i| self.u(i)).collect()
    }

    pub fn quadrant_b(&self) -> Vec<ButterflyCoord> {
        (self.rows() / 2 + 1..=self.rows())
            .map(|i| self.u(i))
            .collect()
    }

    /// Level-`r` vertices `w_1 .. w_{2^(r-1)}`.
    pub fn quadrant_c(&self) -> Vec<ButterflyCoord> {
        (1..=self.rows() / 2).map(|i| self.w(i)).collect()
    }

    pub fn quadrant_d(&self) -> Vec<ButterflyCoord> {
        (self.rows() / 2 + 1..=self.rows())
            .map(|i| self.w(i))
            .collect()
    }

    /// Boundary coloring: at level 0, `u_i` is red iff `i` is even; at level
    /// `r`, quadrant C is red and D is blue.
    pub fn color(&self, c: ButterflyCoord) -> Result<Color> {
        if !self.contains(c) {
            return Err(Error::BadCoord {
                level: c.level,
                row: c.row,
            });
        }
        if c.level == 0 {
            // i = row + 1 is even exactly when the row is odd.
            Ok(if c.row & 1 == 1 {
                Color::Red
            } else {
                Color::Blue
            })
        } else if c.level == self.r {
            Ok(if c.row < self.rows() / 2 {
                Color::Red
            } else {
                Color::Blue
            })
        } else {
            Err(Error::InteriorVertex {
                level: c.level,
                row: c.row,
            })
        }
    }

    /// The unique geodesic from a level-0 vertex to a level-`r` vertex.
    pub fn route(&self, u: ButterflyCoord, w: ButterflyCoord) -> Result<GeodesicPath> {
        Ok(GeodesicPath::trusted(&self.graph, self.route_ids(u, w)?))
    }

    fn route_ids(&self, u: ButterflyCoord, w: ButterflyCoord) -> Result<Vec<VertexId>> {
        self.checked_id(u)?;
        self.checked_id(w)?;
        if u.level != 0 || w.level != self.r {
            return Err(Error::LevelMismatch(
                "route needs a level-0 start and a level-r end",
            ));
        }
        Ok((0..=self.r)
            .map(|j| {
                let row = level_row_on_route(u.row, w.row, j, self.r);
                self.id(ButterflyCoord::new(j, row))
            })
            .collect())
    }

    /// The diametral `P_middle(end1, end2)`: the geodesic of length `2r` from
    /// `end1` through `middle` to `end2`. The ends must sit on the boundary
    /// level opposite to `middle` and carry different colors.
    pub fn diametral(
        &self,
        middle: ButterflyCoord,
        end1: ButterflyCoord,
        end2: ButterflyCoord,
    ) -> Result<GeodesicPath> {
        let (c1, c2) = (self.color(end1)?, self.color(end2)?);
        let mut path = if middle.level == 0 && end1.level == self.r && end2.level == self.r {
            let mut first = self.route_ids(middle, end1)?;
            first.reverse();
            let second = self.route_ids(middle, end2)?;
            if c1 == c2 {
                return Err(self.not_diametral(end1, end2));
            }
            first.extend_from_slice(&second[1..]);
            first
        } else if middle.level == self.r && end1.level == 0 && end2.level == 0 {
            let first = self.route_ids(end1, middle)?;
            let mut second = self.route_ids(end2, middle)?;
            if c1 == c2 {
                return Err(self.not_diametral(end1, end2));
            }
            second.reverse();
            let mut first = first;
            first.extend_from_slice(&second[1..]);
            first
        } else {
            return Err(Error::LevelMismatch(
                "a diametral needs a middle on one boundary level and both ends on the other",
            ));
        };
        path.shrink_to_fit();
        Ok(GeodesicPath::trusted(&self.graph, path))
    }

    fn not_diametral(&self, a: ButterflyCoord, b: ButterflyCoord) -> Error {
        Error::NotDiametralPair(a.level, a.row, b.level, b.row)
    }

    /// Number of edges joining a degree-2 vertex to a degree-4 vertex.
    pub fn count_24_edges(&self) -> usize {
        let g = &self.graph;
        g.edges()
            .filter(|&(u, v)| {
                let mut d = [g.degree(u), g.degree(v)];
                d.sort_unstable();
                d == [2, 4]
            })
            .count()
    }

    pub fn is_24_edge(&self, u: VertexId, v: VertexId) -> bool {
        let mut d = [self.graph.degree(u), self.graph.degree(v)];
        d.sort_unstable();
        d == [2, 4]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_geodesic;

    fn c(j: u32, s: u64) -> ButterflyCoord {
        ButterflyCoord::new(j, s)
    }

    #[test]
    fn sizes() {
        let bf = ButterflyGraph::new(3).unwrap();
        assert_eq!((bf.graph().n(), bf.graph().edge_count()), (32, 48));
        assert_eq!(bf.graph().degree_histogram(), vec![(2, 16), (4, 16)]);
        let bf = ButterflyGraph::new(5).unwrap();
        assert_eq!((bf.graph().n(), bf.graph().edge_count()), (192, 320));
        assert!(ButterflyGraph::new(0).is_err());
    }

    #[test]
    fn level_zero_neighbors() {
        let bf = ButterflyGraph::new(3).unwrap();
        let nbrs: Vec<_> = bf
            .graph()
            .neighbors(bf.id(c(0, 0)))
            .iter()
            .map(|&v| bf.coord(v))
            .collect();
        assert_eq!(nbrs, vec![c(1, 0), c(1, 4)]);
    }

    #[test]
    fn distances_bf3() {
        let bf = ButterflyGraph::new(3).unwrap();
        let g = bf.graph();
        assert_eq!(g.distance(bf.id(c(0, 0)), bf.id(c(3, 0))), 3);
        assert_eq!(g.distance(bf.id(c(0, 0)), bf.id(c(0, 1))), 6);
        assert_eq!(g.distance(bf.id(c(3, 0)), bf.id(c(3, 4))), 6);
        assert_eq!(
            g.distance(bf.id(c(0, 0)), bf.id(c(3, 5))),
            g.distance(bf.id(c(3, 5)), bf.id(c(0, 0)))
        );
    }

    #[test]
    fn coloring() {
        let bf = ButterflyGraph::new(4).unwrap();
        assert_eq!(bf.color(bf.u(3)), Ok(Color::Blue));
        assert_eq!(bf.color(bf.w(4)), Ok(Color::Red));
        assert_eq!(bf.color(bf.w(11)), Ok(Color::Blue));
        assert_eq!(bf.color(bf.u(2)), Ok(Color::Red));
        assert!(matches!(
            bf.color(c(2, 0)),
            Err(Error::InteriorVertex { .. })
        ));
    }

    #[test]
    fn routes() {
        let bf = ButterflyGraph::new(3).unwrap();
        let coords = |p: GeodesicPath| bf.coords(p.vertices());
        assert_eq!(
            coords(bf.route(c(0, 5), c(3, 5)).unwrap()),
            vec![c(0, 5), c(1, 5), c(2, 5), c(3, 5)]
        );
        assert_eq!(
            coords(bf.route(c(0, 0), c(3, 7)).unwrap()),
            vec![c(0, 0), c(1, 4), c(2, 6), c(3, 7)]
        );
        assert_eq!(
            coords(bf.route(c(0, 1), c(3, 4)).unwrap()),
            vec![c(0, 1), c(1, 5), c(2, 5), c(3, 4)]
        );
        assert!(bf.route(c(1, 0), c(3, 0)).is_err());
        assert!(bf.route(c(0, 0), c(2, 0)).is_err());
    }

    #[test]
    fn route_rows() {
        assert_eq!(level_row_on_route(2, 13, 0, 4), 2);
        assert_eq!(level_row_on_route(2, 13, 4, 4), 13);
        assert_eq!(level_row_on_route(2, 13, 2, 4), 0b1110);
        let bf = ButterflyGraph::new(4).unwrap();
        let p = bf.route(c(0, 2), c(4, 13)).unwrap();
        assert_eq!(bf.coord(p.vertices()[2]), c(2, 14));
    }

    #[test]
    fn diametrals() {
        let bf = ButterflyGraph::new(3).unwrap();
        let p = bf.diametral(bf.u(1), bf.w(1), bf.w(5)).unwrap();
        assert_eq!(
            bf.coords(p.vertices()),
            vec![
                c(3, 0),
                c(2, 0),
                c(1, 0),
                c(0, 0),
                c(1, 4),
                c(2, 4),
                c(3, 4)
            ]
        );
        assert!(is_geodesic(bf.graph(), p.vertices()));
        assert!(matches!(
            bf.diametral(bf.u(1), bf.w(1), bf.w(2)),
            Err(Error::NotDiametralPair(..))
        ));
        assert!(matches!(
            bf.diametral(bf.u(1), bf.u(2), bf.w(2)),
            Err(Error::LevelMismatch(_))
        ));

        let bf4 = ButterflyGraph::new(4).unwrap();
        let p = bf4.diametral(bf4.u(1), bf4.w(1), bf4.w(9)).unwrap();
        assert_eq!(p.len(), 8);
        let at_level0: Vec<_> = p
            .vertices()
            .iter()
            .filter(|&&v| bf4.coord(v).level == 0)
            .collect();
        assert_eq!(at_level0, vec![&bf4.id(bf4.u(1))]);
        // Level-r middle with level-0 ends of opposite color.
        let q = bf4.diametral(bf4.w(3), bf4.u(3), bf4.u(4)).unwrap();
        assert_eq!(q.len(), 8);
        assert!(is_geodesic(bf4.graph(), q.vertices()));
    }

    #[test]
    fn edges_24() {
        assert_eq!(ButterflyGraph::new(3).unwrap().count_24_edges(), 32);
        assert_eq!(ButterflyGraph::new(5).unwrap().count_24_edges(), 128);
        let bf = ButterflyGraph::new(4).unwrap();
        assert_eq!(bf.count_24_edges(), 64);
        for (u, v) in bf.graph().edges().filter(|&(u, v)| bf.is_24_edge(u, v)) {
            let (a, b) = (bf.coord(u), bf.coord(v));
            assert!([a.level, b.level].iter().any(|&l| l == 0 || l == 4));
        }
    }

    #[test]
    fn labels() {
        let bf = ButterflyGraph::new(2).unwrap();
        assert_eq!(bf.graph().label(bf.id(c(1, 3))), Some("L1R3"));
        assert_eq!(ButterflyCoord::parse_label("L12R4095"), Some(c(12, 4095)));
        assert_eq!(ButterflyCoord::parse_label("X1R2"), None);
    }
}
