//! Partition of `E(BF(r))` into `2^(r-1)` edge-disjoint isometric cycles of
//! length `4r`, and the induced partition into `2^r` diametrals.
//!
//! The base partition of `BF(3)` comes from an exact search over cycles
//! formed by two geodesics between opposite-colored level-0 vertices. Each
//! larger dimension is obtained by lifting: `BF(r)` minus level 0 is two
//! copies of `BF(r-1)` (rows below and above `2^(r-1)`, shifted up one
//! level), and every cycle `u-P-w-Q-u` of the smaller partition becomes
//!
//! ```text
//! C1 = a - P' - x - reverse(P'') - a
//! C2 = b - Q' - y - reverse(Q'') - b
//! ```
//!
//! where `a, b` are the two level-0 vertices adjacent to both copies of `u`
//! and `x, y` the two adjacent to both copies of `w`.

use serde::{Deserialize, Serialize};

use crate::butterfly::{ButterflyCoord, ButterflyGraph};
use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::graph::{
    geodesics_between, is_geodesic, is_isometric_cycle, normalize_edge, CoverMode, Edge,
    GeodesicPath, Graph, VertexId,
};

/// A cycle through exactly two level-0 vertices (its anchors), stored from
/// the smaller anchor toward its smaller cycle neighbor. The other anchor sits
/// at position `len / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoCycle {
    vertices: Vec<VertexId>,
}

impl IsoCycle {
    fn normalized(mut vertices: Vec<VertexId>, anchors: (VertexId, VertexId)) -> Self {
        let start = anchors.0.min(anchors.1);
        let pos = vertices
            .iter()
            .position(|&v| v == start)
            .expect("anchor on cycle");
        vertices.rotate_left(pos);
        if vertices[vertices.len() - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        IsoCycle { vertices }
    }

    /// Normalizes an arbitrary rotation or direction of a cycle of `bf`.
    /// Requires exactly two level-0 vertices; everything else is left to
    /// [`CyclePartition::verify`].
    pub fn new(bf: &ButterflyGraph, vertices: Vec<VertexId>) -> Result<Self> {
        let level0: Vec<VertexId> = vertices
            .iter()
            .copied()
            .filter(|&v| v < bf.graph().n() && bf.coord(v).level == 0)
            .collect();
        if level0.len() != 2 || vertices.len() < 3 {
            return Err(Error::NotACycle("expected exactly two level-0 vertices"));
        }
        Ok(Self::normalized(vertices, (level0[0], level0[1])))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn anchors(&self) -> (VertexId, VertexId) {
        (self.vertices[0], self.vertices[self.len() / 2])
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.len();
        (0..n).map(move |i| normalize_edge(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// The two halves between the anchors, both starting at the first anchor.
    pub fn halves(&self) -> (Vec<VertexId>, Vec<VertexId>) {
        let m = self.len() / 2;
        let p = self.vertices[..=m].to_vec();
        let mut q = vec![self.vertices[0]];
        q.extend(self.vertices[m..].iter().rev());
        (p, q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsometryCheck {
    Full,
    /// Every `k`-th cycle, starting with the first.
    Every(usize),
    Skip,
}

impl IsometryCheck {
    /// Full up to `r = 8`, a deterministic 10% sample above.
    pub fn auto(r: u32) -> Self {
        if r <= 8 {
            IsometryCheck::Full
        } else {
            IsometryCheck::Every(10)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePartition {
    pub r: u32,
    pub cycles: Vec<IsoCycle>,
}

impl CyclePartition {
    /// Checks every structural invariant against `bf`: cycle count and
    /// length, two antipodal level-0 anchors per cycle, pairwise
    /// edge-disjointness, exact edge coverage, and isometry per `check`.
    pub fn verify(&self, bf: &ButterflyGraph, check: IsometryCheck) -> Result<()> {
        let r = bf.r();
        let g = bf.graph();
        let fail = |msg: String| Err(Error::Construction(msg));
        if self.r != r {
            return fail(format!(
                "partition for r={} checked against BF({r})",
                self.r
            ));
        }
        if self.cycles.len() != 1 << (r - 1) {
            return fail(format!(
                "{} cycles, expected {}",
                self.cycles.len(),
                1 << (r - 1)
            ));
        }
        let mut used = vec![false; g.n() * 4];
        let edge_slot = |u: VertexId, v: VertexId| -> usize {
            let (a, b) = normalize_edge(u, v);
            // Each vertex has at most 4 neighbors; slot by neighbor rank.
            4 * a + g.neighbors(a).binary_search(&b).expect("edge exists")
        };
        let mut edge_total = 0;
        for (i, c) in self.cycles.iter().enumerate() {
            let verts = c.vertices();
            if verts.len() != 4 * r as usize {
                return fail(format!("cycle {i} has length {}", verts.len()));
            }
            let level0: Vec<usize> = (0..verts.len())
                .filter(|&k| bf.coord(verts[k]).level == 0)
                .collect();
            if level0 != [0, 2 * r as usize] {
                return fail(format!(
                    "cycle {i} has level-0 vertices at positions {level0:?}"
                ));
            }
            let mut sorted = verts.to_vec();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return fail(format!("cycle {i} repeats a vertex"));
            }
            for (u, v) in c.edges() {
                if !g.has_edge(u, v) {
                    return fail(format!(
                        "cycle {i}: {} and {} not adjacent",
                        bf.coord(u),
                        bf.coord(v)
                    ));
                }
                let slot = edge_slot(u, v);
                if used[slot] {
                    return fail(format!("edge {}-{} used twice", bf.coord(u), bf.coord(v)));
                }
                used[slot] = true;
                edge_total += 1;
            }
            let wanted = match check {
                IsometryCheck::Full => true,
                IsometryCheck::Every(k) => i % k.max(1) == 0,
                IsometryCheck::Skip => false,
            };
            if wanted && !is_isometric_cycle(g, verts)? {
                return fail(format!("cycle {i} is not isometric"));
            }
        }
        if edge_total != g.edge_count() {
            return fail(format!(
                "cycles use {edge_total} of {} edges",
                g.edge_count()
            ));
        }
        Ok(())
    }
}

/// Exhaustive search for a partition of `E(BF(r))` into isometric `4r`-cycles
/// through two opposite-colored level-0 anchors. Supports `r <= 4` (at most
/// 128 edges); returns `None` if no such partition exists.
pub fn search_cycle_partition(bf: &ButterflyGraph) -> Result<Option<CyclePartition>> {
    let g = bf.graph();
    let r = bf.r();
    let edges: Vec<Edge> = g.edges().collect();
    if edges.len() > 128 {
        return Err(Error::DimensionTooLarge(r));
    }
    let edge_bit = |u: VertexId, v: VertexId| -> u128 {
        1u128
            << edges
                .binary_search(&normalize_edge(u, v))
                .expect("edge exists")
    };

    let mut candidates: Vec<(u128, Vec<VertexId>)> = Vec::new();
    let level0: Vec<ButterflyCoord> = bf.level_vertices(0).collect();
    for (i, &cu) in level0.iter().enumerate() {
        for &cw in &level0[i + 1..] {
            if bf.color(cu)? == bf.color(cw)? {
                continue;
            }
            let (u, w) = (bf.id(cu), bf.id(cw));
            let paths = geodesics_between(g, u, w, usize::MAX)?;
            for (a, p) in paths.iter().enumerate() {
                for q in &paths[a + 1..] {
                    let inner = &p[1..p.len() - 1];
                    if q[1..q.len() - 1].iter().any(|v| inner.contains(v)) {
                        continue;
                    }
                    let mut cycle = p.clone();
                    cycle.extend(q[1..q.len() - 1].iter().rev());
                    if !is_isometric_cycle(g, &cycle)? {
                        continue;
                    }
                    let n = cycle.len();
                    let mask =
                        (0..n).fold(0u128, |m, k| m | edge_bit(cycle[k], cycle[(k + 1) % n]));
                    candidates.push((mask, cycle));
                }
            }
        }
    }

    let full: u128 = if edges.len() == 128 {
        u128::MAX
    } else {
        (1u128 << edges.len()) - 1
    };
    let mut chosen = Vec::new();
    if !exact_edge_cover(&candidates, 0, full, &mut chosen) {
        return Ok(None);
    }
    let cycles = chosen
        .into_iter()
        .map(|k| {
            let cycle = candidates[k].1.clone();
            let anchors = (cycle[0], cycle[cycle.len() / 2]);
            IsoCycle::normalized(cycle, anchors)
        })
        .collect();
    Ok(Some(CyclePartition { r, cycles }))
}

fn exact_edge_cover(
    candidates: &[(u128, Vec<VertexId>)],
    used: u128,
    full: u128,
    chosen: &mut Vec<usize>,
) -> bool {
    if used == full {
        return true;
    }
    let free = full & !used;
    let lowest = free & free.wrapping_neg();
    for (k, (mask, _)) in candidates.iter().enumerate() {
        if mask & lowest != 0 && mask & used == 0 {
            chosen.push(k);
            if exact_edge_cover(candidates, used | mask, full, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Base partition of `BF(3)`, as found by [`search_cycle_partition`] and
/// frozen here. Each row is one 12-cycle of `[level, row]` coordinates.
const BASE_CYCLES_BF3: [[(u32, u64); 12]; 4] = include!("base_cycles_bf3.in");

pub fn base_cycles_bf3() -> Result<CyclePartition> {
    let bf = ButterflyGraph::new(3)?;
    let cycles = BASE_CYCLES_BF3
        .iter()
        .map(|row| {
            let verts: Vec<VertexId> = row
                .iter()
                .map(|&(j, s)| bf.id(ButterflyCoord::new(j, s)))
                .collect();
            let anchors = (verts[0], verts[6]);
            IsoCycle::normalized(verts, anchors)
        })
        .collect();
    let part = CyclePartition { r: 3, cycles };
    part.verify(&bf, IsometryCheck::Full)?;
    Ok(part)
}

/// Images of `[j, s]` of `BF(r-1)` in the low-row and high-row copies inside
/// `BF(r)`.
pub fn embed(c: ButterflyCoord, r: u32) -> (ButterflyCoord, ButterflyCoord) {
    let half = 1u64 << (r - 1);
    (
        ButterflyCoord::new(c.level + 1, c.row),
        ButterflyCoord::new(c.level + 1, c.row + half),
    )
}

/// Lifts a valid partition of `BF(r-1)` to `BF(r)`, keeping cycle order and
/// emitting `C1` before `C2`. Only the per-cycle adjacency is checked here;
/// use [`CyclePartition::verify`] for the global invariants.
pub fn lift_partition(prev: &CyclePartition, bf: &ButterflyGraph) -> Result<CyclePartition> {
    let r = bf.r();
    if r < 4 || prev.r + 1 != r {
        return Err(Error::Construction(format!(
            "cannot lift a BF({}) partition into BF({r})",
            prev.r
        )));
    }
    let g = bf.graph();
    let prev_rows = 1usize << prev.r;
    let prev_coord =
        |v: VertexId| ButterflyCoord::new((v / prev_rows) as u32, (v % prev_rows) as u64);
    let half = 1u64 << (r - 1);

    let lift_half = |path: &[VertexId]| -> (Vec<VertexId>, Vec<VertexId>) {
        path.iter()
            .map(|&v| {
                let (lo, hi) = embed(prev_coord(v), r);
                (bf.id(lo), bf.id(hi))
            })
            .unzip()
    };

    let mut cycles = Vec::with_capacity(2 * prev.cycles.len());
    for c in &prev.cycles {
        let (p, q) = c.halves();
        let (su, sw) = (prev_coord(p[0]).row, prev_coord(p[p.len() - 1]).row);
        let a = bf.id(ButterflyCoord::new(0, su));
        let b = bf.id(ButterflyCoord::new(0, su + half));
        let x = bf.id(ButterflyCoord::new(0, sw));
        let y = bf.id(ButterflyCoord::new(0, sw + half));
        for (anchor, other, half_path) in [(a, x, &p), (b, y, &q)] {
            let (lo, hi) = lift_half(half_path);
            let mut cycle = Vec::with_capacity(4 * r as usize);
            cycle.push(anchor);
            cycle.extend_from_slice(&lo);
            cycle.push(other);
            cycle.extend(hi.iter().rev());
            check_closed_walk(g, &cycle)?;
            cycles.push(IsoCycle::normalized(cycle, (anchor, other)));
        }
    }
    Ok(CyclePartition { r, cycles })
}

fn check_closed_walk(g: &Graph, cycle: &[VertexId]) -> Result<()> {
    let n = cycle.len();
    if (0..n).all(|k| g.has_edge(cycle[k], cycle[(k + 1) % n])) {
        Ok(())
    } else {
        Err(Error::Construction("lifted cycle breaks adjacency".into()))
    }
}

/// `S(r)`: the base partition lifted `r - 3` times, verified at every step
/// (isometry per [`IsometryCheck::auto`] at the final dimension).
pub fn edge_cycle_partition(r: u32) -> Result<CyclePartition> {
    if r < 3 {
        return Err(Error::DimensionTooSmall { r, min: 3 });
    }
    let mut part = base_cycles_bf3()?;
    for k in 4..=r {
        let bf = ButterflyGraph::new(k)?;
        part = lift_partition(&part, &bf)?;
        let check = if k == r {
            IsometryCheck::auto(k)
        } else {
            IsometryCheck::Skip
        };
        part.verify(&bf, check)?;
    }
    Ok(part)
}

/// Cuts every cycle at its anchors into two diametrals of length `2r`. The
/// result is an edge-disjoint edge cover with `2^r` paths.
pub fn split_to_diametrals(part: &CyclePartition, bf: &ButterflyGraph) -> Result<Cover> {
    let g = bf.graph();
    let mut paths = Vec::with_capacity(2 * part.cycles.len());
    for c in &part.cycles {
        let (p, mut q) = c.halves();
        q.reverse();
        for half in [p, q] {
            if half.len() != 2 * bf.r() as usize + 1 || !is_geodesic(g, &half) {
                let (s, t) = c.anchors();
                return Err(Error::Construction(format!(
                    "anchors {} and {} are not antipodal at distance 2r",
                    bf.coord(s),
                    bf.coord(t)
                )));
            }
            paths.push(GeodesicPath::new(g, half)?);
        }
    }
    Ok(Cover::new(CoverMode::Edge, paths))
}

/// `{"r":N,"cycles":[...],"diametrals":[...]}` with `[level, row]` vertices.
/// Either list may be omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionFile {
    pub r: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<Vec<ButterflyCoord>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diametrals: Option<Vec<Vec<ButterflyCoord>>>,
}

impl PartitionFile {
    pub fn new(
        bf: &ButterflyGraph,
        cycles: Option<&CyclePartition>,
        diametrals: Option<&Cover>,
    ) -> Self {
        PartitionFile {
            r: bf.r(),
            cycles: cycles.map(|p| p.cycles.iter().map(|c| bf.coords(c.vertices())).collect()),
            diametrals: diametrals
                .map(|d| d.paths.iter().map(|p| bf.coords(p.vertices())).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("partition serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The cycle list as a [`CyclePartition`] of `bf`, unverified.
    pub fn cycle_partition(&self, bf: &ButterflyGraph) -> Result<Option<CyclePartition>> {
        let Some(cycles) = &self.cycles else {
            return Ok(None);
        };
        let cycles = cycles
            .iter()
            .map(|c| {
                let ids = c
                    .iter()
                    .map(|&x| bf.checked_id(x))
                    .collect::<Result<Vec<_>>>()?;
                IsoCycle::new(bf, ids)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(CyclePartition { r: self.r, cycles }))
    }

    /// The diametral list as raw vertex-id paths of `bf`, unverified.
    pub fn diametral_paths(&self, bf: &ButterflyGraph) -> Result<Option<Vec<Vec<VertexId>>>> {
        self.diametrals
            .as_ref()
            .map(|ps| {
                ps.iter()
                    .map(|p| p.iter().map(|&x| bf.checked_id(x)).collect())
                    .collect()
            })
            .transpose()
    }
}
