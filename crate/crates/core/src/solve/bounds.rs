use crate::butterfly::ButterflyGraph;
use crate::construct::optimal_size;
use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::graph::generators::complete_bipartite;
use crate::graph::{CoverMode, GeodesicPath, Target};

use super::CoverInstance;

/// Largest number of `special` targets any single candidate hits.
pub fn max_special_hits(inst: &CoverInstance, special: &[Target]) -> usize {
    special_hits(inst, special)
        .map(|(_, n)| n)
        .max()
        .unwrap_or(0)
}

fn special_hits<'a>(
    inst: &'a CoverInstance,
    special: &'a [Target],
) -> impl Iterator<Item = (usize, usize)> + 'a {
    let mut sorted = special.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    inst.candidates().iter().enumerate().map(move |(k, p)| {
        let mut hit: Vec<Target> = Target::hit_by(p.vertices(), inst.mode())
            .filter(|t| sorted.binary_search(t).is_ok())
            .collect();
        hit.sort_unstable();
        hit.dedup();
        (k, hit.len())
    })
}

/// `ceil(|special| / per_path_max)`, after checking that no candidate hits
/// more than `per_path_max` special targets.
pub fn counting_lower_bound(
    inst: &CoverInstance,
    special: &[Target],
    per_path_max: usize,
) -> Result<usize> {
    if per_path_max == 0 {
        return Err(Error::Instance(
            "per-path maximum must be at least 1".into(),
        ));
    }
    if let Some((candidate, covers)) = special_hits(inst, special).find(|&(_, n)| n > per_path_max)
    {
        return Err(Error::BoundPremise {
            candidate,
            covers,
            limit: per_path_max,
        });
    }
    let mut distinct = special.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(distinct.len().div_ceil(per_path_max))
}

/// The `2^(r+1)` boundary vertices of `BF(r)`, which have degree 2.
pub fn degree_two_targets(bf: &ButterflyGraph) -> Vec<Target> {
    let g = bf.graph();
    (0..g.n())
        .filter(|&v| g.degree(v) == 2)
        .map(Target::Vertex)
        .collect()
}

/// Edges of `BF(r)` joining a degree-2 vertex to a degree-4 vertex.
pub fn edge_24_targets(bf: &ButterflyGraph) -> Vec<Target> {
    bf.graph()
        .edges()
        .filter(|&(u, v)| bf.is_24_edge(u, v))
        .map(|(u, v)| Target::Edge(u, v))
        .collect()
}

/// `(ceil((2/3) 2^r), 2^r)`: vertex and edge cover lower bounds for `BF(r)`.
pub fn bf_lower_bounds(r: u32) -> (u64, u64) {
    (optimal_size(r), 1u64 << r)
}

/// A cover of `K_{r,r}` by `ceil(2r/3)` paths of length 2. Centers alternate
/// between the sides; each path takes one fresh center and two fresh ends
/// on the other side, topping up with already covered vertices at the end.
pub fn krr_cover(r: usize) -> Result<Cover> {
    if r < 2 {
        return Err(Error::DimensionTooSmall {
            r: r as u32,
            min: 2,
        });
    }
    let g = complete_bipartite(r);
    let side = |s: usize, i: usize| s * r + i;
    let mut next = [0usize; 2];
    let mut paths = Vec::new();
    let mut turn = 0;
    while next[0] < r || next[1] < r {
        let (mut c, mut e) = (turn, 1 - turn);
        if next[e] >= r {
            std::mem::swap(&mut c, &mut e);
        }
        let center = side(c, next[c].min(r - 1));
        next[c] += 1;
        let first = next[e];
        let a = side(e, first);
        let b = if first + 1 < r {
            side(e, first + 1)
        } else {
            side(e, (first + r - 1) % r)
        };
        next[e] += 2;
        paths.push(GeodesicPath::new(&g, vec![a, center, b])?);
        turn = 1 - turn;
    }
    let cover = Cover::new(CoverMode::Vertex, paths);
    let report = cover.report(&g);
    if !report.is_valid() || cover.len() != (2 * r).div_ceil(3) {
        return Err(Error::Construction(format!(
            "K_{{{r},{r}}} pattern produced {} paths, {} missing",
            cover.len(),
            report.missing.len()
        )));
    }
    Ok(cover)
}
