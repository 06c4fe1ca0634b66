use super::path::endpoints_maximal;
use super::{GeodesicPath, Graph, VertexId};
use crate::error::{Error, Result};

/// Default cap on the number of paths an enumeration may produce.
pub const DEFAULT_ENUM_GUARD: usize = 1_000_000;

/// Environment variable that overrides [`DEFAULT_ENUM_GUARD`].
pub const ENUM_GUARD_ENV: &str = "BFCOVER_ENUM_GUARD";

/// The guard in effect: `BFCOVER_ENUM_GUARD` if it parses as a positive
/// integer, the default otherwise.
pub fn enum_guard() -> usize {
    std::env::var(ENUM_GUARD_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&g: &usize| g > 0)
        .unwrap_or(DEFAULT_ENUM_GUARD)
}

/// Number of shortest `s,t`-paths, counted over the BFS layer DAG from `s`.
pub fn count_geodesics_between(g: &Graph, s: VertexId, t: VertexId) -> u128 {
    let dist = g.distances_from(s);
    if dist[t] == super::UNREACHABLE {
        return 0;
    }
    let mut order: Vec<VertexId> = (0..g.n()).filter(|&v| dist[v] <= dist[t]).collect();
    order.sort_by_key(|&v| dist[v]);
    let mut ways = vec![0u128; g.n()];
    ways[s] = 1;
    for &v in order.iter().skip(1) {
        ways[v] = g
            .neighbors(v)
            .iter()
            .filter(|&&u| dist[u] + 1 == dist[v])
            .map(|&u| ways[u])
            .sum();
    }
    ways[t]
}

/// All shortest `s,t`-paths, oriented from `s`, in lexicographic order of
/// their vertex sequences.
pub fn geodesics_between(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    guard: usize,
) -> Result<Vec<Vec<VertexId>>> {
    let mut out = Vec::new();
    collect_between(g, s, t, guard, &mut out)?;
    Ok(out)
}

fn collect_between(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    guard: usize,
    out: &mut Vec<Vec<VertexId>>,
) -> Result<()> {
    let to_t = g.distances_from(t);
    if to_t[s] == super::UNREACHABLE {
        return Ok(());
    }
    let mut path = vec![s];
    // Explicit stack of (vertex, next neighbor index) over the DAG of edges
    // that decrease the distance to `t`.
    let mut stack = vec![(s, 0usize)];
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        if v == t {
            if out.len() >= guard {
                return Err(Error::GuardExceeded {
                    guard,
                    found: out.len(),
                });
            }
            out.push(path.clone());
            stack.pop();
            path.pop();
            continue;
        }
        let nbrs = g.neighbors(v);
        let mut next = None;
        while top.1 < nbrs.len() {
            let w = nbrs[top.1];
            top.1 += 1;
            if to_t[w] + 1 == to_t[v] {
                next = Some(w);
                break;
            }
        }
        match next {
            Some(w) => {
                path.push(w);
                stack.push((w, 0));
            }
            None => {
                stack.pop();
                path.pop();
            }
        }
    }
    Ok(())
}

/// Every maximal geodesic of a connected graph, once each, oriented with the
/// smaller endpoint id first. Fails once more than `guard` paths are found.
pub fn enumerate_maximal_geodesics(g: &Graph, guard: usize) -> Result<Vec<GeodesicPath>> {
    g.require_connected()?;
    if g.n() == 1 {
        return Ok(vec![GeodesicPath::from_raw(vec![0])]);
    }
    let mut raw = Vec::new();
    for s in 0..g.n() {
        for t in s + 1..g.n() {
            if endpoints_maximal(g, s, t) {
                collect_between(g, s, t, guard, &mut raw)?;
            }
        }
    }
    Ok(raw.into_iter().map(GeodesicPath::from_raw).collect())
}

/// Every geodesic of a connected graph (including the single-vertex ones),
/// canonical orientation, once each.
pub fn enumerate_geodesics(g: &Graph, guard: usize) -> Result<Vec<GeodesicPath>> {
    g.require_connected()?;
    let mut raw: Vec<Vec<VertexId>> = (0..g.n()).map(|v| vec![v]).collect();
    if raw.len() > guard {
        return Err(Error::GuardExceeded {
            guard,
            found: guard,
        });
    }
    for s in 0..g.n() {
        for t in s + 1..g.n() {
            collect_between(g, s, t, guard, &mut raw)?;
        }
    }
    Ok(raw.into_iter().map(GeodesicPath::from_raw).collect())
}
