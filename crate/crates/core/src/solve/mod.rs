//! Minimum geodesic covers of a target set by a candidate family, solved
//! greedily or exactly.
//!
//! A [`CoverInstance`] fixes the graph, the candidate geodesics (all maximal
//! geodesics by default, which never changes the optimum) and the targets.
//! The solvers reduce it to a plain set system and hand it to
//! [`setcover`].

mod bounds;
pub mod io;
pub mod setcover;

use std::collections::HashMap;

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::graph::{
    check_geodesic, enum_guard, enumerate_maximal_geodesics, CoverMode, GeodesicPath, Graph, Target,
};

pub use bounds::{
    bf_lower_bounds, counting_lower_bound, degree_two_targets, edge_24_targets, krr_cover,
    max_special_hits,
};
use setcover::{SetSystem, Status};

/// Node budget used when the caller does not pick one.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone)]
pub struct CoverInstance<'g> {
    graph: &'g Graph,
    mode: CoverMode,
    candidates: Vec<GeodesicPath>,
    targets: Vec<Target>,
    all_targets: bool,
}

impl<'g> CoverInstance<'g> {
    /// All maximal geodesics against every vertex or edge.
    pub fn new(graph: &'g Graph, mode: CoverMode) -> Result<Self> {
        Self::with(graph, mode, None, None)
    }

    /// `None` picks the defaults: maximal geodesics (bounded by
    /// [`enum_guard`]) and the whole vertex or edge set.
    pub fn with(
        graph: &'g Graph,
        mode: CoverMode,
        candidates: Option<Vec<Vec<usize>>>,
        targets: Option<Vec<Target>>,
    ) -> Result<Self> {
        graph.require_connected()?;
        let candidates = match candidates {
            None => enumerate_maximal_geodesics(graph, enum_guard())?,
            Some(raw) => raw
                .into_iter()
                .map(|p| GeodesicPath::new(graph, p))
                .collect::<Result<_>>()?,
        };
        let all_targets = targets.is_none();
        let targets = match targets {
            None => Target::all(graph, mode),
            Some(t) => normalize_targets(graph, mode, t)?,
        };
        Ok(CoverInstance {
            graph,
            mode,
            candidates,
            targets,
            all_targets,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn mode(&self) -> CoverMode {
        self.mode
    }

    pub fn candidates(&self) -> &[GeodesicPath] {
        &self.candidates
    }

    pub fn targets(&self) -> &[Target] {
        &self.targets
    }

    /// For each candidate, the indices of the targets it hits.
    pub fn incidence(&self) -> Vec<Vec<u32>> {
        let index: HashMap<Target, u32> = self
            .targets
            .iter()
            .enumerate()
            .map(|(i, &t)| (t, i as u32))
            .collect();
        self.candidates
            .iter()
            .map(|p| {
                let mut hits: Vec<u32> = Target::hit_by(p.vertices(), self.mode)
                    .filter_map(|t| index.get(&t).copied())
                    .collect();
                hits.sort_unstable();
                hits.dedup();
                hits
            })
            .collect()
    }

    fn set_system(&self) -> SetSystem {
        SetSystem::new(self.targets.len(), self.incidence())
    }

    fn result(&self, sol: setcover::Solution) -> SolveResult {
        let paths = sol
            .chosen
            .iter()
            .map(|&k| self.candidates[k].clone())
            .collect();
        let mut cover = Cover::new(self.mode, paths);
        if !self.all_targets {
            cover.targets = Some(self.targets.clone());
        }
        let status = match sol.status {
            Status::Optimal => SolveStatus::Optimal,
            Status::Feasible => SolveStatus::Feasible(cover.len()),
            Status::Infeasible => SolveStatus::Infeasible,
            Status::BudgetExceeded => SolveStatus::BudgetExceeded,
        };
        SolveResult {
            cover,
            status,
            lower_bound: sol.lower_bound,
            nodes_explored: sol.nodes_explored,
        }
    }
}

fn normalize_targets(g: &Graph, mode: CoverMode, targets: Vec<Target>) -> Result<Vec<Target>> {
    let mut out = Vec::with_capacity(targets.len());
    for t in targets {
        let t = match (mode, t) {
            (CoverMode::Vertex, Target::Vertex(v)) if v < g.n() => t,
            (CoverMode::Edge, Target::Edge(u, v)) if g.has_edge(u, v) => Target::edge(u, v),
            _ => {
                return Err(Error::Instance(format!(
                    "target {t} is not a {mode} of the graph"
                )))
            }
        };
        out.push(t);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// Proven minimum.
    Optimal,
    /// A cover of the given size, not proven minimum.
    Feasible(usize),
    /// Some target is hit by no candidate; the cover is empty.
    Infeasible,
    /// The node budget ran out; the cover is the best one found.
    BudgetExceeded,
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SolveStatus::Optimal => f.write_str("optimal"),
            SolveStatus::Feasible(n) => write!(f, "feasible (<= {n})"),
            SolveStatus::Infeasible => f.write_str("infeasible"),
            SolveStatus::BudgetExceeded => f.write_str("budget exceeded"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub cover: Cover,
    pub status: SolveStatus,
    /// Proven lower bound on the optimum.
    pub lower_bound: usize,
    pub nodes_explored: u64,
}

impl SolveResult {
    pub fn is_optimal(&self) -> bool {
        self.status == SolveStatus::Optimal
    }

    /// `[lower, upper]` for the optimum; `None` when infeasible.
    pub fn interval(&self) -> Option<(usize, usize)> {
        match self.status {
            SolveStatus::Infeasible => None,
            _ => Some((self.lower_bound, self.cover.len())),
        }
    }
}

pub fn greedy_cover(inst: &CoverInstance) -> SolveResult {
    inst.result(setcover::greedy(&inst.set_system()))
}

/// Branch and bound with at most `budget` search nodes.
pub fn exact_cover(inst: &CoverInstance, budget: u64) -> SolveResult {
    inst.result(setcover::exact(&inst.set_system(), budget))
}

/// Checks a raw candidate list against `g` without building an instance.
pub fn invalid_candidates(g: &Graph, candidates: &[Vec<usize>]) -> Vec<usize> {
    candidates
        .iter()
        .enumerate()
        .filter(|(_, p)| check_geodesic(g, p).is_err())
        .map(|(i, _)| i)
        .collect()
}
