use std::collections::HashSet;

use bfcover::graph::{
    enumerate_geodesics, enumerate_maximal_geodesics, geodesics_between, is_geodesic,
    is_maximal_geodesic, CoverMode, Graph, Target, UNREACHABLE,
};
use bfcover::solve::setcover::{self, SetSystem};
use bfcover::solve::{counting_lower_bound, exact_cover, greedy_cover, CoverInstance, SolveStatus};
use proptest::prelude::*;

const GUARD: usize = 200_000;
const BUDGET: u64 = 5_000_000;

/// Random connected graph: a random spanning tree plus a few extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        let extra = prop::collection::vec((0..n, 0..n), 0..=n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .into_iter()
                .enumerate()
                .map(|(i, p)| (i + 1, p))
                .collect();
            edges.extend(extra.into_iter().filter(|(a, b)| a != b));
            Graph::new(n, edges).unwrap()
        })
    })
}

fn mode() -> impl Strategy<Value = CoverMode> {
    prop_oneof![Just(CoverMode::Vertex), Just(CoverMode::Edge)]
}

/// Smallest number of sets whose union is everything, by exhaustive subset
/// enumeration. `None` if even all sets together miss something.
fn brute_force_optimum(universe: usize, sets: &[Vec<u32>]) -> Option<usize> {
    assert!(universe <= 32 && sets.len() <= 20);
    let masks: Vec<u32> = sets
        .iter()
        .map(|s| s.iter().fold(0u32, |m, &e| m | (1 << e)))
        .collect();
    let full: u32 = if universe == 32 {
        u32::MAX
    } else {
        (1u32 << universe) - 1
    };
    let mut union = vec![0u32; 1 << sets.len()];
    let mut best: Option<usize> = None;
    for mask in 1usize..union.len() {
        let low = mask.trailing_zeros() as usize;
        union[mask] = union[mask & (mask - 1)] | masks[low];
        if union[mask] & full == full {
            let k = mask.count_ones() as usize;
            best = Some(best.map_or(k, |b| b.min(k)));
        }
    }
    if full == 0 {
        return Some(0);
    }
    best
}

fn optimum(inst: &CoverInstance) -> Option<usize> {
    let res = exact_cover(inst, BUDGET);
    assert_ne!(res.status, SolveStatus::BudgetExceeded);
    (res.status == SolveStatus::Optimal).then(|| res.cover.len())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_are_a_metric(g in connected_graph(12)) {
        for u in 0..g.n() {
            prop_assert_eq!(g.distance(u, u), 0);
            for v in 0..g.n() {
                let d = g.distance(u, v);
                prop_assert_ne!(d, UNREACHABLE);
                prop_assert_eq!(d, g.distance(v, u));
                for w in 0..g.n() {
                    prop_assert!(d <= g.distance(u, w) + g.distance(w, v));
                }
            }
        }
    }

    #[test]
    fn subpaths_of_geodesics_are_geodesics(g in connected_graph(10), s in 0usize..10, t in 0usize..10) {
        let (s, t) = (s % g.n(), t % g.n());
        for p in geodesics_between(&g, s, t, GUARD).unwrap() {
            prop_assert!(is_geodesic(&g, &p));
            prop_assert_eq!(p.len() as u32, g.distance(s, t) + 1);
            for i in 0..p.len() {
                for j in i..p.len() {
                    prop_assert!(is_geodesic(&g, &p[i..=j]));
                }
            }
        }
    }

    #[test]
    fn maximality_matches_brute_force(g in connected_graph(8)) {
        // A geodesic is maximal iff no strictly longer geodesic contains it
        // as a contiguous piece, read in either direction.
        let all = enumerate_geodesics(&g, GUARD).unwrap();
        let mut oriented: Vec<Vec<usize>> = Vec::new();
        for p in &all {
            oriented.push(p.vertices().to_vec());
            oriented.push(p.vertices().iter().rev().copied().collect());
        }
        for p in &all {
            let v = p.vertices();
            let extendable = oriented
                .iter()
                .any(|q| q.len() > v.len() && q.windows(v.len()).any(|w| w == v));
            prop_assert_eq!(is_maximal_geodesic(&g, v).unwrap(), !extendable, "{:?}", v);
        }
    }

    #[test]
    fn maximal_set_is_closed_under_reversal(g in connected_graph(8)) {
        let maximal = enumerate_maximal_geodesics(&g, GUARD).unwrap();
        let set: HashSet<Vec<usize>> = maximal.iter().map(|p| p.vertices().to_vec()).collect();
        prop_assert_eq!(set.len(), maximal.len());
        for p in &maximal {
            let rev = p.reversed();
            prop_assert!(is_maximal_geodesic(&g, rev.vertices()).unwrap());
            prop_assert!(set.contains(rev.clone().canonical().vertices()));
        }
        // And it is exactly the maximal members of the full geodesic list.
        let filtered: HashSet<Vec<usize>> = enumerate_geodesics(&g, GUARD)
            .unwrap()
            .into_iter()
            .filter(|p| !p.is_empty() || g.n() == 1)
            .filter(|p| is_maximal_geodesic(&g, p.vertices()).unwrap())
            .map(|p| p.vertices().to_vec())
            .collect();
        prop_assert_eq!(filtered, set);
    }

    #[test]
    fn set_cover_matches_subset_enumeration(
        universe in 0usize..=12,
        sets in prop::collection::vec(prop::collection::vec(0u32..12, 0..6), 1..=20),
    ) {
        let sys = SetSystem::new(universe, sets);
        let expected = brute_force_optimum(universe, sys.sets());
        let sol = setcover::exact(&sys, BUDGET);
        match expected {
            None => prop_assert_eq!(sol.status, setcover::Status::Infeasible),
            Some(k) => {
                prop_assert_eq!(sol.status, setcover::Status::Optimal);
                prop_assert_eq!(sol.chosen.len(), k);
                prop_assert_eq!(sol.lower_bound, k);
                let mut hit = vec![false; universe];
                for &c in &sol.chosen {
                    for &e in &sys.sets()[c] {
                        hit[e as usize] = true;
                    }
                }
                prop_assert!(hit.iter().all(|&h| h));
                let greedy = setcover::greedy(&sys);
                prop_assert!(greedy.lower_bound <= k && k <= greedy.chosen.len());
            }
        }
    }

    #[test]
    fn geodesic_instances_match_subset_enumeration(
        g in connected_graph(9),
        m in mode(),
        pick in prop::collection::vec(any::<prop::sample::Index>(), 1..=20),
        target_pick in prop::collection::vec(any::<prop::sample::Index>(), 0..=12),
    ) {
        let all = enumerate_geodesics(&g, GUARD).unwrap();
        let candidates: Vec<Vec<usize>> = pick.iter().map(|i| all[i.index(all.len())].vertices().to_vec()).collect();
        let universe = Target::all(&g, m);
        let targets: Vec<Target> = if universe.is_empty() {
            Vec::new()
        } else {
            let mut t: Vec<Target> = target_pick.iter().map(|i| universe[i.index(universe.len())]).collect();
            t.sort();
            t.dedup();
            t
        };
        let inst = CoverInstance::with(&g, m, Some(candidates), Some(targets.clone())).unwrap();
        let res = exact_cover(&inst, BUDGET);
        let expected = brute_force_optimum(inst.targets().len(), &inst.incidence());

        // Infeasible exactly when some target lies on no candidate.
        let orphan = inst.targets().iter().any(|t| {
            inst.candidates().iter().all(|p| !Target::hit_by(p.vertices(), m).any(|h| h == *t))
        });
        prop_assert_eq!(orphan, expected.is_none());
        match expected {
            None => prop_assert_eq!(res.status, SolveStatus::Infeasible),
            Some(k) => {
                prop_assert_eq!(res.status, SolveStatus::Optimal);
                prop_assert_eq!(res.cover.len(), k);
                prop_assert!(res.cover.report(&g).is_valid());
                prop_assert!(greedy_cover(&inst).cover.len() >= k);
                let lb = counting_lower_bound(&inst, &targets, inst.incidence().iter().map(Vec::len).max().unwrap_or(1).max(1)).unwrap();
                prop_assert!(lb <= k);
            }
        }
    }

    #[test]
    fn maximal_candidates_do_not_change_the_optimum(g in connected_graph(8), m in mode()) {
        let all: Vec<Vec<usize>> = enumerate_geodesics(&g, GUARD)
            .unwrap()
            .into_iter()
            .map(|p| p.into_vertices())
            .collect();
        let with_all = CoverInstance::with(&g, m, Some(all), None).unwrap();
        let with_maximal = CoverInstance::new(&g, m).unwrap();
        prop_assert_eq!(optimum(&with_all), optimum(&with_maximal));
    }

    #[test]
    fn monotone_in_targets_and_candidates(
        g in connected_graph(8),
        m in mode(),
        keep in prop::collection::vec(any::<bool>(), 64),
    ) {
        let full = CoverInstance::new(&g, m).unwrap();
        let opt_full = optimum(&full).unwrap();

        // Fewer targets never need more paths.
        let fewer: Vec<Target> = full
            .targets()
            .iter()
            .zip(keep.iter().cycle())
            .filter(|(_, &k)| k)
            .map(|(&t, _)| t)
            .collect();
        let sub = CoverInstance::with(&g, m, None, Some(fewer)).unwrap();
        prop_assert!(optimum(&sub).unwrap() <= opt_full);

        // Fewer candidates never need fewer paths (or become infeasible).
        let some: Vec<Vec<usize>> = full
            .candidates()
            .iter()
            .zip(keep.iter().cycle())
            .filter(|(_, &k)| k)
            .map(|(p, _)| p.vertices().to_vec())
            .collect();
        let thinner = CoverInstance::with(&g, m, Some(some), None).unwrap();
        if let Some(k) = optimum(&thinner) {
            prop_assert!(k >= opt_full);
        }
    }
}
