use std::collections::HashMap;

use bfcover::butterfly::{ButterflyCoord, ButterflyGraph, Color};
use bfcover::graph::{count_geodesics_between, geodesics_between, is_maximal_geodesic, Graph};
use bfcover::partition::embed;

fn bf(r: u32) -> ButterflyGraph {
    ButterflyGraph::new(r).unwrap()
}

#[test]
fn counting_formulas() {
    for r in 2..=12u32 {
        let b = bf(r);
        let g = b.graph();
        let rows = 1usize << r;
        assert_eq!(g.n(), (r as usize + 1) * rows);
        assert_eq!(g.edge_count(), r as usize * 2 * rows);
        assert_eq!(b.count_24_edges(), 4 * rows);
        for v in 0..g.n() {
            let level = b.coord(v).level;
            let expected = if level == 0 || level == r { 2 } else { 4 };
            assert_eq!(g.degree(v), expected);
        }
    }
}

#[test]
fn boundary_to_boundary_geodesics_are_unique_routes() {
    for r in 1..=4 {
        let b = bf(r);
        for u in b.level_vertices(0) {
            for w in b.level_vertices(r) {
                let (s, t) = (b.id(u), b.id(w));
                assert_eq!(count_geodesics_between(b.graph(), s, t), 1, "{u} {w}");
                assert_eq!(b.graph().distance(s, t), r);
                let only = geodesics_between(b.graph(), s, t, 10).unwrap();
                assert_eq!(only[0], b.route(u, w).unwrap().vertices());
            }
        }
    }
}

#[test]
fn boundary_distances_follow_colors() {
    for r in 2..=5 {
        let b = bf(r);
        for level in [0, r] {
            let side: Vec<ButterflyCoord> = b.level_vertices(level).collect();
            for &x in &side {
                for &y in &side {
                    let d = b.graph().distance(b.id(x), b.id(y));
                    if b.color(x).unwrap() != b.color(y).unwrap() {
                        assert_eq!(d, 2 * r, "{x} {y}");
                    } else {
                        assert!(d < 2 * r, "{x} {y}");
                    }
                }
            }
        }
    }
}

#[test]
fn opposite_level_r_pairs_have_2_to_the_r_maximal_geodesics() {
    let r = 3;
    let b = bf(r);
    let top: Vec<ButterflyCoord> = b.level_vertices(r).collect();
    let mut pairs = 0;
    for &x in &top {
        for &y in &top {
            if x < y && b.color(x).unwrap() == Color::Red && b.color(y).unwrap() == Color::Blue {
                let paths = geodesics_between(b.graph(), b.id(x), b.id(y), 1000).unwrap();
                assert_eq!(paths.len(), 1 << r, "{x} {y}");
                for p in &paths {
                    assert!(is_maximal_geodesic(b.graph(), p).unwrap());
                }
                pairs += 1;
            }
        }
    }
    assert_eq!(pairs, 16);
}

/// Connected components of `g` restricted to vertices with `keep[v]`.
fn components(g: &Graph, keep: &[bool]) -> Vec<Vec<usize>> {
    let mut comp = vec![usize::MAX; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if !keep[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            for &y in g.neighbors(members[i]) {
                if keep[y] && comp[y] == usize::MAX {
                    comp[y] = id;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

#[test]
fn removing_level_zero_leaves_two_copies_of_the_smaller_butterfly() {
    for r in 2..=6 {
        let big = bf(r);
        let small = bf(r - 1);
        let keep: Vec<bool> = (0..big.graph().n())
            .map(|v| big.coord(v).level > 0)
            .collect();
        let comps = components(big.graph(), &keep);
        assert_eq!(comps.len(), 2, "r={r}");

        // Each lift map is a bijection onto one component that preserves
        // adjacency in both directions.
        for pick in 0..2 {
            let image: HashMap<usize, usize> = (0..small.graph().n())
                .map(|v| {
                    let (lo, hi) = embed(small.coord(v), r);
                    (v, big.id(if pick == 0 { lo } else { hi }))
                })
                .collect();
            let mut targets: Vec<usize> = image.values().copied().collect();
            targets.sort_unstable();
            assert!(comps.contains(&targets), "r={r} copy {pick}");
            for a in 0..small.graph().n() {
                for c in 0..small.graph().n() {
                    assert_eq!(
                        small.graph().has_edge(a, c),
                        big.graph().has_edge(image[&a], image[&c])
                    );
                }
            }
        }
    }
}
