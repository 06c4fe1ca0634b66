//! Unweighted set cover over an abstract universe `0..m`.
//!
//! Universes of at most 128 elements use a `u128` mask; larger ones use
//! sorted index vectors. Both share the same greedy and branch-and-bound
//! code through [`Universe`].

/// Outcome of a solver run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// The returned cover is minimum.
    Optimal,
    /// A cover was found but not proven minimum (greedy).
    Feasible,
    /// Some element lies in no set.
    Infeasible,
    /// Search stopped at the node budget; the cover is the best found.
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// Indices into the set list, in pick order.
    pub chosen: Vec<usize>,
    pub status: Status,
    /// Proven lower bound on the optimum.
    pub lower_bound: usize,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    universe: usize,
    sets: Vec<Vec<u32>>,
}

impl SetSystem {
    /// Elements outside `0..universe` are dropped; duplicates collapse.
    pub fn new(universe: usize, sets: Vec<Vec<u32>>) -> Self {
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.retain(|&e| (e as usize) < universe);
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        SetSystem { universe, sets }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[Vec<u32>] {
        &self.sets
    }

    fn uncoverable(&self) -> bool {
        let mut hit = vec![false; self.universe];
        for s in &self.sets {
            for &e in s {
                hit[e as usize] = true;
            }
        }
        hit.iter().any(|h| !h)
    }
}

pub trait Universe: Clone {
    fn from_elems(elems: &[u32]) -> Self;
    fn full(m: usize) -> Self;
    fn is_empty(&self) -> bool;
    fn count(&self) -> usize;
    fn overlap(&self, other: &Self) -> usize;
    fn minus(&self, other: &Self) -> Self;
    fn elems(&self) -> Vec<u32>;
}

impl Universe for u128 {
    fn from_elems(elems: &[u32]) -> Self {
        elems.iter().fold(0, |m, &e| m | (1u128 << e))
    }

    fn full(m: usize) -> Self {
        if m == 128 {
            u128::MAX
        } else {
            (1u128 << m) - 1
        }
    }

    fn is_empty(&self) -> bool {
        *self == 0
    }

    fn count(&self) -> usize {
        self.count_ones() as usize
    }

    fn overlap(&self, other: &Self) -> usize {
        (self & other).count_ones() as usize
    }

    fn minus(&self, other: &Self) -> Self {
        self & !other
    }

    fn elems(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.count());
        let mut m = *self;
        while m != 0 {
            out.push(m.trailing_zeros());
            m &= m - 1;
        }
        out
    }
}

/// Sorted, duplicate-free element list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseSet(Vec<u32>);

impl Universe for SparseSet {
    fn from_elems(elems: &[u32]) -> Self {
        let mut v = elems.to_vec();
        v.sort_unstable();
        v.dedup();
        SparseSet(v)
    }

    fn full(m: usize) -> Self {
        SparseSet((0..m as u32).collect())
    }

    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn count(&self) -> usize {
        self.0.len()
    }

    fn overlap(&self, other: &Self) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    fn minus(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &e in &self.0 {
            while j < other.0.len() && other.0[j] < e {
                j += 1;
            }
            if j >= other.0.len() || other.0[j] != e {
                out.push(e);
            }
        }
        SparseSet(out)
    }

    fn elems(&self) -> Vec<u32> {
        self.0.clone()
    }
}

/// Repeatedly takes the set covering the most uncovered elements, lowest
/// index on ties.
pub fn greedy(sys: &SetSystem) -> Solution {
    if sys.universe <= 128 {
        greedy_with::<u128>(sys)
    } else {
        greedy_with::<SparseSet>(sys)
    }
}

/// Branch and bound: branch on the uncovered element contained in the fewest
/// sets, prune with `|chosen| + ceil(|uncovered| / best single overlap)`,
/// start from the greedy cover. Stops after `budget` nodes.
pub fn exact(sys: &SetSystem, budget: u64) -> Solution {
    if sys.universe <= 128 {
        exact_with::<u128>(sys, budget)
    } else {
        exact_with::<SparseSet>(sys, budget)
    }
}

fn infeasible() -> Solution {
    Solution {
        chosen: Vec::new(),
        status: Status::Infeasible,
        lower_bound: 0,
        nodes_explored: 0,
    }
}

fn counting_bound<U: Universe>(sets: &[U], uncovered: &U) -> usize {
    let m = uncovered.count();
    if m == 0 {
        return 0;
    }
    let best = sets.iter().map(|s| s.overlap(uncovered)).max().unwrap_or(0);
    if best == 0 {
        usize::MAX
    } else {
        m.div_ceil(best)
    }
}

fn greedy_with<U: Universe>(sys: &SetSystem) -> Solution {
    if sys.uncoverable() {
        return infeasible();
    }
    let sets: Vec<U> = sys.sets.iter().map(|s| U::from_elems(s)).collect();
    let mut uncovered = U::full(sys.universe);
    let lower_bound = counting_bound(&sets, &uncovered);
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let (best, gain) = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.overlap(&uncovered)))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        debug_assert!(gain > 0);
        chosen.push(best);
        uncovered = uncovered.minus(&sets[best]);
    }
    Solution {
        status: Status::Feasible,
        lower_bound,
        chosen,
        nodes_explored: 0,
    }
}

struct Search<'a, U> {
    sets: &'a [U],
    containing: &'a [Vec<usize>],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<U: Universe> Search<'_, U> {
    fn run(&mut self, uncovered: &U, chosen: &mut Vec<usize>) {
        if self.nodes >= self.budget {
            self.exhausted = true;
            return;
        }
        self.nodes += 1;
        if uncovered.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        let bound = counting_bound(self.sets, uncovered);
        if bound == usize::MAX || chosen.len() + bound >= self.best.len() {
            return;
        }
        let pivot = uncovered
            .elems()
            .into_iter()
            .min_by_key(|&e| (self.containing[e as usize].len(), e))
            .expect("nonempty");
        let mut options: Vec<(usize, usize)> = self.containing[pivot as usize]
            .iter()
            .map(|&k| (k, self.sets[k].overlap(uncovered)))
            .collect();
        options.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        for (k, _) in options {
            chosen.push(k);
            let rest = uncovered.minus(&self.sets[k]);
            self.run(&rest, chosen);
            chosen.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

fn exact_with<U: Universe>(sys: &SetSystem, budget: u64) -> Solution {
    let start = greedy_with::<U>(sys);
    if start.status == Status::Infeasible {
        return start;
    }
    if start.chosen.len() == start.lower_bound {
        return Solution {
            status: Status::Optimal,
            ..start
        };
    }
    let sets: Vec<U> = sys.sets.iter().map(|s| U::from_elems(s)).collect();
    let mut containing = vec![Vec::new(); sys.universe];
    for (k, s) in sys.sets.iter().enumerate() {
        for &e in s {
            containing[e as usize].push(k);
        }
    }
    let mut search = Search {
        sets: &sets,
        containing: &containing,
        best: start.chosen.clone(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    search.run(&U::full(sys.universe), &mut Vec::new());
    let best = search.best;
    if search.exhausted {
        Solution {
            lower_bound: start.lower_bound,
            chosen: best,
            status: Status::BudgetExceeded,
            nodes_explored: search.nodes,
        }
    } else {
        Solution {
            lower_bound: best.len(),
            chosen: best,
            status: Status::Optimal,
            nodes_explored: search.nodes,
        }
    }
}
