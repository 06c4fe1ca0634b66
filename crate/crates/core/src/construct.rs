//! Three-stage construction of a vertex geodesic cover of `BF(r)` with
//! `ceil((2/3) 2^r)` diametrals, for `r >= 5`.
//!
//! With `q = 2^(r-3)`:
//!
//! * stage 1 lays `2q` diametrals through level-0 middles `u_1..u_q` and
//!   `u_{7q+1}..u_{8q}`, each joining `w_i` to its partner across the C/D
//!   split;
//! * stage 2 lays `2q` diametrals through level-`r` middles, each joining two
//!   consecutive (hence opposite-colored) level-0 vertices;
//! * stage 3 covers the `4q` boundary vertices left over (`A'`, `B'`, `C'`,
//!   `D'`) with `ceil(4q / 3)` diametrals, three new vertices per path.
//!
//! Stages 1 and 2 already cover every interior vertex: each straight route
//! covers its own row at every interior level, and the partner route covers
//! the row with the top bit (stage 1) or bottom bit (stage 2) flipped.

use crate::butterfly::{ButterflyCoord, ButterflyGraph, Color};
use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::graph::{CoverMode, GeodesicPath};

pub const MIN_DIMENSION: u32 = 5;

/// How the leftover boundary vertices split after the three blocks of `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemainderCase {
    /// `2^(r-3) = 3 ell + 1`.
    One,
    /// `2^(r-3) = 3 ell + 2`.
    Two,
}

/// Boundary vertices not covered by stages 1 and 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Uncovered {
    pub a: Vec<ButterflyCoord>,
    pub b: Vec<ButterflyCoord>,
    pub c: Vec<ButterflyCoord>,
    pub d: Vec<ButterflyCoord>,
}

impl Uncovered {
    pub fn all(&self) -> impl Iterator<Item = ButterflyCoord> + '_ {
        self.a
            .iter()
            .chain(&self.b)
            .chain(&self.c)
            .chain(&self.d)
            .copied()
    }
}

#[derive(Debug, Clone)]
pub struct StagePlan {
    pub stage1: Vec<GeodesicPath>,
    pub stage2: Vec<GeodesicPath>,
    pub stage3: Vec<GeodesicPath>,
    pub uncovered: Uncovered,
    pub case: RemainderCase,
    pub ell: u64,
}

impl StagePlan {
    pub fn paths(&self) -> impl Iterator<Item = &GeodesicPath> {
        self.stage1.iter().chain(&self.stage2).chain(&self.stage3)
    }

    pub fn len(&self) -> usize {
        self.stage1.len() + self.stage2.len() + self.stage3.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `ceil((2/3) 2^r)`.
pub fn optimal_size(r: u32) -> u64 {
    (1u64 << (r + 1)).div_ceil(3)
}

fn require(bf: &ButterflyGraph) -> Result<()> {
    if bf.r() < MIN_DIMENSION {
        Err(Error::DimensionTooSmall {
            r: bf.r(),
            min: MIN_DIMENSION,
        })
    } else {
        Ok(())
    }
}

/// `2^(r-3)`.
fn eighth(bf: &ButterflyGraph) -> u64 {
    bf.rows() / 8
}

pub fn stage1(bf: &ButterflyGraph) -> Result<Vec<GeodesicPath>> {
    require(bf)?;
    stage1_unchecked(bf)
}

pub fn stage2(bf: &ButterflyGraph) -> Result<Vec<GeodesicPath>> {
    require(bf)?;
    stage2_unchecked(bf)
}

pub fn uncovered_after_12(bf: &ButterflyGraph) -> Result<Uncovered> {
    require(bf)?;
    uncovered_unchecked(bf)
}

pub fn stage3(bf: &ButterflyGraph) -> Result<Vec<GeodesicPath>> {
    require(bf)?;
    let uncovered = uncovered_unchecked(bf)?;
    Ok(stage3_unchecked(bf, &uncovered)?.0)
}

pub fn plan(bf: &ButterflyGraph) -> Result<StagePlan> {
    require(bf)?;
    plan_unchecked(bf)
}

/// The full cover, verified for complete vertex coverage before it is
/// returned.
pub fn construct_cover(bf: &ButterflyGraph) -> Result<Cover> {
    let plan = plan(bf)?;
    let cover = Cover::new(CoverMode::Vertex, plan.paths().cloned().collect());
    let report = cover.report(bf.graph());
    if !report.is_valid() {
        return Err(Error::Construction(format!(
            "cover misses {} vertices and has {} invalid paths",
            report.missing.len(),
            report.invalid_paths.len()
        )));
    }
    if cover.len() as u64 != optimal_size(bf.r()) {
        return Err(Error::Construction(format!(
            "built {} paths, expected {}",
            cover.len(),
            optimal_size(bf.r())
        )));
    }
    Ok(cover)
}

// The unchecked variants only need `q = 2^(r-3)` to be even, so they also
// run at r = 4 where the stage layouts can be compared with the worked
// example for BF(4).

pub(crate) fn stage1_unchecked(bf: &ButterflyGraph) -> Result<Vec<GeodesicPath>> {
    let q = eighth(bf);
    let half = 4 * q;
    let mut out = Vec::with_capacity(2 * q as usize);
    for i in 1..=q {
        out.push(bf.diametral(bf.u(i), bf.w(i), bf.w(i + half))?);
    }
    for i in (7 * q + 1..=8 * q).rev() {
        out.push(bf.diametral(bf.u(i), bf.w(i), bf.w(i - half))?);
    }
    Ok(out)
}

pub(crate) fn stage2_unchecked(bf: &ButterflyGraph) -> Result<Vec<GeodesicPath>> {
    let q = eighth(bf);
    let mut out = Vec::with_capacity(2 * q as usize);
    for i in (q + 1..3 * q).step_by(2) {
        out.push(bf.diametral(bf.w(i), bf.u(i), bf.u(i + 1))?);
    }
    for k in 0..q {
        let i = 7 * q - 2 * k;
        out.push(bf.diametral(bf.w(i), bf.u(i), bf.u(i - 1))?);
    }
    Ok(out)
}

pub(crate) fn uncovered_unchecked(bf: &ButterflyGraph) -> Result<Uncovered> {
    let q = eighth(bf);
    let uncovered = Uncovered {
        a: (3 * q + 1..=4 * q).map(|i| bf.u(i)).collect(),
        b: (4 * q + 1..=5 * q).map(|i| bf.u(i)).collect(),
        c: (0..q).map(|k| bf.w(q + 2 + 2 * k)).collect(),
        d: (0..q).map(|k| bf.w(5 * q + 1 + 2 * k)).collect(),
    };

    // Cross-check the closed form against what stages 1 and 2 actually hit.
    let mut hit = vec![false; bf.graph().n()];
    for p in stage1_unchecked(bf)?.iter().chain(&stage2_unchecked(bf)?) {
        for &v in p.vertices() {
            hit[v] = true;
        }
    }
    let mut actual: Vec<ButterflyCoord> = bf
        .level_vertices(0)
        .chain(bf.level_vertices(bf.r()))
        .filter(|&c| !hit[bf.id(c)])
        .collect();
    let mut expected: Vec<ButterflyCoord> = uncovered.all().collect();
    actual.sort();
    expected.sort();
    if actual != expected {
        return Err(Error::Construction(format!(
            "stages 1-2 leave {} boundary vertices uncovered, closed form predicts {}",
            actual.len(),
            expected.len()
        )));
    }
    Ok(uncovered)
}

pub(crate) fn stage3_unchecked(
    bf: &ButterflyGraph,
    uncovered: &Uncovered,
) -> Result<(Vec<GeodesicPath>, RemainderCase, u64)> {
    let q = eighth(bf);
    let ell = q / 3;
    let case = match q - 3 * ell {
        1 => RemainderCase::One,
        2 => RemainderCase::Two,
        _ => unreachable!("a power of two is never divisible by 3"),
    };

    let mut ur = Vec::new();
    let mut ub = Vec::new();
    for &c in uncovered.a.iter().chain(&uncovered.b) {
        match bf.color(c)? {
            Color::Red => ur.push(c),
            Color::Blue => ub.push(c),
        }
    }
    let wr = &uncovered.c;
    let wb = &uncovered.d;
    if ur.len() as u64 != q || ub.len() as u64 != q || wr.len() as u64 != q || wb.len() as u64 != q
    {
        return Err(Error::Construction(
            "leftover boundary vertices are not split evenly by color".into(),
        ));
    }

    let ell = ell as usize;
    let mut out = Vec::with_capacity(4 * ell + 3);
    for i in 0..ell {
        out.push(bf.diametral(ur[i], wr[i], wb[i])?);
    }
    for i in 0..ell {
        out.push(bf.diametral(wr[ell + i], ur[ell + i], ub[i])?);
    }
    for i in 0..ell {
        out.push(bf.diametral(wb[2 * ell + i], ub[2 * ell + i], ur[2 * ell + i])?);
    }
    for i in 0..ell {
        out.push(bf.diametral(ub[ell + i], wb[ell + i], wr[2 * ell + i])?);
    }

    let x = 3 * ell;
    let corner = bf.w(1);
    out.push(bf.diametral(ur[x], wr[x], wb[x])?);
    match case {
        RemainderCase::One => {
            let extra = bf
                .diametral(corner, ub[x], ur[x])
                .or_else(|_| bf.route(ub[x], ButterflyCoord::new(bf.r(), ub[x].row)))?;
            out.push(extra);
        }
        RemainderCase::Two => {
            let y = x + 1;
            out.push(bf.diametral(ub[x], wr[y], wb[y])?);
            out.push(bf.diametral(corner, ur[y], ub[y])?);
        }
    }
    Ok((out, case, ell as u64))
}

pub(crate) fn plan_unchecked(bf: &ButterflyGraph) -> Result<StagePlan> {
    let stage1 = stage1_unchecked(bf)?;
    let stage2 = stage2_unchecked(bf)?;
    let uncovered = uncovered_unchecked(bf)?;
    let (stage3, case, ell) = stage3_unchecked(bf, &uncovered)?;
    Ok(StagePlan {
        stage1,
        stage2,
        stage3,
        uncovered,
        case,
        ell,
    })
}
