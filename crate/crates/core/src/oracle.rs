//! Brute-force lap and crossing counts of `f^n`, independent of the symbol recursion.
//!
//! The exact oracle works on piecewise-linear maps with rational tables: `f^n` is again
//! piecewise linear, and composing with `f` only requires inserting `f`'s breakpoints between
//! consecutive breakpoint values. Lap and crossing counts depend on the sequence of breakpoint
//! values alone, so abscissae are not tracked. The grid oracle samples `f^n` on a uniform grid.

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use std::cmp::Ordering;

use crate::decimal::rational_from_f64;
use crate::error::{Error, Result};
use crate::maps::MapModel;

/// Default cap on the number of breakpoints of `f^n` in the exact oracle.
pub const DEFAULT_BREAKPOINT_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMethod {
    Exact,
    Grid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LapProfile {
    pub n: usize,
    /// Lap number of `f^n`.
    pub laps: u64,
    /// Transversal solutions of `f^n(x) = c_i` in `(a, b)`, per critical line.
    pub crossings: Vec<u64>,
    pub method: OracleMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<usize>,
    /// Exact oracle: turning points of `f^n` lying exactly on a critical line (not counted).
    /// Grid oracle: zero finite differences met while counting laps.
    #[serde(skip_serializing_if = "is_zero")]
    pub degenerate: u64,
}

fn is_zero(v: &u64) -> bool {
    *v == 0
}

fn sign(ord: Ordering) -> i8 {
    match ord {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Lap number and crossings of `f^n` for a piecewise-linear map with exact data.
pub fn lap_count_exact(map: &MapModel, n: usize) -> Result<LapProfile> {
    lap_count_exact_capped(map, n, DEFAULT_BREAKPOINT_CAP)
}

pub fn lap_count_exact_capped(map: &MapModel, n: usize, cap: usize) -> Result<LapProfile> {
    Ok(exact_profiles(map, n, cap)?.pop().expect("profiles for 0..=n"))
}

/// Exact profiles for `f^0, f^1, ..., f^up_to`.
pub fn exact_profiles(map: &MapModel, up_to: usize, cap: usize) -> Result<Vec<LapProfile>> {
    let table = map.pl_table().ok_or(Error::NotPiecewiseLinear)?;
    let bps = table.breakpoints();
    let interior = &bps[1..bps.len() - 1];
    let lines: Vec<BigRational> = table
        .turning_indices()
        .into_iter()
        .map(|j| bps[j].clone())
        .collect();

    // f^0 = identity on [a, b].
    let mut values = vec![bps[0].clone(), bps[bps.len() - 1].clone()];
    let mut out = Vec::with_capacity(up_to + 1);
    out.push(profile_from_values(0, &values, &lines));
    for n in 1..=up_to {
        let mut next = Vec::with_capacity(values.len() * 2);
        next.push(table.eval_exact(&values[0]));
        for w in values.windows(2) {
            let (y0, y1) = (&w[0], &w[1]);
            let (lo, hi) = if y0 < y1 { (y0, y1) } else { (y1, y0) };
            let start = interior.partition_point(|p| p <= lo);
            let end = interior.partition_point(|p| p < hi);
            let between = &interior[start..end];
            if y0 < y1 {
                next.extend(between.iter().map(|p| table.eval_exact(p)));
            } else {
                next.extend(between.iter().rev().map(|p| table.eval_exact(p)));
            }
            next.push(table.eval_exact(y1));
            if next.len() > cap {
                return Err(Error::Resource { count: next.len(), cap });
            }
        }
        values = next;
        out.push(profile_from_values(n, &values, &lines));
    }
    Ok(out)
}

fn profile_from_values(n: usize, values: &[BigRational], lines: &[BigRational]) -> LapProfile {
    let dirs: Vec<i8> = values.windows(2).map(|w| sign(w[1].cmp(&w[0]))).collect();
    let mut laps = 1u64;
    let mut crossings = vec![0u64; lines.len()];
    let mut degenerate = 0u64;
    for (j, w) in values.windows(2).enumerate() {
        if j > 0 && dirs[j] != dirs[j - 1] {
            laps += 1;
        }
        let (lo, hi) = if w[0] < w[1] { (&w[0], &w[1]) } else { (&w[1], &w[0]) };
        for (i, c) in lines.iter().enumerate() {
            if lo < c && c < hi {
                crossings[i] += 1;
            }
        }
    }
    // Interior breakpoints sitting exactly on a critical line.
    for j in 1..values.len() - 1 {
        for (i, c) in lines.iter().enumerate() {
            if &values[j] == c {
                if dirs[j - 1] == dirs[j] {
                    crossings[i] += 1;
                } else {
                    degenerate += 1;
                }
            }
        }
    }
    LapProfile { n, laps, crossings, method: OracleMethod::Exact, grid: None, degenerate }
}

/// Grid estimate of the lap number and crossings of `f^n` on `grid` uniform points.
pub fn lap_count_grid(map: &MapModel, n: usize, grid: usize) -> LapProfile {
    grid_profiles(map, n, grid).pop().expect("profiles for 0..=n")
}

/// Grid profiles for `f^0, ..., f^up_to`. Counts are lower bounds that stabilize as the grid
/// is refined.
pub fn grid_profiles(map: &MapModel, up_to: usize, grid: usize) -> Vec<LapProfile> {
    let grid = grid.max(2);
    let (a, b) = map.interval();
    let step = (b - a) / (grid - 1) as f64;
    let mut values: Vec<f64> = (0..grid)
        .map(|k| if k + 1 == grid { b } else { a + step * k as f64 })
        .collect();
    let lines = map.critical_points();
    let mut out = Vec::with_capacity(up_to + 1);
    out.push(profile_from_samples(0, &values, lines, grid));
    for n in 1..=up_to {
        values.par_iter_mut().for_each(|v| *v = map.apply(*v).clamp(a, b));
        out.push(profile_from_samples(n, &values, lines, grid));
    }
    out
}

fn profile_from_samples(n: usize, values: &[f64], lines: &[f64], grid: usize) -> LapProfile {
    let mut laps = 1u64;
    let mut plateaus = 0u64;
    let mut last_dir = 0i8;
    for w in values.windows(2) {
        let d = sign(w[1].total_cmp(&w[0]));
        if d == 0 {
            plateaus += 1;
            continue;
        }
        if last_dir != 0 && d != last_dir {
            laps += 1;
        }
        last_dir = d;
    }
    let crossings = lines
        .par_iter()
        .map(|&c| {
            let mut count = 0u64;
            let mut last = 0i8;
            for &v in values {
                let s = sign(v.total_cmp(&c));
                if s == 0 {
                    continue;
                }
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
            count
        })
        .collect();
    LapProfile { n, laps, crossings, method: OracleMethod::Grid, grid: Some(grid), degenerate: plateaus }
}

/// Piecewise-linear map through `(a, f(a)), (c_1, f(c_1)), ..., (c_l, f(c_l)), (b, f(b))`.
/// When every critical value and endpoint value of `f` lands on a boundary fixed point (as for
/// full-branch maps), the interpolant has the same itineraries and therefore the same lap
/// numbers, which gives smooth maps of that kind an exact oracle.
pub fn turning_point_interpolant(map: &MapModel) -> Result<MapModel> {
    let (a, b) = map.interval();
    let mut xs = vec![a];
    xs.extend_from_slice(map.critical_points());
    xs.push(b);
    let bps = xs.iter().map(|&x| rational_from_f64(x)).collect::<Result<Vec<_>>>()?;
    let vals = xs
        .iter()
        .map(|&x| map.evaluate(x).and_then(rational_from_f64))
        .collect::<Result<Vec<_>>>()?;
    Ok(MapModel::piecewise_linear(bps, vals)?.with_label(format!("interpolant({})", map.label())))
}
