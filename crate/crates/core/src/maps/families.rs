//! Closed-form smooth families and the piecewise-linear benchmark maps.

use num_rational::BigRational;
use std::f64::consts::SQRT_2;

use super::{Formula, MapModel, Shape};
use crate::decimal::parse_rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Quartic {
    prefactor: f64,
    v2: f64,
    v3: f64,
}

impl Quartic {
    pub(crate) fn eval(&self, x: f64) -> f64 {
        let r2 = SQRT_2;
        let u = 1.0 - 2.0 * x;
        let cubic_part = 4.0 * (1.0 + 2.0 * r2) * (x - 1.0) * u * u * self.v3;
        let poly = ((-56.0 * x + 20.0 * (4.0 + r2)) * x - (37.0 + 18.0 * r2)) * x + 3.0 * r2 + 5.0;
        self.prefactor * x * (cubic_part + poly * self.v2)
    }
}

/// `e^{-alpha^2 x^2} + beta` on `[-(1+beta), 1+beta]`, unimodal with `c_1 = 0`.
pub fn make_gaussian(alpha: f64, beta: f64) -> Result<MapModel> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::Parameter(format!("alpha must be positive, got {alpha}")));
    }
    if !(beta > -1.0 && beta <= 0.0) {
        return Err(Error::Parameter(format!("beta must lie in (-1, 0], got {beta}")));
    }
    let half = 1.0 + beta;
    Ok(MapModel::from_parts(
        format!("gaussian(alpha={alpha},beta={beta})"),
        (-half, half),
        vec![0.0],
        Shape::Positive,
        Formula::Gaussian { alpha_sq: alpha * alpha, beta },
    ))
}

/// `(v1 - v2)(16x^3 - 24x^2 + 9x) + v2` on `[0, 1]` with turning points `1/4` and `3/4`.
pub fn make_bimodal_cubic(v1: f64, v2: f64) -> Result<MapModel> {
    if !(0.0 <= v2 && v2 < v1 && v1 <= 1.0) {
        return Err(Error::Parameter(format!("need 0 <= v2 < v1 <= 1, got v1={v1}, v2={v2}")));
    }
    Ok(MapModel::from_parts(
        format!("cubic2(v1={v1},v2={v2})"),
        (0.0, 1.0),
        vec![0.25, 0.75],
        Shape::Positive,
        Formula::Cubic { v1, v2 },
    ))
}

/// Trimodal quartic on `[0, 1]` with `f(c_2) = v2` at `c_2 = 1/2` and `f(c_3) = v3` at
/// `c_3 = (2 + sqrt 2)/4`.
pub fn make_trimodal_quartic(v2: f64, v3: f64) -> Result<MapModel> {
    if !(0.0 <= v2 && v2 < v3 && v3 <= 1.0) {
        return Err(Error::Parameter(format!("need 0 <= v2 < v3 <= 1, got v2={v2}, v3={v3}")));
    }
    let r2 = SQRT_2;
    let denom = -7.0 * v2 + 4.0 * r2 * v3 + 2.0 * v3;
    if denom.abs() < 1e-14 {
        return Err(Error::Degenerate(format!("c_1 denominator vanishes at v2={v2}, v3={v3}")));
    }
    let c1 = (-r2 * v2 - 4.0 * v2 + 12.0 * r2 * v3 - 8.0 * v3) / (8.0 * denom);
    let c3 = (2.0 + r2) / 4.0;
    if !(c1 > 0.0 && c1 < 0.5) {
        return Err(Error::Degenerate(format!("c_1 = {c1} is not inside (0, 1/2)")));
    }
    let prefactor = 4.0 * ((2.0 * r2 - 1.0) * v2 - 2.0 * v3) / (2.0 * (2.0 * r2 + 1.0) * v3 - 7.0 * v2);
    Ok(MapModel::from_parts(
        format!("quartic3(v2={v2},v3={v3})"),
        (0.0, 1.0),
        vec![c1, 0.5, c3],
        Shape::Positive,
        Formula::Quartic(Quartic { prefactor, v2, v3 }),
    ))
}

/// Closed form of `f(1)` for the trimodal quartic family.
pub fn quartic_right_endpoint(v2: f64, v3: f64) -> f64 {
    let r2 = SQRT_2;
    4.0 * (5.0 * r2 - 8.0) * v2 * ((2.0 * r2 - 1.0) * v2 - 2.0 * v3)
        / (-7.0 * v2 + 4.0 * r2 * v3 + 2.0 * v3)
}

fn rationals(items: &[&str]) -> Vec<BigRational> {
    items.iter().map(|s| parse_rational(s).expect("literal")).collect()
}

/// Full tent map `1 - |2x - 1|` on `[0, 1]`.
pub fn make_tent() -> MapModel {
    MapModel::piecewise_linear(rationals(&["0", "1/2", "1"]), rationals(&["0", "1", "0"]))
        .expect("tent table is valid")
        .with_label("tent")
}

/// The 4-modal constant-slope (|s| = 3/2) benchmark map. Its endpoint values `f(0) = 0` and
/// `f(1) = 1` follow from the slope and the outermost critical data.
pub fn make_pl4() -> MapModel {
    MapModel::piecewise_linear(
        rationals(&["0", "3/10", "23/60", "7/15", "11/20", "1"]),
        rationals(&["0", "0.450", "0.325", "0.450", "0.325", "1"]),
    )
    .expect("pl4 table is valid")
    .with_label("pl4")
}

/// The 5-modal constant-slope (|s| = 3/2) benchmark map, with `f(0) = f(1) = 0`.
pub fn make_pl5() -> MapModel {
    MapModel::piecewise_linear(
        rationals(&["0", "0.3", "0.4", "0.5", "0.6", "0.7", "1"]),
        rationals(&["0", "0.45", "0.30", "0.45", "0.30", "0.45", "0"]),
    )
    .expect("pl5 table is valid")
    .with_label("pl5")
}
