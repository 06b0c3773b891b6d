use num_rational::BigRational;
use num_traits::Zero;
use std::cmp::Ordering;

use crate::decimal::to_f64;
use crate::error::{Error, Result};

/// Breakpoint table of a continuous piecewise-linear map, kept both exactly and as `f64`.
#[derive(Clone, Debug, PartialEq)]
pub struct PiecewiseLinear {
    breakpoints: Vec<BigRational>,
    values: Vec<BigRational>,
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl PiecewiseLinear {
    pub fn new(breakpoints: Vec<BigRational>, values: Vec<BigRational>) -> Result<Self> {
        if breakpoints.len() != values.len() {
            return Err(Error::Parameter(format!(
                "{} breakpoints but {} values",
                breakpoints.len(),
                values.len()
            )));
        }
        if breakpoints.len() < 2 {
            return Err(Error::Parameter("need at least two breakpoints".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parameter("breakpoints must be strictly increasing".into()));
        }
        if let Some(j) = values.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::Parameter(format!(
                "zero-slope piece between breakpoints {j} and {}",
                j + 1
            )));
        }
        let xs = breakpoints.iter().map(to_f64).collect();
        let ys = values.iter().map(to_f64).collect();
        Ok(Self { breakpoints, values, xs, ys })
    }

    pub fn breakpoints(&self) -> &[BigRational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Indices of interior breakpoints where the slope changes sign.
    pub fn turning_indices(&self) -> Vec<usize> {
        (1..self.values.len() - 1)
            .filter(|&j| {
                let left = self.values[j] > self.values[j - 1];
                let right = self.values[j + 1] > self.values[j];
                left != right
            })
            .collect()
    }

    pub fn increasing_first(&self) -> bool {
        self.values[1] > self.values[0]
    }

    /// Linear interpolation in `f64`. The caller guarantees `x` lies within the table.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let xs = &self.xs;
        let n = xs.len();
        // Segment whose left end is the last breakpoint <= x.
        let j = xs.partition_point(|&p| p <= x).clamp(1, n - 1) - 1;
        if x == xs[j + 1] {
            return self.ys[j + 1];
        }
        let (x0, x1, y0, y1) = (xs[j], xs[j + 1], self.ys[j], self.ys[j + 1]);
        y0 + (y1 - y0) * ((x - x0) / (x1 - x0))
    }

    pub fn eval_exact(&self, x: &BigRational) -> BigRational {
        let bps = &self.breakpoints;
        let n = bps.len();
        let j = bps.partition_point(|p| p <= x).clamp(1, n - 1) - 1;
        let (x0, x1, y0, y1) = (&bps[j], &bps[j + 1], &self.values[j], &self.values[j + 1]);
        if x == x1 {
            return y1.clone();
        }
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    /// Exact range check of the image against `[lo, hi]`.
    pub fn image_within(&self, lo: &BigRational, hi: &BigRational) -> Option<usize> {
        self.values.iter().position(|v| v < lo || v > hi)
    }

    /// Returns a copy with extra linear pieces prepended/appended.
    pub fn extended(
        &self,
        left: Option<(BigRational, BigRational)>,
        right: Option<(BigRational, BigRational)>,
    ) -> Result<Self> {
        let mut bps = Vec::with_capacity(self.breakpoints.len() + 2);
        let mut vals = Vec::with_capacity(self.breakpoints.len() + 2);
        if let Some((x, y)) = left {
            bps.push(x);
            vals.push(y);
        }
        bps.extend(self.breakpoints.iter().cloned());
        vals.extend(self.values.iter().cloned());
        if let Some((x, y)) = right {
            bps.push(x);
            vals.push(y);
        }
        Self::new(bps, vals)
    }

    /// Slope sign of segment `j`.
    pub fn direction(&self, j: usize) -> Ordering {
        let d = &self.values[j + 1] - &self.values[j];
        if d.is_zero() {
            Ordering::Equal
        } else if d > BigRational::zero() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}
