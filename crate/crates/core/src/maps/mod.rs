//! Multimodal interval maps: construction, evaluation, validation and boundary anchoring.

mod families;
mod piecewise;
pub mod map_file;

pub use families::{
    make_bimodal_cubic, make_gaussian, make_pl4, make_pl5, make_tent, make_trimodal_quartic,
    quartic_right_endpoint,
};
pub use piecewise::PiecewiseLinear;

use num_rational::BigRational;
use std::fmt;

use crate::decimal::{rational_from_f64, to_f64};
use crate::error::{Error, Result};
use families::Quartic;

/// Default anchoring margin, as a fraction of the interval span.
pub const DEFAULT_ANCHOR_MARGIN: f64 = 0.1;

/// Default number of validation samples per lap for smooth maps.
pub const DEFAULT_GRID_PER_LAP: usize = 1024;

/// Whether `f(c_1)` is a local maximum (positive) or a local minimum (negative).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Positive,
    Negative,
}

impl Shape {
    pub fn flip(self) -> Self {
        match self {
            Shape::Positive => Shape::Negative,
            Shape::Negative => Shape::Positive,
        }
    }

    /// Whether the map increases on lap `j` (1-based).
    pub fn increasing_on(self, lap: usize) -> bool {
        (lap % 2 == 1) == (self == Shape::Positive)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Positive => "positive",
            Shape::Negative => "negative",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Smooth,
    PiecewiseLinear,
}

/// Linear piece `y = target + (edge_value - target) * t`, with `t` the normalized distance from
/// the outer end.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Arm {
    outer: f64,
    inner: f64,
    target: f64,
    edge_value: f64,
}

impl Arm {
    fn eval(&self, x: f64) -> f64 {
        let t = (x - self.outer) / (self.inner - self.outer);
        self.target + (self.edge_value - self.target) * t
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Formula {
    Gaussian { alpha_sq: f64, beta: f64 },
    Cubic { v1: f64, v2: f64 },
    Quartic(Quartic),
    PiecewiseLinear(PiecewiseLinear),
    Extended { base: Box<MapModel>, left: Option<Arm>, right: Option<Arm> },
}

/// An `l`-modal selfmap of `[a, b]`. Immutable once built.
#[derive(Clone, Debug, PartialEq)]
pub struct MapModel {
    label: String,
    interval: (f64, f64),
    critical_points: Vec<f64>,
    shape: Shape,
    formula: Formula,
}

impl MapModel {
    fn from_parts(
        label: String,
        interval: (f64, f64),
        critical_points: Vec<f64>,
        shape: Shape,
        formula: Formula,
    ) -> Self {
        Self { label, interval, critical_points, shape, formula }
    }

    /// Builds a piecewise-linear map from an exact breakpoint table. Turning points are the
    /// interior breakpoints where the slope changes sign; the shape follows the first slope.
    pub fn piecewise_linear(breakpoints: Vec<BigRational>, values: Vec<BigRational>) -> Result<Self> {
        let table = PiecewiseLinear::new(breakpoints, values)?;
        let bps = table.breakpoints();
        let (lo, hi) = (&bps[0], &bps[bps.len() - 1]);
        if let Some(j) = table.image_within(lo, hi) {
            return Err(Error::Parameter(format!(
                "value {} at breakpoint {} leaves [{lo}, {hi}]",
                table.values()[j],
                bps[j]
            )));
        }
        let turning = table.turning_indices();
        if turning.is_empty() {
            return Err(Error::Parameter("map is monotone (modality 0)".into()));
        }
        let critical_points = turning.iter().map(|&j| to_f64(&bps[j])).collect();
        let shape = if table.increasing_first() { Shape::Positive } else { Shape::Negative };
        let interval = (to_f64(lo), to_f64(hi));
        Ok(Self::from_parts(
            format!("pl(l={})", turning.len()),
            interval,
            critical_points,
            shape,
            Formula::PiecewiseLinear(table),
        ))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn interval(&self) -> (f64, f64) {
        self.interval
    }

    pub fn span(&self) -> f64 {
        self.interval.1 - self.interval.0
    }

    pub fn critical_points(&self) -> &[f64] {
        &self.critical_points
    }

    /// Number of turning points `l`.
    pub fn modality(&self) -> usize {
        self.critical_points.len()
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn kind(&self) -> MapKind {
        match self.formula {
            Formula::PiecewiseLinear(_) => MapKind::PiecewiseLinear,
            _ => MapKind::Smooth,
        }
    }

    /// Exact breakpoint table, for piecewise-linear maps.
    pub fn pl_table(&self) -> Option<&PiecewiseLinear> {
        match &self.formula {
            Formula::PiecewiseLinear(t) => Some(t),
            _ => None,
        }
    }

    /// `f(x)` for `x` in `[a, b]`.
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        let (a, b) = self.interval;
        if !(a <= x && x <= b) {
            return Err(Error::Domain { x, a, b });
        }
        Ok(self.apply(x))
    }

    /// Formula evaluation without the domain check.
    pub(crate) fn apply(&self, x: f64) -> f64 {
        match &self.formula {
            Formula::Gaussian { alpha_sq, beta } => (-alpha_sq * x * x).exp() + beta,
            Formula::Cubic { v1, v2 } => (v1 - v2) * (x * (9.0 + x * (-24.0 + 16.0 * x))) + v2,
            Formula::Quartic(q) => q.eval(x),
            Formula::PiecewiseLinear(t) => t.eval_f64(x),
            Formula::Extended { base, left, right } => {
                let (a, b) = base.interval;
                match (left, right) {
                    (Some(arm), _) if x < a => arm.eval(x),
                    (_, Some(arm)) if x > b => arm.eval(x),
                    _ => base.apply(x.clamp(a, b)),
                }
            }
        }
    }

    /// Boundary values `F(a), F(b)` required of an anchored map on `[lo, hi]`.
    fn anchor_targets(&self, lo: f64, hi: f64) -> (f64, f64) {
        let odd = self.modality() % 2 == 1;
        match self.shape {
            Shape::Positive => (lo, if odd { lo } else { hi }),
            Shape::Negative => (hi, if odd { hi } else { lo }),
        }
    }

    /// Whether `f({a, b}) ⊆ {a, b}` in the shape/parity pattern of an anchored map.
    pub fn is_anchored(&self) -> bool {
        let (a, b) = self.interval;
        if let Some(t) = self.pl_table() {
            let bps = t.breakpoints();
            let vals = t.values();
            let (lo, hi) = (&bps[0], &bps[bps.len() - 1]);
            let odd = self.modality() % 2 == 1;
            let (tl, tr) = match self.shape {
                Shape::Positive => (lo, if odd { lo } else { hi }),
                Shape::Negative => (hi, if odd { hi } else { lo }),
            };
            return &vals[0] == tl && &vals[vals.len() - 1] == tr;
        }
        let (tl, tr) = self.anchor_targets(a, b);
        self.apply(a) == tl && self.apply(b) == tr
    }

    /// Extends the map linearly outside `[a, b]` so that it becomes boundary-anchored on the
    /// enlarged interval, without changing it on `[a, b]`. Sides that already satisfy their
    /// boundary condition are left alone.
    pub fn anchor(&self, margin: f64) -> Result<MapModel> {
        if !(margin > 0.0 && margin.is_finite()) {
            return Err(Error::Parameter(format!("anchor margin must be positive, got {margin}")));
        }
        if self.is_anchored() {
            return Ok(self.clone());
        }
        match &self.formula {
            Formula::PiecewiseLinear(t) => self.anchor_exact(t, margin),
            _ => self.anchor_float(margin),
        }
    }

    fn anchor_float(&self, margin: f64) -> Result<MapModel> {
        let (a, b) = self.interval;
        let (fa, fb) = (self.apply(a), self.apply(b));
        let pad = margin * (b - a);
        let (mut lo, mut hi) = (a, b);
        // Extending one side can move the other side's target; iterate to a fixed point.
        loop {
            let (tl, tr) = self.anchor_targets(lo, hi);
            let grow_left = lo == a && fa != tl;
            let grow_right = hi == b && fb != tr;
            if !grow_left && !grow_right {
                break;
            }
            if grow_left {
                lo = a - pad;
            }
            if grow_right {
                hi = b + pad;
            }
        }
        let (tl, tr) = self.anchor_targets(lo, hi);
        let left = (lo < a).then_some(Arm { outer: lo, inner: a, target: tl, edge_value: fa });
        let right = (hi > b).then_some(Arm { outer: hi, inner: b, target: tr, edge_value: fb });
        Ok(MapModel::from_parts(
            format!("anchored({})", self.label),
            (lo, hi),
            self.critical_points.clone(),
            self.shape,
            Formula::Extended { base: Box::new(self.clone()), left, right },
        ))
    }

    fn anchor_exact(&self, table: &PiecewiseLinear, margin: f64) -> Result<MapModel> {
        let bps = table.breakpoints();
        let vals = table.values();
        let a = bps[0].clone();
        let b = bps[bps.len() - 1].clone();
        let (fa, fb) = (vals[0].clone(), vals[vals.len() - 1].clone());
        let pad = rational_from_f64(margin)? * (&b - &a);
        let odd = self.modality() % 2 == 1;
        let targets = |lo: &BigRational, hi: &BigRational| match self.shape {
            Shape::Positive => (lo.clone(), if odd { lo.clone() } else { hi.clone() }),
            Shape::Negative => (hi.clone(), if odd { hi.clone() } else { lo.clone() }),
        };
        let (mut lo, mut hi) = (a.clone(), b.clone());
        loop {
            let (tl, tr) = targets(&lo, &hi);
            let grow_left = lo == a && fa != tl;
            let grow_right = hi == b && fb != tr;
            if !grow_left && !grow_right {
                break;
            }
            if grow_left {
                lo = &a - &pad;
            }
            if grow_right {
                hi = &b + &pad;
            }
        }
        let (tl, tr) = targets(&lo, &hi);
        let left = (lo < a).then(|| (lo.clone(), tl));
        let right = (hi > b).then(|| (hi.clone(), tr));
        let extended = table.extended(left, right)?;
        let mut model = MapModel::piecewise_linear(
            extended.breakpoints().to_vec(),
            extended.values().to_vec(),
        )?;
        model.label = format!("anchored({})", self.label);
        Ok(model)
    }

    /// Grid-based membership check for `M_l`: invariance of the interval, strict monotonicity
    /// with alternating direction on every lap, and consistency of the declared shape.
    /// Piecewise-linear maps are checked exactly.
    pub fn validate(&self, grid_points: usize) -> ValidationReport {
        let l = self.modality();
        let detected = self.detect_shape();
        let mut report = ValidationReport { modality: l, detected_shape: detected, violation: None };
        if l == 0 {
            report.violation = Some(Violation::NoTurningPoints);
            return report;
        }
        let (a, b) = self.interval;
        if !self.critical_points.iter().all(|&c| a < c && c < b)
            || self.critical_points.windows(2).any(|w| w[0] >= w[1])
        {
            report.violation = Some(Violation::CriticalPointsOutOfOrder);
            return report;
        }
        if let Some(table) = self.pl_table() {
            // Construction already enforced invariance, nonzero slopes and the turning structure.
            debug_assert!(table.turning_indices().len() == l);
        } else {
            let n = grid_points.max(2);
            let slack = 1e-12 * (b - a);
            let mut edges = vec![a];
            edges.extend_from_slice(&self.critical_points);
            edges.push(b);
            'laps: for lap in 1..=l + 1 {
                let (lo, hi) = (edges[lap - 1], edges[lap]);
                let increasing = self.shape.increasing_on(lap);
                let mut prev = self.apply(lo);
                for k in 0..n {
                    let x = if k + 1 == n { hi } else { lo + (hi - lo) * (k as f64) / ((n - 1) as f64) };
                    let y = self.apply(x);
                    if !(y >= a - slack && y <= b + slack) {
                        report.violation = Some(Violation::NotInvariant { x, fx: y });
                        break 'laps;
                    }
                    if k > 0 && ((increasing && y < prev) || (!increasing && y > prev)) {
                        report.violation = Some(Violation::NotMonotone { lap, x });
                        break 'laps;
                    }
                    prev = y;
                }
            }
        }
        if report.violation.is_none() {
            if let Some(found) = detected {
                if found != self.shape {
                    report.violation =
                        Some(Violation::ShapeMismatch { declared: self.shape, detected: found });
                }
            }
        }
        report
    }

    /// Shape inferred from `f(c_1 - delta)` against `f(c_1)`.
    pub fn detect_shape(&self) -> Option<Shape> {
        let c1 = *self.critical_points.first()?;
        let delta = 1e-6 * self.span();
        let x = (c1 - delta).max(self.interval.0);
        let (left, peak) = (self.apply(x), self.apply(c1));
        if left < peak {
            Some(Shape::Positive)
        } else if left > peak {
            Some(Shape::Negative)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    NoTurningPoints,
    CriticalPointsOutOfOrder,
    NotInvariant { x: f64, fx: f64 },
    NotMonotone { lap: usize, x: f64 },
    ShapeMismatch { declared: Shape, detected: Shape },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoTurningPoints => write!(f, "map has no turning points"),
            Violation::CriticalPointsOutOfOrder => {
                write!(f, "critical points are not strictly increasing inside (a, b)")
            }
            Violation::NotInvariant { x, fx } => write!(f, "f({x}) = {fx} leaves the interval"),
            Violation::NotMonotone { lap, x } => write!(f, "f is not monotone on lap {lap} near x = {x}"),
            Violation::ShapeMismatch { declared, detected } => {
                write!(f, "declared {declared} shape but detected {detected}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub modality: usize,
    pub detected_shape: Option<Shape>,
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decimal::parse_rational;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(make_tent().evaluate(0.5).unwrap(), 1.0);
        assert_eq!(make_gaussian(2.8, -0.5).unwrap().evaluate(0.0).unwrap(), 0.5);
        assert_eq!(make_pl4().evaluate(0.3).unwrap(), 0.45);
        let g = make_gaussian(2.8, -0.5).unwrap();
        assert!(matches!(g.evaluate(0.6), Err(Error::Domain { .. })));
    }

    #[test]
    fn validate_examples() {
        let tent = make_tent().validate(DEFAULT_GRID_PER_LAP);
        assert!(tent.is_valid());
        assert_eq!((tent.modality, tent.detected_shape), (1, Some(Shape::Positive)));
        let g = make_gaussian(2.8, -0.5).unwrap().validate(DEFAULT_GRID_PER_LAP);
        assert!(g.is_valid());
        assert_eq!((g.modality, g.detected_shape), (1, Some(Shape::Positive)));
        assert!(make_bimodal_cubic(0.4, 0.1).unwrap().validate(DEFAULT_GRID_PER_LAP).is_valid());
        assert!(make_gaussian(2.0, -0.2).unwrap().validate(DEFAULT_GRID_PER_LAP).is_valid());
    }

    #[test]
    fn validate_reports_shape_mismatch_and_escape() {
        let mut g = make_gaussian(2.8, -0.5).unwrap();
        g.shape = Shape::Negative;
        // Monotonicity fails before the shape comparison: laps run the wrong way.
        assert!(matches!(g.validate(64).violation, Some(Violation::NotMonotone { lap: 1, .. })));

        let wide = make_gaussian(100.0, -0.9).unwrap();
        // f(b) = e^{-100} - 0.9 < -0.1 = a
        assert!(matches!(wide.validate(64).violation, Some(Violation::NotInvariant { .. })));
    }

    #[test]
    fn gaussian_family() {
        let g = make_gaussian(1.3, 0.0).unwrap();
        assert_eq!(g.interval(), (-1.0, 1.0));
        assert_eq!(g.evaluate(0.0).unwrap(), 1.0);
        let g = make_gaussian(2.0, -0.2).unwrap();
        assert!((g.evaluate(0.0).unwrap() - 0.8).abs() < 1e-15);
        assert!(make_gaussian(0.0, -0.5).is_err());
        assert!(make_gaussian(1.0, -1.0).is_err());
        assert!(make_gaussian(1.0, 0.1).is_err());
    }

    #[test]
    fn cubic_family() {
        let f = make_bimodal_cubic(1.0, 0.0).unwrap();
        assert_eq!(f.evaluate(0.25).unwrap(), 1.0);
        assert_eq!(f.evaluate(0.75).unwrap(), 0.0);
        assert_eq!(f.evaluate(0.0).unwrap(), 0.0);
        assert_eq!(f.evaluate(1.0).unwrap(), 1.0);
        let f = make_bimodal_cubic(0.9, 0.1).unwrap();
        assert!((f.evaluate(0.25).unwrap() - 0.9).abs() < 1e-15);
        assert!((f.evaluate(0.75).unwrap() - 0.1).abs() < 1e-15);
        let f = make_bimodal_cubic(0.6, 0.1).unwrap();
        assert!((f.evaluate(0.5).unwrap() - 0.35).abs() < 1e-15);
        assert!(make_bimodal_cubic(0.1, 0.1).is_err());
        assert!(make_bimodal_cubic(1.1, 0.1).is_err());
    }

    #[test]
    fn quartic_family() {
        let f = make_trimodal_quartic(0.7, 1.0).unwrap();
        let c = f.critical_points().to_vec();
        assert_eq!(f.evaluate(0.0).unwrap(), 0.0);
        assert!((f.evaluate(c[1]).unwrap() - 0.7).abs() < 1e-12);
        assert!((f.evaluate(c[2]).unwrap() - 1.0).abs() < 1e-12);
        assert!((f.evaluate(1.0).unwrap() - quartic_right_endpoint(0.7, 1.0)).abs() < 1e-12);
        assert!(f.validate(DEFAULT_GRID_PER_LAP).is_valid());

        let f = make_trimodal_quartic(0.5, 1.0).unwrap();
        let r2 = std::f64::consts::SQRT_2;
        let c1 = (-r2 * 0.5 - 4.0 * 0.5 + 12.0 * r2 - 8.0) / (8.0 * (-3.5 + 4.0 * r2 + 2.0));
        assert!((f.critical_points()[0] - c1).abs() < 1e-15);
        // Central finite difference of f at c_1.
        let h = 1e-6;
        let slope = (f.evaluate(c1 + h).unwrap() - f.evaluate(c1 - h).unwrap()) / (2.0 * h);
        assert!(slope.abs() < 1e-6, "f'(c_1) = {slope}");
        assert!(make_trimodal_quartic(0.7, 0.7).is_err());
    }

    #[test]
    fn piecewise_linear_constructor() {
        let f = make_pl4();
        assert_eq!(f.modality(), 4);
        assert_eq!(f.shape(), Shape::Positive);
        assert_eq!(f.kind(), MapKind::PiecewiseLinear);
        let t = f.pl_table().unwrap();
        for (j, v) in [(1, "0.45"), (2, "0.325"), (3, "0.45"), (4, "0.325")] {
            assert_eq!(t.eval_exact(&t.breakpoints()[j]), q(v));
        }
        let f = make_pl5();
        assert_eq!(f.modality(), 5);
        assert!(f.is_anchored());
        assert!(make_pl4().is_anchored());
        let tent = make_tent();
        assert_eq!((tent.modality(), tent.shape()), (1, Shape::Positive));

        // zero-slope piece
        let err = MapModel::piecewise_linear(
            vec![q("0"), q("0.5"), q("0.7"), q("1")],
            vec![q("0"), q("1"), q("1"), q("0")],
        );
        assert!(err.is_err());
        // monotone
        assert!(MapModel::piecewise_linear(vec![q("0"), q("1")], vec![q("0"), q("1")]).is_err());
        // image escapes
        assert!(MapModel::piecewise_linear(
            vec![q("0"), q("0.5"), q("1")],
            vec![q("0"), q("1.5"), q("0")]
        )
        .is_err());
        // non-turning kink is fine
        let kinked = MapModel::piecewise_linear(
            vec![q("0"), q("0.25"), q("0.5"), q("1")],
            vec![q("0"), q("0.25"), q("1"), q("0")],
        )
        .unwrap();
        assert_eq!(kinked.critical_points(), &[0.5]);
        let negative = MapModel::piecewise_linear(
            vec![q("0"), q("0.5"), q("1")],
            vec![q("1"), q("0"), q("1")],
        )
        .unwrap();
        assert_eq!(negative.shape(), Shape::Negative);
        assert!(negative.is_anchored());
    }

    #[test]
    fn anchoring_gaussian() {
        let f = make_gaussian(2.8, -0.5).unwrap();
        assert!(!f.is_anchored());
        let big = f.anchor(DEFAULT_ANCHOR_MARGIN).unwrap();
        let (lo, hi) = big.interval();
        assert!((lo + 0.6).abs() < 1e-15 && (hi - 0.6).abs() < 1e-15);
        assert_eq!(big.evaluate(lo).unwrap(), lo);
        assert_eq!(big.evaluate(hi).unwrap(), lo);
        assert!(big.is_anchored());
        assert!(big.validate(DEFAULT_GRID_PER_LAP).is_valid());
        for k in 0..=1000 {
            let x = -0.5 + k as f64 / 1000.0;
            assert_eq!(big.evaluate(x).unwrap(), f.evaluate(x).unwrap());
        }
        assert_eq!(big.anchor(DEFAULT_ANCHOR_MARGIN).unwrap(), big);
    }

    #[test]
    fn anchoring_leaves_anchored_maps_alone() {
        for f in [make_tent(), make_pl5(), make_pl4()] {
            assert_eq!(f.anchor(DEFAULT_ANCHOR_MARGIN).unwrap(), f);
        }
    }

    #[test]
    fn anchoring_one_sided_and_exact() {
        // f(0) = 0 already, f(1) = 1/2 needs the right arm (l = 1, positive: F(b') = a').
        let f = MapModel::piecewise_linear(
            vec![q("0"), q("0.5"), q("1")],
            vec![q("0"), q("1"), q("0.5")],
        )
        .unwrap();
        let big = f.anchor(0.1).unwrap();
        let t = big.pl_table().unwrap();
        assert_eq!(t.breakpoints().first().unwrap(), &q("0"));
        assert_eq!(t.breakpoints().last().unwrap(), &q("1.1"));
        assert_eq!(t.values().last().unwrap(), &q("0"));
        assert!(big.is_anchored());

        // Bimodal cubic: both sides move, F(a') = a', F(b') = b'.
        let c = make_bimodal_cubic(0.9, 0.1).unwrap();
        let big = c.anchor(0.1).unwrap();
        let (lo, hi) = big.interval();
        assert_eq!(big.evaluate(lo).unwrap(), lo);
        assert_eq!(big.evaluate(hi).unwrap(), hi);
        assert!(big.validate(DEFAULT_GRID_PER_LAP).is_valid());
    }

    #[test]
    fn anchoring_negative_shape() {
        // Negative unimodal with f(0) = 0.8, f(1) = 0.9: needs F(a') = b', F(b') = b'.
        let f = MapModel::piecewise_linear(
            vec![q("0"), q("0.5"), q("1")],
            vec![q("0.8"), q("0.1"), q("0.9")],
        )
        .unwrap();
        let big = f.anchor(0.25).unwrap();
        assert!(big.is_anchored());
        let t = big.pl_table().unwrap();
        assert_eq!(t.breakpoints(), &[q("-0.25"), q("0"), q("0.5"), q("1"), q("1.25")]);
        assert_eq!(t.values(), &[q("1.25"), q("0.8"), q("0.1"), q("0.9"), q("1.25")]);
    }

    #[test]
    fn critical_values_match_documented_ones() {
        let g = make_gaussian(2.8, -0.5).unwrap();
        assert!((g.evaluate(0.0).unwrap() - 0.5).abs() < 1e-10);
        let c = make_bimodal_cubic(0.9, 0.1).unwrap();
        assert!((c.evaluate(0.25).unwrap() - 0.9).abs() < 1e-10);
        let p = make_pl5();
        let t = p.pl_table().unwrap();
        let expected = ["0.45", "0.30", "0.45", "0.30", "0.45"];
        for (j, e) in (1..=5).zip(expected) {
            assert_eq!(t.values()[j], q(e));
        }
    }
}
