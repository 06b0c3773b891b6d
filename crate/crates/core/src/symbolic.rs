//! Itineraries, kneading symbols and min-max symbols of critical orbits.
//!
//! Addresses are laid out on a line `I_1 < c_1 < I_2 < ... < c_l < I_{l+1}`; the position of an
//! address on that line (0-based) drives both the bad-symbol classification and parity rules.

use std::fmt;

use crate::error::{Error, Result};
use crate::maps::{MapModel, Shape};

/// Default critical-hit radius, relative to the interval span.
pub const DEFAULT_TOL_FACTOR: f64 = 1e-9;

/// Element of the itinerary alphabet `{I_1, c_1, I_2, ..., c_l, I_{l+1}}` (1-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AddressSymbol {
    Interval(usize),
    Critical(usize),
}

impl AddressSymbol {
    /// 0-based position on the ordered alphabet.
    pub fn position(self) -> usize {
        match self {
            AddressSymbol::Interval(j) => 2 * (j - 1),
            AddressSymbol::Critical(k) => 2 * k - 1,
        }
    }

    pub fn from_position(pos: usize) -> Self {
        if pos.is_multiple_of(2) {
            AddressSymbol::Interval(pos / 2 + 1)
        } else {
            AddressSymbol::Critical(pos.div_ceil(2))
        }
    }

    pub fn index(self) -> usize {
        match self {
            AddressSymbol::Interval(j) | AddressSymbol::Critical(j) => j,
        }
    }

    pub fn is_valid_for(self, l: usize) -> bool {
        match self {
            AddressSymbol::Interval(j) => (1..=l + 1).contains(&j),
            AddressSymbol::Critical(k) => (1..=l).contains(&k),
        }
    }

    /// The full alphabet for modality `l`, in order.
    pub fn alphabet(l: usize) -> impl Iterator<Item = AddressSymbol> {
        (0..=2 * l).map(AddressSymbol::from_position)
    }
}

impl fmt::Display for AddressSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AddressSymbol::Interval(j) => write!(f, "I{j}"),
            AddressSymbol::Critical(k) => write!(f, "c{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// `m`: the iterate is a local minimum.
    Min,
    /// `M`: the iterate is a local maximum.
    Max,
}

impl Base {
    pub fn flip(self) -> Self {
        match self {
            Base::Min => Base::Max,
            Base::Max => Base::Min,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MinMaxSymbol {
    pub base: Base,
    pub address: AddressSymbol,
}

impl MinMaxSymbol {
    pub fn new(base: Base, address: AddressSymbol) -> Self {
        Self { base, address }
    }

    /// All `2(2l+1)` symbols for modality `l`.
    pub fn alphabet(l: usize) -> impl Iterator<Item = MinMaxSymbol> {
        AddressSymbol::alphabet(l)
            .flat_map(|a| [MinMaxSymbol::new(Base::Min, a), MinMaxSymbol::new(Base::Max, a)])
    }
}

impl fmt::Display for MinMaxSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = match self.base {
            Base::Min => 'm',
            Base::Max => 'M',
        };
        write!(f, "{b}^{}", self.address)
    }
}

/// Default snap radius for `map`.
pub fn default_tol(map: &MapModel) -> f64 {
    DEFAULT_TOL_FACTOR * map.span()
}

/// Kneading address of `y`: the nearest critical point within `tol`, otherwise the lap
/// containing `y` (with `a` in `I_1` and `b` in `I_{l+1}`).
pub fn address(map: &MapModel, y: f64, tol: f64) -> Result<AddressSymbol> {
    let (a, b) = map.interval();
    if !(y >= a - tol && y <= b + tol) {
        return Err(Error::Domain { x: y, a, b });
    }
    let crit = map.critical_points();
    let j = crit.partition_point(|&c| c < y);
    // Candidates for the nearest critical point are crit[j-1] and crit[j].
    let nearest = [j.checked_sub(1), (j < crit.len()).then_some(j)]
        .into_iter()
        .flatten()
        .min_by(|&p, &q| (crit[p] - y).abs().total_cmp(&(crit[q] - y).abs()));
    if let Some(k) = nearest {
        if (crit[k] - y).abs() <= tol {
            return Ok(AddressSymbol::Critical(k + 1));
        }
    }
    Ok(AddressSymbol::Interval(j + 1))
}

/// `omega_1^i` for every critical point: `M` on odd `i` and `m` on even `i` for positive shape,
/// swapped for negative shape.
pub fn initial_minmax(map: &MapModel, tol: f64) -> Result<Vec<MinMaxSymbol>> {
    map.critical_points()
        .iter()
        .enumerate()
        .map(|(idx, &c)| {
            let i = idx + 1;
            let positive_base = if i % 2 == 1 { Base::Max } else { Base::Min };
            let base = match map.shape() {
                Shape::Positive => positive_base,
                Shape::Negative => positive_base.flip(),
            };
            Ok(MinMaxSymbol::new(base, address(map, map.apply(c), tol)?))
        })
        .collect()
}

/// Transition rule for min-max symbols: the base of the next symbol depends only on the base
/// of `prev`, the parity of its address and the shape.
pub fn advance_minmax(prev: MinMaxSymbol, next_address: AddressSymbol, shape: Shape) -> MinMaxSymbol {
    let positive = match prev.address {
        AddressSymbol::Critical(k) if k % 2 == 0 => Base::Min,
        AddressSymbol::Critical(_) => Base::Max,
        AddressSymbol::Interval(j) => {
            // Increasing laps (odd) keep the character, decreasing laps flip it.
            if j % 2 == 1 {
                prev.base
            } else {
                prev.base.flip()
            }
        }
    };
    let base = match shape {
        Shape::Positive => positive,
        Shape::Negative => positive.flip(),
    };
    MinMaxSymbol::new(base, next_address)
}

/// Whether `symbol` is bad with respect to the `i`-th critical line (`1 <= i <= l`): a maximum
/// at or below `c_i`, or a minimum at or above it.
pub fn is_bad(symbol: MinMaxSymbol, i: usize, l: usize) -> bool {
    debug_assert!((1..=l).contains(&i));
    let pos = symbol.address.position();
    let line = 2 * i - 1;
    match symbol.base {
        Base::Max => pos <= line,
        Base::Min => pos >= line,
    }
}

/// The forward orbit `f(c_i), f^2(c_i), ...` of a critical point with its min-max symbols.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalOrbit {
    /// 1-based critical index `i`.
    pub which: usize,
    pub points: Vec<f64>,
    pub symbols: Vec<MinMaxSymbol>,
}

impl CriticalOrbit {
    /// Orbit holding only `f(c_i)` and `omega_1^i`.
    pub fn start(map: &MapModel, which: usize, tol: f64) -> Result<Self> {
        let l = map.modality();
        if !(1..=l).contains(&which) {
            return Err(Error::Parameter(format!("critical index {which} outside 1..={l}")));
        }
        let first = initial_minmax(map, tol)?[which - 1];
        let point = clamp_into(map, map.apply(map.critical_points()[which - 1]), tol)?;
        Ok(Self { which, points: vec![point], symbols: vec![first] })
    }

    /// All `l` critical orbits of `map`, each with one point.
    pub fn start_all(map: &MapModel, tol: f64) -> Result<Vec<Self>> {
        (1..=map.modality()).map(|i| Self::start(map, i, tol)).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Appends `steps` further iterates in place.
    pub fn extend(&mut self, map: &MapModel, steps: usize, tol: f64) -> Result<()> {
        let shape = map.shape();
        self.points.reserve(steps);
        self.symbols.reserve(steps);
        for _ in 0..steps {
            let (&x, &prev) = match (self.points.last(), self.symbols.last()) {
                (Some(x), Some(s)) => (x, s),
                _ => return Err(Error::Parameter("orbit has no starting point".into())),
            };
            let y = clamp_into(map, map.apply(x), tol)?;
            let next = advance_minmax(prev, address(map, y, tol)?, shape);
            self.points.push(y);
            self.symbols.push(next);
        }
        Ok(())
    }
}

/// Functional form of [`CriticalOrbit::extend`].
pub fn extend_orbit(map: &MapModel, orbit: &CriticalOrbit, steps: usize, tol: f64) -> Result<CriticalOrbit> {
    let mut out = orbit.clone();
    out.extend(map, steps, tol)?;
    Ok(out)
}

/// Points that round just outside `[a, b]` are pulled back onto the boundary; anything beyond
/// `tol` is a genuine escape.
fn clamp_into(map: &MapModel, y: f64, tol: f64) -> Result<f64> {
    let (a, b) = map.interval();
    if y >= a && y <= b {
        Ok(y)
    } else if y >= a - tol && y <= b + tol {
        Ok(y.clamp(a, b))
    } else {
        Err(Error::Domain { x: y, a, b })
    }
}
