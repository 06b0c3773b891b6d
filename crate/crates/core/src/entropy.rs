//! Integer recursion for the transversal-crossing counts and the entropy estimate built on it.
//!
//! For every critical line `i` the state keeps `s_0^i, ..., s_nu^i` and the set `K_nu^i` of
//! index pairs `(k, kappa)` whose min-max symbol `omega_kappa^k` is bad for line `i`. Each step
//! computes
//!
//! ```text
//! S_nu^i = 2 * sum_{(k, kappa) in K_nu^i} s_{nu - kappa}^k
//! s_nu^i = 1 + sum_{mu < nu} s_mu - S_nu^i
//! ```
//!
//! and the lap number `l_nu = (s_nu + S_nu) / l`, whose growth rate is the entropy.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::maps::{MapModel, DEFAULT_ANCHOR_MARGIN};
use crate::symbolic::{default_tol, is_bad, CriticalOrbit, MinMaxSymbol};

/// Default loop cap.
pub const DEFAULT_N_MAX: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    Nats,
    Bits,
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unit::Nats => "nats",
            Unit::Bits => "bits",
        })
    }
}

impl FromStr for Unit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nats" | "nat" => Ok(Unit::Nats),
            "bits" | "bit" => Ok(Unit::Bits),
            _ => Err(Error::Parameter(format!("unknown unit {s:?}"))),
        }
    }
}

/// Halt rule of the convergence loop.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HaltVariant {
    /// `0 < |h_nu - h_{nu-1}| <= eps`, comparing consecutive estimates. A change of exactly
    /// zero means the laps are still growing like `(l+1)^nu` and does not count, unless every
    /// critical orbit has closed into a cycle without a single bad symbol, in which case the
    /// estimate `log(l+1)` is exact.
    #[default]
    H1,
    /// `|L/nu - L/(nu-1)| <= eps` with the same `L = log((s_nu + S_nu)/l)` in both terms.
    H2,
}

impl fmt::Display for HaltVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HaltVariant::H1 => "h1",
            HaltVariant::H2 => "h2",
        })
    }
}

impl FromStr for HaltVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "h1" => Ok(HaltVariant::H1),
            "h2" => Ok(HaltVariant::H2),
            _ => Err(Error::Parameter(format!("unknown halt variant {s:?}"))),
        }
    }
}

// ln 2 split so that `k * LN2_HI` is exact for k < 2^20.
const LN2_HI: f64 = 0.693_147_180_369_123_8;
const LN2_LO: f64 = 1.908_214_929_270_587_7e-10;

/// `(exponent, mantissa)` with `n ≈ mantissa * 2^exponent` and `mantissa` holding the top 64
/// bits of `n`.
fn split_big(n: &BigUint) -> (u64, f64) {
    let bits = n.bits();
    if bits <= 64 {
        return (0, n.to_u64().unwrap_or(u64::MAX) as f64);
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().unwrap_or(u64::MAX);
    (shift, top as f64)
}

/// Natural logarithm of a big integer.
pub fn ln_big(n: &BigUint) -> f64 {
    let (shift, top) = split_big(n);
    let k = shift as f64;
    k * LN2_HI + (k * LN2_LO + top.ln())
}

/// Base-2 logarithm of a big integer.
pub fn log2_big(n: &BigUint) -> f64 {
    let (shift, top) = split_big(n);
    shift as f64 + top.log2()
}

fn log_big(n: &BigUint, unit: Unit) -> f64 {
    match unit {
        Unit::Nats => ln_big(n),
        Unit::Bits => log2_big(n),
    }
}

/// Recursion state at step `nu`.
#[derive(Clone, Debug, PartialEq)]
pub struct EntropyState {
    l: usize,
    nu: usize,
    /// `s_hist[i][mu] = s_mu^{i+1}`.
    s_hist: Vec<Vec<BigUint>>,
    /// `bad_index[i]` lists `(k, kappa)` (both 1-based) with `omega_kappa^k` bad for line `i+1`.
    bad_index: Vec<Vec<(usize, usize)>>,
    s_agg: Vec<BigUint>,
    big_s_agg: Vec<BigUint>,
    /// `big_s_lines[i] = S_nu^{i+1}` at the current step.
    big_s_lines: Vec<BigUint>,
    /// Lap numbers from `(s_nu + S_nu)/l`.
    laps: Vec<BigUint>,
}

impl EntropyState {
    /// State at `nu = 0`: `s_0^i = 1` for every line, `s_0 = l`, empty bad sets.
    pub fn new(l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::Parameter("modality must be at least 1".into()));
        }
        Ok(Self {
            l,
            nu: 0,
            s_hist: vec![vec![BigUint::one()]; l],
            bad_index: vec![Vec::new(); l],
            s_agg: vec![BigUint::from(l)],
            big_s_agg: vec![BigUint::zero()],
            big_s_lines: vec![BigUint::zero(); l],
            laps: vec![BigUint::one()],
        })
    }

    pub fn modality(&self) -> usize {
        self.l
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    /// `s_mu^i` for `mu <= nu` (1-based `i`).
    pub fn s_line(&self, i: usize, mu: usize) -> &BigUint {
        &self.s_hist[i - 1][mu]
    }

    /// `S_nu^i` at the current step (1-based `i`).
    pub fn big_s_line(&self, i: usize) -> &BigUint {
        &self.big_s_lines[i - 1]
    }

    /// `s_mu = sum_i s_mu^i`.
    pub fn s(&self, mu: usize) -> &BigUint {
        &self.s_agg[mu]
    }

    /// `S_mu = sum_i S_mu^i` (zero at `mu = 0`).
    pub fn big_s(&self, mu: usize) -> &BigUint {
        &self.big_s_agg[mu]
    }

    /// The set `K_nu^i` (1-based `i`).
    pub fn bad_index(&self, i: usize) -> &[(usize, usize)] {
        &self.bad_index[i - 1]
    }

    /// Whether any `K_nu^i` is nonempty.
    pub fn has_bad_symbols(&self) -> bool {
        self.bad_index.iter().any(|k| !k.is_empty())
    }

    /// Whether `h_nu == h_{nu-1}` exactly, i.e. `l_nu^(nu-1) == l_{nu-1}^nu`.
    pub fn estimate_unchanged(&self) -> bool {
        let nu = self.nu;
        if nu < 2 {
            return false;
        }
        let (cur, prev) = (&self.laps[nu], &self.laps[nu - 1]);
        // Cheap size screen before the exact power comparison.
        let lhs_bits = cur.bits() as f64 * (nu - 1) as f64;
        let rhs_bits = prev.bits() as f64 * nu as f64;
        if (lhs_bits - rhs_bits).abs() > nu as f64 + 1.0 {
            return false;
        }
        cur.pow((nu - 1) as u32) == prev.pow(nu as u32)
    }

    /// Current lap number `(s_nu + S_nu)/l`.
    pub fn lap(&self) -> &BigUint {
        &self.laps[self.nu]
    }

    /// Advances from `nu - 1` to `nu` given `omega_nu^k` for `k = 1..=l`.
    pub fn step(&mut self, symbols: &[MinMaxSymbol]) -> Result<()> {
        let l = self.l;
        if symbols.len() != l {
            return Err(Error::Arity { expected: l, got: symbols.len() });
        }
        if let Some(bad) = symbols.iter().find(|s| !s.address.is_valid_for(l)) {
            return Err(Error::Parameter(format!("symbol {bad} is not in the alphabet for l = {l}")));
        }
        let nu = self.nu + 1;
        let inconsistent = |detail: String| Error::Consistency { nu, detail };

        // l_nu = 1 + sum_{mu < nu} s_mu
        let running = &self.laps[nu - 1] + &self.s_agg[nu - 1];

        let mut new_pairs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); l];
        let mut s_lines = Vec::with_capacity(l);
        let mut big_s_lines = Vec::with_capacity(l);
        for i in 1..=l {
            for (k, &sym) in symbols.iter().enumerate() {
                if is_bad(sym, i, l) {
                    new_pairs[i - 1].push((k + 1, nu));
                }
            }
            let mut acc = BigUint::from(new_pairs[i - 1].len()); // s_0^k = 1 for kappa = nu
            for &(k, kappa) in &self.bad_index[i - 1] {
                acc += &self.s_hist[k - 1][nu - kappa];
            }
            let big_s_i = acc << 1u32;
            if big_s_i > running {
                return Err(inconsistent(format!(
                    "S_nu^{i} = {big_s_i} exceeds 1 + sum s_mu = {running}, giving s_nu^{i} < 0"
                )));
            }
            s_lines.push(&running - &big_s_i);
            big_s_lines.push(big_s_i);
        }

        let s_nu: BigUint = s_lines.iter().sum();
        let big_s_nu: BigUint = big_s_lines.iter().sum();
        let total = &s_nu + &big_s_nu;
        let account = &running * BigUint::from(l);
        if account < big_s_nu || &account - &big_s_nu != s_nu {
            return Err(inconsistent("aggregate s_nu disagrees with l(1 + sum s_mu) - S_nu".into()));
        }
        let (lap, rem) = total.div_rem(&BigUint::from(l));
        if !rem.is_zero() {
            return Err(inconsistent(format!("l = {l} does not divide s_nu + S_nu = {total}")));
        }
        if lap != running {
            return Err(inconsistent("(s_nu + S_nu)/l differs from 1 + sum s_mu".into()));
        }

        for (i, pairs) in new_pairs.into_iter().enumerate() {
            self.bad_index[i].extend(pairs);
        }
        for (hist, s) in self.s_hist.iter_mut().zip(s_lines) {
            hist.push(s);
        }
        self.big_s_lines = big_s_lines;
        self.s_agg.push(s_nu);
        self.big_s_agg.push(big_s_nu);
        self.laps.push(lap);
        self.nu = nu;
        Ok(())
    }

    /// `h_nu = (1/nu) log((s_nu + S_nu)/l)` in the requested unit. `None` at `nu = 0`.
    pub fn estimate_at(&self, unit: Unit) -> Option<f64> {
        (self.nu >= 1).then(|| log_big(self.lap(), unit) / self.nu as f64)
    }

    /// `log((s_nu + S_nu)/l)`, the numerator of the estimate.
    pub fn log_lap(&self, unit: Unit) -> f64 {
        log_big(self.lap(), unit)
    }

    /// Lap numbers `l_0, ..., l_nu`, checked against the cumulative form `1 + sum_{mu<n} s_mu`.
    pub fn lap_sequence(&self) -> Result<Vec<BigUint>> {
        let mut cumulative = BigUint::one();
        for (n, lap) in self.laps.iter().enumerate() {
            if *lap != cumulative {
                return Err(Error::Consistency {
                    nu: n,
                    detail: format!("lap {lap} differs from cumulative count {cumulative}"),
                });
            }
            cumulative += &self.s_agg[n];
        }
        Ok(self.laps.clone())
    }
}

/// Builds the `nu = 0` state for a set of critical orbits (one per critical point).
pub fn init_state(orbits: &[CriticalOrbit], l: usize) -> Result<EntropyState> {
    if orbits.len() != l {
        return Err(Error::Arity { expected: l, got: orbits.len() });
    }
    if orbits.iter().any(|o| o.symbols.is_empty()) {
        return Err(Error::Parameter("every orbit needs its first min-max symbol".into()));
    }
    EntropyState::new(l)
}

/// Indices `k` with `omega^k` bad for line `i`, i.e. the lower indices entering `K` at one step.
pub fn bad_lines(symbols: &[MinMaxSymbol], i: usize) -> Vec<usize> {
    let l = symbols.len();
    symbols
        .iter()
        .enumerate()
        .filter(|(_, &s)| is_bad(s, i, l))
        .map(|(k, _)| k + 1)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntropyEstimate {
    pub value: f64,
    pub unit: Unit,
    /// `nu` at exit.
    pub loops: usize,
    pub converged: bool,
    pub halt: HaltVariant,
    /// `h_1, h_2, ..., h_loops`.
    pub history: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub eps: f64,
    pub n_max: usize,
    pub unit: Unit,
    pub halt: HaltVariant,
    /// Anchor the map before running (exact lap numbers; same limit).
    pub anchor: bool,
    /// Critical-hit radius; defaults to `1e-9 (b - a)`.
    pub tol: Option<f64>,
}

impl RunConfig {
    pub fn new(eps: f64, unit: Unit) -> Self {
        Self { eps, n_max: DEFAULT_N_MAX, unit, halt: HaltVariant::H1, anchor: false, tol: None }
    }

    pub fn n_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }

    pub fn halt(mut self, halt: HaltVariant) -> Self {
        self.halt = halt;
        self
    }

    pub fn anchored(mut self, anchor: bool) -> Self {
        self.anchor = anchor;
        self
    }
}

/// Everything a run produced, for reporting beyond the estimate itself.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub estimate: EntropyEstimate,
    pub state: EntropyState,
    pub orbits: Vec<CriticalOrbit>,
}

/// Runs the convergence loop with the default halt rule.
pub fn run(map: &MapModel, eps: f64, n_max: usize, unit: Unit) -> Result<EntropyEstimate> {
    Ok(run_with(map, &RunConfig::new(eps, unit).n_max(n_max))?.estimate)
}

pub fn run_with(map: &MapModel, config: &RunConfig) -> Result<RunOutput> {
    run_observed(map, config, |_, _, _| {})
}

/// Runs the loop, calling `observe(nu, symbols, points)` after the symbols of step `nu` are known.
pub fn run_observed<F>(map: &MapModel, config: &RunConfig, mut observe: F) -> Result<RunOutput>
where
    F: FnMut(usize, &[MinMaxSymbol], &[f64]),
{
    if config.eps.is_nan() || config.eps <= 0.0 {
        return Err(Error::Parameter(format!("eps must be positive, got {}", config.eps)));
    }
    if config.n_max < 2 {
        return Err(Error::Parameter(format!("n_max must be at least 2, got {}", config.n_max)));
    }
    let anchored;
    let map = if config.anchor {
        anchored = map.anchor(DEFAULT_ANCHOR_MARGIN)?;
        &anchored
    } else {
        map
    };
    let tol = config.tol.unwrap_or_else(|| default_tol(map));
    let l = map.modality();
    let mut orbits = CriticalOrbit::start_all(map, tol)?;
    let mut state = init_state(&orbits, l)?;
    let mut history = Vec::new();
    let mut converged = false;
    let mut symbols = Vec::with_capacity(l);
    let mut points = Vec::with_capacity(l);
    let mut cycles = CycleWatch::new(l);

    for nu in 1..=config.n_max {
        if nu > 1 {
            for orbit in &mut orbits {
                orbit.extend(map, 1, tol)?;
            }
        }
        symbols.clear();
        points.clear();
        symbols.extend(orbits.iter().map(|o| o.symbols[nu - 1]));
        points.extend(orbits.iter().map(|o| o.points[nu - 1]));
        observe(nu, &symbols, &points);
        state.step(&symbols)?;
        if !state.has_bad_symbols() {
            cycles.record(&points, &symbols);
        }

        let log_lap = state.log_lap(config.unit);
        let h = log_lap / nu as f64;
        history.push(h);
        if nu >= 2 {
            let halted = match config.halt {
                HaltVariant::H1 => {
                    let change = (h - history[nu - 2]).abs();
                    if change > config.eps {
                        false
                    } else if change > 1e-12 * h.abs().max(1.0) || !state.estimate_unchanged() {
                        true
                    } else {
                        !state.has_bad_symbols() && cycles.all_closed()
                    }
                }
                HaltVariant::H2 => (log_lap / nu as f64 - log_lap / (nu - 1) as f64).abs() <= config.eps,
            };
            if halted {
                converged = true;
                break;
            }
        }
    }

    let estimate = EntropyEstimate {
        value: *history.last().expect("n_max >= 2"),
        unit: config.unit,
        loops: state.nu(),
        converged,
        halt: config.halt,
        history,
    };
    Ok(RunOutput { estimate, state, orbits })
}

/// Detects critical orbits that have returned to an earlier (point, symbol) pair, after which
/// their symbol sequences are periodic.
struct CycleWatch {
    seen: Vec<HashSet<(u64, MinMaxSymbol)>>,
    closed: Vec<bool>,
}

impl CycleWatch {
    fn new(l: usize) -> Self {
        Self { seen: vec![HashSet::new(); l], closed: vec![false; l] }
    }

    fn record(&mut self, points: &[f64], symbols: &[MinMaxSymbol]) {
        for (k, (&p, &s)) in points.iter().zip(symbols).enumerate() {
            if !self.closed[k] && !self.seen[k].insert((p.to_bits(), s)) {
                self.closed[k] = true;
            }
        }
    }

    fn all_closed(&self) -> bool {
        self.closed.iter().all(|&c| c)
    }
}

/// Drives the recursion for exactly `steps` steps (no halt rule), e.g. for oracle comparisons.
pub fn recursion_to(map: &MapModel, steps: usize, tol: Option<f64>) -> Result<EntropyState> {
    let tol = tol.unwrap_or_else(|| default_tol(map));
    let mut orbits = CriticalOrbit::start_all(map, tol)?;
    let mut state = init_state(&orbits, map.modality())?;
    for nu in 1..=steps {
        if nu > 1 {
            for orbit in &mut orbits {
                orbit.extend(map, 1, tol)?;
            }
        }
        let symbols: Vec<MinMaxSymbol> = orbits.iter().map(|o| o.symbols[nu - 1]).collect();
        state.step(&symbols)?;
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{make_bimodal_cubic, make_gaussian, make_pl5, make_tent};
    use crate::symbolic::{AddressSymbol::Interval, Base};

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn initial_state() {
        let tent = make_tent();
        let orbits = CriticalOrbit::start_all(&tent, 1e-9).unwrap();
        let state = init_state(&orbits, 1).unwrap();
        assert_eq!(state.s_line(1, 0), &big(1));
        assert!(bad_lines(&[orbits[0].symbols[0]], 1).is_empty());

        let cubic = make_bimodal_cubic(1.0, 0.0).unwrap();
        let orbits = CriticalOrbit::start_all(&cubic, 1e-9).unwrap();
        let first: Vec<_> = orbits.iter().map(|o| o.symbols[0]).collect();
        assert!(bad_lines(&first, 1).is_empty());
        assert!(bad_lines(&first, 2).is_empty());
        for l in 1..=6 {
            assert_eq!(EntropyState::new(l).unwrap().s(0), &big(l as u64));
        }
        assert!(matches!(init_state(&orbits, 3), Err(Error::Arity { expected: 3, got: 2 })));
    }

    #[test]
    fn tent_recursion_doubles() {
        let state = recursion_to(&make_tent(), 10, None).unwrap();
        let laps = state.lap_sequence().unwrap();
        for (n, lap) in laps.iter().enumerate() {
            assert_eq!(lap, &big(1 << n));
        }
        assert_eq!(state.s(1), &big(2));
        assert_eq!(state.s(2), &big(4));
        assert_eq!(state.s(3), &big(8));
        let h = state.estimate_at(Unit::Nats).unwrap();
        assert!((h - std::f64::consts::LN_2).abs() < 1e-15);
        assert!((state.estimate_at(Unit::Bits).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn full_cubic_recursion_triples() {
        let state = recursion_to(&make_bimodal_cubic(1.0, 0.0).unwrap(), 12, None).unwrap();
        let laps = state.lap_sequence().unwrap();
        for (n, lap) in laps.iter().enumerate() {
            assert_eq!(lap, &big(3u64.pow(n as u32)));
        }
    }

    #[test]
    fn first_lap_is_l_plus_one() {
        for map in [make_tent(), make_pl5(), make_gaussian(2.8, -0.5).unwrap()] {
            let state = recursion_to(&map, 1, None).unwrap();
            assert_eq!(state.lap_sequence().unwrap()[1], big(map.modality() as u64 + 1));
        }
    }

    #[test]
    fn step_rejects_wrong_arity_and_bad_symbols() {
        let mut state = EntropyState::new(2).unwrap();
        let sym = MinMaxSymbol::new(Base::Max, Interval(1));
        assert!(matches!(state.step(&[sym]), Err(Error::Arity { .. })));
        let out_of_range = MinMaxSymbol::new(Base::Max, Interval(4));
        assert!(state.step(&[sym, out_of_range]).is_err());
        assert_eq!(state.nu(), 0);
    }

    #[test]
    fn negative_crossings_are_reported() {
        // good, bad, bad, bad: l_nu = 2, 4, 6, 6 while S_4 = 2(s_2 + s_1 + s_0) = 10.
        let mut state = EntropyState::new(1).unwrap();
        let good = MinMaxSymbol::new(Base::Max, Interval(2));
        let bad = MinMaxSymbol::new(Base::Max, Interval(1));
        for sym in [good, bad, bad] {
            state.step(&[sym]).unwrap();
        }
        assert_eq!(state.s(3), &big(0));
        let before = state.clone();
        let err = state.step(&[bad]).unwrap_err();
        assert!(matches!(err, Error::Consistency { nu: 4, .. }));
        assert_eq!(state, before);
    }

    #[test]
    fn big_logs() {
        let n = BigUint::from(3u32).pow(5000);
        let expected = 5000.0 * 3f64.ln();
        assert!((ln_big(&n) - expected).abs() / expected < 1e-15);
        assert!((log2_big(&n) - 5000.0 * 3f64.log2()).abs() / expected < 1e-15);
        assert_eq!(log2_big(&(BigUint::one() << 777u32)), 777.0);
        assert_eq!(ln_big(&BigUint::one()), 0.0);
    }

    #[test]
    fn run_validates_arguments() {
        let tent = make_tent();
        assert!(run(&tent, 0.0, 100, Unit::Nats).is_err());
        assert!(run(&tent, 1e-3, 1, Unit::Nats).is_err());
    }

    #[test]
    fn tent_run_converges_immediately() {
        // Orbit 1 -> 0 -> 0 closes at nu = 3 with only good symbols.
        let est = run(&make_tent(), 1e-6, 100, Unit::Nats).unwrap();
        assert!(est.converged);
        assert_eq!(est.loops, 3);
        assert!((est.value - std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn zero_change_in_the_full_growth_prefix_does_not_halt() {
        // l_nu = 2, 4, 8, 16, 30, ...: the first four estimates coincide.
        let g = make_gaussian(2.8, -0.5).unwrap();
        let est = run(&g, 1e-2, 1000, Unit::Nats).unwrap();
        assert!(est.loops > 4);
        assert_eq!(est.history[..4], [std::f64::consts::LN_2; 4]);
        let st = recursion_to(&g, 5, None).unwrap();
        assert!(st.has_bad_symbols());
        let st = recursion_to(&g, 4, None).unwrap();
        assert!(st.estimate_unchanged());
    }

    #[test]
    fn failure_is_a_status() {
        let g = make_gaussian(2.8, -0.5).unwrap();
        let est = run(&g, 1e-9, 100, Unit::Nats).unwrap();
        assert!(!est.converged);
        assert_eq!(est.loops, 100);
        assert_eq!(est.history.len(), 100);
    }
}
