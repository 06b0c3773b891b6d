use mmentropy::decimal::{format_decimal, parse_rational};
use mmentropy::entropy::{ln_big, log2_big, recursion_to, EntropyState};
use mmentropy::error::Error;
use mmentropy::maps::{make_gaussian, MapModel, Shape, DEFAULT_ANCHOR_MARGIN};
use mmentropy::oracle::{exact_profiles, grid_profiles, DEFAULT_BREAKPOINT_CAP};
use mmentropy::symbolic::{
    advance_minmax, default_tol, is_bad, AddressSymbol, Base, CriticalOrbit, MinMaxSymbol,
};
use mmentropy::sweep::SweepAxis;
use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Anchored l-modal PL map on [0, 1]: lap widths from `gaps`, maxima in [1/2, 1] and minima in
/// [0, 1/2) on a grid coprime to the breakpoint grid.
fn anchored_pl(gaps: &[i64], levels: &[i64], negative: bool) -> MapModel {
    let total: i64 = gaps.iter().sum();
    let mut bps = vec![q(0, 1)];
    let mut acc = 0;
    for g in gaps {
        acc += g;
        bps.push(q(acc, total));
    }
    let l = gaps.len() - 1;
    let mut vals = vec![q(0, 1)];
    for (k, &lv) in levels.iter().take(l).enumerate() {
        let v = if k % 2 == 0 { 507 + lv % 507 } else { lv % 507 };
        vals.push(q(v, 1013));
    }
    vals.push(if l % 2 == 1 { q(0, 1) } else { q(1, 1) });
    if negative {
        vals = vals.into_iter().map(|v| q(1, 1) - v).collect();
    }
    MapModel::piecewise_linear(bps, vals).unwrap()
}

fn pl_strategy(max_l: usize) -> impl Strategy<Value = MapModel> {
    (1..=max_l)
        .prop_flat_map(|l| {
            (
                prop::collection::vec(2i64..=6, l + 1),
                prop::collection::vec(0i64..1013, l),
                any::<bool>(),
            )
        })
        .prop_map(|(g, v, neg)| anchored_pl(&g, &v, neg))
}

fn symbol_strategy(l: usize) -> impl Strategy<Value = MinMaxSymbol> {
    let all: Vec<MinMaxSymbol> = MinMaxSymbol::alphabet(l).collect();
    prop::sample::select(all)
}

fn stream_strategy() -> impl Strategy<Value = (usize, Vec<Vec<MinMaxSymbol>>)> {
    (1usize..=6).prop_flat_map(|l| {
        (Just(l), prop::collection::vec(prop::collection::vec(symbol_strategy(l), l), 1..40))
    })
}

fn symbols_of(map: &MapModel, steps: usize) -> Option<Vec<Vec<MinMaxSymbol>>> {
    let tol = default_tol(map);
    let mut orbits = CriticalOrbit::start_all(map, tol).ok()?;
    for o in &mut orbits {
        o.extend(map, steps.saturating_sub(1), tol).ok()?;
    }
    Some((0..steps).map(|nu| orbits.iter().map(|o| o.symbols[nu]).collect()).collect())
}

fn check_state(state: &EntropyState) {
    let l = state.modality();
    let nu = state.nu();
    let laps = state.lap_sequence().unwrap();
    let lap = &laps[nu];
    let lb = BigUint::from(l);
    let total = state.s(nu) + state.big_s(nu);
    assert_eq!(&total % &lb, BigUint::from(0u32));
    assert_eq!(&(&total / &lb), lap);
    assert_eq!(state.s(nu) + state.big_s(nu), lap * &lb);
    let mut per_line = BigUint::from(0u32);
    for i in 1..=l {
        assert_eq!(state.s_line(i, nu) + state.big_s_line(i), lap.clone());
        per_line += state.s_line(i, nu);
    }
    assert_eq!(&per_line, state.s(nu));
}

#[test]
fn transition_table_is_total_dual_and_parity_lawful() {
    for l in 1..=6 {
        let alphabet: Vec<MinMaxSymbol> = MinMaxSymbol::alphabet(l).collect();
        assert_eq!(alphabet.len(), 2 * (2 * l + 1));
        for &prev in &alphabet {
            for next in AddressSymbol::alphabet(l) {
                let pos = advance_minmax(prev, next, Shape::Positive);
                let neg = advance_minmax(prev, next, Shape::Negative);
                assert_eq!(pos.address, next);
                assert!(alphabet.contains(&pos) && alphabet.contains(&neg));
                assert_eq!(neg.base, pos.base.flip());
                let expected = match prev.address {
                    AddressSymbol::Critical(k) if k % 2 == 0 => Base::Min,
                    AddressSymbol::Critical(_) => Base::Max,
                    AddressSymbol::Interval(j) if j % 2 == 1 => prev.base,
                    AddressSymbol::Interval(_) => prev.base.flip(),
                };
                assert_eq!(pos.base, expected, "l={l} prev={prev} next={next}");
            }
        }
    }
}

#[test]
fn bad_symbol_counts() {
    for l in 1..=6 {
        for i in 1..=l {
            let bad = MinMaxSymbol::alphabet(l).filter(|&s| is_bad(s, i, l)).count();
            assert_eq!(bad, 2 * (l + 1), "l={l} i={i}");
        }
    }
}

#[test]
fn symbol_chain_matches_local_extrema() {
    // Tent and the full cubic: omega_n^i says whether f^n has a max or a min at c_i.
    let tent = mmentropy::maps::make_tent();
    let cubic = mmentropy::maps::make_bimodal_cubic(1.0, 0.0).unwrap();
    for (map, delta) in [(&tent, 2f64.powi(-20)), (&cubic, 1e-6)] {
        let n = 8;
        let symbols = symbols_of(map, n).unwrap();
        for (k, &c) in map.critical_points().iter().enumerate() {
            let (mut lo, mut mid, mut hi) = (c - delta, c, c + delta);
            for step in symbols.iter() {
                lo = map.evaluate(lo).unwrap();
                mid = map.evaluate(mid).unwrap();
                hi = map.evaluate(hi).unwrap();
                let is_max = lo < mid && hi < mid;
                let is_min = lo > mid && hi > mid;
                match step[k].base {
                    Base::Max => assert!(is_max, "{}: c{} expected max", map.label(), k + 1),
                    Base::Min => assert!(is_min, "{}: c{} expected min", map.label(), k + 1),
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn fuzzed_streams_keep_the_accounting((l, stream) in stream_strategy()) {
        let mut state = EntropyState::new(l).unwrap();
        for symbols in &stream {
            let before = state.clone();
            match state.step(symbols) {
                Ok(()) => check_state(&state),
                Err(Error::Consistency { nu, .. }) => {
                    prop_assert_eq!(nu, before.nu() + 1);
                    prop_assert_eq!(&state, &before);
                    break;
                }
                Err(e) => panic!("unexpected error {e}"),
            }
        }
    }

    #[test]
    fn map_streams_never_go_negative(map in pl_strategy(6)) {
        let symbols = symbols_of(&map, 30).unwrap();
        let mut state = EntropyState::new(map.modality()).unwrap();
        let mut prev = BigUint::from(1u32);
        for s in &symbols {
            state.step(s).unwrap();
            check_state(&state);
            prop_assert!(*state.lap() >= prev);
            prev = state.lap().clone();
            // l_nu <= (l+1)^nu, so 0 <= h_nu <= log(l+1).
            let bound = BigUint::from(map.modality() + 1).pow(state.nu() as u32);
            prop_assert!(*state.lap() <= bound);
        }
    }

    #[test]
    fn recursion_matches_exact_oracle(map in pl_strategy(4)) {
        let n = 5;
        let symbols = symbols_of(&map, n).unwrap();
        prop_assume!(symbols.iter().flatten().all(|s| matches!(s.address, AddressSymbol::Interval(_))));
        let profiles = exact_profiles(&map, n, DEFAULT_BREAKPOINT_CAP).unwrap();
        prop_assume!(profiles.iter().all(|p| p.degenerate == 0));
        let mut state = EntropyState::new(map.modality()).unwrap();
        for s in &symbols {
            state.step(s).unwrap();
        }
        let laps = state.lap_sequence().unwrap();
        for p in &profiles {
            prop_assert_eq!(laps[p.n].clone(), BigUint::from(p.laps), "n = {}", p.n);
            for i in 1..=map.modality() {
                prop_assert_eq!(state.s_line(i, p.n).clone(), BigUint::from(p.crossings[i - 1]));
            }
        }
        // Oracle-only identity: laps grow by the crossing total.
        for w in profiles.windows(2) {
            prop_assert_eq!(w[1].laps, w[0].laps + w[0].crossings.iter().sum::<u64>());
        }
    }

    #[test]
    fn grid_oracle_is_a_refining_lower_bound(map in pl_strategy(3)) {
        // Nested grids: every coarse sample is also a fine sample.
        let n = 3;
        let exact = exact_profiles(&map, n, DEFAULT_BREAKPOINT_CAP).unwrap();
        let coarse = grid_profiles(&map, n, (1 << 10) + 1);
        let fine = grid_profiles(&map, n, (1 << 16) + 1);
        for ((e, c), f) in exact.iter().zip(&coarse).zip(&fine) {
            prop_assert!(c.laps <= f.laps && f.laps <= e.laps);
            for i in 0..e.crossings.len() {
                prop_assert!(c.crossings[i] <= f.crossings[i] && f.crossings[i] <= e.crossings[i]);
            }
        }
    }

    #[test]
    fn anchoring_preserves_the_map(alpha in 1.5f64..4.0, beta in -0.95f64..0.0) {
        let g = make_gaussian(alpha, beta).unwrap();
        prop_assume!(g.validate(256).is_valid());
        let a = g.anchor(DEFAULT_ANCHOR_MARGIN).unwrap();
        prop_assert!(a.is_anchored());
        let (lo, hi) = g.interval();
        for k in 0..=64 {
            let x = lo + (hi - lo) * k as f64 / 64.0;
            prop_assert_eq!(a.evaluate(x).unwrap(), g.evaluate(x).unwrap());
        }
        prop_assert_eq!(recursion_to(&a, 20, None).is_ok(), true);
    }

    #[test]
    fn big_logs_agree_with_f64(n in 1u64..) {
        let b = BigUint::from(n);
        prop_assert!((ln_big(&b) - (n as f64).ln()).abs() <= 1e-12 * (n as f64).ln().max(1.0));
        prop_assert!((log2_big(&b) - (n as f64).log2()).abs() <= 1e-12 * (n as f64).log2().max(1.0));
    }

    #[test]
    fn decimals_round_trip(int in -99999i64..99999, frac in 0u32..1000) {
        let text = format!("{}{}.{:03}", if int < 0 { "-" } else { "" }, int.abs(), frac);
        let value = parse_rational(&text).unwrap();
        prop_assert_eq!(format_decimal(&value, 3), text);
    }

    #[test]
    fn sweep_axes_cover_the_range(start in -500i64..500, len in 0i64..200, step in 1i64..50) {
        let axis = SweepAxis::new("x", q(start, 1000), q(start + len, 1000), q(step, 1000)).unwrap();
        let values = axis.values();
        prop_assert_eq!(values.len() as i64, len / step + 1);
        prop_assert!(values.windows(2).all(|w| w[0] < w[1]));
    }
}
