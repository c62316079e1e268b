use gridcast_core::lattice::Window;
use gridcast_core::{
    brute_force_check, contains, density_bound, feasibility_table_with, is_standard_broadcast,
    min_density_search, min_density_search_with, reflect, total_signal, towers_in_window,
    BroadcastSpec, GridPoint, PatternParams, Schedule,
};
use proptest::prelude::*;

fn spec(t: u32, r: u32) -> BroadcastSpec {
    BroadcastSpec::new(t, r).unwrap()
}

fn params(d: u32, e: u32) -> PatternParams {
    PatternParams::new(d, e.into()).unwrap()
}

fn pattern() -> impl Strategy<Value = PatternParams> {
    (1u32..=60)
        .prop_flat_map(|d| (Just(d), 0..d))
        .prop_map(|(d, e)| params(d, e))
}

/// Upward scan over every `(d, e)` with `d <= d_max`, keeping the last
/// feasible `d`, exactly as the reference procedure is written.
fn ascending_reference(s: BroadcastSpec) -> (u32, Vec<u32>) {
    let d_max = density_bound(s).d_max;
    let mut best = 0;
    for d in 1..=d_max {
        for e in 0..d {
            if is_standard_broadcast(s, params(d, e)) {
                best = d;
            }
        }
    }
    let witnesses = (0..best)
        .filter(|&e| is_standard_broadcast(s, params(best, e)))
        .collect();
    (best, witnesses)
}

#[test]
fn descending_search_matches_ascending_reference() {
    for t in 1..=7 {
        for r in 1..=8 {
            let s = spec(t, r);
            let (best_d, witnesses) = ascending_reference(s);
            let res = min_density_search(s);
            assert_eq!(res.best_d(), best_d, "{s}");
            assert_eq!(res.witnesses, witnesses, "{s}");
            assert_eq!(res.best_e(), witnesses.first().copied(), "{s}");
        }
    }
}

#[test]
fn row_density_is_exactly_one_per_period() {
    for d in 1..=50 {
        for e in 0..d {
            let pp = params(d, e);
            for y in -3..=3 {
                for start in [-7i64, 0, 13] {
                    let hits = (start..start + i64::from(d))
                        .filter(|&x| contains(pp, GridPoint::new(x, y)))
                        .count();
                    assert_eq!(hits, 1, "{pp} row {y} from {start}");
                }
            }
        }
    }
}

#[test]
fn schedules_are_identical_on_wider_table() {
    assert_eq!(
        feasibility_table_with(10, 8, Schedule::Sequential).unwrap(),
        feasibility_table_with(10, 8, Schedule::Parallel).unwrap()
    );
}

#[test]
fn oracle_agreement_on_small_grid() {
    for t in 1..=3 {
        for r in 1..=4 {
            let s = spec(t, r);
            for d in 1..=density_bound(s).d_max + 2 {
                for e in 0..d {
                    let pp = params(d, e);
                    assert_eq!(
                        is_standard_broadcast(s, pp),
                        brute_force_check(s, pp, 3 * (t + d)),
                        "{s} {pp}"
                    );
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn membership_is_periodic(pp in pattern(), x in -10_000i64..10_000, y in -10_000i64..10_000) {
        let v = GridPoint::new(x, y);
        let here = contains(pp, v);
        prop_assert_eq!(here, contains(pp, GridPoint::new(x + i64::from(pp.d()), y)));
        prop_assert_eq!(here, contains(pp, GridPoint::new(x + i64::from(pp.e()), y + 1)));
    }

    #[test]
    fn reflect_is_an_involution(pp in pattern()) {
        prop_assert_eq!(reflect(reflect(pp)), pp);
        prop_assert_eq!(reflect(pp).d(), pp.d());
    }

    #[test]
    fn reflect_mirrors_membership(pp in pattern(), x in -500i64..500, y in -500i64..500) {
        prop_assert_eq!(contains(pp, GridPoint::new(x, y)), contains(reflect(pp), GridPoint::new(-x, y)));
    }

    #[test]
    fn offsets_normalize(d in 1u32..200, e in any::<i32>(), k in -50i64..50) {
        let a = PatternParams::new(d, e.into()).unwrap();
        let b = PatternParams::new(d, i64::from(e) + k * i64::from(d)).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(a.e() < a.d());
    }

    #[test]
    fn window_enumeration_matches_cell_filter(
        pp in pattern(),
        x0 in -40i64..40, y0 in -40i64..40, w in 0i64..30, h in 0i64..10,
    ) {
        let win = Window::new(x0, x0 + w, y0, y0 + h).unwrap();
        let mut filtered = Vec::new();
        for y in y0..=y0 + h {
            for x in x0..=x0 + w {
                if contains(pp, GridPoint::new(x, y)) {
                    filtered.push(GridPoint::new(x, y));
                }
            }
        }
        prop_assert_eq!(towers_in_window(pp, win), filtered);
    }

    #[test]
    fn empirical_density_converges(pp in pattern(), n in 0u32..40) {
        let count = towers_in_window(pp, Window::centered(n)).len() as f64;
        let side = f64::from(2 * n + 1);
        let frac = count / (side * side);
        prop_assert!((frac - 1.0 / f64::from(pp.d())).abs() <= f64::from(pp.d() + 1) / side);
    }

    #[test]
    fn signal_is_translation_invariant(
        t in 1u32..=8, pp in pattern(), k in 0u32..60,
        x in -1_000_000i64..1_000_000, y in -1_000_000i64..1_000_000,
    ) {
        let s = spec(t, 1);
        let k = i64::from(k % pp.d());
        let base = total_signal(s, pp, GridPoint::new(k, 0)).unwrap();
        let moved = GridPoint::new(i64::from(pp.d()) * x + i64::from(pp.e()) * y + k, y);
        prop_assert_eq!(total_signal(s, pp, moved).unwrap(), base);
    }

    #[test]
    fn search_never_exceeds_ceiling(t in 1u32..=12, r in 1u32..=10) {
        let s = spec(t, r);
        let res = min_density_search_with(s, Schedule::Sequential);
        prop_assert!(res.best_d() <= density_bound(s).d_max);
        prop_assert_eq!(res.best_d() == 0, res.density().is_none());
        prop_assert_eq!(res.best_d() == 0, res.witnesses.is_empty());
    }
}
