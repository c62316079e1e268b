//! Signal arithmetic and the usable-signal density bound.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{manhattan_distance, BroadcastSpec, GridPoint, PatternParams};

/// Exact broadcast density.
pub type Density = Ratio<u64>;

/// Coordinates further than this from the origin are rejected by
/// [`total_signal`] so that row and column arithmetic stays in `i64`.
const COORD_LIMIT: i64 = 1 << 60;

/// An amount of signal received at a vertex.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct SignalLevel(pub u64);

impl SignalLevel {
    pub const ZERO: SignalLevel = SignalLevel(0);

    pub fn value(self) -> u64 {
        self.0
    }
}

impl Add for SignalLevel {
    type Output = SignalLevel;

    fn add(self, rhs: SignalLevel) -> SignalLevel {
        SignalLevel(self.0 + rhs.0)
    }
}

impl Sum for SignalLevel {
    fn sum<I: Iterator<Item = SignalLevel>>(iter: I) -> SignalLevel {
        iter.fold(SignalLevel::ZERO, Add::add)
    }
}

impl fmt::Display for SignalLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Signal a tower of strength `t` at `tower` sends to `v`: `max(t - dist, 0)`.
pub fn sig(t: u32, tower: GridPoint, v: GridPoint) -> SignalLevel {
    match manhattan_distance(tower, v) {
        Ok(dist) if dist < u64::from(t) => SignalLevel(u64::from(t) - dist),
        _ => SignalLevel::ZERO,
    }
}

/// Total signal at `v` from every tower of `p(d,e)`.
///
/// Only towers at distance `< t` contribute; those are found row by row
/// inside the diamond of radius `t - 1` around `v`.
pub fn total_signal(
    spec: BroadcastSpec,
    params: PatternParams,
    v: GridPoint,
) -> Result<SignalLevel> {
    if v.x.abs() > COORD_LIMIT || v.y.abs() > COORD_LIMIT {
        return Err(Error::Overflow);
    }
    Ok(SignalLevel(signal_at(spec.t(), params, v.x, v.y)))
}

/// Unchecked core of [`total_signal`]; callers keep `|x|, |y| <= COORD_LIMIT`.
#[inline]
pub(crate) fn signal_at(t: u32, params: PatternParams, x: i64, y: i64) -> u64 {
    let t = i64::from(t);
    let mut total = 0u64;
    for dy in -(t - 1)..=(t - 1) {
        let reach = t - dy.abs();
        for tx in params.row_towers(y + dy, x - reach + 1, x + reach - 1) {
            total += (reach - (tx - x).abs()) as u64;
        }
    }
    total
}

/// Usable signal of a single tower, `sum over v of min(sig(v, T), r)`.
///
/// Exactly `4k` vertices sit at distance `k >= 1`, so the sum is
/// `min(t, r) + sum_{k=1}^{t-1} 4k * min(t - k, r)`.
pub fn usable_signal(spec: BroadcastSpec) -> u64 {
    let (t, r) = (u64::from(spec.t()), u64::from(spec.r()));
    t.min(r) + (1..t).map(|k| 4 * k * (t - k).min(r)).sum::<u64>()
}

/// The counting bound on standard broadcasts for a given `(t, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityBound {
    /// Usable signal per tower.
    pub usable: u64,
    /// `r / usable`; no `(t,r)` broadcast is sparser than this.
    pub delta_min: Density,
    /// `floor(usable / r)`; the largest period a standard broadcast can have.
    /// Zero means no standard broadcast exists at all.
    pub d_max: u32,
}

pub fn density_bound(spec: BroadcastSpec) -> DensityBound {
    let usable = usable_signal(spec);
    let r = u64::from(spec.r());
    // Each vertex contributes at most r to the usable sum, so usable / r is
    // bounded by the diamond size 2t^2 - 2t + 1, which fits in u32.
    let d_max = u32::try_from(usable / r).expect("d_max bounded by diamond size");
    DensityBound {
        usable,
        delta_min: Ratio::new(r, usable),
        d_max,
    }
}

/// Known optimal densities for `r = 1` (all `t`) and `r = 2` (`t >= 2`).
pub fn closed_form_density(t: u32, r: u32) -> Result<Density> {
    let t64 = u64::from(t);
    match (t, r) {
        (1.., 1) => Ok(Ratio::new(1, 2 * t64 * t64 - 2 * t64 + 1)),
        (2, 2) => Ok(Ratio::new(1, 3)),
        (3.., 2) => Ok(Ratio::new(1, 2 * (t64 - 1) * (t64 - 1))),
        _ => Err(Error::OutOfDomain { t, r }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{contains, Window};

    fn spec(t: u32, r: u32) -> BroadcastSpec {
        BroadcastSpec::new(t, r).unwrap()
    }

    fn params(d: u32, e: i64) -> PatternParams {
        PatternParams::new(d, e).unwrap()
    }

    /// Sum of `min(sig, r)` over every vertex of the distance-`t` diamond.
    fn usable_by_enumeration(t: u32, r: u32) -> u64 {
        let t_i = i64::from(t);
        let mut sum = 0;
        for x in -t_i..=t_i {
            for y in -t_i..=t_i {
                sum += sig(t, GridPoint::ORIGIN, GridPoint::new(x, y))
                    .0
                    .min(u64::from(r));
            }
        }
        sum
    }

    /// Sum of `sig` over every pattern point in a box around `v`, found by
    /// per-cell membership tests.
    fn total_by_box(t: u32, pp: PatternParams, v: GridPoint) -> u64 {
        let t_i = i64::from(t);
        let mut sum = 0;
        for x in v.x - t_i..=v.x + t_i {
            for y in v.y - t_i..=v.y + t_i {
                let c = GridPoint::new(x, y);
                if contains(pp, c) {
                    sum += sig(t, c, v).0;
                }
            }
        }
        sum
    }

    #[test]
    fn sig_examples() {
        let o = GridPoint::ORIGIN;
        assert_eq!(sig(3, o, o), SignalLevel(3));
        assert_eq!(sig(3, o, GridPoint::new(1, 1)), SignalLevel(1));
        assert_eq!(sig(3, o, GridPoint::new(3, 1)), SignalLevel(0));
        assert_eq!(
            sig(
                3,
                GridPoint::new(i64::MIN, i64::MIN),
                GridPoint::new(i64::MAX, 0)
            ),
            SignalLevel(0)
        );
    }

    #[test]
    fn total_signal_examples() {
        let o = GridPoint::ORIGIN;
        assert_eq!(total_by_box(2, params(1, 0), o), 6);
        assert_eq!(
            total_signal(spec(2, 6), params(1, 0), o),
            Ok(SignalLevel(6))
        );
        assert_eq!(
            total_signal(spec(1, 1), params(1, 0), o),
            Ok(SignalLevel(1))
        );
        let at = GridPoint::new(1, 0);
        let got = total_signal(spec(2, 1), params(5, 2), at).unwrap();
        assert_eq!(got.0, total_by_box(2, params(5, 2), at));
        assert!(got.0 >= 1);
    }

    #[test]
    fn total_signal_rejects_far_coordinates() {
        let far = GridPoint::new(i64::MAX, 0);
        assert_eq!(
            total_signal(spec(2, 1), params(3, 1), far),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn total_signal_matches_box_sum() {
        for t in 1..=6 {
            for d in 1..=20 {
                for e in 0..d {
                    let pp = params(d, e.into());
                    for v in [(0, 0), (3, -2), (-7, 11), (d as i64 - 1, 0)] {
                        let v = GridPoint::from(v);
                        assert_eq!(
                            total_signal(spec(t, 1), pp, v).unwrap().0,
                            total_by_box(t, pp, v),
                            "t={t} {pp} v={v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn usable_signal_examples() {
        // Frozen from the diamond enumeration above.
        assert_eq!(usable_by_enumeration(2, 1), 5);
        assert_eq!(usable_by_enumeration(3, 1), 13);
        assert_eq!(usable_by_enumeration(4, 5), 44);
        assert_eq!(usable_signal(spec(2, 1)), 5);
        assert_eq!(usable_signal(spec(3, 1)), 13);
        assert_eq!(usable_signal(spec(4, 5)), 44);
    }

    #[test]
    fn usable_signal_matches_enumeration() {
        for t in 1..=25 {
            for r in 1..=12 {
                assert_eq!(
                    usable_signal(spec(t, r)),
                    usable_by_enumeration(t, r),
                    "t={t} r={r}"
                );
            }
            let t64 = u64::from(t);
            assert_eq!(usable_signal(spec(t, 1)), 2 * t64 * t64 - 2 * t64 + 1);
        }
    }

    #[test]
    fn density_bound_examples() {
        assert_eq!(density_bound(spec(2, 1)).d_max, 5);
        let none = density_bound(spec(1, 2));
        assert_eq!(
            (none.usable, none.delta_min, none.d_max),
            (1, Ratio::new(2, 1), 0)
        );
        assert_eq!(density_bound(spec(15, 1)).d_max, 421);
        let b = density_bound(spec(4, 5));
        assert_eq!((b.usable, b.d_max), (44, 8));
        assert_eq!(b.delta_min, Ratio::new(5, 44));
    }

    #[test]
    fn d_max_brackets_usable_signal() {
        for t in 1..=30 {
            for r in 1..=20 {
                let b = density_bound(spec(t, r));
                let r = u64::from(r);
                assert!(u64::from(b.d_max) * r <= b.usable);
                assert!(b.usable < (u64::from(b.d_max) + 1) * r);
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_density(2, 1), Ok(Ratio::new(1, 5)));
        assert_eq!(closed_form_density(2, 2), Ok(Ratio::new(1, 3)));
        assert_eq!(closed_form_density(5, 2), Ok(Ratio::new(1, 32)));
        assert_eq!(closed_form_density(1, 1), Ok(Ratio::new(1, 1)));
        assert_eq!(
            closed_form_density(1, 2),
            Err(Error::OutOfDomain { t: 1, r: 2 })
        );
        assert_eq!(
            closed_form_density(4, 3),
            Err(Error::OutOfDomain { t: 4, r: 3 })
        );
        assert!(closed_form_density(0, 1).is_err());
    }

    #[test]
    fn sig_nondecreasing_in_strength() {
        let w = Window::centered(6);
        for t in 1..8 {
            for x in w.x_min()..=w.x_max() {
                for y in w.y_min()..=w.y_max() {
                    let v = GridPoint::new(x, y);
                    assert!(sig(t + 1, GridPoint::ORIGIN, v) >= sig(t, GridPoint::ORIGIN, v));
                }
            }
        }
    }
}
