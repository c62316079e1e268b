//! Deciding whether a standard pattern is a `(t,r)` broadcast.
//!
//! The pattern is invariant under the translations `(d, 0)` and `(e, 1)`, and
//! every vertex is a translate of exactly one row representative
//! `(k, 0)`, `0 <= k < d`. The whole infinite grid is therefore covered iff
//! those `d` vertices are. [`is_standard_broadcast`] relies on this;
//! [`brute_force_check`] does not, and exists to check it.

use serde::{Deserialize, Serialize};

use crate::lattice::{
    contains, row_representatives, towers_in_window, BroadcastSpec, GridPoint, PatternParams,
    Window,
};
use crate::signal::{sig, signal_at, SignalLevel};

/// Feasibility verdict together with the signal at every row representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityRecord {
    pub spec: BroadcastSpec,
    pub params: PatternParams,
    pub feasible: bool,
    pub row_totals: Vec<(GridPoint, SignalLevel)>,
}

impl FeasibilityRecord {
    /// Representatives receiving less than `r`.
    pub fn deficient(&self) -> impl Iterator<Item = &(GridPoint, SignalLevel)> {
        let r = u64::from(self.spec.r());
        self.row_totals.iter().filter(move |(_, s)| s.0 < r)
    }

    /// Smallest total over the representatives.
    pub fn min_total(&self) -> SignalLevel {
        self.row_totals
            .iter()
            .map(|&(_, s)| s)
            .min()
            .unwrap_or(SignalLevel::ZERO)
    }
}

/// Whether `p(d,e)` is a `(t,r)` broadcast.
///
/// Evaluates representatives in order and stops at the first deficient one.
pub fn is_standard_broadcast(spec: BroadcastSpec, params: PatternParams) -> bool {
    let r = u64::from(spec.r());
    (0..i64::from(params.d())).all(|k| signal_at(spec.t(), params, k, 0) >= r)
}

/// Full per-representative breakdown for `p(d,e)`.
///
/// Towers are enumerated once in the bounding box of the window around the
/// representatives and each one is credited to every representative it
/// reaches. Towers in the box but out of range of all representatives add
/// nothing.
pub fn deficit_report(spec: BroadcastSpec, params: PatternParams) -> FeasibilityRecord {
    let t = i64::from(spec.t());
    let d = i64::from(params.d());
    let mut totals = vec![0u64; params.d() as usize];
    for tower in towers_in_window(params, Window::around_representatives(params.d(), spec.t())) {
        let reach = t - tower.y.abs();
        if reach <= 0 {
            continue;
        }
        let lo = (tower.x - reach + 1).max(0);
        let hi = (tower.x + reach - 1).min(d - 1);
        for k in lo..=hi {
            totals[k as usize] += (reach - (tower.x - k).abs()) as u64;
        }
    }
    let r = u64::from(spec.r());
    let feasible = totals.iter().all(|&s| s >= r);
    FeasibilityRecord {
        spec,
        params,
        feasible,
        row_totals: row_representatives(params.d())
            .into_iter()
            .zip(totals.into_iter().map(SignalLevel))
            .collect(),
    }
}

/// Default box half-width for [`brute_force_check`]: `3(t + d)`.
pub fn default_oracle_extent(spec: BroadcastSpec, params: PatternParams) -> u32 {
    3 * (spec.t() + params.d())
}

/// Direct check that every vertex of `[-extent, extent]^2` receives at least
/// `r`.
///
/// Towers are located by testing every cell of the box (widened by `t - 1`)
/// for membership, and each tower's diamond is painted onto a signal map.
/// Nothing here uses the row-representative reduction. Memory is
/// `O(extent^2)`; this is a test oracle, not a search primitive.
pub fn brute_force_check(spec: BroadcastSpec, params: PatternParams, extent: u32) -> bool {
    let ext = i64::from(extent);
    let t = i64::from(spec.t());
    let side = (2 * ext + 1) as usize;
    let mut field = vec![0u64; side * side];
    let margin = ext + t - 1;
    for ty in -margin..=margin {
        for tx in -margin..=margin {
            let tower = GridPoint::new(tx, ty);
            if !contains(params, tower) {
                continue;
            }
            for y in (ty - t + 1).max(-ext)..=(ty + t - 1).min(ext) {
                for x in (tx - t + 1).max(-ext)..=(tx + t - 1).min(ext) {
                    let idx = (y + ext) as usize * side + (x + ext) as usize;
                    field[idx] += sig(spec.t(), tower, GridPoint::new(x, y)).0;
                }
            }
        }
    }
    let r = u64::from(spec.r());
    field.iter().all(|&s| s >= r)
}
