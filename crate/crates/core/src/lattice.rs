//! Geometry of the infinite grid and of the standard pattern lattices.

use std::fmt;
use std::iter::StepBy;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest tower strength accepted by [`BroadcastSpec::new`].
///
/// Keeps every search ceiling and coordinate used by the search well inside
/// 32-bit periods and 64-bit coordinates.
pub const MAX_STRENGTH: u32 = 10_000;

/// A vertex `(x, y)` of the infinite grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub const ORIGIN: GridPoint = GridPoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        GridPoint { x, y }
    }

    pub fn checked_add(self, other: GridPoint) -> Option<GridPoint> {
        Some(GridPoint {
            x: self.x.checked_add(other.x)?,
            y: self.y.checked_add(other.y)?,
        })
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i64, i64)> for GridPoint {
    fn from((x, y): (i64, i64)) -> Self {
        GridPoint { x, y }
    }
}

/// Graph distance on the grid, `|p.x - q.x| + |p.y - q.y|`.
pub fn manhattan_distance(p: GridPoint, q: GridPoint) -> Result<u64> {
    p.x.abs_diff(q.x)
        .checked_add(p.y.abs_diff(q.y))
        .ok_or(Error::Overflow)
}

/// Parameters `(d, e)` of the standard pattern `p(d,e) = {(dx + ey, y)}`.
///
/// The offset is always stored in `[0, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct PatternParams {
    d: u32,
    e: u32,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    d: i64,
    e: i64,
}

impl TryFrom<RawParams> for PatternParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        canonicalize(raw.d, raw.e)
    }
}

impl From<PatternParams> for RawParams {
    fn from(p: PatternParams) -> Self {
        RawParams {
            d: p.d.into(),
            e: p.e.into(),
        }
    }
}

impl PatternParams {
    /// Builds `p(d, e mod d)`.
    pub fn new(d: u32, e: i64) -> Result<Self> {
        canonicalize(d.into(), e)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// Exact density `1/d`.
    pub fn density(&self) -> crate::signal::Density {
        crate::signal::Density::new(1, self.d.into())
    }

    /// Column residue of the towers in row `y`: `e*y mod d`.
    pub fn row_residue(&self, y: i64) -> i64 {
        (i128::from(self.e) * i128::from(y)).rem_euclid(i128::from(self.d)) as i64
    }

    /// Tower columns of row `y` inside `[lo, hi]`, ascending.
    pub fn row_towers(&self, y: i64, lo: i64, hi: i64) -> StepBy<RangeInclusive<i64>> {
        let d = i128::from(self.d);
        let first =
            i128::from(lo) + (i128::from(self.row_residue(y)) - i128::from(lo)).rem_euclid(d);
        // An empty range when no tower fits; `first` only exceeds i64 if it also exceeds `hi`.
        let first = i64::try_from(first).unwrap_or(i64::MAX);
        #[allow(clippy::reversed_empty_ranges)]
        let range = if first <= hi { first..=hi } else { 1..=0 };
        range.step_by(self.d as usize)
    }
}

impl fmt::Display for PatternParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.d, self.e)
    }
}

/// Normalizes `(d, e)` to `(d, e mod d)`.
///
/// Shifting `e` by `d` only re-indexes the same lattice, so every offset
/// names the same point set as its canonical representative.
pub fn canonicalize(d: i64, e: i64) -> Result<PatternParams> {
    let d32 = u32::try_from(d)
        .ok()
        .filter(|&d| d >= 1)
        .ok_or(Error::InvalidPeriod(d))?;
    Ok(PatternParams {
        d: d32,
        e: e.rem_euclid(d) as u32,
    })
}

/// Whether `v` is a point of `p(d,e)`, i.e. `v.x - e*v.y == 0 (mod d)`.
pub fn contains(params: PatternParams, v: GridPoint) -> bool {
    let lhs = i128::from(v.x) - i128::from(params.e) * i128::from(v.y);
    lhs.rem_euclid(i128::from(params.d)) == 0
}

/// Mirror image of the pattern under `x -> -x`, which is `p(d, (d - e) mod d)`.
pub fn reflect(params: PatternParams) -> PatternParams {
    PatternParams {
        d: params.d,
        e: (params.d - params.e) % params.d,
    }
}

/// Tower strength `t` and required total signal `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct BroadcastSpec {
    t: u32,
    r: u32,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    t: u32,
    r: u32,
}

impl TryFrom<RawSpec> for BroadcastSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        BroadcastSpec::new(raw.t, raw.r)
    }
}

impl From<BroadcastSpec> for RawSpec {
    fn from(s: BroadcastSpec) -> Self {
        RawSpec { t: s.t, r: s.r }
    }
}

impl BroadcastSpec {
    pub fn new(t: u32, r: u32) -> Result<Self> {
        if t == 0 || r == 0 || t > MAX_STRENGTH {
            return Err(Error::InvalidSpec {
                t,
                r,
                max_t: MAX_STRENGTH,
            });
        }
        Ok(BroadcastSpec { t, r })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn r(&self) -> u32 {
        self.r
    }
}

impl fmt::Display for BroadcastSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t, self.r)
    }
}

/// Inclusive bounding box of grid vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Window {
    x_min: i64,
    x_max: i64,
    y_min: i64,
    y_max: i64,
}

impl Window {
    pub fn new(x_min: i64, x_max: i64, y_min: i64, y_max: i64) -> Result<Self> {
        if x_min > x_max || y_min > y_max {
            return Err(Error::InvalidWindow {
                x_min,
                x_max,
                y_min,
                y_max,
            });
        }
        Ok(Window {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }

    /// Box holding every vertex within distance `t` of a row representative
    /// `(k, 0)`, `0 <= k < d`: `x in [-t, d - 1 + t]`, `y in [-t, t]`.
    pub fn around_representatives(d: u32, t: u32) -> Self {
        let (d, t) = (i64::from(d), i64::from(t));
        Window {
            x_min: -t,
            x_max: d - 1 + t,
            y_min: -t,
            y_max: t,
        }
    }

    /// The `(2n+1) x (2n+1)` box centred on the origin.
    pub fn centered(n: u32) -> Self {
        let n = i64::from(n);
        Window {
            x_min: -n,
            x_max: n,
            y_min: -n,
            y_max: n,
        }
    }

    pub fn x_min(&self) -> i64 {
        self.x_min
    }

    pub fn x_max(&self) -> i64 {
        self.x_max
    }

    pub fn y_min(&self) -> i64 {
        self.y_min
    }

    pub fn y_max(&self) -> i64 {
        self.y_max
    }

    pub fn contains(&self, v: GridPoint) -> bool {
        (self.x_min..=self.x_max).contains(&v.x) && (self.y_min..=self.y_max).contains(&v.y)
    }

    /// Number of vertices in the box.
    pub fn cell_count(&self) -> u128 {
        let w = (i128::from(self.x_max) - i128::from(self.x_min) + 1) as u128;
        let h = (i128::from(self.y_max) - i128::from(self.y_min) + 1) as u128;
        w * h
    }
}

/// Pattern points inside `w`, in row-major order (rows ascending, then columns).
pub fn towers_in_window(params: PatternParams, w: Window) -> Vec<GridPoint> {
    (w.y_min..=w.y_max)
        .flat_map(|y| {
            params
                .row_towers(y, w.x_min, w.x_max)
                .map(move |x| GridPoint::new(x, y))
        })
        .collect()
}

/// The vertices `(0,0), (1,0), ..., (d-1,0)`; one per coset of the pattern lattice.
pub fn row_representatives(d: u32) -> Vec<GridPoint> {
    (0..i64::from(d)).map(|x| GridPoint::new(x, 0)).collect()
}
