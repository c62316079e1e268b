//! Upper bounds on the optimal density of `(t,r)` broadcast dominating sets
//! on the infinite grid `Z x Z`.
//!
//! A tower of strength `t` at `T` sends `max(t - dist(v, T), 0)` signal to
//! every vertex `v`; a `(t,r)` broadcast is a tower set under which every
//! vertex receives at least `r` in total. This crate searches the *standard
//! patterns* `p(d,e) = {(dx + ey, y)}`, each of density `1/d`, and reports the
//! sparsest one that is a broadcast.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`]: grid points, pattern parameters, windows, membership.
//! * [`signal`]: per-tower and aggregate signal, the usable-signal bound.
//! * [`feasibility`]: deciding whether `p(d,e)` is a `(t,r)` broadcast.
//! * [`search`]: the exhaustive search, full tables and conjecture scans.
//! * [`render`]: ASCII and SVG diagrams of patterns.

pub mod error;
pub mod feasibility;
pub mod lattice;
pub mod render;
pub mod search;
pub mod signal;

pub use error::{Error, Result};
pub use feasibility::{
    brute_force_check, default_oracle_extent, deficit_report, is_standard_broadcast,
    FeasibilityRecord,
};
pub use lattice::{
    canonicalize, contains, manhattan_distance, reflect, row_representatives, towers_in_window,
    BroadcastSpec, GridPoint, PatternParams, Window,
};
pub use render::{render_ascii, render_svg, Viewport};
pub use search::{
    compare_lifts, conjecture_scan, feasibility_table, feasibility_table_with, min_density_search,
    min_density_search_with, ConjectureComparison, Schedule, SearchResult, Verdict,
};
pub use signal::{
    closed_form_density, density_bound, sig, total_signal, usable_signal, Density, DensityBound,
    SignalLevel,
};
