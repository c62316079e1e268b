//! Shared workloads for the benchmarks.

use gridcast_core::{BroadcastSpec, PatternParams};

/// `(t, r)` cells spanning cheap, mid-size and the most expensive searches of
/// the 15 x 8 table.
pub const SEARCH_CELLS: [(u32, u32); 5] = [(3, 3), (6, 4), (10, 5), (15, 1), (15, 8)];

pub fn spec(t: u32, r: u32) -> BroadcastSpec {
    BroadcastSpec::new(t, r).expect("valid bench spec")
}

/// Every offset of period `d`.
pub fn offsets(d: u32) -> Vec<PatternParams> {
    (0..d)
        .map(|e| PatternParams::new(d, e.into()).expect("d >= 1"))
        .collect()
}
