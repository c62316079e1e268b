//! Exhaustive search over standard patterns.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::feasibility::is_standard_broadcast;
use crate::lattice::{BroadcastSpec, PatternParams};
use crate::signal::{density_bound, Density};

/// How independent feasibility checks are scheduled.
///
/// Both schedules produce identical results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Schedule {
    Sequential,
    #[default]
    Parallel,
}

/// Sparsest standard broadcast found for a `(t, r)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub spec: BroadcastSpec,
    /// `T(d,e)` with the largest feasible `d` and, among those, the lowest `e`.
    pub best: Option<PatternParams>,
    /// Every feasible offset at the best period, ascending.
    pub witnesses: Vec<u32>,
}

impl SearchResult {
    fn infeasible(spec: BroadcastSpec) -> Self {
        SearchResult {
            spec,
            best: None,
            witnesses: Vec::new(),
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.best.is_some()
    }

    /// Best period, or 0 when no standard broadcast exists.
    pub fn best_d(&self) -> u32 {
        self.best.map_or(0, |p| p.d())
    }

    pub fn best_e(&self) -> Option<u32> {
        self.best.map(|p| p.e())
    }

    pub fn density(&self) -> Option<Density> {
        self.best.map(|p| p.density())
    }
}

/// Sparsest standard `(t,r)` broadcast with the default schedule.
pub fn min_density_search(spec: BroadcastSpec) -> SearchResult {
    min_density_search_with(spec, Schedule::default())
}

/// Sparsest standard `(t,r)` broadcast.
///
/// Scans `d` downward from `d_max` and stops at the first period with any
/// feasible offset. This returns the same pattern as an upward scan that keeps
/// the last feasible `d`; no monotonicity in `d` is assumed.
pub fn min_density_search_with(spec: BroadcastSpec, schedule: Schedule) -> SearchResult {
    let d_max = density_bound(spec).d_max;
    for d in (1..=d_max).rev() {
        let witnesses = witnesses_at(spec, d, schedule);
        if let Some(&e) = witnesses.first() {
            return SearchResult {
                spec,
                best: Some(PatternParams::new(d, e.into()).expect("d >= 1")),
                witnesses,
            };
        }
    }
    SearchResult::infeasible(spec)
}

/// Feasible offsets at period `d`, ascending.
///
/// `p(d,e)` and `p(d,d-e)` are mirror images, so only `e <= d/2` is searched;
/// mirrored offsets are re-verified before they are reported.
fn witnesses_at(spec: BroadcastSpec, d: u32, schedule: Schedule) -> Vec<u32> {
    let feasible = |e: &u32| is_standard_broadcast(spec, pattern(d, *e));
    let half = 0..=d / 2;
    let lower: Vec<u32> = match schedule {
        Schedule::Sequential => half.filter(feasible).collect(),
        Schedule::Parallel => half.into_par_iter().filter(feasible).collect(),
    };
    let mut all = lower.clone();
    all.extend(
        lower
            .iter()
            .map(|&e| (d - e) % d)
            .filter(|m| !lower.contains(m))
            .filter(feasible),
    );
    all.sort_unstable();
    all
}

fn pattern(d: u32, e: u32) -> PatternParams {
    PatternParams::new(d, e.into()).expect("d >= 1")
}

/// [`min_density_search`] for every `(t, r)` in `[1, t_max] x [1, r_max]`,
/// ordered by `t` then `r`.
pub fn feasibility_table(t_max: u32, r_max: u32) -> Result<Vec<SearchResult>> {
    feasibility_table_with(t_max, r_max, Schedule::default())
}

pub fn feasibility_table_with(
    t_max: u32,
    r_max: u32,
    schedule: Schedule,
) -> Result<Vec<SearchResult>> {
    let mut specs = Vec::with_capacity(t_max as usize * r_max as usize);
    for t in 1..=t_max {
        for r in 1..=r_max {
            specs.push(BroadcastSpec::new(t, r)?);
        }
    }
    let table = match schedule {
        Schedule::Sequential => specs
            .into_iter()
            .map(|s| min_density_search_with(s, schedule))
            .collect(),
        Schedule::Parallel => specs
            .into_par_iter()
            .map(|s| min_density_search_with(s, schedule))
            .collect(),
    };
    Ok(table)
}

/// Outcome of comparing the best standard densities of `(t, r)` and a lift
/// `(t + k, r + 2k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Equal,
    /// The lift needs strictly more towers.
    CounterexampleLiftedDenser,
    /// The lift needs strictly fewer towers.
    CounterexampleLiftedSparser,
    /// At least one side has no standard broadcast.
    Incomparable,
}

impl Verdict {
    pub fn classify(base: Option<Density>, lifted: Option<Density>) -> Self {
        match (base, lifted) {
            (Some(b), Some(l)) if b == l => Verdict::Equal,
            (Some(b), Some(l)) if l > b => Verdict::CounterexampleLiftedDenser,
            (Some(_), Some(_)) => Verdict::CounterexampleLiftedSparser,
            _ => Verdict::Incomparable,
        }
    }

    pub fn is_counterexample(self) -> bool {
        matches!(
            self,
            Verdict::CounterexampleLiftedDenser | Verdict::CounterexampleLiftedSparser
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::CounterexampleLiftedDenser => "counterexample-lifted-denser",
            Verdict::CounterexampleLiftedSparser => "counterexample-lifted-sparser",
            Verdict::Incomparable => "incomparable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureComparison {
    pub base: BroadcastSpec,
    pub lifted: BroadcastSpec,
    pub base_density: Option<Density>,
    pub lifted_density: Option<Density>,
    pub verdict: Verdict,
}

/// Compares every `(t, r)` against `(t + 1, r + 2)` with both in
/// `[1, t_max] x [1, r_max]`.
pub fn conjecture_scan(t_max: u32, r_max: u32) -> Result<Vec<ConjectureComparison>> {
    Ok(compare_lifts(&feasibility_table(t_max, r_max)?, 1))
}

/// Compares each entry of `table` against its `steps`-fold lift
/// `(t + steps, r + 2 steps)`, when the lift is also in `table`.
///
/// Output follows the order of `table`.
pub fn compare_lifts(table: &[SearchResult], steps: u32) -> Vec<ConjectureComparison> {
    let by_spec: HashMap<(u32, u32), &SearchResult> = table
        .iter()
        .map(|res| ((res.spec.t(), res.spec.r()), res))
        .collect();
    table
        .iter()
        .filter_map(|base| {
            let key = (
                base.spec.t().checked_add(steps)?,
                base.spec.r().checked_add(steps.checked_mul(2)?)?,
            );
            let lifted = by_spec.get(&key)?;
            let (base_density, lifted_density) = (base.density(), lifted.density());
            Some(ConjectureComparison {
                base: base.spec,
                lifted: lifted.spec,
                base_density,
                lifted_density,
                verdict: Verdict::classify(base_density, lifted_density),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn spec(t: u32, r: u32) -> BroadcastSpec {
        BroadcastSpec::new(t, r).unwrap()
    }

    #[test]
    fn search_examples() {
        let res = min_density_search(spec(2, 1));
        assert_eq!((res.best_d(), res.best_e()), (5, Some(2)));
        assert_eq!(res.density(), Some(Ratio::new(1, 5)));

        let res = min_density_search(spec(1, 2));
        assert!(!res.is_feasible());
        assert_eq!((res.best_d(), res.density()), (0, None));
        assert!(res.witnesses.is_empty());

        let res = min_density_search(spec(3, 3));
        assert_eq!((res.best_d(), res.best_e()), (5, Some(1)));
        assert_eq!(res.witnesses, vec![1, 2, 3, 4]);

        let res = min_density_search(spec(4, 5));
        assert_eq!((res.best_d(), res.best_e()), (8, Some(2)));
    }

    #[test]
    fn small_table_rows() {
        let table = feasibility_table(3, 8).unwrap();
        let names: Vec<String> = table
            .iter()
            .map(|r| r.best.map_or("N/A".to_string(), |p| p.to_string()))
            .collect();
        assert_eq!(names[0], "T(1,0)");
        assert_eq!(
            names[8..16],
            ["T(5,2)", "T(3,1)", "T(1,0)", "T(1,0)", "T(1,0)", "T(1,0)", "N/A", "N/A"]
        );
        assert_eq!(
            names[16..24],
            ["T(13,5)", "T(8,3)", "T(5,1)", "T(4,1)", "T(3,0)", "T(2,0)", "T(2,0)", "T(2,0)"]
        );
        let one = feasibility_table(1, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].best, Some(PatternParams::new(1, 0).unwrap()));
    }

    #[test]
    fn table_rejects_oversized_strength() {
        assert!(feasibility_table(crate::lattice::MAX_STRENGTH + 1, 1).is_err());
        assert!(feasibility_table(0, 3).unwrap().is_empty());
    }

    #[test]
    fn conjecture_examples() {
        let scan = conjecture_scan(4, 5).unwrap();
        let find = |t, r| scan.iter().find(|c| c.base == spec(t, r)).unwrap();
        assert_eq!(find(2, 1).verdict, Verdict::Equal);
        let c = find(3, 3);
        assert_eq!(c.lifted, spec(4, 5));
        assert_eq!(c.verdict, Verdict::CounterexampleLiftedSparser);
        assert_eq!(
            (c.base_density, c.lifted_density),
            (Some(Ratio::new(1, 5)), Some(Ratio::new(1, 8)))
        );
        assert_eq!(find(2, 2).verdict, Verdict::CounterexampleLiftedSparser);
        assert_eq!(find(1, 2).verdict, Verdict::Incomparable);
        assert!(conjecture_scan(2, 2).unwrap().is_empty());
    }

    #[test]
    fn verdict_classification() {
        let third = Some(Ratio::new(1, 3));
        let fifth = Some(Ratio::new(1, 5));
        assert_eq!(Verdict::classify(third, third), Verdict::Equal);
        assert_eq!(
            Verdict::classify(fifth, third),
            Verdict::CounterexampleLiftedDenser
        );
        assert_eq!(
            Verdict::classify(third, fifth),
            Verdict::CounterexampleLiftedSparser
        );
        assert_eq!(Verdict::classify(None, fifth), Verdict::Incomparable);
        assert_eq!(Verdict::classify(None, None), Verdict::Incomparable);
        assert!(!Verdict::Equal.is_counterexample());
    }

    #[test]
    fn schedules_agree() {
        let seq = feasibility_table_with(7, 6, Schedule::Sequential).unwrap();
        let par = feasibility_table_with(7, 6, Schedule::Parallel).unwrap();
        assert_eq!(seq, par);
    }
}
