//! Text, CSV, JSON and Markdown rendering of command results.
//!
//! Densities are always written as exact fractions `num/den`, including
//! whole numbers (`1/1`, `2/1`).

use std::fmt::Write as _;

use clap::ValueEnum;
use gridcast_core::{
    BroadcastSpec, ConjectureComparison, Density, DensityBound, FeasibilityRecord, SearchResult,
};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
    Markdown,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Plain => "plain",
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Markdown => "markdown",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl From<Density> for Fraction {
    fn from(d: Density) -> Self {
        Fraction {
            num: *d.numer(),
            den: *d.denom(),
        }
    }
}

fn fraction(d: Density) -> String {
    format!("{}/{}", d.numer(), d.denom())
}

fn fraction_or_na(d: Option<Density>) -> String {
    d.map_or_else(|| "N/A".to_string(), fraction)
}

fn cell(result: &SearchResult) -> String {
    result
        .best
        .map_or_else(|| "N/A".to_string(), |p| p.to_string())
}

/// One search outcome in JSON form.
#[derive(Debug, Serialize)]
struct ResultJson {
    t: u32,
    r: u32,
    d: Option<u32>,
    e: Option<u32>,
    density: Option<Fraction>,
    feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<u32>>,
}

impl ResultJson {
    fn new(result: &SearchResult, with_witnesses: bool) -> Self {
        ResultJson {
            t: result.spec.t(),
            r: result.spec.r(),
            d: result.best.map(|p| p.d()),
            e: result.best_e(),
            density: result.density().map(Fraction::from),
            feasible: result.is_feasible(),
            witnesses: with_witnesses.then(|| result.witnesses.clone()),
        }
    }
}

/// One search outcome in CSV form; infeasible cells leave `d`, `e` and the
/// density empty.
#[derive(Debug, Serialize)]
struct ResultCsv {
    t: u32,
    r: u32,
    d: Option<u32>,
    e: Option<u32>,
    density_num: Option<u64>,
    density_den: Option<u64>,
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn to_csv<T: Serialize>(rows: impl IntoIterator<Item = T>) -> anyhow::Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row)?;
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}

pub fn verify(record: &FeasibilityRecord, format: Format) -> anyhow::Result<String> {
    let r = u64::from(record.spec.r());
    if format == Format::Json {
        #[derive(Serialize)]
        struct Total {
            x: i64,
            y: i64,
            signal: u64,
        }
        #[derive(Serialize)]
        struct VerifyJson {
            t: u32,
            r: u32,
            d: u32,
            e: u32,
            density: Fraction,
            feasible: bool,
            row_totals: Vec<Total>,
        }
        return to_json(&VerifyJson {
            t: record.spec.t(),
            r: record.spec.r(),
            d: record.params.d(),
            e: record.params.e(),
            density: record.params.density().into(),
            feasible: record.feasible,
            row_totals: record
                .row_totals
                .iter()
                .map(|&(v, s)| Total {
                    x: v.x,
                    y: v.y,
                    signal: s.0,
                })
                .collect(),
        });
    }
    let mut out = String::new();
    let verdict = if record.feasible { "is" } else { "is not" };
    writeln!(
        out,
        "{} {verdict} a {} broadcast",
        record.params, record.spec
    )?;
    writeln!(out, "{:<16}signal", "representative")?;
    for &(v, s) in &record.row_totals {
        let flag = if s.0 < r {
            format!(" < {r}")
        } else {
            String::new()
        };
        writeln!(out, "{:<16}{s}{flag}", v.to_string())?;
    }
    if !record.feasible {
        writeln!(
            out,
            "{} of {} representatives below {r}; minimum total {} < {r}",
            record.deficient().count(),
            record.row_totals.len(),
            record.min_total()
        )?;
    }
    Ok(out)
}

pub fn search(
    result: &SearchResult,
    all_witnesses: bool,
    format: Format,
) -> anyhow::Result<String> {
    if format == Format::Json {
        return to_json(&ResultJson::new(result, all_witnesses));
    }
    let Some(best) = result.best else {
        return Ok("N/A\n".to_string());
    };
    let mut out = format!("{best} density {}\n", fraction(best.density()));
    if all_witnesses {
        let es: Vec<_> = result.witnesses.iter().map(u32::to_string).collect();
        writeln!(
            out,
            "witnesses at d={}: e in {{{}}}",
            best.d(),
            es.join(", ")
        )?;
    }
    Ok(out)
}

/// `table` is ordered by `t` then `r` with `r_max` entries per `t`.
pub fn table(table: &[SearchResult], r_max: u32, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => to_json(
            &table
                .iter()
                .map(|res| ResultJson::new(res, false))
                .collect::<Vec<_>>(),
        ),
        Format::Csv => to_csv(table.iter().map(|res| ResultCsv {
            t: res.spec.t(),
            r: res.spec.r(),
            d: res.best.map(|p| p.d()),
            e: res.best_e(),
            density_num: res.density().map(|d| *d.numer()),
            density_den: res.density().map(|d| *d.denom()),
        })),
        Format::Markdown => {
            let mut out = String::from("| t \\ r |");
            for r in 1..=r_max {
                write!(out, " {r} |")?;
            }
            out.push_str("\n|---|");
            out.push_str(&"---|".repeat(r_max as usize));
            out.push('\n');
            for row in table.chunks(r_max.max(1) as usize) {
                write!(out, "| {} |", row[0].spec.t())?;
                for res in row {
                    write!(out, " {} |", cell(res))?;
                }
                out.push('\n');
            }
            Ok(out)
        }
        Format::Plain => {
            let width = table.iter().map(|res| cell(res).len()).max().unwrap_or(3);
            let mut out = format!("{:>5}", "t\\r");
            for r in 1..=r_max {
                write!(out, "  {r:<width$}")?;
            }
            out.truncate(out.trim_end().len());
            out.push('\n');
            for row in table.chunks(r_max.max(1) as usize) {
                write!(out, "{:>5}", row[0].spec.t())?;
                for res in row {
                    write!(out, "  {:<width$}", cell(res))?;
                }
                out.truncate(out.trim_end().len());
                out.push('\n');
            }
            Ok(out)
        }
    }
}

#[derive(Debug, Serialize)]
struct SpecJson {
    t: u32,
    r: u32,
}

impl From<BroadcastSpec> for SpecJson {
    fn from(s: BroadcastSpec) -> Self {
        SpecJson { t: s.t(), r: s.r() }
    }
}

pub fn conjecture(rows: &[ConjectureComparison], format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct ComparisonJson {
                base: SpecJson,
                lifted: SpecJson,
                base_density: Option<Fraction>,
                lifted_density: Option<Fraction>,
                verdict: &'static str,
            }
            to_json(
                &rows
                    .iter()
                    .map(|c| ComparisonJson {
                        base: c.base.into(),
                        lifted: c.lifted.into(),
                        base_density: c.base_density.map(Fraction::from),
                        lifted_density: c.lifted_density.map(Fraction::from),
                        verdict: c.verdict.as_str(),
                    })
                    .collect::<Vec<_>>(),
            )
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct ComparisonCsv {
                base_t: u32,
                base_r: u32,
                lifted_t: u32,
                lifted_r: u32,
                base_num: Option<u64>,
                base_den: Option<u64>,
                lifted_num: Option<u64>,
                lifted_den: Option<u64>,
                verdict: &'static str,
            }
            to_csv(rows.iter().map(|c| ComparisonCsv {
                base_t: c.base.t(),
                base_r: c.base.r(),
                lifted_t: c.lifted.t(),
                lifted_r: c.lifted.r(),
                base_num: c.base_density.map(|d| *d.numer()),
                base_den: c.base_density.map(|d| *d.denom()),
                lifted_num: c.lifted_density.map(|d| *d.numer()),
                lifted_den: c.lifted_density.map(|d| *d.denom()),
                verdict: c.verdict.as_str(),
            }))
        }
        Format::Markdown => {
            let mut out =
                String::from("| base | lifted | base density | lifted density | verdict |\n");
            out.push_str("|---|---|---|---|---|\n");
            for c in rows {
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    c.base,
                    c.lifted,
                    fraction_or_na(c.base_density),
                    fraction_or_na(c.lifted_density),
                    c.verdict.as_str()
                )?;
            }
            Ok(out)
        }
        Format::Plain => {
            let mut out = String::new();
            for c in rows {
                writeln!(
                    out,
                    "{} -> {}: {} vs {} {}",
                    c.base,
                    c.lifted,
                    fraction_or_na(c.base_density),
                    fraction_or_na(c.lifted_density),
                    c.verdict.as_str()
                )?;
            }
            let found = rows
                .iter()
                .filter(|c| c.verdict.is_counterexample())
                .count();
            writeln!(
                out,
                "{found} counterexample(s) in {} comparison(s)",
                rows.len()
            )?;
            Ok(out)
        }
    }
}

pub fn bound(spec: BroadcastSpec, bound: &DensityBound, format: Format) -> anyhow::Result<String> {
    if format == Format::Json {
        #[derive(Serialize)]
        struct BoundJson {
            t: u32,
            r: u32,
            usable: u64,
            delta_min: Fraction,
            d_max: u32,
        }
        return to_json(&BoundJson {
            t: spec.t(),
            r: spec.r(),
            usable: bound.usable,
            delta_min: bound.delta_min.into(),
            d_max: bound.d_max,
        });
    }
    Ok(format!(
        "usable {}\ndelta_min {}\nd_max {}\n",
        bound.usable,
        fraction(bound.delta_min),
        bound.d_max
    ))
}
