//! `gridcast`: standard-pattern upper bounds for `(t,r)` broadcast
//! domination of the infinite grid.
//!
//! Exit status is 0 on a positive outcome, 1 on a negative one (infeasible
//! pattern, no standard broadcast, no counterexample) and 2 on usage errors.

mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use gridcast_core::lattice::MAX_STRENGTH;
use gridcast_core::{
    compare_lifts, deficit_report, density_bound, feasibility_table_with, min_density_search_with,
    render_ascii, render_svg, BroadcastSpec, GridPoint, PatternParams, Schedule, Viewport,
};

use crate::report::Format;

#[derive(Debug, Parser)]
#[command(
    name = "gridcast",
    version,
    about = "Standard-pattern bounds for (t,r) broadcasts on the infinite grid"
)]
struct Cli {
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, default_value_t = default_threads(), value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check whether T(d,e) is a (t,r) broadcast and show the signal at each row representative.
    Verify {
        #[arg(long = "t", value_parser = strength())]
        t: u32,
        #[arg(long = "r", value_parser = positive())]
        r: u32,
        #[arg(long = "d", value_parser = positive())]
        d: u32,
        /// Offset; any integer, reduced modulo d.
        #[arg(long = "e", allow_negative_numbers = true)]
        e: i64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Find the sparsest standard (t,r) broadcast.
    Search {
        #[arg(long = "t", value_parser = strength())]
        t: u32,
        #[arg(long = "r", value_parser = positive())]
        r: u32,
        /// List every optimal offset, not only the lowest.
        #[arg(long)]
        all_witnesses: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Best standard broadcasts for every 1 <= t <= t-max, 1 <= r <= r-max.
    Table {
        #[arg(long, value_parser = strength())]
        t_max: u32,
        #[arg(long, value_parser = positive())]
        r_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Compare best standard densities of (t,r) and (t+k, r+2k).
    Conjecture {
        #[arg(long, value_parser = strength())]
        t_max: u32,
        #[arg(long, value_parser = positive())]
        r_max: u32,
        /// Number of (t+1, r+2) lifts to compose.
        #[arg(long, default_value_t = 1, value_parser = positive())]
        steps: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Usable signal per tower, the density lower bound and the period ceiling.
    Bound {
        #[arg(long = "t", value_parser = strength())]
        t: u32,
        #[arg(long = "r", value_parser = positive())]
        r: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Draw a window of T(d,e), optionally with the signal of strength-t towers.
    Render {
        #[arg(long = "d", value_parser = positive())]
        d: u32,
        #[arg(long = "e", allow_negative_numbers = true)]
        e: i64,
        #[arg(long = "t", value_parser = strength())]
        t: Option<u32>,
        /// Only used to label the diagram; signal is shown regardless of r.
        #[arg(long = "r", value_parser = positive(), requires = "t")]
        r: Option<u32>,
        #[arg(long, value_parser = positive())]
        width: u32,
        #[arg(long, value_parser = positive())]
        height: u32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        origin_x: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        origin_y: i64,
        /// Horizontal shift applied to the pattern before drawing.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        shift_x: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        shift_y: i64,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
        /// Write to this file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

fn positive() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

fn strength() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..=i64::from(MAX_STRENGTH))
}

fn default_threads() -> u32 {
    std::thread::available_parallelism().map_or(1, |n| n.get() as u32)
}

/// Rejects formats a command does not support, exiting with status 2.
fn require_format(format: Format, allowed: &[Format]) {
    if !allowed.contains(&format) {
        let names: Vec<_> = allowed.iter().map(|f| f.name()).collect();
        Cli::command()
            .error(
                ErrorKind::InvalidValue,
                format!(
                    "format '{}' is not supported by this command (expected one of: {})",
                    format.name(),
                    names.join(", ")
                ),
            )
            .exit();
    }
}

/// Rendered output plus whether the outcome was positive.
struct Outcome {
    text: String,
    success: bool,
}

fn run(command: Command, schedule: Schedule) -> anyhow::Result<Outcome> {
    use Format::*;
    let outcome = match command {
        Command::Verify { t, r, d, e, format } => {
            require_format(format, &[Plain, Json]);
            let spec = BroadcastSpec::new(t, r)?;
            let record = deficit_report(spec, PatternParams::new(d, e)?);
            Outcome {
                success: record.feasible,
                text: report::verify(&record, format)?,
            }
        }
        Command::Search {
            t,
            r,
            all_witnesses,
            format,
        } => {
            require_format(format, &[Plain, Json]);
            let result = min_density_search_with(BroadcastSpec::new(t, r)?, schedule);
            Outcome {
                success: result.is_feasible(),
                text: report::search(&result, all_witnesses, format)?,
            }
        }
        Command::Table {
            t_max,
            r_max,
            format,
        } => {
            let table = feasibility_table_with(t_max, r_max, schedule)?;
            Outcome {
                success: true,
                text: report::table(&table, r_max, format)?,
            }
        }
        Command::Conjecture {
            t_max,
            r_max,
            steps,
            format,
        } => {
            let table = feasibility_table_with(t_max, r_max, schedule)?;
            let rows = compare_lifts(&table, steps);
            Outcome {
                success: rows.iter().any(|c| c.verdict.is_counterexample()),
                text: report::conjecture(&rows, format)?,
            }
        }
        Command::Bound { t, r, format } => {
            require_format(format, &[Plain, Json]);
            let spec = BroadcastSpec::new(t, r)?;
            Outcome {
                success: true,
                text: report::bound(spec, &density_bound(spec), format)?,
            }
        }
        Command::Render {
            d,
            e,
            t,
            r,
            width,
            height,
            origin_x,
            origin_y,
            shift_x,
            shift_y,
            format,
            output,
        } => {
            let params = PatternParams::new(d, e)?;
            let spec = t
                .map(|t| BroadcastSpec::new(t, r.unwrap_or(1)))
                .transpose()?;
            let vp = Viewport::new(width, height, GridPoint::new(origin_x, origin_y))?
                .with_translation(GridPoint::new(shift_x, shift_y));
            let text = match format {
                RenderFormat::Ascii => render_ascii(params, &vp, spec)?,
                RenderFormat::Svg => render_svg(params, &vp, spec)?,
            };
            match output {
                Some(path) => {
                    fs::write(&path, text)
                        .with_context(|| format!("writing {}", path.display()))?;
                    Outcome {
                        text: String::new(),
                        success: true,
                    }
                }
                None => Outcome {
                    text,
                    success: true,
                },
            }
        }
    };
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let schedule = if cli.threads == 1 {
        Schedule::Sequential
    } else {
        Schedule::Parallel
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads as usize)
        .build()
    {
        Ok(pool) => pool,
        Err(err) => {
            eprintln!("error: cannot start thread pool: {err}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli.command, schedule)) {
        Ok(outcome) => {
            let mut stdout = io::stdout().lock();
            if let Err(err) = stdout
                .write_all(outcome.text.as_bytes())
                .and_then(|()| stdout.flush())
            {
                if err.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("error: {err}");
                    return ExitCode::from(2);
                }
            }
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
