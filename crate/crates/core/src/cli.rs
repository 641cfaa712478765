//! Batch command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error. Output files are
//! written to a temporary file next to the destination and renamed into
//! place only after every output of the command has been produced, so a
//! failing run leaves no partial files behind.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::chart::render_decomposition_svg;
use crate::decomposition::decompose_additive;
use crate::evaluation::{method_four, method_one, method_three, method_two};
use crate::fixture::{embedded_fixture, FIXTURE_NAMES};
use crate::holt_winters::{hw_fit, hw_forecast};
use crate::io::{read_daily_csv, read_monthly_csv, write_decomposition_csv, write_forecast_csv, write_monthly_csv};
use crate::report::{write_report, ReportFormat};
use crate::series::{aggregate_daily, MonthStamp, MonthlySeries};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

const PERIOD: usize = 12;
const CHART_WIDTH: u32 = 900;
const CHART_HEIGHT: u32 = 720;

#[derive(Debug, Parser)]
#[command(name = "tsdecomp", version, about = "Decompose and forecast monthly index series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Monthly CSV with header `month,value`
    #[arg(long)]
    input: Option<PathBuf>,
    /// Name of an embedded series
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Average a daily CSV into a monthly CSV
    Aggregate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Trend / seasonal / random decomposition with period 12
    Decompose {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        output: PathBuf,
        /// Also render a four-panel chart
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Holt-Winters (trend + additive seasonal) forecast
    Forecast {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "YYYY-MM")]
        train_end: MonthStamp,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        horizon: u32,
        #[arg(long)]
        output: PathBuf,
    },
    /// Run one of the evaluation methods 1-4
    Evaluate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        method: u8,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "YYYY-MM")]
        train_end: MonthStamp,
        /// Months to evaluate (default 12 for methods 1-2, 6 for method 3)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        months: Option<u32>,
        /// Start of the second window for method 4 (default: one year after the series start)
        #[arg(long, value_name = "YYYY-MM")]
        window2_start: Option<MonthStamp>,
        #[arg(long)]
        output: PathBuf,
        /// Write JSON instead of CSV
        #[arg(long)]
        json: bool,
    },
    /// Export an embedded series as monthly CSV
    Fixture {
        #[arg(long)]
        name: String,
        #[arg(long)]
        output: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Data(m) => f.write_str(m),
        }
    }
}

fn data_err(context: impl fmt::Display, err: impl fmt::Display) -> Failure {
    Failure::Data(format!("{context}: {err}"))
}

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| data_err(path.display(), e))
}

fn load_source(source: &Source) -> Result<MonthlySeries, Failure> {
    match (&source.input, &source.fixture) {
        (Some(path), None) => {
            read_monthly_csv(&read_file(path)?).map_err(|e| data_err(path.display(), e))
        }
        (None, Some(name)) => embedded_fixture(name).map_err(|e| {
            Failure::Usage(format!("{e}"))
        }),
        _ => Err(Failure::Usage("exactly one of --input or --fixture is required".into())),
    }
}

/// Writes every `(path, contents)` pair or none of them.
fn commit(outputs: &[(&Path, String)]) -> Result<(), Failure> {
    let mut staged = Vec::with_capacity(outputs.len());
    for (path, contents) in outputs {
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| data_err(path.display(), e))?;
        tmp.write_all(contents.as_bytes())
            .and_then(|_| tmp.flush())
            .map_err(|e| data_err(path.display(), e))?;
        staged.push((tmp, *path));
    }
    let mut done: Vec<&Path> = Vec::new();
    for (tmp, path) in staged {
        if let Err(e) = tmp.persist(path) {
            for p in done {
                let _ = std::fs::remove_file(p);
            }
            return Err(data_err(path.display(), e.error));
        }
        done.push(path);
    }
    Ok(())
}

fn execute(command: Command) -> Result<String, Failure> {
    match command {
        Command::Aggregate { input, output } => {
            let records = read_daily_csv(&read_file(&input)?).map_err(|e| data_err(input.display(), e))?;
            let series = aggregate_daily(&records).map_err(|e| data_err(input.display(), e))?;
            commit(&[(&output, write_monthly_csv(&series))])?;
            Ok(format!(
                "aggregated {} daily records into {} months ({}..{}) -> {}",
                records.len(),
                series.len(),
                series.start(),
                series.end(),
                output.display()
            ))
        }
        Command::Decompose { source, output, svg } => {
            let series = load_source(&source)?;
            let d = decompose_additive(&series, PERIOD).map_err(|e| data_err("decompose", e))?;
            let mut outputs = vec![(output.as_path(), write_decomposition_csv(&d))];
            if let Some(svg) = &svg {
                let chart = render_decomposition_svg(&d, CHART_WIDTH, CHART_HEIGHT)
                    .map_err(|e| data_err("chart", e))?;
                outputs.push((svg.as_path(), chart));
            }
            commit(&outputs)?;
            Ok(format!(
                "decomposed {} months ({}..{}) -> {}",
                series.len(),
                series.start(),
                series.end(),
                output.display()
            ))
        }
        Command::Forecast {
            source,
            train_end,
            horizon,
            output,
        } => {
            let series = load_source(&source)?;
            let training = series
                .window(series.start(), train_end)
                .map_err(|e| data_err("--train-end", e))?;
            let model = hw_fit(&training, PERIOD, true, true).map_err(|e| data_err("fit", e))?;
            let forecast = hw_forecast(&model, horizon as usize).map_err(|e| data_err("forecast", e))?;
            commit(&[(&output, write_forecast_csv(&forecast))])?;
            Ok(format!(
                "forecast {} months after {} (alpha={:.4}, beta={:.4}, gamma={:.4}, sse={:.3}) -> {}",
                horizon,
                train_end,
                model.params.alpha,
                model.params.beta.unwrap_or(0.0),
                model.params.gamma.unwrap_or(0.0),
                model.sse,
                output.display()
            ))
        }
        Command::Evaluate {
            method,
            source,
            train_end,
            months,
            window2_start,
            output,
            json,
        } => {
            let series = load_source(&source)?;
            let format = if json { ReportFormat::Json } else { ReportFormat::Csv };
            let ctx = |e| data_err(format!("method {method}"), e);
            let (text, rows) = match method {
                1 => {
                    let rows = method_one(&series, train_end, months.unwrap_or(12) as usize).map_err(ctx)?;
                    (write_report(&rows, format), rows.len())
                }
                2 => {
                    let n = i64::from(months.unwrap_or(12));
                    let rows = method_two(&series, train_end.add_months(1), train_end.add_months(n))
                        .map_err(ctx)?;
                    (write_report(&rows, format), rows.len())
                }
                3 => {
                    let rows = method_three(&series, train_end, months.unwrap_or(6) as usize).map_err(ctx)?;
                    (write_report(&rows, format), rows.len())
                }
                4 => {
                    let window1 = (series.start(), train_end);
                    let start2 = window2_start.unwrap_or_else(|| series.start().add_months(12));
                    let window2 = (start2, start2.add_months(series.start().months_until(train_end)));
                    let rows = method_four(&series, window1, window2).map_err(ctx)?;
                    (write_report(&rows, format), rows.len())
                }
                _ => unreachable!("clap restricts --method to 1..=4"),
            };
            commit(&[(&output, text)])?;
            Ok(format!("method {method}: {rows} rows -> {}", output.display()))
        }
        Command::Fixture { name, output } => {
            let series = embedded_fixture(&name).map_err(|e| {
                Failure::Usage(format!("{e}; choose one of {}", FIXTURE_NAMES.join(", ")))
            })?;
            commit(&[(&output, write_monthly_csv(&series))])?;
            Ok(format!("fixture {name}: {} months -> {}", series.len(), output.display()))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(summary) => {
            println!("{summary}");
            EXIT_OK
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Data(m)) => {
            eprintln!("error: {m}");
            EXIT_DATA
        }
    }
}
