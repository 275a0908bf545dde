use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use besselq::SeriesPolicy;
use besselq_cli::figures::{write_figures, FigureSet, DEFAULT_ORDERS};
use besselq_cli::grid::FrequencyGrid;
use besselq_cli::sweep::{parse_orders, sweep, write_csv};
use besselq_cli::verify::{run_check, verdict};
use clap::{Args, Parser, Subcommand};

/// Quality factor of Bessel viscoelastic media.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Q⁻¹ on a frequency grid and write CSV.
    Sweep {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Output file (standard output when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the datasets and gnuplot scripts of figures 1 to 4.
    Figures {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Output directory.
        #[arg(long, default_value = "figures")]
        out: PathBuf,
    },
    /// Run the route-agreement, monotonicity, Rayleigh-Sneddon and
    /// Laplace-consistency suites.
    Check {
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Comma-separated model orders, each > -1.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    nu: Option<Vec<f64>>,
    /// Frequency above which the series routes hand over to the ratio route.
    #[arg(long)]
    crossover: Option<f64>,
    /// Relative truncation tolerance of the power series.
    #[arg(long)]
    rel_tol: Option<f64>,
}

impl CommonArgs {
    fn policy(&self) -> Result<SeriesPolicy> {
        let mut policy = SeriesPolicy::default();
        if let Some(c) = self.crossover {
            policy = policy.with_crossover(c)?;
        }
        if let Some(t) = self.rel_tol {
            policy = policy.with_rel_tol(t)?;
        }
        Ok(policy)
    }

    fn orders(&self) -> Result<Vec<besselq::ModelOrder>> {
        parse_orders(self.nu.as_deref().unwrap_or(&DEFAULT_ORDERS))
    }
}

#[derive(Args)]
struct GridArgs {
    /// Linear grid between two frequencies.
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], conflicts_with = "log")]
    linear: Option<Vec<f64>>,
    /// Logarithmic grid between two frequencies.
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"])]
    log: Option<Vec<f64>>,
    /// Number of grid points.
    #[arg(long)]
    count: Option<usize>,
}

impl GridArgs {
    fn grid(&self) -> Result<Option<FrequencyGrid>> {
        let count = self.count;
        Ok(match (&self.linear, &self.log) {
            (Some(r), _) => Some(FrequencyGrid::linear(r[0], r[1], count.unwrap_or(400))?),
            (_, Some(r)) => Some(FrequencyGrid::log(r[0], r[1], count.unwrap_or(181))?),
            (None, None) if count.is_some() => bail!("--count needs --linear or --log"),
            (None, None) => None,
        })
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Sweep { grid, common, out } => {
            let grid = match grid.grid()? {
                Some(g) => g,
                None => FrequencyGrid::log(1e-4, 1e5, 181)?,
            };
            let records = sweep(&common.orders()?, &grid, &common.policy()?)?;
            let mut sink: Box<dyn Write> = match &out {
                Some(path) => Box::new(BufWriter::new(
                    File::create(path).with_context(|| format!("creating {}", path.display()))?,
                )),
                None => Box::new(BufWriter::new(io::stdout().lock())),
            };
            write_csv(&mut sink, &records)?;
            sink.flush()?;
        }
        Command::Figures { grid, common, out } => {
            let mut set = FigureSet {
                orders: common.orders()?,
                ..FigureSet::default()
            };
            // an explicit grid replaces the default of the matching figure
            if let Some(g) = grid.grid()? {
                match g.scale() {
                    besselq_cli::grid::Scale::Linear => set.linear = g,
                    besselq_cli::grid::Scale::Log => set.log = g,
                }
            }
            for path in write_figures(&out, &set, &common.policy()?)? {
                println!("{}", path.display());
            }
        }
        Command::Check { common } => {
            let results = run_check(&common.orders()?, &common.policy()?);
            for r in &results {
                println!("{r}");
            }
            if let Err(e) = verdict(&results) {
                eprintln!("check failed: {e}");
                return Ok(ExitCode::FAILURE);
            }
            println!("all checks passed");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
