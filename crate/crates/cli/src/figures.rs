//! Datasets and plot scripts for the four dissipation figures.
//!
//! - fig1: `Q⁻¹` against `ω` on a linear grid, one curve per order,
//! - fig2: the same on a logarithmic grid,
//! - fig3: full `Q⁻¹` against its high-frequency asymptote,
//! - fig4: full `Q⁻¹` against its low-frequency asymptote.
//!
//! fig3 and fig4 show two panels, the smallest and the largest order of the
//! set. The scripts are for gnuplot and read the CSVs by relative path.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use besselq::model::{ModelOrder, Regime};
use besselq::qfactor::q_inverse_asymptotic;
use besselq::SeriesPolicy;

use crate::csv::{sci, write_row};
use crate::grid::FrequencyGrid;
use crate::sweep::{sweep, write_csv};

pub const DEFAULT_ORDERS: [f64; 5] = [-0.5, 0.0, 1.0, 2.0, 5.0];

#[derive(Debug, Clone)]
pub struct FigureSet {
    pub orders: Vec<ModelOrder>,
    pub linear: FrequencyGrid,
    pub log: FrequencyGrid,
    pub high: FrequencyGrid,
    pub low: FrequencyGrid,
}

impl Default for FigureSet {
    fn default() -> Self {
        Self {
            orders: DEFAULT_ORDERS
                .iter()
                .map(|&nu| ModelOrder::new(nu).expect("default orders exceed -1"))
                .collect(),
            linear: FrequencyGrid::linear(0.05, 20.0, 400).expect("valid default grid"),
            log: FrequencyGrid::log(1e-4, 1e5, 181).expect("valid default grid"),
            high: FrequencyGrid::log(1e2, 1e7, 101).expect("valid default grid"),
            low: FrequencyGrid::log(1e-3, 1e1, 81).expect("valid default grid"),
        }
    }
}

impl FigureSet {
    /// The two orders shown in the asymptote panels.
    pub fn panel_orders(&self) -> Result<[ModelOrder; 2]> {
        let by_nu = |a: &&ModelOrder, b: &&ModelOrder| a.nu().total_cmp(&b.nu());
        match (
            self.orders.iter().min_by(by_nu),
            self.orders.iter().max_by(by_nu),
        ) {
            (Some(&lo), Some(&hi)) => Ok([lo, hi]),
            _ => bail!("the figure set needs at least one order"),
        }
    }
}

/// Writes `figN.csv` and `figN.gp` for N = 1..4 into `dir`, returning the
/// paths in that order.
pub fn write_figures(dir: &Path, set: &FigureSet, policy: &SeriesPolicy) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut written = Vec::new();
    let nus: Vec<String> = set.orders.iter().map(|m| format!("{}", m.nu())).collect();

    for (name, grid, logscale) in [("fig1", &set.linear, false), ("fig2", &set.log, true)] {
        let records = sweep(&set.orders, grid, policy)?;
        let mut csv = Vec::new();
        write_csv(&mut csv, &records)?;
        written.push(save(dir, &format!("{name}.csv"), &csv)?);
        let script = family_script(name, &nus, logscale);
        written.push(save(dir, &format!("{name}.gp"), script.as_bytes())?);
    }

    let panels = set.panel_orders()?;
    for (name, grid, regime) in [
        ("fig3", &set.high, Regime::High),
        ("fig4", &set.low, Regime::Low),
    ] {
        let records = sweep(&panels, grid, policy)?;
        let mut csv = Vec::new();
        write_row(
            &mut csv,
            &["omega", "nu", "q_inverse", "q_asymptote", "rel_gap"],
        )?;
        for r in &records {
            let model = ModelOrder::new(r.nu)?;
            let asym = q_inverse_asymptotic(model, r.omega, regime)?;
            let gap = (r.q_inverse - asym).abs() / r.q_inverse;
            write_row(
                &mut csv,
                &[
                    &sci(r.omega),
                    &sci(r.nu),
                    &sci(r.q_inverse),
                    &sci(asym),
                    &sci(gap),
                ],
            )?;
        }
        written.push(save(dir, &format!("{name}.csv"), &csv)?);
        let panel_nus = panels.map(|m| format!("{}", m.nu()));
        let script = asymptote_script(name, &panel_nus, regime);
        written.push(save(dir, &format!("{name}.gp"), script.as_bytes())?);
    }
    Ok(written)
}

fn save(dir: &Path, file: &str, bytes: &[u8]) -> Result<PathBuf> {
    let path = dir.join(file);
    fs::write(&path, bytes).with_context(|| format!("writing {}", path.display()))?;
    Ok(path)
}

fn preamble(name: &str) -> String {
    format!(
        "# gnuplot script; run from this directory with `gnuplot {name}.gp`\n\
         set datafile separator ','\n\
         set terminal pngcairo size 900,600\n\
         set output '{name}.png'\n\
         set xlabel 'omega'\n\
         set ylabel 'Q^{{-1}}'\n"
    )
}

fn family_script(name: &str, nus: &[String], logscale: bool) -> String {
    let mut s = preamble(name);
    if logscale {
        s.push_str("set logscale xy\n");
    }
    let _ = writeln!(
        s,
        "plot for [nu in \"{}\"] '{name}.csv' using 1:(abs($2 - real(nu)) < 1e-12 ? $3 : NaN) \\\n     \
         with lines title sprintf('nu = %s', nu)",
        nus.join(" ")
    );
    s
}

fn asymptote_script(name: &str, nus: &[String], regime: Regime) -> String {
    let label = match regime {
        Regime::High => "high-frequency asymptote",
        Regime::Low => "low-frequency asymptote",
    };
    let mut s = preamble(name);
    s.push_str("set logscale xy\nset multiplot layout 1,2\n");
    for nu in nus {
        let _ = writeln!(
            s,
            "set title 'nu = {nu}'\n\
             plot '{name}.csv' using 1:(abs($2 - {nu}) < 1e-12 ? $3 : NaN) with lines title 'Q^{{-1}}', \\\n     \
             '' using 1:(abs($2 - {nu}) < 1e-12 ? $4 : NaN) with lines dashtype 2 title '{label}'"
        );
    }
    s.push_str("unset multiplot\n");
    s
}
