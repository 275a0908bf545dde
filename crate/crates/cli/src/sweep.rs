use std::io::Write;

use anyhow::{Context, Result};
use besselq::model::{ModelOrder, Regime};
use besselq::qfactor::{q_inverse, q_inverse_asymptotic};
use besselq::{Route, SeriesPolicy};

use crate::csv::{sci, write_row};
use crate::grid::FrequencyGrid;

pub const HEADER: [&str; 7] = [
    "omega",
    "nu",
    "q_inverse",
    "route",
    "est_rel_error",
    "q_asymp_low",
    "q_asymp_high",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub omega: f64,
    pub nu: f64,
    pub q_inverse: f64,
    pub route: Route,
    pub est_rel_error: f64,
    pub q_asymp_low: f64,
    pub q_asymp_high: f64,
}

pub fn parse_orders(nus: &[f64]) -> Result<Vec<ModelOrder>> {
    nus.iter()
        .map(|&nu| ModelOrder::new(nu).with_context(|| format!("invalid order nu = {nu}")))
        .collect()
}

/// Evaluates every grid point for each order, ordered by order then frequency.
pub fn sweep(
    orders: &[ModelOrder],
    grid: &FrequencyGrid,
    policy: &SeriesPolicy,
) -> Result<Vec<SweepRecord>> {
    let points = grid.points();
    let mut records = Vec::with_capacity(orders.len() * points.len());
    for &model in orders {
        for &omega in &points {
            let q = q_inverse(model, omega, policy)
                .with_context(|| format!("nu = {}, omega = {omega}", model.nu()))?;
            records.push(SweepRecord {
                omega,
                nu: model.nu(),
                q_inverse: q.q_inverse,
                route: q.route,
                est_rel_error: q.est_rel_error,
                q_asymp_low: q_inverse_asymptotic(model, omega, Regime::Low)?,
                q_asymp_high: q_inverse_asymptotic(model, omega, Regime::High)?,
            });
        }
    }
    Ok(records)
}

pub fn write_csv<W: Write>(out: &mut W, records: &[SweepRecord]) -> Result<()> {
    write_row(out, &HEADER)?;
    for r in records {
        write_row(
            out,
            &[
                &sci(r.omega),
                &sci(r.nu),
                &sci(r.q_inverse),
                r.route.as_str(),
                &sci(r.est_rel_error),
                &sci(r.q_asymp_low),
                &sci(r.q_asymp_high),
            ],
        )?;
    }
    Ok(())
}
