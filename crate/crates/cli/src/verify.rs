//! Numerical self-checks run by `besselq check` and the acceptance suite.

use std::cell::RefCell;
use std::f64::consts::PI;
use std::fmt;

use anyhow::{anyhow, Result};
use besselq::model::{creep_rate_laplace, CreepRateSeries, ModelOrder};
use besselq::qfactor::{discrepancy, q_inverse, q_inverse_direct, q_inverse_fg, q_inverse_kelvin};
use besselq::specfun::{kelvin, BesselZeros};
use besselq::{ComplexValue, Error, SeriesPolicy};

use crate::grid::FrequencyGrid;

pub const ROUTE_BOUND_BELOW: f64 = 1e-9;
pub const ROUTE_BOUND_ABOVE: f64 = 1e-8;
pub const HANDOVER_BOUND: f64 = 1e-10;
pub const RAYLEIGH_BOUND: f64 = 1e-6;
pub const LAPLACE_BOUND: f64 = 1e-6;
pub const RAYLEIGH_TERMS: usize = 10_000;
pub const LAPLACE_POINTS: [f64; 3] = [1.0, 2.0, 5.0];

/// Outcome of one suite: the worst value seen against its bound.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub worst: f64,
    pub bound: f64,
    /// Where the worst value occurred, or why the suite could not finish.
    pub detail: String,
    pub passed: bool,
}

impl SuiteResult {
    fn from_worst(name: &'static str, worst: f64, bound: f64, detail: String) -> Self {
        Self {
            name,
            worst,
            bound,
            detail,
            passed: worst <= bound,
        }
    }

    fn failed(name: &'static str, bound: f64, detail: String) -> Self {
        Self {
            name,
            worst: f64::INFINITY,
            bound,
            detail,
            passed: false,
        }
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "ok  " } else { "FAIL" };
        write!(
            f,
            "{verdict} {:<28} max {:.3e} (bound {:.0e})  {}",
            self.name, self.worst, self.bound, self.detail
        )
    }
}

/// Tracks the largest value and where it occurred.
struct Worst {
    value: f64,
    at: String,
}

impl Worst {
    fn new() -> Self {
        Self {
            value: 0.0,
            at: String::new(),
        }
    }

    fn update(&mut self, value: f64, at: impl FnOnce() -> String) {
        // NaN counts as worse than anything
        if value.is_nan() || value > self.value {
            self.value = if value.is_nan() { f64::INFINITY } else { value };
            self.at = at();
        }
    }
}

fn agreement_grid(lo: f64, hi: f64) -> Vec<f64> {
    FrequencyGrid::log(lo, hi, 40)
        .expect("increasing bounds")
        .points()
}

/// Pairwise discrepancy among the `f`/`g`, Kelvin and ratio routes on 40
/// log-spaced frequencies in `[1e-3, ω*]`.
pub fn route_agreement_below(orders: &[ModelOrder], policy: &SeriesPolicy) -> SuiteResult {
    const NAME: &str = "route agreement below ω*";
    let mut worst = Worst::new();
    for &m in orders {
        for omega in agreement_grid(1e-3_f64.min(policy.crossover() / 10.0), policy.crossover()) {
            let routes = (|| -> besselq::Result<_> {
                Ok([
                    q_inverse_fg(m, omega, policy)?,
                    q_inverse_kelvin(m, omega, policy)?,
                    q_inverse_direct(m, omega)?,
                ])
            })();
            let [fg, kv, dr] = match routes {
                Ok(r) => r,
                Err(e) => return SuiteResult::failed(NAME, ROUTE_BOUND_BELOW, at(m, omega, e)),
            };
            let d = discrepancy(&fg, &kv)
                .max(discrepancy(&fg, &dr))
                .max(discrepancy(&kv, &dr));
            worst.update(d, || format!("nu = {}, omega = {omega:.4e}", m.nu()));
        }
    }
    SuiteResult::from_worst(NAME, worst.value, ROUTE_BOUND_BELOW, worst.at)
}

/// Kelvin against ratio on 40 log-spaced frequencies in `[ω*, 1e6]`, skipping
/// points where the Kelvin functions are not representable.
pub fn route_agreement_above(orders: &[ModelOrder], policy: &SeriesPolicy) -> SuiteResult {
    const NAME: &str = "route agreement above ω*";
    let mut worst = Worst::new();
    let top = 1e6_f64.max(policy.crossover() * 10.0);
    for &m in orders {
        for omega in agreement_grid(policy.crossover(), top) {
            let kv = match q_inverse_kelvin(m, omega, policy) {
                Ok(q) => q,
                Err(Error::Overflow { .. }) => continue,
                Err(e) => return SuiteResult::failed(NAME, ROUTE_BOUND_ABOVE, at(m, omega, e)),
            };
            let dr = match q_inverse_direct(m, omega) {
                Ok(q) => q,
                Err(e) => return SuiteResult::failed(NAME, ROUTE_BOUND_ABOVE, at(m, omega, e)),
            };
            worst.update(discrepancy(&kv, &dr), || {
                format!("nu = {}, omega = {omega:.4e}", m.nu())
            });
        }
    }
    SuiteResult::from_worst(NAME, worst.value, ROUTE_BOUND_ABOVE, worst.at)
}

/// Kelvin functions at the switch argument `√ω*` from both sides of the
/// handover: the series, and the large-argument form obtained by nudging the
/// crossover just below `ω*`. A crossover set too low (or too high) shows up
/// here even when the `Q⁻¹` routes still agree, because an error common to
/// both Kelvin orders cancels in the quotient.
pub fn kelvin_handover(orders: &[ModelOrder], policy: &SeriesPolicy) -> SuiteResult {
    const NAME: &str = "Kelvin handover at ω*";
    let x = policy.kelvin_switch();
    let large = match policy.with_crossover(policy.crossover() * (1.0 - 1e-9)) {
        Ok(p) => p,
        Err(e) => return SuiteResult::failed(NAME, HANDOVER_BOUND, e.to_string()),
    };
    let mut worst = Worst::new();
    for &m in orders {
        for order in [m.nu(), m.nu() + 2.0] {
            let pair = kelvin(order, x, policy).and_then(|a| Ok((a, kelvin(order, x, &large)?)));
            match pair {
                Ok((a, b)) => {
                    let gap = (a.as_complex() - b.as_complex()).norm() / a.as_complex().norm();
                    worst.update(gap, || format!("order {order}, x = {x:.4}"));
                }
                Err(e) => {
                    return SuiteResult::failed(
                        NAME,
                        HANDOVER_BOUND,
                        format!("order {order}, x = {x:.4}: {e}"),
                    )
                }
            }
        }
    }
    SuiteResult::from_worst(NAME, worst.value, HANDOVER_BOUND, worst.at)
}

/// Counts increases of `Q⁻¹` along the log grid `[1e-4, 1e5]`; the reported
/// value is the number of violations.
pub fn monotonicity(orders: &[ModelOrder], policy: &SeriesPolicy) -> SuiteResult {
    const NAME: &str = "monotone decrease";
    let grid = FrequencyGrid::log(1e-4, 1e5, 181)
        .expect("valid grid")
        .points();
    let mut violations = 0usize;
    let mut first = String::new();
    for &m in orders {
        let mut previous = f64::INFINITY;
        for &omega in &grid {
            let q = match q_inverse(m, omega, policy) {
                Ok(q) => q.q_inverse,
                Err(e) => return SuiteResult::failed(NAME, 0.0, at(m, omega, e)),
            };
            if q.is_nan() || q >= previous {
                if violations == 0 {
                    first = format!("first at nu = {}, omega = {omega:.4e}", m.nu());
                }
                violations += 1;
            }
            previous = q;
        }
    }
    SuiteResult::from_worst(NAME, violations as f64, 0.0, first)
}

/// `ψ'(x)` for `x ≥ 10` from its asymptotic series.
fn trigamma_large(x: f64) -> f64 {
    let r = 1.0 / x;
    let r2 = r * r;
    r + 0.5 * r2 + r * r2 * (1.0 / 6.0 - r2 * (1.0 / 30.0 - r2 * (1.0 / 42.0 - r2 / 30.0)))
}

/// `Σ_k j_{ν,k}^{-2}` from the first `terms` zeros plus the tail
/// `Σ_{k>K} ((k + ν/2 − 1/4)π)^{-2} = ψ'(K + 1 + ν/2 − 1/4) / π²`.
pub fn rayleigh_sum(model: ModelOrder, terms: usize) -> besselq::Result<f64> {
    let zeros: Vec<f64> = BesselZeros::new(model.nu())?
        .take(terms)
        .collect::<besselq::Result<_>>()?;
    // smallest terms first
    let partial: f64 = zeros.iter().rev().map(|j| j.powi(-2)).sum();
    let shift = 0.5 * model.nu() - 0.25;
    Ok(partial + trigamma_large(terms as f64 + 1.0 + shift) / (PI * PI))
}

/// Tail-corrected sum against `1/(4(ν+1))`.
pub fn rayleigh_sneddon(orders: &[ModelOrder]) -> SuiteResult {
    const NAME: &str = "Rayleigh-Sneddon sum";
    let mut worst = Worst::new();
    for &m in orders {
        let exact = 0.25 / (m.nu() + 1.0);
        match rayleigh_sum(m, RAYLEIGH_TERMS) {
            Ok(sum) => worst.update((sum - exact).abs() / exact, || format!("nu = {}", m.nu())),
            Err(e) => {
                return SuiteResult::failed(NAME, RAYLEIGH_BOUND, format!("nu = {}: {e}", m.nu()))
            }
        }
    }
    SuiteResult::from_worst(NAME, worst.value, RAYLEIGH_BOUND, worst.at)
}

/// `∫_0^∞ e^{−st} Ψ(t) dt` from the time-domain Dirichlet series.
///
/// - `t ≤ t₀ = 1e-6`: the two leading small-time terms
///   `Ψ ≈ 2(ν+1)/√(πt) + (ν+1)(2ν+3)`, integrated exactly,
/// - `t₀ < t ≤ 1`: double-exponential quadrature in `u = √t`, where the
///   integrand `2u e^{−su²} Ψ(u²)` is smooth,
/// - `t > 1`: termwise, `floor e^{−s}/s + 4(ν+1) Σ e^{−(s+j²)}/(s+j²)`.
pub fn laplace_of_creep_rate(
    model: ModelOrder,
    s: f64,
    policy: &SeriesPolicy,
) -> besselq::Result<f64> {
    const T0: f64 = 1e-6;
    let nu = model.nu();
    let lead = 2.0 * (nu + 1.0) / PI.sqrt();
    let constant = (nu + 1.0) * (2.0 * nu + 3.0);
    let head = lead * (2.0 * T0.sqrt() - 2.0 / 3.0 * s * T0.powf(1.5)) + constant * T0;

    let series = RefCell::new(CreepRateSeries::new(model)?);
    let failure = RefCell::new(None);
    let integrand = |u: f64| {
        let t = u * u;
        match series.borrow_mut().evaluate(t, policy) {
            Ok((psi, _)) => 2.0 * u * (-s * t).exp() * psi,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                0.0
            }
        }
    };
    let middle =
        quadrature::double_exponential::integrate(integrand, T0.sqrt(), 1.0, 1e-13).integral;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }

    let mut tail = model.creep_rate_floor() * (-s).exp() / s;
    let mut zeros = BesselZeros::new(nu + 2.0)?;
    loop {
        let j = zeros.next_zero()?;
        let rate = s + j * j;
        let term = 4.0 * (nu + 1.0) * (-rate).exp() / rate;
        tail += term;
        if term < 1e-18 * tail {
            break;
        }
    }
    Ok(head + middle + tail)
}

/// Quadrature of the time-domain creep rate against its closed-form
/// transform at `s ∈ {1, 2, 5}`.
pub fn laplace_consistency(orders: &[ModelOrder], policy: &SeriesPolicy) -> SuiteResult {
    const NAME: &str = "Laplace consistency";
    let mut worst = Worst::new();
    for &m in orders {
        for s in LAPLACE_POINTS {
            let pair = laplace_of_creep_rate(m, s, policy)
                .and_then(|q| Ok((q, creep_rate_laplace(m, ComplexValue::new(s, 0.0))?.re)));
            match pair {
                Ok((quad, closed)) => worst.update((quad - closed).abs() / closed, || {
                    format!("nu = {}, s = {s}", m.nu())
                }),
                Err(e) => {
                    return SuiteResult::failed(
                        NAME,
                        LAPLACE_BOUND,
                        format!("nu = {}, s = {s}: {e}", m.nu()),
                    )
                }
            }
        }
    }
    SuiteResult::from_worst(NAME, worst.value, LAPLACE_BOUND, worst.at)
}

fn at(m: ModelOrder, omega: f64, e: Error) -> String {
    format!("nu = {}, omega = {omega:.4e}: {e}", m.nu())
}

/// Every suite, in a fixed order.
pub fn run_check(orders: &[ModelOrder], policy: &SeriesPolicy) -> Vec<SuiteResult> {
    vec![
        route_agreement_below(orders, policy),
        route_agreement_above(orders, policy),
        kelvin_handover(orders, policy),
        monotonicity(orders, policy),
        rayleigh_sneddon(orders),
        laplace_consistency(orders, policy),
    ]
}

/// `Ok` when every suite passed, otherwise an error naming the first failure.
pub fn verdict(results: &[SuiteResult]) -> Result<()> {
    match results.iter().find(|r| !r.passed) {
        None => Ok(()),
        Some(r) => Err(anyhow!(
            "{} exceeded its bound: {:.3e} > {:.0e} ({})",
            r.name,
            r.worst,
            r.bound,
            r.detail
        )),
    }
}
