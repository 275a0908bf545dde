//! Inverse quality factor `Q⁻¹(ω; ν) = −Im sJ̃(iω) / Re sJ̃(iω)`.
//!
//! Three routes compute the same quantity:
//!
//! - [`q_inverse_fg`]: `(f_ν f_{ν+2} + g_ν g_{ν+2}) / (g_ν f_{ν+2} − f_ν g_{ν+2})`
//!   with the `f`/`g` series at `ω`,
//! - [`q_inverse_kelvin`]: the same quotient rewritten with `ber`/`bei` at `√ω`,
//! - [`q_inverse_direct`]: `sJ̃(iω) = I_ν(z)/I_{ν+2}(z)`, `z = √(iω)`, from
//!   continued fractions.
//!
//! The series routes lose accuracy to cancellation as `ω` grows, while the
//! continued fraction loses relative accuracy in `Re sJ̃` as `ω → 0`, so
//! [`q_inverse`] uses the `f`/`g` series below the crossover and the ratio
//! above it.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{ModelOrder, Regime};
use crate::specfun::{bessel_ratio_up_with_residual, fg_series, kelvin, SeriesPolicy};

/// Smallest denominator magnitude accepted before dividing.
const HAZARD: f64 = 1e-300;

/// Largest discrepancy tolerated between two routes inside the overlap band.
pub const OVERLAP_BOUND: f64 = 1e-7;

/// Half-width, as a factor, of the overlap band around the crossover.
pub const OVERLAP_HALF_WIDTH: f64 = 3.162_277_660_168_379_5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    FgSeries,
    Kelvin,
    DirectRatio,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::FgSeries => "fg_series",
            Route::Kelvin => "kelvin",
            Route::DirectRatio => "direct_ratio",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One sample of `Q⁻¹` with the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QEvaluation {
    pub omega: f64,
    pub q_inverse: f64,
    pub route: Route,
    /// Estimated relative error. Inside the overlap band this is the measured
    /// discrepancy between two routes.
    pub est_rel_error: f64,
}

fn check_omega(omega: f64) -> Result<()> {
    if omega > 0.0 && omega.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            name: "omega",
            value: omega,
            constraint: "finite omega > 0",
        })
    }
}

/// `num / den` where `num = a₁b₁ + a₂b₂` and `den = c₁d₁ − c₂d₂`, with a
/// first-order estimate of how much the two sums amplify input errors.
struct Quotient {
    num: f64,
    den: f64,
    condition: f64,
}

impl Quotient {
    fn new(num: [f64; 2], den: [f64; 2]) -> Self {
        let n = num[0] + num[1];
        let d = den[0] - den[1];
        let cond = |parts: [f64; 2], total: f64| (parts[0].abs() + parts[1].abs()) / total.abs();
        Self {
            num: n,
            den: d,
            condition: cond(num, n) + cond(den, d),
        }
    }

    fn evaluate(&self, omega: f64, input_error: f64) -> Result<(f64, f64)> {
        if !(self.den.abs() >= HAZARD) {
            return Err(Error::DivisionHazard { value: self.den });
        }
        let value = self.num / self.den;
        let est = (input_error + 2.0 * f64::EPSILON) * self.condition;
        if !(value > 0.0) {
            // numerator and denominator both carry the sign of the storage response
            return Err(Error::NonPositiveStorage {
                omega,
                value: self.den,
            });
        }
        Ok((value, est))
    }
}

/// `Q⁻¹` from the `f`/`g` series of orders `ν` and `ν + 2`.
pub fn q_inverse_fg(model: ModelOrder, omega: f64, policy: &SeriesPolicy) -> Result<QEvaluation> {
    check_omega(omega)?;
    if omega > policy.crossover() {
        return Err(Error::AboveCrossover {
            omega,
            crossover: policy.crossover(),
        });
    }
    let nu = model.nu();
    let lo = fg_series(nu, omega, policy)?;
    let hi = fg_series(nu + 2.0, omega, policy)?;
    let quotient = Quotient::new([lo.f * hi.f, lo.g * hi.g], [lo.g * hi.f, lo.f * hi.g]);
    if quotient.den < 0.0 {
        return Err(Error::NonPositiveStorage {
            omega,
            value: quotient.den,
        });
    }
    let (q_inverse, est_rel_error) = quotient.evaluate(omega, lo.rel_error + hi.rel_error)?;
    Ok(QEvaluation {
        omega,
        q_inverse,
        route: Route::FgSeries,
        est_rel_error,
    })
}

/// `Q⁻¹` from Kelvin functions of orders `ν` and `ν + 2` at `√ω`:
///
/// `(bei_{ν+2} ber_ν − bei_ν ber_{ν+2}) / (bei_ν bei_{ν+2} + ber_ν ber_{ν+2})`.
///
/// Both pairs are rescaled by their largest component first; the quotient
/// is invariant under that, which postpones underflow of the products.
pub fn q_inverse_kelvin(
    model: ModelOrder,
    omega: f64,
    policy: &SeriesPolicy,
) -> Result<QEvaluation> {
    check_omega(omega)?;
    let x = omega.sqrt();
    let nu = model.nu();
    let lo = kelvin(nu, x, policy)?;
    let hi = kelvin(nu + 2.0, x, policy)?;
    let scale = |ber: f64, bei: f64| {
        let m = ber.abs().max(bei.abs());
        if m > 0.0 {
            (ber / m, bei / m)
        } else {
            (ber, bei)
        }
    };
    let (ber0, bei0) = scale(lo.ber, lo.bei);
    let (ber2, bei2) = scale(hi.ber, hi.bei);
    // the storage response is positive exactly when the denominator is negative
    let quotient = Quotient::new([bei0 * bei2, ber0 * ber2], [bei2 * ber0, bei0 * ber2]);
    if !(quotient.num < 0.0) {
        return Err(Error::NonPositiveStorage {
            omega,
            value: -quotient.num,
        });
    }
    let (q_inverse, est_rel_error) = Quotient {
        num: quotient.den,
        den: quotient.num,
        condition: quotient.condition,
    }
    .evaluate(omega, lo.rel_error + hi.rel_error)?;
    Ok(QEvaluation {
        omega,
        q_inverse,
        route: Route::Kelvin,
        est_rel_error,
    })
}

/// `Q⁻¹` from `sJ̃(iω) = I_ν(z) / I_{ν+2}(z)` with the principal `z = √(iω)`.
///
/// Works at any frequency. At low frequency `Re sJ̃` is a small fraction of
/// `|sJ̃|`, and the error estimate grows accordingly.
pub fn q_inverse_direct(model: ModelOrder, omega: f64) -> Result<QEvaluation> {
    check_omega(omega)?;
    let z = Complex64::new(0.0, omega).sqrt();
    let nu = model.nu();
    let (lower, res_lo) = bessel_ratio_up_with_residual(nu, z)?;
    let (upper, res_hi) = bessel_ratio_up_with_residual(nu + 1.0, z)?;
    let compliance = (lower * upper).inv();
    if !(compliance.re > 0.0) {
        return Err(Error::NonPositiveStorage {
            omega,
            value: compliance.re,
        });
    }
    let q_inverse = -compliance.im / compliance.re;
    let spread = compliance.norm() / compliance.re;
    let est_rel_error = (res_lo + res_hi + 8.0 * f64::EPSILON) * spread;
    Ok(QEvaluation {
        omega,
        q_inverse,
        route: Route::DirectRatio,
        est_rel_error,
    })
}

/// The overlap band `[ω*/√10, ω*·√10]` around the policy's crossover.
pub fn overlap_band(policy: &SeriesPolicy) -> (f64, f64) {
    let c = policy.crossover();
    (c / OVERLAP_HALF_WIDTH, c * OVERLAP_HALF_WIDTH)
}

/// Relative discrepancy `|a − b| / |a|` between two evaluations.
pub fn discrepancy(a: &QEvaluation, b: &QEvaluation) -> f64 {
    (a.q_inverse - b.q_inverse).abs() / a.q_inverse.abs()
}

/// `Q⁻¹` by the stable route for `ω`.
///
/// Below the crossover the `f`/`g` series is used, above it the continued
/// fraction. Inside the overlap band a second route is evaluated as well
/// (the ratio below the crossover, Kelvin functions above it) and the
/// discrepancy replaces the error estimate; a discrepancy above
/// [`OVERLAP_BOUND`] is an error.
pub fn q_inverse(model: ModelOrder, omega: f64, policy: &SeriesPolicy) -> Result<QEvaluation> {
    check_omega(omega)?;
    let (band_lo, band_hi) = overlap_band(policy);
    let below = omega <= policy.crossover();
    let primary = if below {
        q_inverse_fg(model, omega, policy)?
    } else {
        q_inverse_direct(model, omega)?
    };
    if omega < band_lo || omega > band_hi {
        return Ok(primary);
    }
    let second = if below {
        q_inverse_direct(model, omega)?
    } else {
        q_inverse_kelvin(model, omega, policy)?
    };
    let gap = discrepancy(&primary, &second);
    if !(gap <= OVERLAP_BOUND) {
        return Err(Error::Inconsistent {
            omega,
            discrepancy: gap,
            bound: OVERLAP_BOUND,
        });
    }
    Ok(QEvaluation {
        est_rel_error: gap,
        ..primary
    })
}

/// Leading-order behaviour of `Q⁻¹`:
///
/// - high: `√2(ν+1) / (√ω + √2(ν+1))`,
/// - low: `2(ν+1)(ν+3) / ω`.
pub fn q_inverse_asymptotic(model: ModelOrder, omega: f64, regime: Regime) -> Result<f64> {
    check_omega(omega)?;
    let nu = model.nu();
    Ok(match regime {
        Regime::High => {
            let a = std::f64::consts::SQRT_2 * (nu + 1.0);
            a / (omega.sqrt() + a)
        }
        Regime::Low => 2.0 * (nu + 1.0) * (nu + 3.0) / omega,
    })
}
