use num_complex::Complex64;

use super::{check_finite, check_order, gamma_real, ComplexValue, SeriesPolicy, Summation, Summed};
use crate::error::{Error, Result};

/// Real and imaginary parts of `I^T_α(√(iω))`, summed from their own series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FGPair {
    pub f: f64,
    pub g: f64,
    pub order: f64,
    pub omega: f64,
    /// Estimated relative error of `f + i g` from rounding and cancellation.
    pub rel_error: f64,
}

impl FGPair {
    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.f, self.g)
    }
}

/// Tricomi's uniform modified Bessel function evaluated at `√s`,
///
/// `I^T_α(√s) = Σ_m (s/4)^m / (m! Γ(m+α+1))`.
///
/// The argument is `s` itself, so no square root (and no branch choice) is
/// involved. Fails with [`Error::Cancellation`] when the largest term exceeds
/// the result by more than the policy's guard.
pub fn tricomi_it(order: f64, s: ComplexValue, policy: &SeriesPolicy) -> Result<ComplexValue> {
    Ok(tricomi_summed(order, s, policy)?.guarded(policy)?.value)
}

pub(crate) fn tricomi_summed(order: f64, s: Complex64, policy: &SeriesPolicy) -> Result<Summed> {
    check_order(order)?;
    check_finite(s, "s")?;
    let quarter = s / 4.0;
    let mut term = Complex64::new(1.0 / gamma_real(order + 1.0)?, 0.0);
    let mut acc = Summation::new(policy);
    let mut m = 0.0;
    while !acc.push(term) {
        if acc.exhausted() {
            break;
        }
        m += 1.0;
        term = term * quarter / (m * (m + order));
    }
    acc.finish()
}

/// Modified Bessel function of the first kind `I_α(x)` for real `x ≥ 0`,
/// as `(x/2)^α I^T_α(x)`.
///
/// All terms are positive, so only the term cap limits the range: with the
/// default 400 terms the series converges up to roughly `x ≈ 500`, and the
/// result itself overflows near `x ≈ 713`.
pub fn modified_bessel_i(order: f64, x: f64, policy: &SeriesPolicy) -> Result<f64> {
    check_order(order)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            name: "x",
            value: x,
            constraint: "finite x >= 0",
        });
    }
    if x == 0.0 {
        return match order {
            0.0 => Ok(1.0),
            o if o > 0.0 => Ok(0.0),
            _ => Err(Error::Overflow {
                function: "modified_bessel_i",
                argument: x,
            }),
        };
    }
    let sum = tricomi_summed(order, Complex64::new(x * x, 0.0), policy)?
        .value
        .re;
    // log form keeps (x/2)^α from overflowing ahead of a small sum
    let log_value = order * (0.5 * x).ln() + sum.ln();
    let value = log_value.exp();
    if !value.is_finite() {
        return Err(Error::Overflow {
            function: "modified_bessel_i",
            argument: x,
        });
    }
    Ok(value)
}

/// `f_α(ω)` and `g_α(ω)` from their defining alternating series.
///
/// Their combination `f + i g` equals `I^T_α(√(iω))`: the even-index terms of
/// the Tricomi series are real with sign `(-1)^n`, the odd-index ones purely
/// imaginary. Cancellation grows roughly like `exp(0.29 √ω)`, so results above
/// the policy's guard are rejected.
pub fn fg_series(order: f64, omega: f64, policy: &SeriesPolicy) -> Result<FGPair> {
    let summed = fg_summed(order, omega, policy)?.guarded(policy)?;
    Ok(FGPair {
        f: summed.value.re,
        g: summed.value.im,
        order,
        omega,
        rel_error: summed.rel_error(),
    })
}

fn fg_summed(order: f64, omega: f64, policy: &SeriesPolicy) -> Result<Summed> {
    check_order(order)?;
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::Domain {
            name: "omega",
            value: omega,
            constraint: "finite omega > 0",
        });
    }
    let step = -omega * omega / 16.0;
    let mut f_term = 1.0 / gamma_real(order + 1.0)?;
    let mut g_term = omega / (4.0 * gamma_real(order + 2.0)?);
    let mut acc = Summation::new(policy);
    let mut n = 0.0;
    while !acc.push(Complex64::new(f_term, g_term)) {
        if acc.exhausted() {
            break;
        }
        n += 1.0;
        let even = 2.0 * n;
        f_term *= step / (even * (even - 1.0) * (even + order) * (even + order - 1.0));
        g_term *= step / ((even + 1.0) * even * (even + order + 1.0) * (even + order));
    }
    acc.finish()
}
