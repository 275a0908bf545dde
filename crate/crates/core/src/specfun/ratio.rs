//! Ratios of modified Bessel functions of contiguous order.
//!
//! `r_a(z) = I_{a+1}(z) / I_a(z)` follows from the backward form of the
//! three-term recurrence `I_{a} − I_{a+2} = (2(a+1)/z) I_{a+1}`:
//!
//! `r_a = 1 / (2(a+1)/z + r_{a+1})`,
//!
//! which unrolls into a continued fraction. `I_a` is the minimal solution of
//! the recurrence as the order grows, so the fraction converges for every
//! `z ≠ 0`; it needs on the order of `|z|` levels for large arguments. The
//! exponential growth of `I_a(z)` cancels in the ratio, so no scaling is
//! needed even where `I_a` itself overflows.

use num_complex::Complex64;

use super::{check_finite, check_order, ComplexValue};
use crate::error::{Error, Result};

// small enough to act as zero, large enough that its square is normal
const TINY: f64 = 1e-150;
const MAX_LEVELS: usize = 2_000_000;
const TOLERANCE: f64 = 2.0 * f64::EPSILON;

/// `I_{a+1}(z) / I_a(z)` for `a > −1`, `z ≠ 0`.
pub fn bessel_ratio_up(order: f64, z: ComplexValue) -> Result<ComplexValue> {
    Ok(bessel_ratio_up_with_residual(order, z)?.0)
}

/// Same as [`bessel_ratio_up`], also returning the last correction factor's
/// distance from one.
pub(crate) fn bessel_ratio_up_with_residual(order: f64, z: Complex64) -> Result<(Complex64, f64)> {
    check_order(order)?;
    check_finite(z, "z")?;
    if z.norm() == 0.0 {
        return Err(Error::Domain {
            name: "|z|",
            value: 0.0,
            constraint: "z != 0",
        });
    }
    let inv_z = z.inv();
    // modified Lentz on b_1 + 1/(b_2 + 1/(b_3 + ...)), b_k = 2(a+k)/z;
    // the ratio is the reciprocal
    let tiny = Complex64::new(TINY, 0.0);
    let b1 = inv_z * (2.0 * (order + 1.0));
    let mut value = if b1.norm() < TINY { tiny } else { b1 };
    let mut c = value;
    let mut d = Complex64::new(0.0, 0.0);
    let mut residual = f64::INFINITY;
    for k in 2..=MAX_LEVELS {
        let b = inv_z * (2.0 * (order + k as f64));
        d = b + d;
        if d.norm() < TINY {
            d = tiny;
        }
        c = b + c.inv();
        if c.norm() < TINY {
            c = tiny;
        }
        d = d.inv();
        let delta = c * d;
        value *= delta;
        residual = (delta - 1.0).norm();
        if residual < TOLERANCE {
            return Ok((value.inv(), residual));
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_LEVELS,
        residual,
    })
}

/// `I_α(z) / I_{α+2}(z)`, the product of two independently evaluated
/// contiguous ratios `1 / (r_α r_{α+1})`.
///
/// Behaves like `4(α+1)(α+2)/z²` as `z → 0`.
pub fn bessel_ratio_contiguous(order: f64, z: ComplexValue) -> Result<ComplexValue> {
    let (lower, _) = bessel_ratio_up_with_residual(order, z)?;
    let (upper, _) = bessel_ratio_up_with_residual(order + 1.0, z)?;
    Ok((lower * upper).inv())
}
