//! Kelvin functions `ber_α`, `bei_α` of real order.
//!
//! Below the policy's switch argument the defining series is summed directly.
//! Above it we use `ber_α(x) + i bei_α(x) = e^{iπα/2} I_α(x e^{iπ/4})`, with
//! `I_α` built from a Hankel expansion at the base order `α − ⌊α⌋` (or `α`
//! itself when negative) and continued-fraction ratios up to `α`.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;

use super::{
    bessel_ratio_up_with_residual, check_order, cos_sin_pi, gamma_real, FGPair, SeriesPolicy,
    Summation,
};
use crate::error::{Error, Result};

const LOG_MAX: f64 = 709.78;

/// `(ber_α(x), bei_α(x))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KelvinPair {
    pub ber: f64,
    pub bei: f64,
    pub order: f64,
    pub argument: f64,
    /// Estimated relative error of `ber + i bei`.
    pub rel_error: f64,
}

impl KelvinPair {
    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.ber, self.bei)
    }
}

pub fn kelvin(order: f64, x: f64, policy: &SeriesPolicy) -> Result<KelvinPair> {
    check_order(order)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            name: "x",
            value: x,
            constraint: "finite x >= 0",
        });
    }
    let (value, rel_error) = if x <= policy.kelvin_switch() {
        kelvin_series(order, x, policy)?
    } else {
        kelvin_large(order, x)?
    };
    Ok(KelvinPair {
        ber: value.re,
        bei: value.im,
        order,
        argument: x,
        rel_error,
    })
}

fn kelvin_series(order: f64, x: f64, policy: &SeriesPolicy) -> Result<(Complex64, f64)> {
    if x == 0.0 {
        return match order {
            0.0 => Ok((Complex64::new(1.0, 0.0), 0.0)),
            o if o > 0.0 => Ok((Complex64::new(0.0, 0.0), 0.0)),
            _ => Err(Error::Overflow {
                function: "kelvin",
                argument: x,
            }),
        };
    }
    let (c, s) = cos_sin_pi(0.75 * order);
    // e^{iπ(3α/4 + k/2)} advances by a quarter turn per term
    let phases = [
        Complex64::new(c, s),
        Complex64::new(-s, c),
        Complex64::new(-c, -s),
        Complex64::new(s, -c),
    ];
    let step = 0.25 * x * x;
    let mut size = 1.0 / gamma_real(order + 1.0)?;
    let mut acc = Summation::new(policy);
    let mut k = 0usize;
    while !acc.push(phases[k % 4] * size) {
        if acc.exhausted() {
            break;
        }
        k += 1;
        size *= step / (k as f64 * (k as f64 + order));
    }
    let summed = acc.finish()?.guarded(policy)?;
    let prefactor = (order * (0.5 * x).ln()).exp();
    let value = summed.value * prefactor;
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Overflow {
            function: "kelvin",
            argument: x,
        });
    }
    Ok((value, summed.rel_error()))
}

fn kelvin_large(order: f64, x: f64) -> Result<(Complex64, f64)> {
    let z = Complex64::from_polar(x, FRAC_PI_4);
    let (scaled, err) = scaled_bessel_i(order, z)?;
    // |I_α(z)| = e^{Re z} |scaled|
    let log_magnitude = z.re + scaled.norm().ln();
    if log_magnitude > LOG_MAX {
        return Err(Error::Overflow {
            function: "kelvin",
            argument: x,
        });
    }
    let (c, s) = cos_sin_pi(0.5 * order);
    let phase = Complex64::new(c, s) * Complex64::from_polar(1.0, z.im) * (scaled / scaled.norm());
    let value = phase * log_magnitude.exp();
    Ok((value, err + f64::EPSILON * x))
}

/// `e^{-z} I_α(z)` for `|z|` beyond the series range and `|arg z| < π/2`.
fn scaled_bessel_i(order: f64, z: Complex64) -> Result<(Complex64, f64)> {
    let base = if order >= 0.0 {
        order - order.floor()
    } else {
        order
    };
    let steps = (order - base).round() as usize;
    let (mut value, mut err) = hankel_scaled(base, z);
    if steps > 0 {
        let (top, residual) = bessel_ratio_up_with_residual(order - 1.0, z)?;
        let mut ratio = top;
        let mut product = top;
        for j in (0..steps - 1).rev() {
            let a = base + j as f64;
            ratio = (z.inv() * (2.0 * (a + 1.0)) + ratio).inv();
            product *= ratio;
        }
        value *= product;
        err += residual + 4.0 * f64::EPSILON * steps as f64;
    }
    Ok((value, err))
}

/// Hankel expansion of `e^{-z} I_ν(z)` including the recessive `e^{-2z}` part,
/// valid for `−π/2 < arg z < 3π/2`.
fn hankel_scaled(order: f64, z: Complex64) -> (Complex64, f64) {
    let mu = 4.0 * order * order;
    let inv_8z = (8.0 * z).inv();
    let mut term = Complex64::new(1.0, 0.0);
    let mut alternating = term;
    let mut plain = term;
    let mut last = 1.0;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        let next = term * inv_8z * ((mu - odd * odd) / k as f64);
        let size = next.norm();
        if size >= last {
            break;
        }
        term = next;
        last = size;
        if k % 2 == 0 {
            alternating += term;
        } else {
            alternating -= term;
        }
        plain += term;
        if size < 0.1 * f64::EPSILON {
            break;
        }
    }
    let (c, s) = cos_sin_pi(order);
    let recessive = Complex64::i() * Complex64::new(c, s) * (-2.0 * z).exp() * plain;
    let value = (alternating + recessive) / (2.0 * PI * z).sqrt();
    (value, last + 2.0 * f64::EPSILON)
}

/// `f_α(ω)`, `g_α(ω)` recovered from Kelvin functions at `√ω`:
///
/// `f + i g = (2/√ω)^α e^{-3πiα/4} (ber_α(√ω) + i bei_α(√ω))`.
pub fn fg_from_kelvin(order: f64, omega: f64, policy: &SeriesPolicy) -> Result<FGPair> {
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::Domain {
            name: "omega",
            value: omega,
            constraint: "finite omega > 0",
        });
    }
    let root = omega.sqrt();
    let pair = kelvin(order, root, policy)?;
    let scale = (order * (2.0 / root).ln()).exp();
    let (c, s) = cos_sin_pi(0.75 * order);
    let f = scale * (c * pair.ber + s * pair.bei);
    let g = scale * (-s * pair.ber + c * pair.bei);
    if !(f.is_finite() && g.is_finite()) {
        return Err(Error::Overflow {
            function: "fg_from_kelvin",
            argument: omega,
        });
    }
    Ok(FGPair {
        f,
        g,
        order,
        omega,
        rel_error: pair.rel_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::fg_series;

    fn policy() -> SeriesPolicy {
        SeriesPolicy::default()
    }

    #[test]
    fn origin_values() {
        let p = kelvin(0.0, 0.0, &policy()).unwrap();
        assert_eq!((p.ber, p.bei), (1.0, 0.0));
        let p = kelvin(2.0, 0.0, &policy()).unwrap();
        assert_eq!((p.ber, p.bei), (0.0, 0.0));
        assert!(matches!(
            kelvin(-0.5, 0.0, &policy()),
            Err(Error::Overflow { .. })
        ));
        assert!(kelvin(0.0, -1.0, &policy()).is_err());
    }

    #[test]
    fn recombination_reproduces_fg() {
        let from_kelvin = fg_from_kelvin(2.0, 9.0, &policy()).unwrap();
        let direct = fg_series(2.0, 9.0, &policy()).unwrap();
        let scale = direct.as_complex().norm();
        assert!((from_kelvin.as_complex() - direct.as_complex()).norm() < 1e-13 * scale);
    }

    #[test]
    fn routes_meet_at_the_switch() {
        let switch = policy().kelvin_switch();
        for order in [-0.5, 0.0, 1.0, 2.5, 12.0] {
            let (series, _) = kelvin_series(order, switch, &policy()).unwrap();
            let (large, _) = kelvin_large(order, switch).unwrap();
            let gap = (series - large).norm() / series.norm();
            assert!(gap < 1e-12, "order {order}: {gap:e}");
        }
    }

    #[test]
    fn overflow_above_representable_range() {
        assert!(kelvin(0.0, 1000.0, &policy()).is_ok());
        assert!(matches!(
            kelvin(0.0, 1010.0, &policy()),
            Err(Error::Overflow { .. })
        ));
    }
}
