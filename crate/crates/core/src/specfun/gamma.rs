use std::f64::consts::PI;

use super::sin_pi;
use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
// published coefficients, kept as printed
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest argument with a finite `Γ(x)`.
const GAMMA_OVERFLOW: f64 = 171.624_376_956_302_7;

/// Euler gamma function for real arguments.
///
/// Lanczos approximation (g = 7, nine coefficients) for `x ≥ 0.5` and the
/// reflection formula below that. Integers up to 23 are returned exactly from
/// the factorial table.
pub fn gamma_real(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain {
            name: "x",
            value: x,
            constraint: "not NaN",
        });
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::Pole(x));
    }
    if x > GAMMA_OVERFLOW {
        return Err(Error::Overflow {
            function: "gamma",
            argument: x,
        });
    }
    if x == x.floor() && x <= 23.0 {
        return Ok((1..x as u32).fold(1.0, |acc, k| acc * f64::from(k)));
    }
    if x < 0.5 {
        let reflected = lanczos(1.0 - x);
        return Ok(PI / (sin_pi(x) * reflected));
    }
    Ok(lanczos(x))
}

fn lanczos(x: f64) -> f64 {
    let x = x - 1.0;
    let series = LANCZOS_COEFFS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEFFS[0], |acc, (i, c)| {
            acc + c / (x + (i + 1) as f64)
        });
    let t = x + LANCZOS_G + 0.5;
    // split the power so that t^(x+1/2) does not overflow before e^-t damps it
    let half = t.powf(0.5 * (x + 0.5));
    (2.0 * PI).sqrt() * series * (half * (-t).exp()) * half
}
