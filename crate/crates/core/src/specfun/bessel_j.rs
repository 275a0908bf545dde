//! Bessel functions of the first kind and their positive zeros.

use std::f64::consts::PI;

use twofloat::TwoFloat;

use super::{check_order, cos_sin_pi, gamma_real};
use crate::error::{Error, Result};

/// Largest order accepted by [`bessel_j`] and the zero finder.
pub const MAX_ZERO_ORDER: f64 = 30.0;

/// Below this argument `J_ν` is summed from its power series in double-double
/// arithmetic; above it the Hankel expansion is used.
const SERIES_LIMIT: f64 = 40.0;
const SCAN_STEP: f64 = 0.5;

/// `J_ν(x)` for `−1 < ν ≤ 30` and `x > 0`.
///
/// The alternating series loses about `x / ln 10` digits to cancellation,
/// which the ~32-digit double-double accumulator absorbs up to the switch.
pub fn bessel_j(order: f64, x: f64) -> Result<f64> {
    check_j_order(order)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            name: "x",
            value: x,
            constraint: "finite x > 0",
        });
    }
    evaluate(order, x)
}

fn evaluate(order: f64, x: f64) -> Result<f64> {
    if x <= SERIES_LIMIT {
        series(order, x)
    } else {
        Ok(hankel(order, x))
    }
}

fn check_j_order(order: f64) -> Result<()> {
    check_order(order)?;
    if order > MAX_ZERO_ORDER {
        return Err(Error::Domain {
            name: "order",
            value: order,
            constraint: "order <= 30",
        });
    }
    Ok(())
}

fn series(order: f64, x: f64) -> Result<f64> {
    let prefactor = (order * (0.5 * x).ln()).exp() / gamma_real(order + 1.0)?;
    let step = -TwoFloat::new_mul(x, x) / 4.0;
    let mut term = TwoFloat::from(1.0);
    let mut sum = term;
    let mut largest = 1.0f64;
    let mut m = 0.0;
    loop {
        m += 1.0;
        term = div(term * step / m, TwoFloat::new_add(m, order));
        sum += term;
        let size = term.hi().abs();
        largest = largest.max(size);
        if size < 1e-33 * largest && m > 0.5 * x {
            break;
        }
    }
    Ok(prefactor * f64::from(sum))
}

/// `a / d` to double-double accuracy. The library quotient of two `TwoFloat`s
/// is only good to double precision, dividing by an `f64` is exact enough, and
/// `1/(h + l) = (1/h)(1 − l/h)` to second order since `|l/h| < 2⁻⁵³`.
fn div(a: TwoFloat, d: TwoFloat) -> TwoFloat {
    let q = a / d.hi();
    q - q * (d.lo() / d.hi())
}

fn hankel(order: f64, x: f64) -> f64 {
    let mu = 4.0 * order * order;
    let mut term = 1.0;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut last = 1.0f64;
    let mut past_peak = false;
    for k in 1..400 {
        let odd = (2 * k - 1) as f64;
        let next = term * (mu - odd * odd) / (8.0 * k as f64 * x);
        let size = next.abs();
        // asymptotic: stop at the smallest term once the terms have turned
        if past_peak && size > last {
            break;
        }
        past_peak |= size < last;
        term = next;
        last = size;
        // P collects even k with sign (−1)^{k/2}, Q odd k with sign (−1)^{(k−1)/2}
        match k % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            _ => q -= term,
        }
        if last < 1e-17 * p.abs().max(q.abs()) {
            break;
        }
    }
    // χ = x − (ν/2 + 1/4)π, expanded so that x is reduced exactly by the libm
    let (cp, sp) = cos_sin_pi(0.5 * order + 0.25);
    let (sx, cx) = x.sin_cos();
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    (2.0 / (PI * x)).sqrt() * (p * cos_chi - q * sin_chi)
}

/// McMahon's large-`k` expansion of `j_{ν,k}`.
pub fn mcmahon_zero(order: f64, k: usize) -> f64 {
    let beta = (k as f64 + 0.5 * order - 0.25) * PI;
    let mu = 4.0 * order * order;
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8.powi(5))
}

/// Successive positive zeros `j_{ν,1} < j_{ν,2} < …` of `J_ν`.
///
/// Sign changes are located by scanning with a step shorter than any zero
/// spacing, then refined by Newton's method kept inside the bracket by
/// bisection. Each returned zero has a verified sign change on both sides.
#[derive(Debug, Clone)]
pub struct BesselZeros {
    order: f64,
    cursor: f64,
    cursor_sign: f64,
    found: usize,
}

impl BesselZeros {
    pub fn new(order: f64) -> Result<Self> {
        check_j_order(order)?;
        Ok(Self {
            order,
            cursor: 0.0,
            // J_ν(0⁺) > 0 for ν > −1
            cursor_sign: 1.0,
            found: 0,
        })
    }

    pub fn order(&self) -> f64 {
        self.order
    }

    /// Next zero in increasing order.
    pub fn next_zero(&mut self) -> Result<f64> {
        let k = self.found + 1;
        let mut lo = self.cursor;
        loop {
            let hi = lo + SCAN_STEP;
            let value = evaluate(self.order, hi)?;
            if value == 0.0 {
                self.accept(hi, -self.cursor_sign);
                return Ok(hi);
            }
            if value.signum() != self.cursor_sign {
                let root = self.refine(lo, hi, k)?;
                self.accept(root, value.signum());
                self.cursor = hi;
                return Ok(root);
            }
            lo = hi;
            self.cursor = hi;
            if lo > 1e7 {
                return Err(Error::RootIsolation {
                    order: self.order,
                    k,
                });
            }
        }
    }

    fn accept(&mut self, root: f64, sign_after: f64) {
        self.cursor = self.cursor.max(root);
        self.cursor_sign = sign_after;
        self.found += 1;
    }

    fn refine(&self, mut lo: f64, mut hi: f64, k: usize) -> Result<f64> {
        let lo_sign = self.cursor_sign;
        let guess = mcmahon_zero(self.order, k);
        let mut x = if guess > lo && guess < hi {
            guess
        } else {
            0.5 * (lo + hi)
        };
        for _ in 0..200 {
            let value = evaluate(self.order, x)?;
            if value == 0.0 {
                return Ok(x);
            }
            if value.signum() == lo_sign {
                lo = x;
            } else {
                hi = x;
            }
            // J'_ν = (ν/x) J_ν − J_{ν+1}
            let slope = self.order / x * value - evaluate(self.order + 1.0, x)?;
            let newton = x - value / slope;
            let next = if newton > lo && newton < hi && slope != 0.0 {
                newton
            } else {
                0.5 * (lo + hi)
            };
            let moved = (next - x).abs();
            x = next;
            if moved <= 2.0 * f64::EPSILON * x || hi - lo <= 4.0 * f64::EPSILON * x {
                return self.verify(x, k);
            }
        }
        Err(Error::RootIsolation {
            order: self.order,
            k,
        })
    }

    fn verify(&self, x: f64, k: usize) -> Result<f64> {
        let mut delta = (16.0 * f64::EPSILON * x).max(1e-13);
        for _ in 0..6 {
            let left = evaluate(self.order, x - delta)?;
            let right = evaluate(self.order, x + delta)?;
            if left * right < 0.0 {
                return Ok(x);
            }
            delta *= 10.0;
        }
        Err(Error::RootIsolation {
            order: self.order,
            k,
        })
    }
}

impl Iterator for BesselZeros {
    type Item = Result<f64>;

    fn next(&mut self) -> Option<Self::Item> {
        Some(self.next_zero())
    }
}

/// The `k`-th positive zero `j_{ν,k}` of `J_ν`, `k ≥ 1`.
pub fn bessel_j_zero(order: f64, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain {
            name: "k",
            value: 0.0,
            constraint: "k >= 1",
        });
    }
    let mut zeros = BesselZeros::new(order)?;
    for _ in 1..k {
        zeros.next_zero()?;
    }
    zeros.next_zero()
}
