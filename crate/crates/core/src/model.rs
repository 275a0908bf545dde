//! Material functions of the Bessel models and the fractional Maxwell model
//! they are compared against.
//!
//! All quantities are nondimensional: the relaxation time and the glass
//! compliance are both one.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::{
    bessel_ratio_contiguous, bessel_ratio_up_with_residual, check_finite, BesselZeros,
    ComplexValue, SeriesPolicy,
};

/// Order `ν > −1` selecting a member of the Bessel family.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ModelOrder(f64);

impl ModelOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if nu > -1.0 && nu.is_finite() {
            Ok(Self(nu))
        } else {
            Err(Error::Domain {
                name: "nu",
                value: nu,
                constraint: "nu > -1",
            })
        }
    }

    pub fn nu(self) -> f64 {
        self.0
    }

    /// `4(ν+1)(ν+2)`, the long-time limit of the creep rate.
    pub fn creep_rate_floor(self) -> f64 {
        4.0 * (self.0 + 1.0) * (self.0 + 2.0)
    }
}

/// Frequency regime of an asymptotic expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    High,
    Low,
}

fn nonzero(s: Complex64) -> Result<()> {
    check_finite(s, "s")?;
    if s.norm() == 0.0 {
        return Err(Error::Domain {
            name: "|s|",
            value: 0.0,
            constraint: "s != 0",
        });
    }
    Ok(())
}

/// Laplace transform of the creep rate,
/// `Ψ̃(s; ν) = 2(ν+1)/√s · I_{ν+1}(√s) / I_{ν+2}(√s)`.
///
/// The same principal `√s` feeds numerator and denominator, and the result
/// is an even function of `√s`, so the branch choice does not matter.
pub fn creep_rate_laplace(model: ModelOrder, s: ComplexValue) -> Result<ComplexValue> {
    Ok(creep_rate_laplace_with_residual(model, s)?.0)
}

pub(crate) fn creep_rate_laplace_with_residual(
    model: ModelOrder,
    s: Complex64,
) -> Result<(Complex64, f64)> {
    nonzero(s)?;
    let z = s.sqrt();
    let nu = model.nu();
    let (ratio, residual) = bessel_ratio_up_with_residual(nu + 1.0, z)?;
    Ok(((2.0 * (nu + 1.0)) / (z * ratio), residual))
}

/// `s J̃(s; ν) = I_ν(√s) / I_{ν+2}(√s)`, which equals `1 + Ψ̃(s; ν)`.
pub fn creep_compliance_laplace(model: ModelOrder, s: ComplexValue) -> Result<ComplexValue> {
    nonzero(s)?;
    bessel_ratio_contiguous(model.nu(), s.sqrt())
}

/// Two-term expansions of `s J̃(s; ν)`:
///
/// - high: `1 + 2(ν+1) s^{-1/2}` (principal branch),
/// - low: `2(ν+2)/(ν+3) + 4(ν+1)(ν+2)/s`.
pub fn creep_compliance_asymptotic(
    model: ModelOrder,
    s: ComplexValue,
    regime: Regime,
) -> Result<ComplexValue> {
    nonzero(s)?;
    let nu = model.nu();
    Ok(match regime {
        Regime::High => 1.0 + 2.0 * (nu + 1.0) / s.sqrt(),
        Regime::Low => {
            Complex64::new(2.0 * (nu + 2.0) / (nu + 3.0), 0.0) + model.creep_rate_floor() / s
        }
    })
}

/// How the Dirichlet series of the creep rate was cut.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirichletTruncation {
    pub n_zeros: usize,
    /// Upper bound on the dropped part `4(ν+1) Σ_{k>K} exp(−j²_{ν+2,k} t)`.
    pub tail_bound: f64,
}

/// Time-domain creep rate
/// `Ψ(t; ν) = 4(ν+1)(ν+2) + 4(ν+1) Σ_k exp(−j²_{ν+2,k} t)`
/// with a cache of the zeros `j_{ν+2,k}` that grows on demand.
///
/// After `K` terms the tail is bounded using `j_{ν+2,k} ≥ j_{ν+2,K} + (k−K)π`
/// (zeros of `J_μ`, `μ > 1/2`, are spaced by more than `π`):
///
/// `Σ_{k>K} e^{−j_k² t} ≤ e^{−a² t} / (1 − e^{−2π a t})`, `a = j_K + π`.
#[derive(Debug, Clone)]
pub struct CreepRateSeries {
    model: ModelOrder,
    zeros: Vec<f64>,
    source: BesselZeros,
    zero_cap: usize,
}

impl CreepRateSeries {
    pub const DEFAULT_ZERO_CAP: usize = 200_000;

    pub fn new(model: ModelOrder) -> Result<Self> {
        Ok(Self {
            model,
            zeros: Vec::new(),
            source: BesselZeros::new(model.nu() + 2.0)?,
            zero_cap: Self::DEFAULT_ZERO_CAP,
        })
    }

    pub fn with_zero_cap(mut self, cap: usize) -> Self {
        self.zero_cap = cap.max(1);
        self
    }

    pub fn model(&self) -> ModelOrder {
        self.model
    }

    fn zero(&mut self, k: usize) -> Result<f64> {
        while self.zeros.len() < k {
            let next = self.source.next_zero()?;
            self.zeros.push(next);
        }
        Ok(self.zeros[k - 1])
    }

    pub fn evaluate(
        &mut self,
        t: f64,
        policy: &SeriesPolicy,
    ) -> Result<(f64, DirichletTruncation)> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Domain {
                name: "t",
                value: t,
                constraint: "finite t > 0",
            });
        }
        let nu = self.model.nu();
        let weight = 4.0 * (nu + 1.0);
        let floor = self.model.creep_rate_floor();
        let mut sum = 0.0;
        let mut k = 0;
        loop {
            if k >= self.zero_cap {
                return Err(Error::ZeroCapExceeded { cap: self.zero_cap });
            }
            k += 1;
            let j = self.zero(k)?;
            sum += (-j * j * t).exp();
            let a = j + PI;
            let tail = weight * (-a * a * t).exp() / -(-2.0 * PI * a * t).exp_m1();
            let value = floor + weight * sum;
            if tail <= policy.rel_tol() * value {
                return Ok((
                    value,
                    DirichletTruncation {
                        n_zeros: k,
                        tail_bound: tail,
                    },
                ));
            }
        }
    }
}

/// One-off evaluation of the creep rate; see [`CreepRateSeries`].
pub fn creep_rate_time(
    model: ModelOrder,
    t: f64,
    policy: &SeriesPolicy,
) -> Result<(f64, DirichletTruncation)> {
    CreepRateSeries::new(model)?.evaluate(t, policy)
}

/// Specific dissipation of the fractional Maxwell model of order `β`,
/// `Q⁻¹ = sin(πβ/2) / ((ωτ)^β + cos(πβ/2))`; `β = 1` is the Maxwell body.
pub fn frac_maxwell_q_inverse(beta: f64, omega_tau: f64) -> Result<f64> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::Domain {
            name: "beta",
            value: beta,
            constraint: "0 < beta <= 1",
        });
    }
    if !(omega_tau > 0.0) || !omega_tau.is_finite() {
        return Err(Error::Domain {
            name: "omega_tau",
            value: omega_tau,
            constraint: "finite omega_tau > 0",
        });
    }
    let (c, s) = crate::specfun::cos_sin_pi(0.5 * beta);
    Ok(s / (omega_tau.powf(beta) + c))
}
