//! Special functions needed by the Bessel-media quality factor.
//!
//! Everything here is a pure function of its arguments and an immutable
//! [`SeriesPolicy`]. Power series are truncated by the policy; alternating
//! series additionally report how much cancellation they suffered and are
//! rejected when the largest term dwarfs the result by more than the policy's
//! guard.

mod bessel_j;
mod gamma;
mod kelvin;
mod ratio;
mod series;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use bessel_j::{bessel_j, bessel_j_zero, mcmahon_zero, BesselZeros, MAX_ZERO_ORDER};
pub use gamma::gamma_real;
pub use kelvin::{fg_from_kelvin, kelvin, KelvinPair};
pub use ratio::{bessel_ratio_contiguous, bessel_ratio_up};
pub use series::{fg_series, modified_bessel_i, tricomi_it, FGPair};

pub(crate) use ratio::bessel_ratio_up_with_residual;

/// Complex Laplace-domain value.
pub type ComplexValue = Complex64;

/// Truncation and reliability settings shared by every series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPolicy {
    rel_tol: f64,
    max_terms: usize,
    cancellation_guard: f64,
    crossover: f64,
}

impl SeriesPolicy {
    pub const DEFAULT_REL_TOL: f64 = 1e-15;
    pub const DEFAULT_MAX_TERMS: usize = 400;
    pub const DEFAULT_CANCELLATION_GUARD: f64 = 1e8;
    /// `√ω* = 18`.
    pub const DEFAULT_CROSSOVER: f64 = 324.0;

    pub fn new(rel_tol: f64, max_terms: usize, cancellation_guard: f64) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(Error::InvalidPolicy("rel_tol must lie in (0, 1)"));
        }
        if max_terms < 8 {
            return Err(Error::InvalidPolicy("max_terms must be at least 8"));
        }
        if !(cancellation_guard >= 1.0) || !cancellation_guard.is_finite() {
            return Err(Error::InvalidPolicy(
                "cancellation_guard must be finite and >= 1",
            ));
        }
        Ok(Self {
            rel_tol,
            max_terms,
            cancellation_guard,
            crossover: Self::DEFAULT_CROSSOVER,
        })
    }

    /// Frequency `ω*` above which the alternating `f`/`g` and `ber`/`bei`
    /// series are abandoned for the large-argument routes.
    pub fn with_crossover(mut self, crossover: f64) -> Result<Self> {
        if !(crossover > 0.0) || !crossover.is_finite() {
            return Err(Error::InvalidPolicy(
                "crossover must be a positive finite frequency",
            ));
        }
        self.crossover = crossover;
        Ok(self)
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Result<Self> {
        Self::new(rel_tol, self.max_terms, self.cancellation_guard)?.with_crossover(self.crossover)
    }

    pub fn with_max_terms(self, max_terms: usize) -> Result<Self> {
        Self::new(self.rel_tol, max_terms, self.cancellation_guard)?.with_crossover(self.crossover)
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn cancellation_guard(&self) -> f64 {
        self.cancellation_guard
    }

    pub fn crossover(&self) -> f64 {
        self.crossover
    }

    /// Argument `x = √ω*` at which the Kelvin series hands over.
    pub fn kelvin_switch(&self) -> f64 {
        self.crossover.sqrt()
    }
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        Self {
            rel_tol: Self::DEFAULT_REL_TOL,
            max_terms: Self::DEFAULT_MAX_TERMS,
            cancellation_guard: Self::DEFAULT_CANCELLATION_GUARD,
            crossover: Self::DEFAULT_CROSSOVER,
        }
    }
}

/// Outcome of a truncated power series.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Summed {
    pub value: Complex64,
    pub terms: usize,
    /// Largest term magnitude over the magnitude of the result.
    pub cancellation: f64,
}

impl Summed {
    pub fn rel_error(&self) -> f64 {
        2.0 * f64::EPSILON * self.cancellation.max(1.0) * (self.terms as f64).sqrt()
    }

    pub fn guarded(self, policy: &SeriesPolicy) -> Result<Self> {
        if self.cancellation > policy.cancellation_guard {
            Err(Error::Cancellation {
                ratio: self.cancellation,
                guard: policy.cancellation_guard,
            })
        } else {
            Ok(self)
        }
    }
}

/// Accumulates series terms and applies the stopping rule: stop once two
/// consecutive terms are below `rel_tol` times the partial sum.
pub(crate) struct Summation<'a> {
    policy: &'a SeriesPolicy,
    sum: Complex64,
    largest: f64,
    quiet: u8,
    terms: usize,
}

impl<'a> Summation<'a> {
    pub fn new(policy: &'a SeriesPolicy) -> Self {
        Self {
            policy,
            sum: Complex64::new(0.0, 0.0),
            largest: 0.0,
            quiet: 0,
            terms: 0,
        }
    }

    /// Adds a term; returns `true` once the series has converged.
    pub fn push(&mut self, term: Complex64) -> bool {
        self.sum += term;
        self.terms += 1;
        let size = term.norm();
        self.largest = self.largest.max(size);
        if size <= self.policy.rel_tol * self.sum.norm() {
            self.quiet += 1;
        } else {
            self.quiet = 0;
        }
        self.quiet >= 2
    }

    pub fn exhausted(&self) -> bool {
        self.terms >= self.policy.max_terms
    }

    pub fn finish(self) -> Result<Summed> {
        if self.quiet < 2 {
            return Err(Error::Truncation { terms: self.terms });
        }
        let magnitude = self.sum.norm();
        let cancellation = if magnitude > 0.0 {
            self.largest / magnitude
        } else if self.largest == 0.0 {
            1.0
        } else {
            f64::INFINITY
        };
        Ok(Summed {
            value: self.sum,
            terms: self.terms,
            cancellation,
        })
    }
}

pub(crate) fn check_order(order: f64) -> Result<()> {
    if order > -1.0 && order.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            name: "order",
            value: order,
            constraint: "order > -1",
        })
    }
}

pub(crate) fn check_finite(z: Complex64, name: &'static str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value: if z.re.is_finite() { z.im } else { z.re },
            constraint: "finite real and imaginary parts",
        })
    }
}

/// `sin(πx)` with exact argument reduction at integers and half-integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (std::f64::consts::PI * r).sin();
    if n.rem_euclid(2.0) == 0.0 {
        s
    } else {
        -s
    }
}

/// `(cos, sin)` of `πx`, reduced so that multiples of `1/2` are exact.
pub(crate) fn cos_sin_pi(x: f64) -> (f64, f64) {
    let n = (2.0 * x).round();
    let r = x - 0.5 * n;
    let (s, c) = (std::f64::consts::PI * r).sin_cos();
    match n.rem_euclid(4.0) as u8 {
        0 => (c, s),
        1 => (-s, c),
        2 => (-c, -s),
        _ => (s, -c),
    }
}
