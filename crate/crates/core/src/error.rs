use thiserror::Error;

/// Errors raised by the special-function, model and Q-factor routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside the domain ({constraint})")]
    Domain {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error("gamma function has a pole at {0}")]
    Pole(f64),

    #[error("{function} overflows at argument {argument}")]
    Overflow {
        function: &'static str,
        argument: f64,
    },

    #[error("series did not reach the requested tolerance within {terms} terms")]
    Truncation { terms: usize },

    #[error("cancellation ratio {ratio:.3e} exceeds the guard {guard:.3e}")]
    Cancellation { ratio: f64, guard: f64 },

    #[error("omega = {omega} is above the series crossover {crossover}")]
    AboveCrossover { omega: f64, crossover: f64 },

    #[error("continued fraction did not converge after {iterations} iterations (residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("could not isolate zero number {k} of J_{order}")]
    RootIsolation { order: f64, k: usize },

    #[error("denominator {value:.3e} is too close to zero")]
    DivisionHazard { value: f64 },

    #[error("storage response Re sJ(i omega) = {value:.6e} is not positive at omega = {omega}")]
    NonPositiveStorage { omega: f64, value: f64 },

    #[error("routes disagree at omega = {omega}: discrepancy {discrepancy:.3e} > {bound:.1e}")]
    Inconsistent {
        omega: f64,
        discrepancy: f64,
        bound: f64,
    },

    #[error("more than {cap} Bessel zeros would be required")]
    ZeroCapExceeded { cap: usize },

    #[error("invalid series policy: {0}")]
    InvalidPolicy(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
