//! Energy dissipation in Bessel-type viscoelastic media.
//!
//! The crate evaluates the inverse quality factor `Q⁻¹(ω; ν)` of the Bessel
//! family of linear viscoelastic models by three independent routes:
//!
//! - the real `f`/`g` power series of the Tricomi uniform modified Bessel
//!   function at `√(iω)` ([`qfactor::q_inverse_fg`]),
//! - Kelvin functions `ber`/`bei` of orders `ν` and `ν + 2`
//!   ([`qfactor::q_inverse_kelvin`]),
//! - the contiguous ratio `I_ν / I_{ν+2}` from a continued fraction
//!   ([`qfactor::q_inverse_direct`]),
//!
//! together with a dispatcher ([`qfactor::q_inverse`]) that picks the stable
//! route for each frequency and cross-checks them near the switch.
//!
//! Time is nondimensional throughout (relaxation time and glass compliance
//! set to one).
//!
//! ```
//! use besselq::{model::ModelOrder, qfactor, specfun::SeriesPolicy};
//!
//! let model = ModelOrder::new(0.0).unwrap();
//! let q = qfactor::q_inverse(model, 1.0, &SeriesPolicy::default()).unwrap();
//! assert!((q.q_inverse - 6.006243342891924).abs() < 1e-10);
//! ```

// `!(x > 0.0)` style guards are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod model;
pub mod qfactor;
pub mod specfun;

pub use error::{Error, Result};
pub use model::ModelOrder;
pub use qfactor::{QEvaluation, Route};
pub use specfun::{ComplexValue, SeriesPolicy};
