//! Exact operator calculus for differential operators of infinite order.
//!
//! * [`exactmath`]: rationals and dense polynomials.
//! * [`opseries`]: truncated operator series `Σ F_n(x) z^n` with `z = d/dx`,
//!   their composition and inversion.
//! * [`summation`]: `f(x+1) - f(x) = g(x)` for polynomial `g`.
//! * [`zetaengine`]: even zeta values by coefficient comparison, plus
//!   floating-point cross-checks.

pub mod error;
pub mod exactmath;
pub mod opseries;
pub mod summation;
pub mod zetaengine;

pub use error::{Error, Result};
pub use exactmath::{BigRational, Polynomial};
pub use opseries::OperatorSeries;
