//! Even zeta values from the pole expansion of `1/(e^z - 1)`.
//!
//! Applying `-1/2 + 1/z + Σ_n (1/(z - 2nπi) + 1/(z + 2nπi))` to `g = t^m`
//! gives a particular solution of `f(x+1) - f(x) = g(x)` built from cosine
//! kernel integrals. Its polynomial part carries the formal symbols
//! `Z_k = Σ n^-k`; matching it against the Faulhaber polynomial pins each
//! `Z_k / π^k` to an exact rational.

mod extract;
mod kernel;
mod linsolve;
mod numeric;
mod symbolic;

pub use extract::{
    extract_zeta, particular_solution_spectral, spectral_residual, zeta_table, ZetaValue,
};
pub use kernel::{cosine_kernel_integral, KernelResult, KernelTerm, PeriodicTerm};
pub use linsolve::{solve_exact, LinearEquation, LinearSolveError};
pub use numeric::{pfd_numeric_check, zeta_numeric_check, PfdCheck, ZetaNumericCheck, POLE_GUARD};
pub use symbolic::{SymbolicCoefficient, SymbolicPolynomial};
