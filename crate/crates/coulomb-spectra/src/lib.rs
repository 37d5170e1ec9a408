//! Spectra of Schrödinger operators with the shifted Coulomb potential `−γ/(1+|x|)`.
//!
//! The crate covers three layers:
//!
//! * [`specfun`] — integer-order Bessel functions, complex log-Gamma and two
//!   evaluators of the Kummer function `U` (an oracle-grade Laplace integral and
//!   a uniform large-parameter expansion in terms of Bessel functions).
//! * [`sa_spectrum`] and [`theta`] — the negative eigenvalues `−λ_n` of the
//!   self-adjoint half-line operators with Dirichlet or Neumann conditions at
//!   `x = 0`, their characteristic equations and two-term asymptotics.
//! * [`nsa_spectrum`] and [`nonsym`] — the complex eigenvalues of the indefinite
//!   operator `sgn(x)(−d²/dx² − γ/(1+|x|))` (and its non-symmetric variant),
//!   located by the argument principle and compared with asymptotic curve laws.
//!
//! [`oracle`] provides independent ground truth (direct ODE integration
//! and a finite-difference matrix eigensolver) against which everything else is
//! checked.
//!
//! With the default `parallel` feature, sampling sweeps, rectangle searches and
//! per-index root searches fan out over a rayon thread pool; without it the same
//! code runs sequentially and produces identical results.

// `!(x > 0.0)` is used deliberately: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod contour;
pub mod error;
pub mod nonsym;
pub mod nsa_spectrum;
pub mod oracle;
mod par;
pub mod roots;
pub mod sa_spectrum;
pub mod specfun;
pub mod theta;

pub use error::{Error, ErrorCategory, Result};
pub use num_complex::Complex64;
