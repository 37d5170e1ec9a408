//! Special functions: Bessel `J_ν`, `Y_ν`, complex log-Gamma, and Kummer `U`.
//!
//! Every routine is a pure function; large magnitudes are returned as
//! [`Scaled`] values (mantissa plus separate log scale).

mod bessel;
mod gamma;
mod kummer;
mod scaled;
mod temme;

pub use bessel::{bessel_cross_01, bessel_jy, bessel_table, BesselTable, ASYMPTOTIC_SWITCH, MAX_ORDER};
pub use gamma::gamma_ln;
pub use kummer::{kummer_u_integral, kummer_u_pair, KummerPair, MAX_SHIFT};
pub use scaled::Scaled;
pub use temme::{
    beta_of_z, c_tilde, kummer_u_temme, kummer_u_temme_with, temme_coefficients, temme_validity, TemmeCoefficients,
    TemmeExpansion, TemmeForm, Validity, DEFAULT_DELTA, MIN_PARAMETER,
};
