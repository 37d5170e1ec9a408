//! Shared helpers for integration tests.

pub mod bessel_series;
pub mod reference_values;
