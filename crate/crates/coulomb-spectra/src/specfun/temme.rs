//! Uniform large-parameter expansion of `U(−a, c; γ/a)` in terms of Bessel
//! functions of argument `2√γ`, for `c ∈ {0, −1}`.
//!
//! With `C̃_ν(a, γ) = cos(πa) J_ν(2√γ) + sin(πa) Y_ν(2√γ)` the evaluated form is
//!
//! `U(−a, c; γ/a) ≈ (√γ/a)^{1−c} Γ(a+1) e^{γ/(2a)} [C̃_{c−1} + βB₀·C̃_{c−2}]`
//!
//! with `βB₀ = 0` (c = 0) and `βB₀ = −√γ/(2a)` (c = −1), which is accurate to
//! `O(a⁻²)`. The form usually quoted carries the prefactor exponent `(1−c)/2`
//! and a first-order amplitude correction `A₁/a` (`A₁ = −5/16`, `−11/16`);
//! against the exact function that exponent leaves an `O(1)` discrepancy and
//! the `A₁/a` term degrades the error to `O(a⁻¹)`. Both are kept reachable via
//! [`TemmeForm::AsQuoted`] so the discrepancy can be measured; the default
//! [`TemmeForm::Uniform`] is the accurate one. The quoted coefficients are
//! always stored in the returned [`TemmeExpansion`].

use super::bessel::bessel_table;
use super::gamma::gamma_ln;
use super::scaled::Scaled;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

/// Smallest `|a|` accepted by [`kummer_u_temme`].
pub const MIN_PARAMETER: f64 = 5.0;
/// Default angular clearance `δ` for the validity sector.
pub const DEFAULT_DELTA: f64 = 0.01;

/// Which algebraic form of the expansion to assemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TemmeForm {
    /// Prefactor `(√γ/a)^{1−c}`, no `A₁` term: relative error `O(a⁻²)`.
    #[default]
    Uniform,
    /// Prefactor `(√γ/a)^{(1−c)/2}` and amplitude `1 + A₁/a`, as commonly quoted.
    AsQuoted,
}

/// Expansion coefficients `(A₀, A₁, βB₀)` for a given `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemmeCoefficients {
    /// Leading amplitude (1 up to `O(a⁻²)`).
    pub a0: f64,
    /// First amplitude correction coefficient.
    pub a1: f64,
    /// `β·B₀`, the weight of `C̃_{c−2}`.
    pub beta_b0: Complex64,
}

/// Outcome of the validity-sector test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Validity {
    /// `arg a` lies inside the sector.
    pub ok: bool,
    /// Signed angular distance to the nearest sector edge (negative = outside).
    pub margin: f64,
}

/// A fully populated evaluation record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemmeExpansion {
    /// Large parameter `a`.
    pub a: Complex64,
    /// Second Kummer parameter `c ∈ {0, −1}`.
    pub c: i32,
    /// Coupling `γ > 0`.
    pub gamma: f64,
    /// `z = γ/a²`.
    pub z: Complex64,
    /// `β(z) = √z (1 + z/24)`.
    pub beta: Complex64,
    /// `ζ = 2βa`.
    pub zeta: Complex64,
    /// Coefficients `(A₀, A₁, βB₀)` for this `c`.
    pub coefficients: TemmeCoefficients,
    /// Assembled approximation of `U(−a, c; γ/a)`.
    pub value: Scaled,
    /// Validity-sector certificate.
    pub validity: Validity,
    /// Form used to assemble [`value`](Self::value).
    pub form: TemmeForm,
}

/// `β(z) = √z (1 + z/24)`, truncation error `O(z^{5/2})` (next term `−z^{5/2}/640`).
///
/// Errors with [`Error::Regime`] for `|z| ≥ 1`, where the small-`z` expansion
/// no longer applies.
pub fn beta_of_z(z: Complex64) -> Result<Complex64> {
    if z.norm() >= 1.0 {
        return Err(Error::Regime(format!("β(z) expansion needs |z| < 1, got |z| = {}", z.norm())));
    }
    Ok(z.sqrt() * (1.0 + z / 24.0))
}

/// Coefficients of the expansion for `c ∈ {0, −1}`.
pub fn temme_coefficients(c: i32, a: Complex64, gamma: f64) -> Result<TemmeCoefficients> {
    match c {
        0 => Ok(TemmeCoefficients { a0: 1.0, a1: -5.0 / 16.0, beta_b0: Complex64::new(0.0, 0.0) }),
        -1 => Ok(TemmeCoefficients { a0: 1.0, a1: -11.0 / 16.0, beta_b0: -gamma.sqrt() / (2.0 * a) }),
        _ => Err(Error::Argument(format!("expansion implemented for c ∈ {{0, −1}}, got {c}"))),
    }
}

/// `(cos πa, sin πa)` as mantissas sharing a complex log-scale.
///
/// For `|Im a|` large both grow like `e^{π|Im a|}`; that factor is returned
/// separately as `log` (complex, so the mantissas stay analytic in `a`).
fn trig_scaled(a: Complex64) -> (Complex64, Complex64, Complex64) {
    let i = Complex64::i();
    if a.im.abs() < 1.0 {
        return ((PI * a).cos(), (PI * a).sin(), Complex64::new(0.0, 0.0));
    }
    let s = a.im.signum();
    // cos πa = E(1 + e^{2isπa})/2, sin πa = E·s(e^{2isπa} − 1)/(2i), E = e^{−isπa}.
    let small = (2.0 * i * s * PI * a).exp();
    let log_e = -i * s * PI * a;
    ((1.0 + small) / 2.0, s * (small - 1.0) / (2.0 * i), log_e)
}

/// `J_ν(x)` and `Y_ν(x)` for `ν ∈ {−3, …, 3}` from a table of non-negative orders.
fn signed_order(j: &[f64; 4], y: &[f64; 4], nu: i32) -> Result<(f64, f64)> {
    let n = nu.unsigned_abs() as usize;
    if n > 3 {
        return Err(Error::Argument(format!("Bessel order {nu} not supported")));
    }
    let sign = if nu < 0 && n % 2 == 1 { -1.0 } else { 1.0 };
    Ok((sign * j[n], sign * y[n]))
}

/// `C̃_ν(a, γ) = cos(πa) J_ν(2√γ) + sin(πa) Y_ν(2√γ)` for `|ν| ≤ 3`.
///
/// Returned as a [`Scaled`] value so that large `|Im a|` cannot overflow.
pub fn c_tilde(nu: i32, a: Complex64, gamma: f64) -> Result<Scaled> {
    if !(gamma > 0.0) {
        return Err(Error::Domain(format!("coupling must be positive, got {gamma}")));
    }
    let t = bessel_table(2.0 * gamma.sqrt())?;
    let (jn, yn) = signed_order(&t.j, &t.y, nu)?;
    let (cs, sn, log_e) = trig_scaled(a);
    Ok(Scaled::from_log(log_e).scale_by(cs * jn + sn * yn))
}

/// Validity sector test: `−arg t₁ − π/2 + δ ≤ arg a ≤ arg t₁ + π/2 − δ` with
/// `t₁ = β + πi + √((β + πi)² − β²)`.
pub fn temme_validity(a: Complex64, beta: Complex64, delta: f64) -> Validity {
    let w = beta + Complex64::new(0.0, PI);
    let t1 = w + (w * w - beta * beta).sqrt();
    let arg_t1 = t1.arg();
    let lower = -arg_t1 - FRAC_PI_2 + delta;
    let upper = arg_t1 + FRAC_PI_2 - delta;
    let arg_a = a.arg();
    let margin = (arg_a - lower).min(upper - arg_a);
    Validity { ok: margin >= 0.0, margin }
}

/// Uniform asymptotic value of `U(−a, c; γ/a)` (see the module docs).
///
/// Errors: [`Error::Regime`] for `|a| < 5` (use
/// [`kummer_u_integral`](super::kummer_u_integral) instead) and
/// [`Error::Region`] when `arg a` is outside the validity sector.
pub fn kummer_u_temme(a: Complex64, c: i32, gamma: f64) -> Result<TemmeExpansion> {
    kummer_u_temme_with(a, c, gamma, TemmeForm::Uniform, DEFAULT_DELTA)
}

/// [`kummer_u_temme`] with an explicit form and sector clearance `δ`.
pub fn kummer_u_temme_with(a: Complex64, c: i32, gamma: f64, form: TemmeForm, delta: f64) -> Result<TemmeExpansion> {
    if !(gamma > 0.0) {
        return Err(Error::Domain(format!("coupling must be positive, got {gamma}")));
    }
    if a.norm() < MIN_PARAMETER {
        return Err(Error::Regime(format!(
            "|a| = {} below {MIN_PARAMETER}; use the integral representation",
            a.norm()
        )));
    }
    let coefficients = temme_coefficients(c, a, gamma)?;
    let z = gamma / (a * a);
    let beta = beta_of_z(z)?;
    let zeta = 2.0 * beta * a;
    let validity = temme_validity(a, beta, delta);
    if !validity.ok {
        return Err(Error::Region { margin: validity.margin });
    }
    let t = bessel_table(2.0 * gamma.sqrt())?;
    let (j1, y1) = signed_order(&t.j, &t.y, c - 1)?;
    let (j2, y2) = signed_order(&t.j, &t.y, c - 2)?;
    let (cs, sn, log_e) = trig_scaled(a);
    let ct1 = cs * j1 + sn * y1;
    let ct2 = cs * j2 + sn * y2;
    let exponent = match form {
        TemmeForm::Uniform => (1 - c) as f64,
        TemmeForm::AsQuoted => (1 - c) as f64 / 2.0,
    };
    let amplitude = match form {
        TemmeForm::Uniform => Complex64::new(coefficients.a0, 0.0),
        TemmeForm::AsQuoted => coefficients.a0 + coefficients.a1 / a,
    };
    let log_prefactor = exponent * (Complex64::new(0.5 * gamma.ln(), 0.0) - a.ln()) + gamma_ln(a + 1.0)? + gamma / (2.0 * a) + log_e;
    let mant = ct1 * amplitude + coefficients.beta_b0 * ct2;
    let value = Scaled::from_log(log_prefactor).scale_by(mant);
    Ok(TemmeExpansion { a, c, gamma, z, beta, zeta, coefficients, value, validity, form })
}
