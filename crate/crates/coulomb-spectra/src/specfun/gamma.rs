//! Complex logarithm of the Gamma function.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(z)` for complex `z`.
///
/// For `Re z ≥ 1/2` this is the analytic continuation of the real log-Gamma
/// function (imaginary part continuous in `z`, not reduced modulo `2π`),
/// evaluated with a Lanczos approximation. For `Re z < 1/2` the reflection
/// formula is used and the imaginary part is defined only modulo `2π`, which
/// is immaterial wherever the result is exponentiated.
///
/// Returns [`Error::Pole`] at non-positive integers.
pub fn gamma_ln(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Err(Error::Pole(format!("Gamma has a pole at {}", z.re)));
    }
    if z.re < 0.5 {
        let one_minus = Complex64::new(1.0, 0.0) - z;
        return Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - lanczos(one_minus));
    }
    Ok(lanczos(z))
}

/// Lanczos evaluation of `ln Γ(z)` for `Re z ≥ 1/2`.
fn lanczos(z: Complex64) -> Complex64 {
    let zm1 = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (zm1 + k as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (zm1 + 0.5) * t.ln() - t + series.ln()
}

/// `ln sin(πz)` evaluated without overflow for large `|Im z|`.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let i = Complex64::i();
    if z.im.abs() < 1.0 {
        return (PI * z).sin().ln();
    }
    // sin(πz) = e^{∓iπz}·(e^{±2iπz} − 1)/(±2i) with the sign chosen so the
    // remaining exponential is small.
    if z.im > 0.0 {
        let small = (2.0 * i * PI * z).exp();
        -i * PI * z + ((small - 1.0) / (2.0 * i)).ln()
    } else {
        let small = (-2.0 * i * PI * z).exp();
        i * PI * z + ((1.0 - small) / (2.0 * i)).ln()
    }
}
