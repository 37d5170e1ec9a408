//! Small scalar root-finding toolkit shared by the spectral modules.
//!
//! The functions whose roots are sought here are expensive (each evaluation
//! may be an ODE integration or a Kummer quadrature), so the routines never
//! re-evaluate a point they have already seen.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Stopping rule for real root searches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Absolute tolerance on the abscissa.
    pub abs: f64,
    /// Relative tolerance on the abscissa.
    pub rel: f64,
    /// Maximum number of function evaluations.
    pub max_evals: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs: 0.0, rel: 1e-12, max_evals: 200 }
    }
}

impl Tolerance {
    /// Relative tolerance only.
    pub fn relative(rel: f64) -> Self {
        Tolerance { rel, ..Tolerance::default() }
    }

    fn width(&self, x: f64) -> f64 {
        self.abs.max(self.rel * x.abs()).max(4.0 * f64::EPSILON * x.abs())
    }
}

/// Brent's method on a bracket `[a, b]` with `f(a)·f(b) ≤ 0`.
///
/// `fa` and `fb` are the (already known) end-point values. Fallible
/// evaluations propagate their error.
pub fn brent<F>(mut f: F, a: f64, b: f64, fa: f64, fb: f64, tol: Tolerance) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(fa.is_finite() && fb.is_finite()) {
        return Err(Error::RootSearch(format!("non-finite end-point values on [{a}, {b}]")));
    }
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::RootSearch(format!("no sign change on [{a}, {b}]")));
    }
    let (mut a, mut b, mut fa, mut fb) = (a, b, fa, fb);
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..tol.max_evals {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 0.5 * tol.width(b);
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b)?;
        if !fb.is_finite() {
            return Err(Error::RootSearch(format!("non-finite value at {b}")));
        }
    }
    Err(Error::RootSearch(format!("Brent iteration did not converge near {b}")))
}

/// Brent's method evaluating both end points first.
pub fn brent_bracket<F>(mut f: F, a: f64, b: f64, tol: Tolerance) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let fa = f(a)?;
    let fb = f(b)?;
    brent(f, a, b, fa, fb, tol)
}

/// Newton iteration for an analytic function with a central-difference
/// derivative of relative step `rel_step`.
///
/// Stops when `|Δz| ≤ tol·|z|`; returns the root and the last step size.
pub fn newton_complex<F>(mut f: F, z0: Complex64, rel_step: f64, tol: f64, max_iter: usize) -> Result<(Complex64, f64)>
where
    F: FnMut(Complex64) -> Result<Complex64>,
{
    let mut z = z0;
    for _ in 0..max_iter {
        let h = rel_step * z.norm().max(f64::MIN_POSITIVE);
        let fz = f(z)?;
        if fz.norm() == 0.0 {
            return Ok((z, 0.0));
        }
        let fp = (f(z + h)? - f(z - h)?) / (2.0 * h);
        if fp.norm() == 0.0 || !fp.is_finite() {
            return Err(Error::RootSearch(format!("vanishing derivative near {z}")));
        }
        let step = fz / fp;
        z -= step;
        if !z.is_finite() {
            return Err(Error::RootSearch("Newton iterate left the finite plane".into()));
        }
        if step.norm() <= tol * z.norm() {
            return Ok((z, step.norm()));
        }
    }
    Err(Error::RootSearch(format!("Newton did not converge from {z0}")))
}
