//! Oracle-grade Kummer `U(a, b, z)` from its Laplace integral representation.
//!
//! For `Re a > 0`,
//! `U(a,b,z) = Γ(a)⁻¹ ∫₀^∞ e^{−zt} t^{a−1} (1+t)^{b−a−1} dt`.
//! Parameters with `Re a < 1` are first shifted to `a + m` (`Re(a+m) ∈ [1, 2)`)
//! and brought back with the three-term contiguous relation in `a`, run in the
//! decreasing-`a` direction, which is the stable one for `U`.
//!
//! The integral is taken along a contour `t = e^{u + iθ(u)}`, `u ∈ ℝ`, that
//! leaves the origin towards the saddle point of the integrand and then turns
//! to the direction `θ = −arg z` of fastest decay. A straight ray along
//! `−arg z` is adequate for moderate parameters but loses about
//! `π|Im a|/(2 ln 10)` digits to cancellation, which is fatal for the Jost
//! functions close to the positive real `μ` axis. The trapezoidal rule in `u`
//! converges geometrically for this analytic integrand; the step is halved
//! until four companion integrals (giving `U` at `(a, b)`, `(a, b+1)`,
//! `(a+1, b)`, `(a+1, b+1)`) have all settled.

use super::gamma::gamma_ln;
use super::scaled::Scaled;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

/// Maximum number of contiguous-relation steps accepted.
///
/// Large-parameter checks of the uniform expansion reach `a ≈ 320`.
pub const MAX_SHIFT: usize = 1000;

/// Relative tolerance for the trapezoidal sums.
const QUAD_TOL: f64 = 1e-13;
/// Looser tolerance accepted once the finest step is reached.
const QUAD_ACCEPT: f64 = 1e-11;
/// Angular clearance from the edge of the convergence sector.
const SECTOR_CLEARANCE: f64 = 0.05;
/// Angular clearance from the cut of `(1+t)^{b−a−1}` along `t ≤ −1`.
const CUT_CLEARANCE: f64 = 0.1;
/// Candidate positions of the turn, in `ln|t|` relative to the saddle.
const TURN_OFFSETS: [f64; 3] = [0.5, 1.5, 3.0];
/// Width (in `u`) of the smooth turn from the saddle direction to `−arg z`.
const TURN_WIDTH: f64 = 0.5;
/// Integrand magnitudes this far (in natural log) below the peak are dropped.
const LOG_CUTOFF: f64 = 50.0;
/// Finest step tried before giving up.
const MIN_STEP: f64 = 0.25 / 2048.0;

/// `U(a, b, z)` and `U(a, b+1, z)` sharing one scale factor `e^{log_scale}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerPair {
    /// Mantissa of `U(a, b, z)`.
    pub u_b: Complex64,
    /// Mantissa of `U(a, b+1, z)`.
    pub u_b1: Complex64,
    /// Common natural-log scale.
    pub log_scale: f64,
}

impl KummerPair {
    /// `U(a, b, z)` as a [`Scaled`] value.
    pub fn first(&self) -> Scaled {
        Scaled { mant: self.u_b, log_scale: self.log_scale }
    }

    /// `U(a, b+1, z)` as a [`Scaled`] value.
    pub fn second(&self) -> Scaled {
        Scaled { mant: self.u_b1, log_scale: self.log_scale }
    }

    /// `∂U(a, b, z)/∂z = U(a,b,z) − U(a,b+1,z)` as a [`Scaled`] value.
    pub fn z_derivative(&self) -> Scaled {
        Scaled { mant: self.u_b - self.u_b1, log_scale: self.log_scale }
    }
}

/// `U(a, b, z)` by the Laplace integral (with contiguous shifts for `Re a < 1`).
///
/// Requires `z ≠ 0` and `Re z ≥ 0` (the closed right half-plane; the contour
/// rotation continues the integral analytically onto the imaginary axis).
pub fn kummer_u_integral(a: Complex64, b: i32, z: Complex64) -> Result<Scaled> {
    Ok(kummer_u_pair(a, b, z)?.first())
}

/// `U(a, b, z)` together with `U(a, b+1, z)`.
pub fn kummer_u_pair(a: Complex64, b: i32, z: Complex64) -> Result<KummerPair> {
    check_arguments(a, z)?;
    let shift = if a.re < 1.0 { (1.0 - a.re).ceil() as usize } else { 0 };
    if shift > MAX_SHIFT {
        return Err(Error::Regime(format!(
            "U(a, b, z) with Re a = {} needs {shift} contiguous steps (limit {MAX_SHIFT})",
            a.re
        )));
    }
    let a0 = a + shift as f64;
    let base = laplace_integrals(a0, b as f64, z)?;
    let lg = gamma_ln(a0)?;
    let phase = Complex64::from_polar(1.0, -lg.im);
    let mut log_scale = base.log_scale - lg.re;
    // State: [U(a,b), U(a+1,b), U(a,b+1), U(a+1,b+1)] at the current a.
    let mut v = [base.sums[0] * phase, base.sums[2] * phase / a0, base.sums[1] * phase, base.sums[3] * phase / a0];
    let mut cur = a0;
    let bf = b as f64;
    for _ in 0..shift {
        let down = |u_a: Complex64, u_a1: Complex64, bb: f64| -(bb - 2.0 * cur - z) * u_a - cur * (cur - bb + 1.0) * u_a1;
        let nb = down(v[0], v[1], bf);
        let nb1 = down(v[2], v[3], bf + 1.0);
        v = [nb, v[0], nb1, v[2]];
        cur -= 1.0;
        let big = v.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
        if big > 1e200 {
            for c in v.iter_mut() {
                *c /= big;
            }
            log_scale += big.ln();
        }
    }
    Ok(KummerPair { u_b: v[0], u_b1: v[2], log_scale })
}

fn check_arguments(a: Complex64, z: Complex64) -> Result<()> {
    if !(a.re.is_finite() && a.im.is_finite() && z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain("non-finite Kummer argument".into()));
    }
    if z.norm() == 0.0 {
        return Err(Error::Domain("U(a, b, z) is evaluated here only for z ≠ 0".into()));
    }
    if z.re < 0.0 {
        return Err(Error::Domain(format!("U(a, b, z) integral needs Re z ≥ 0, got z = {z}")));
    }
    Ok(())
}

/// Integrals `∫ f`, `∫ f(1+t)`, `∫ f t/(1+t)`, `∫ f t` of
/// `f = e^{−zt} t^{a−1}(1+t)^{b−a−1}` divided by `e^{log_scale}`.
struct LaplaceSums {
    sums: [Complex64; 4],
    log_scale: f64,
}

/// The integration contour and log-integrand.
#[derive(Clone, Copy)]
struct Contour {
    a: Complex64,
    b: f64,
    z: Complex64,
    theta_start: f64,
    theta_end: f64,
    turn_at: f64,
}

impl Contour {
    /// Picks, among a few saddle-directed candidates, the contour whose
    /// integrand peak is lowest: the integral is fixed, so a lower peak means
    /// less cancellation.
    fn new(a: Complex64, b: f64, z: Complex64) -> (Self, (f64, f64, f64)) {
        let arg_z = z.arg().clamp(-FRAC_PI_2, FRAC_PI_2);
        let lo = -arg_z - FRAC_PI_2 + SECTOR_CLEARANCE;
        let hi = -arg_z + FRAC_PI_2 - SECTOR_CLEARANCE;
        // Saddle of a·ln t − z t + (b − a − 1)·ln(1+t): z t² + (z + 1 − b) t − a = 0.
        let bq = z + (1.0 - b);
        let disc = (bq * bq + 4.0 * z * a).sqrt();
        let r1 = (-bq + disc) / (2.0 * z);
        let r2 = (-bq - disc) / (2.0 * z);
        let saddle = if r1.re >= r2.re { r1 } else { r2 };
        let straight = Contour { a, b, z, theta_start: -arg_z, theta_end: -arg_z, turn_at: 0.0 };
        if !(saddle.norm() > 0.0 && saddle.norm().is_finite()) {
            return (straight, integration_range(&straight));
        }
        // Close to the origin only the cut of (1+t) along t ≤ −1 constrains the
        // direction, so the start may leave the sector of decay at infinity.
        let inside = saddle.arg().clamp(lo, hi);
        let free = saddle.arg().clamp(-PI + CUT_CLEARANCE, PI - CUT_CLEARANCE);
        let log_r = saddle.norm().ln();
        let mut best = (straight, integration_range(&straight));
        for theta_start in [inside, 0.5 * (inside + free), free] {
            for offset in TURN_OFFSETS {
                let c = Contour { theta_start, turn_at: log_r + offset, ..straight };
                let range = integration_range(&c);
                if range.2 < best.1 .2 {
                    best = (c, range);
                }
            }
        }
        best
    }

    /// Returns `(ln f(u)·jacobian, t(u))` including `dt = t·(1 + iθ') du`.
    fn log_integrand(&self, u: f64) -> (Complex64, Complex64) {
        let s = 1.0 / (1.0 + (-(u - self.turn_at) / TURN_WIDTH).exp());
        let span = self.theta_end - self.theta_start;
        let theta = self.theta_start + span * s;
        let dtheta = span * s * (1.0 - s) / TURN_WIDTH;
        let log_t = Complex64::new(u, theta);
        let t = log_t.exp();
        let jac = Complex64::new(1.0, dtheta);
        let val = self.a * log_t - self.z * t + (self.b - self.a - 1.0) * (1.0 + t).ln() + jac.ln();
        (val, t)
    }
}

fn laplace_integrals(a: Complex64, b: f64, z: Complex64) -> Result<LaplaceSums> {
    let (contour, (u_lo, u_hi, peak)) = Contour::new(a, b, z);
    let mut h = 0.25;
    let mut n = ((u_hi - u_lo) / h).ceil() as usize;
    let accumulate = |nodes: &mut dyn Iterator<Item = f64>| -> ([Complex64; 4], f64) {
        let mut acc = [Complex64::new(0.0, 0.0); 4];
        let mut abs_sum = 0.0;
        for u in nodes {
            let (lf, t) = contour.log_integrand(u);
            let f = (lf - peak).exp();
            let one_t = 1.0 + t;
            acc[0] += f;
            acc[1] += f * one_t;
            acc[2] += f * t / one_t;
            acc[3] += f * t;
            abs_sum += f.norm();
        }
        (acc, abs_sum)
    };
    let (raw, mut abs_sum) = accumulate(&mut (0..=n).map(|j| u_lo + j as f64 * h));
    let mut sums = raw.map(|s| s * h);
    loop {
        let half = h / 2.0;
        let (new_raw, new_abs) = accumulate(&mut (0..n).map(|j| u_lo + (2 * j + 1) as f64 * half));
        abs_sum += new_abs;
        let refined: [Complex64; 4] = std::array::from_fn(|i| sums[i] / 2.0 + new_raw[i] * half);
        // Rounding noise of the sum sets a floor below which changes are meaningless.
        let noise = 64.0 * f64::EPSILON * abs_sum * half;
        let converged = (0..4).all(|i| (refined[i] - sums[i]).norm() <= QUAD_TOL * refined[i].norm() + noise);
        let err = (0..4)
            .map(|i| (refined[i] - sums[i]).norm() / refined[i].norm())
            .fold(0.0_f64, f64::max);
        h = half;
        n *= 2;
        sums = refined;
        if converged {
            return Ok(LaplaceSums { sums, log_scale: peak });
        }
        if h < MIN_STEP {
            if err <= QUAD_ACCEPT {
                return Ok(LaplaceSums { sums, log_scale: peak });
            }
            return Err(Error::Accuracy { what: "Kummer U Laplace quadrature".into(), achieved: err });
        }
    }
}

/// Finds `[u_lo, u_hi]` outside which the integrand is below `peak − LOG_CUTOFF`.
fn integration_range(contour: &Contour) -> (f64, f64, f64) {
    const STEP: f64 = 0.5;
    const LIMIT: f64 = 400.0;
    let centre = contour.turn_at - 1.5;
    let mut peak = contour.log_integrand(centre).0.re;
    let mut hi = centre;
    while hi < centre + LIMIT {
        hi += STEP;
        let v = contour.log_integrand(hi).0.re;
        peak = peak.max(v);
        if v < peak - LOG_CUTOFF {
            break;
        }
    }
    let mut lo = centre;
    while lo > centre - LIMIT {
        lo -= STEP;
        let v = contour.log_integrand(lo).0.re;
        peak = peak.max(v);
        if v < peak - LOG_CUTOFF {
            break;
        }
    }
    (lo, hi, peak)
}
