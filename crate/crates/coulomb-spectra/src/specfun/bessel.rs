//! Integer-order Bessel functions `J_ν`, `Y_ν` (ν = 0..3) on the positive reals.
//!
//! Below [`ASYMPTOTIC_SWITCH`] the `J_ν` come from Miller's backward recurrence
//! normalised by `J₀ + 2ΣJ_{2k} = 1`, and `Y₀`, `Y₁` from their Neumann series in
//! the same `J_k`. Above it the Hankel asymptotic expansion is summed to its
//! smallest term. Higher orders follow from the (forward-stable for `Y`, and for
//! `J` when `x > ν`) three-term recurrence.

use crate::error::{Error, Result};
use std::f64::consts::{FRAC_2_PI, PI};

/// Euler–Mascheroni constant.
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Switch point between the series/recurrence branch and the Hankel expansion.
///
/// The smallest Hankel term is about `e^{−2x}`, so `x = 25` leaves it near
/// `10^{−22}`; lower switch points cannot deliver 12 significant digits.
pub const ASYMPTOTIC_SWITCH: f64 = 25.0;

/// Highest supported order.
pub const MAX_ORDER: u32 = 3;

/// `J_ν(x)` and `Y_ν(x)` for all orders `0..=3` at once.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselTable {
    /// `J_0 … J_3`.
    pub j: [f64; 4],
    /// `Y_0 … Y_3`.
    pub y: [f64; 4],
}

/// Returns `(J_ν(x), Y_ν(x))`.
///
/// Errors: [`Error::Domain`] for `x ≤ 0` (where `Y_ν` is singular) and
/// [`Error::Argument`] for orders above 3.
pub fn bessel_jy(nu: u32, x: f64) -> Result<(f64, f64)> {
    if nu > MAX_ORDER {
        return Err(Error::Argument(format!("Bessel order {nu} not supported (0..=3)")));
    }
    let t = bessel_table(x)?;
    Ok((t.j[nu as usize], t.y[nu as usize]))
}

/// Evaluates every supported order at `x`.
pub fn bessel_table(x: f64) -> Result<BesselTable> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("Bessel functions need x > 0, got {x}")));
    }
    let mut j = [0.0; 4];
    let mut y = [0.0; 4];
    if x < ASYMPTOTIC_SWITCH {
        let (jm, y0, y1) = series_branch(x);
        j.copy_from_slice(&jm[..4]);
        y[0] = y0;
        y[1] = y1;
    } else {
        let (j0, j1, y0, y1) = low_orders_hankel(x);
        j[0] = j0;
        j[1] = j1;
        y[0] = y0;
        y[1] = y1;
        for n in 1..3 {
            j[n + 1] = 2.0 * n as f64 / x * j[n] - j[n - 1];
        }
    }
    for n in 1..3 {
        y[n + 1] = 2.0 * n as f64 / x * y[n] - y[n - 1];
    }
    Ok(BesselTable { j, y })
}

/// `J₀(x)J₁(x) + Y₀(x)Y₁(x)`, evaluated without cancellation for large `x`.
///
/// For large `x` the two products nearly cancel (the sum decays like
/// `1/(πx²)`); the Hankel form `(2/πx)(P₀Q₁ − Q₀P₁)` avoids that.
pub fn bessel_cross_01(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("Bessel functions need x > 0, got {x}")));
    }
    if x < ASYMPTOTIC_SWITCH {
        let (j0, j1, y0, y1) = low_orders_series(x);
        Ok(j0 * j1 + y0 * y1)
    } else {
        let (p0, q0) = hankel_pq(0, x);
        let (p1, q1) = hankel_pq(1, x);
        Ok(2.0 / (PI * x) * (p0 * q1 - q0 * p1))
    }
}

/// Backward-recurrence values `J_0 … J_M(x)` (normalised), with `M` large.
fn miller(x: f64) -> Vec<f64> {
    let start = 2 * (((x + 10.0 * x.cbrt() + 25.0) / 2.0).ceil() as usize);
    let mut vals = vec![0.0; start + 2];
    vals[start] = 1e-30;
    for k in (1..=start).rev() {
        vals[k - 1] = 2.0 * k as f64 / x * vals[k] - vals[k + 1];
        if vals[k - 1].abs() > 1e250 {
            for v in vals.iter_mut().skip(k - 1) {
                *v *= 1e-250;
            }
        }
    }
    let norm: f64 = vals[0] + 2.0 * vals.iter().skip(2).step_by(2).sum::<f64>();
    for v in vals.iter_mut() {
        *v /= norm;
    }
    vals
}

/// `(J₀, J₁, Y₀, Y₁)` from Miller values and the Neumann series for `Y`.
fn low_orders_series(x: f64) -> (f64, f64, f64, f64) {
    let (j, y0, y1) = series_branch(x);
    (j[0], j[1], y0, y1)
}

/// Miller values `J_k` together with `Y₀`, `Y₁` from their Neumann series.
fn series_branch(x: f64) -> (Vec<f64>, f64, f64) {
    let j = miller(x);
    let log_term = (x / 2.0).ln() + EULER_GAMMA;
    let mut sum0 = 0.0;
    let mut sum1 = 0.0;
    let mut k = 1;
    while 2 * k + 1 < j.len() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum0 += sign * j[2 * k] / k as f64;
        sum1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / k as f64;
        k += 1;
    }
    let y0 = FRAC_2_PI * log_term * j[0] - 2.0 * FRAC_2_PI * sum0;
    let y1 = FRAC_2_PI * (log_term * j[1] - j[0] / x) + FRAC_2_PI * sum1;
    (j, y0, y1)
}

/// Hankel amplitude functions `P(ν, x)`, `Q(ν, x)` summed to the smallest term.
fn hankel_pq(nu: u32, x: f64) -> (f64, f64) {
    let mu = 4.0 * (nu * nu) as f64;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        if term.abs() >= prev || term.abs() < 1e-18 {
            break;
        }
        prev = term.abs();
        // Terms alternate in pairs: P collects even k, Q odd k.
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * term;
        } else {
            q += sign * term;
        }
    }
    (p, q)
}

/// `(J₀, J₁, Y₀, Y₁)` from the Hankel expansion.
fn low_orders_hankel(x: f64) -> (f64, f64, f64, f64) {
    let amp = (2.0 / (PI * x)).sqrt();
    let (p0, q0) = hankel_pq(0, x);
    let (p1, q1) = hankel_pq(1, x);
    let (s, c) = x.sin_cos();
    // χ₀ = x − π/4, χ₁ = x − 3π/4.
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let (s0, c0) = (r * (s - c), r * (c + s));
    let (s1, c1) = (-r * (s + c), r * (s - c));
    let j0 = amp * (p0 * c0 - q0 * s0);
    let y0 = amp * (p0 * s0 + q0 * c0);
    let j1 = amp * (p1 * c1 - q1 * s1);
    let y1 = amp * (p1 * s1 + q1 * c1);
    (j0, j1, y0, y1)
}
