//! Ascending-series Bessel functions of orders 0 and 1, written independently
//! of the library's evaluators for cross-checks at moderate arguments.

#![allow(dead_code)]

use std::f64::consts::PI;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const TERMS: usize = 80;

/// `(J_0(x), J_1(x), Y_0(x), Y_1(x))` for `0 < x ≲ 10`.
pub fn j0_j1_y0_y1(x: f64) -> (f64, f64, f64, f64) {
    let h = x / 2.0;
    let q = -h * h;
    let log_term = h.ln() + EULER_GAMMA;
    // term_k = (−h²)^k/(k!)², harmonic H_k.
    let (mut t0, mut j0, mut y0_sum, mut harmonic) = (1.0, 1.0, 0.0, 0.0);
    // u_k = (−1)^k h^{2k+1}/(k!(k+1)!).
    let (mut u, mut j1) = (h, h);
    let mut y1_sum = u * (2.0 * (-EULER_GAMMA) + 1.0);
    for k in 1..TERMS {
        let kf = k as f64;
        t0 *= q / (kf * kf);
        harmonic += 1.0 / kf;
        j0 += t0;
        y0_sum -= harmonic * t0;
        u *= q / (kf * (kf + 1.0));
        j1 += u;
        // ψ(k+1) + ψ(k+2) = −2γ_E + 2H_k + 1/(k+1).
        y1_sum += u * (-2.0 * EULER_GAMMA + 2.0 * harmonic + 1.0 / (kf + 1.0));
    }
    let y0 = 2.0 / PI * (log_term * j0 + y0_sum);
    let y1 = -2.0 / (PI * x) + 2.0 / PI * h.ln() * j1 - y1_sum / PI;
    (j0, j1, y0, y1)
}
