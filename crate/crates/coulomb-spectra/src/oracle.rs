//! Ground truth that does not rely on any special-function identity:
//! direct integration of `−g'' − γ/(1+x) g = μ g` and a finite-difference
//! matrix eigensolver.
//!
//! # ODE integration
//!
//! With `S = 1 + x` the equation is `g'' = −(γ/S + μ) g`, analytic in `S`
//! except at `S = 0`. The decaying (Jost) solution behaves like
//! `S^{a} e^{−kS}` with `k = √−μ` (principal branch) and `a = γ/(2k)`. It is
//! seeded from its asymptotic series at `S = R e^{−i arg k}` — on that ray `kS`
//! is real and positive, so the wanted solution grows monotonically as the
//! integration proceeds inward while the unwanted one decays: the inward
//! integration is stable for every `μ ∉ [0, ∞)`. The path then follows the ray
//! down to `|S| = 1` and the unit circle back to `S = 1` (`x = 0`).
//!
//! Each step is a Taylor expansion of the solution about the current point,
//! generated by the recurrence obtained from `S g'' + (γ + μS) g = 0` and
//! summed until the terms fall below the requested tolerance. Values are kept
//! normalised with a separate logarithmic scale.
//!
//! The seed is the full Jost normalisation `γ S e^{−kS} U(1−a, 2, 2kS)` (with
//! `U` from its asymptotic series), so the result is the Jost boundary data
//! itself up to the seed truncation error, which is reported.
//!
//! # Shooting
//!
//! For `μ = −λ < 0` the path is the real axis and the Prüfer angle
//! `ϑ = atan2(k g, g')` is tracked continuously. `Φ(λ) = ϑ(x = 0)` is
//! increasing in `λ`; the Dirichlet eigenvalues are where `Φ = −(n−1)π` and the
//! Neumann eigenvalues where `Φ = π/2 − (n−1)π` (`n = 1` is the largest `λ`).
//! This indexes eigenvalues by node counting, independently of any asymptotic
//! formula.
//!
//! # Finite differences
//!
//! The second-order central-difference discretisation of the half-line
//! operator (ghost point for the Neumann condition, symmetrised) gives a
//! symmetric tridiagonal matrix whose lowest eigenvalues are found by
//! bisection on Sturm counts and Richardson-extrapolated over two grids.

use crate::error::{Error, Result};
use crate::par;
use crate::roots::{brent, Tolerance};
use crate::sa_spectrum::{BoundaryCondition, HalfLineProblem};
use crate::specfun::Scaled;
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

/// Settings of [`integrate_schrodinger`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationConfig {
    /// Truncation point `x_max` (the seed sits at `|S| = 1 + x_max`); `None`
    /// chooses the smallest radius at which the seed series reaches
    /// `tolerance`.
    pub x_max: Option<f64>,
    /// Relative truncation tolerance of the Taylor steps and the seed series.
    pub tolerance: f64,
    /// Maximum number of terms of the asymptotic seed series (`1` gives the
    /// one-term Jost asymptotics).
    pub far_field_order: usize,
    /// Factor multiplying the seed (the problem is linear).
    pub seed_factor: Complex64,
}

impl Default for IntegrationConfig {
    fn default() -> Self {
        IntegrationConfig { x_max: None, tolerance: 1e-15, far_field_order: 80, seed_factor: Complex64::new(1.0, 0.0) }
    }
}

impl IntegrationConfig {
    /// Default settings with a fixed truncation point.
    pub fn with_x_max(x_max: f64) -> Self {
        IntegrationConfig { x_max: Some(x_max), ..IntegrationConfig::default() }
    }
}

/// Boundary data `(g(0), g'(0))` of the decaying solution, sharing one scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryData {
    /// Mantissa of `g(0)`.
    pub g0: Complex64,
    /// Mantissa of `g'(0)`.
    pub g0_prime: Complex64,
    /// Common natural-log scale.
    pub log_scale: f64,
    /// Truncation point actually used.
    pub x_max: f64,
    /// Magnitude of the last seed-series term relative to the sum.
    pub seed_error: f64,
    /// Continuous Prüfer angle `atan2(k g, g')` at `x = 0` (real `μ < 0` only).
    pub prufer: Option<f64>,
}

impl BoundaryData {
    /// `g(0)` as a scaled number.
    pub fn value(&self) -> Scaled {
        Scaled { mant: self.g0, log_scale: self.log_scale }
    }

    /// `g'(0)` as a scaled number.
    pub fn derivative(&self) -> Scaled {
        Scaled { mant: self.g0_prime, log_scale: self.log_scale }
    }

    /// Logarithmic derivative `g'(0)/g(0)` (independent of normalisation).
    pub fn log_derivative(&self) -> Complex64 {
        self.g0_prime / self.g0
    }
}

/// Maximum number of Taylor terms per step.
const MAX_TERMS: usize = 400;
/// Step limits: fraction of the distance to the singular point `S = 0`, and
/// bounds on `|k h|` and `|h|·√(γ/|S|)`.
const RADIUS_FRACTION: f64 = 0.4;
const MAX_KH: f64 = 2.0;
const MAX_LOCAL_PHASE: f64 = 1.0;
/// Largest seed radius tried by the automatic truncation rule.
const MAX_SEED_RADIUS: f64 = 1e12;

/// Integrates the decaying solution inward and returns its boundary data at
/// `x = 0`.
///
/// Requires `μ ∉ [0, ∞)` (so that `Re √−μ > 0`).
pub fn integrate_schrodinger(mu: Complex64, gamma: f64, config: &IntegrationConfig) -> Result<BoundaryData> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Error::Domain(format!("coupling must be positive, got {gamma}")));
    }
    if !(mu.re.is_finite() && mu.im.is_finite()) {
        return Err(Error::Domain("non-finite spectral parameter".into()));
    }
    if mu.im == 0.0 && mu.re >= 0.0 {
        return Err(Error::Branch(format!("no decaying solution for μ = {} on [0, ∞)", mu.re)));
    }
    if !(config.tolerance > 0.0) || config.far_field_order == 0 {
        return Err(Error::Argument("tolerance and far-field order must be positive".into()));
    }
    let k = (-mu).sqrt();
    let a = gamma / (2.0 * k);
    let phi = k.arg();
    let dir = Complex64::from_polar(1.0, -phi);
    let real_path = mu.im == 0.0;

    let (radius, seed) = match config.x_max {
        Some(x) if x > 0.0 => (1.0 + x, seed_series(gamma, k, a, (1.0 + x) * dir, config)),
        Some(x) => return Err(Error::Argument(format!("x_max must be positive, got {x}"))),
        None => auto_seed(gamma, k, a, dir, config)?,
    };

    let mut state = State {
        s: radius * dir,
        g: seed.value * config.seed_factor,
        gp: seed.value * config.seed_factor * seed.log_derivative,
        log_scale: seed.log_scale,
        prufer: None,
    };
    state.normalise();
    if real_path {
        state.prufer = Some(prufer_angle(k.re, state.g.re, state.gp.re, None));
    }

    // Inward along the ray.
    let mut rho = radius;
    while rho > 1.0 {
        let mut dr = (RADIUS_FRACTION * rho).min(MAX_KH / k.norm()).min(MAX_LOCAL_PHASE * (rho / gamma).sqrt());
        if real_path {
            // Keep the Prüfer angle change per step below one radian.
            let lambda = -mu.re;
            let s_min = (1.0 - RADIUS_FRACTION) * rho;
            let rate = k.re.max((gamma / s_min + lambda) / k.re);
            dr = dr.min(1.0 / rate);
        }
        let dr = dr.min(rho - 1.0);
        state.step(-dr * dir, gamma, mu, config.tolerance)?;
        rho -= dr;
        if rho - 1.0 < 1e-14 {
            rho = 1.0;
        }
    }
    // Along the unit circle to S = 1.
    if phi != 0.0 {
        let n = (phi.abs() / 0.25).ceil().max(1.0) as usize;
        for j in 1..=n {
            let target = Complex64::from_polar(1.0, -phi * (1.0 - j as f64 / n as f64));
            let h = if j == n { Complex64::new(1.0, 0.0) - state.s } else { target - state.s };
            state.step(h, gamma, mu, config.tolerance)?;
        }
    }
    Ok(BoundaryData {
        g0: state.g,
        g0_prime: state.gp,
        log_scale: state.log_scale,
        x_max: radius - 1.0,
        seed_error: seed.error,
        prufer: state.prufer,
    })
}

struct Seed {
    value: Complex64,
    log_derivative: Complex64,
    log_scale: f64,
    error: f64,
}

/// Jost solution `γ S e^{−kS} U(1−a, 2, 2kS)` at `S` from the asymptotic series
/// of `U`, truncated at its smallest term.
fn seed_series(gamma: f64, k: Complex64, a: Complex64, s: Complex64, config: &IntegrationConfig) -> Seed {
    let w = 2.0 * k * s;
    let alpha = 1.0 - a;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut dsum = Complex64::new(0.0, 0.0); // Σ (−j) T_j, so that dΣ/dS = dsum/S
    let mut last = 1.0_f64;
    for j in 0..config.far_field_order.saturating_sub(1) {
        let jf = j as f64;
        let next = term * (alpha + jf) * (alpha - 1.0 + jf) / ((jf + 1.0) * -w);
        if next.norm() > term.norm() {
            break;
        }
        term = next;
        sum += term;
        dsum -= (jf + 1.0) * term;
        last = term.norm();
        if last <= config.tolerance * sum.norm() {
            break;
        }
    }
    let ln_phi = gamma.ln() + s.ln() - k * s + (a - 1.0) * w.ln() + sum.ln();
    let log_derivative = (1.0 + (a - 1.0) + dsum / sum) / s - k;
    Seed {
        value: Complex64::from_polar(1.0, ln_phi.im),
        log_derivative,
        log_scale: ln_phi.re,
        error: last / sum.norm(),
    }
}

fn auto_seed(gamma: f64, k: Complex64, a: Complex64, dir: Complex64, config: &IntegrationConfig) -> Result<(f64, Seed)> {
    // |2kS| must comfortably exceed |a|² for the series to reach full accuracy.
    let mut radius = (30.0 / k.norm()).max(a.norm_sqr() / k.norm()).max(10.0);
    while radius <= MAX_SEED_RADIUS {
        let seed = seed_series(gamma, k, a, radius * dir, config);
        if seed.error <= config.tolerance * 10.0 {
            return Ok((radius, seed));
        }
        radius *= 2.0;
    }
    Err(Error::Accuracy { what: "far-field seed series did not converge".into(), achieved: f64::NAN })
}

struct State {
    s: Complex64,
    g: Complex64,
    gp: Complex64,
    log_scale: f64,
    prufer: Option<f64>,
}

impl State {
    fn normalise(&mut self) {
        let n = self.g.norm().max(self.gp.norm());
        if n > 0.0 && n.is_finite() {
            self.g /= n;
            self.gp /= n;
            self.log_scale += n.ln();
        }
    }

    /// Advances by `h` with a Taylor expansion about the current point.
    fn step(&mut self, h: Complex64, gamma: f64, mu: Complex64, tol: f64) -> Result<()> {
        let s0 = self.s;
        let p = gamma + mu * s0;
        // d_n = c_n hⁿ with c_{n+2} = −[(n+1)n c_{n+1} + (γ+μS₀)c_n + μ c_{n−1}] / (S₀(n+2)(n+1)).
        let (h2, h3) = (h * h, h * h * h);
        let mut prev = Complex64::new(0.0, 0.0);
        let mut d0 = self.g;
        let mut d1 = self.gp * h;
        let mut g = d0 + d1;
        let mut gp_h = d1;
        let mut converged = false;
        for n in 0..MAX_TERMS {
            let nf = n as f64;
            let d2 = -((nf + 1.0) * nf * d1 * h + p * h2 * d0 + mu * h3 * prev) / (s0 * (nf + 2.0) * (nf + 1.0));
            g += d2;
            gp_h += (nf + 2.0) * d2;
            if n >= 2 && d1.norm() + d2.norm() <= tol * g.norm().max(gp_h.norm()) {
                converged = true;
                break;
            }
            prev = d0;
            d0 = d1;
            d1 = d2;
        }
        if !converged || !g.is_finite() || !gp_h.is_finite() {
            return Err(Error::Accuracy { what: format!("Taylor step at S = {s0}"), achieved: f64::NAN });
        }
        self.s = s0 + h;
        self.g = g;
        self.gp = gp_h / h;
        if let Some(old) = self.prufer {
            let k = (-mu.re).sqrt();
            self.prufer = Some(prufer_angle(k, self.g.re, self.gp.re, Some(old)));
        }
        self.normalise();
        Ok(())
    }
}

/// `atan2(k g, g')` on the branch closest to `previous`.
fn prufer_angle(k: f64, g: f64, gp: f64, previous: Option<f64>) -> f64 {
    let raw = (k * g).atan2(gp);
    match previous {
        None => raw,
        Some(p) => raw + 2.0 * PI * ((p - raw) / (2.0 * PI)).round(),
    }
}

/// `Φ(λ)`: continuous Prüfer angle at `x = 0` for `μ = −λ`.
pub fn prufer_at_zero(lambda: f64, gamma: f64, config: &IntegrationConfig) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("λ must be positive, got {lambda}")));
    }
    let data = integrate_schrodinger(Complex64::new(-lambda, 0.0), gamma, config)?;
    data.prufer.ok_or_else(|| Error::Branch("Prüfer angle needs a real path".into()))
}

fn prufer_target(bc: BoundaryCondition, n: usize) -> f64 {
    let base = -((n - 1) as f64) * PI;
    match bc {
        BoundaryCondition::Dirichlet => base,
        BoundaryCondition::Neumann => base + FRAC_PI_2,
    }
}

/// Refines the single eigenvalue `λ` of the half-line problem inside `bracket`.
///
/// The bracket must contain exactly one crossing of the boundary functional
/// (the Prüfer angle at `x = 0` passing a Dirichlet or Neumann level).
pub fn shoot_eigenvalue(problem: &HalfLineProblem, bracket: (f64, f64)) -> Result<f64> {
    let (lo, hi) = (bracket.0.min(bracket.1), bracket.0.max(bracket.1));
    if !(lo > 0.0) {
        return Err(Error::Domain(format!("bracket must lie in λ > 0, got [{lo}, {hi}]")));
    }
    let config = config_for(problem.gamma, lo);
    let phi_lo = prufer_at_zero(lo, problem.gamma, &config)?;
    let phi_hi = prufer_at_zero(hi, problem.gamma, &config)?;
    let offset = match problem.bc {
        BoundaryCondition::Dirichlet => 0.0,
        BoundaryCondition::Neumann => FRAC_PI_2,
    };
    // Levels offset + mπ strictly inside (Φ(lo), Φ(hi)].
    let first = ((phi_lo - offset) / PI).floor() as i64 + 1;
    let last = ((phi_hi - offset) / PI).floor() as i64;
    if last < first {
        return Err(Error::RootSearch(format!("no eigenvalue in [{lo}, {hi}]")));
    }
    if last > first {
        return Err(Error::RootSearch(format!("{} eigenvalues in [{lo}, {hi}]", last - first + 1)));
    }
    let level = offset + PI * first as f64;
    refine(problem.gamma, &config, lo, hi, phi_lo - level, phi_hi - level, level)
}

/// The `n`-th eigenvalue `λ_n` (`n = 1` largest) located by node counting.
pub fn shoot_index(problem: &HalfLineProblem, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Argument("eigenvalue indices start at 1".into()));
    }
    let gamma = problem.gamma;
    let level = prufer_target(problem.bc, n);
    // λ < γ (the potential is bounded below by −γ).
    let hi = gamma;
    let mut lo = gamma * gamma / (8.0 * ((n + 1) * (n + 1)) as f64);
    let mut config = config_for(gamma, lo);
    let phi_hi = prufer_at_zero(hi, gamma, &config)?;
    if phi_hi <= level {
        return Err(Error::Indexing(n));
    }
    let mut phi_lo = prufer_at_zero(lo, gamma, &config)?;
    let mut tries = 0;
    while phi_lo > level {
        lo *= 0.5;
        config = config_for(gamma, lo);
        phi_lo = prufer_at_zero(lo, gamma, &config)?;
        tries += 1;
        if tries > 60 {
            return Err(Error::Indexing(n));
        }
    }
    refine(gamma, &config, lo, hi, phi_lo - level, phi_hi - level, level)
}

fn refine(gamma: f64, config: &IntegrationConfig, lo: f64, hi: f64, f_lo: f64, f_hi: f64, level: f64) -> Result<f64> {
    brent(
        |lambda| Ok(prufer_at_zero(lambda, gamma, config)? - level),
        lo,
        hi,
        f_lo,
        f_hi,
        Tolerance::relative(1e-13),
    )
}

/// Fixed truncation point for all `λ ≥ lambda_min` so that `Φ` is one smooth
/// function across a bracket.
fn config_for(gamma: f64, lambda_min: f64) -> IntegrationConfig {
    let k = lambda_min.sqrt();
    let a = gamma / (2.0 * k);
    let base = IntegrationConfig::default();
    let mut radius = (30.0 / k).max(a * a / k).max(10.0);
    while radius < MAX_SEED_RADIUS {
        let seed = seed_series(gamma, Complex64::new(k, 0.0), Complex64::new(a, 0.0), Complex64::new(radius, 0.0), &base);
        if seed.error <= base.tolerance * 10.0 {
            break;
        }
        radius *= 2.0;
    }
    IntegrationConfig { x_max: Some(radius - 1.0), ..base }
}

/// Settings of the finite-difference oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdConfig {
    /// Truncation point of the half line.
    pub x_max: f64,
    /// Number of grid points of the coarse grid.
    pub points: usize,
    /// Largest relative eigenvalue change tolerated when the domain grows by 25%.
    pub truncation_tolerance: f64,
}

/// Minimum number of grid points accepted.
pub const MIN_FD_POINTS: usize = 2000;

impl FdConfig {
    /// Domain and grid adequate for the first `n_max` eigenvalues.
    ///
    /// The domain covers the classically allowed region `x ≲ 4n²/γ` with a
    /// margin for the exponential tail; the step resolves the potential well
    /// at the origin.
    pub fn for_indices(gamma: f64, n_max: usize) -> Self {
        let n = n_max.max(1) as f64;
        let x_max = 1.5 * 4.0 * n * n / gamma + 60.0 * n / gamma + 20.0;
        let h = (0.02_f64).min(0.05 / gamma.sqrt());
        let points = ((x_max / h).ceil() as usize).max(MIN_FD_POINTS);
        FdConfig { x_max, points, truncation_tolerance: 1e-7 }
    }
}

/// Symmetric tridiagonal matrix: diagonal and off-diagonal.
struct Tridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl Tridiagonal {
    fn half_line(problem: &HalfLineProblem, x_max: f64, points: usize) -> Self {
        let h = x_max / (points + 1) as f64;
        let inv_h2 = 1.0 / (h * h);
        let gamma = problem.gamma;
        match problem.bc {
            BoundaryCondition::Dirichlet => {
                let diag = (1..=points).map(|i| 2.0 * inv_h2 - gamma / (1.0 + i as f64 * h)).collect();
                let off = vec![-inv_h2; points - 1];
                Tridiagonal { diag, off }
            }
            BoundaryCondition::Neumann => {
                // Unknowns at x = 0..points·h; ghost point g(−h) = g(h); the
                // first row is symmetrised by a diagonal similarity.
                let diag = (0..=points).map(|i| 2.0 * inv_h2 - gamma / (1.0 + i as f64 * h)).collect();
                let mut off = vec![-inv_h2; points];
                off[0] = -std::f64::consts::SQRT_2 * inv_h2;
                Tridiagonal { diag, off }
            }
        }
    }

    /// Number of eigenvalues strictly below `x` (Sturm sequence count).
    fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut d = 1.0;
        for (i, &a) in self.diag.iter().enumerate() {
            let e2 = if i == 0 { 0.0 } else { self.off[i - 1] * self.off[i - 1] };
            d = a - x - if i == 0 { 0.0 } else { e2 / d };
            if d == 0.0 {
                d = -f64::EPSILON * (a.abs() + x.abs()).max(f64::MIN_POSITIVE);
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `j`-th smallest eigenvalue (0-based), by bisection on `[lo, hi]`.
    fn eigenvalue(&self, j: usize, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if self.count_below(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-15 * hi.abs().max(lo.abs()) {
                break;
            }
        }
        0.5 * (lo + hi)
    }
}

fn fd_lowest(problem: &HalfLineProblem, x_max: f64, points: usize, count: usize) -> Vec<f64> {
    let m = Tridiagonal::half_line(problem, x_max, points);
    let available = m.count_below(0.0).min(count);
    let lower = -problem.gamma - 4.0;
    par::map_range(available, |j| m.eigenvalue(j, lower, 0.0))
}

/// The lowest `count` negative eigenvalues `−λ_1 < −λ_2 < …` of the
/// discretised half-line operator, Richardson-extrapolated over the grids
/// with `points` and `2·points + 1` interior points.
///
/// Fails with a discretisation error when enlarging the domain by 25% moves
/// an eigenvalue by more than `truncation_tolerance` (relative).
pub fn fd_matrix_eigs(problem: &HalfLineProblem, config: &FdConfig, count: usize) -> Result<Vec<f64>> {
    problem.validate()?;
    if config.points < MIN_FD_POINTS {
        return Err(Error::Argument(format!("at least {MIN_FD_POINTS} grid points are required")));
    }
    if !(config.x_max > 0.0 && config.x_max.is_finite()) {
        return Err(Error::Argument(format!("x_max must be positive, got {}", config.x_max)));
    }
    let coarse = fd_lowest(problem, config.x_max, config.points, count);
    let fine = fd_lowest(problem, config.x_max, 2 * config.points + 1, count);
    let extended_points = ((config.points + 1) as f64 * 1.25).round() as usize - 1;
    let extended = fd_lowest(problem, config.x_max * (extended_points + 1) as f64 / (config.points + 1) as f64, extended_points, count);
    let n = coarse.len().min(fine.len());
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        if let Some(&e) = extended.get(j) {
            let change = ((e - coarse[j]) / coarse[j]).abs();
            if change > config.truncation_tolerance {
                return Err(Error::Discretisation(format!(
                    "eigenvalue {} moves by {change:.2e} (relative) when x_max grows by 25%",
                    j + 1
                )));
            }
        }
        out.push((4.0 * fine[j] - coarse[j]) / 3.0);
    }
    Ok(out)
}

/// The lowest `count` negative eigenvalues on a single grid of `points`
/// interior points over `[0, x_max]`, without extrapolation; the error is
/// second order in the step `x_max/(points + 1)`.
pub fn fd_grid_eigs(problem: &HalfLineProblem, x_max: f64, points: usize, count: usize) -> Result<Vec<f64>> {
    problem.validate()?;
    if points < 2 || !(x_max > 0.0 && x_max.is_finite()) {
        return Err(Error::Argument(format!("invalid grid: {points} points on [0, {x_max}]")));
    }
    Ok(fd_lowest(problem, x_max, points, count))
}

/// Number of eigenvalues of the discretised operator below `energy` (coarse
/// grid, no extrapolation).
pub fn fd_count_below(problem: &HalfLineProblem, config: &FdConfig, energy: f64) -> Result<usize> {
    problem.validate()?;
    Ok(Tridiagonal::half_line(problem, config.x_max, config.points).count_below(energy))
}
