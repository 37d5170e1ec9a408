//! Complex eigenvalues of the indefinite operator
//! `A_γ = sgn(x)·(−d²/dx² − γ/(1+|x|))` on the whole line.
//!
//! On each half line an eigenfunction is a multiple of the Jost solution
//! `φ_μ(γ, x) = γ(1+x) e^{−k(1+x)} U(1 − γ/(2k), 2, 2k(1+x))`, `k = √−μ`
//! (principal branch), with `μ` on the right and `−μ` on the left. Matching
//! value and slope at the origin shows that the eigenvalues are the zeros of
//! the determinant
//!
//! `M(μ) = φ'_μ(γ,0) φ_{−μ}(γ,0) + φ'_{−μ}(γ,0) φ_μ(γ,0)`,
//!
//! which has no zeros on the real axis. Near the origin the zeros accumulate
//! along `|Im μ| ≈ |Im Υ∓(γ)|·|Re μ|^{3/2}`, with
//! `μ_n ≈ λ_n^D + Υ⁻(γ)(λ_n^D)^{3/2} ≈ λ_{n+1}^N + Υ⁺(γ)(λ_{n+1}^N)^{3/2}`
//! (conjugated in the upper half plane), where `−λ_n^{D,N}` are the
//! half-line Dirichlet/Neumann eigenvalues indexed from the ground state and
//! `Υ∓(γ) = (4/(πγ)) arctan(1/(i ∓ 2q(γ)))`,
//! `q(γ) = π√γ (J_0 J_1 + Y_0 Y_1)(2√γ)`.

use crate::contour::{locate_zeros, LocatedZero, Rect, SearchConfig};
use crate::error::{Error, Result};
use crate::oracle::{integrate_schrodinger, IntegrationConfig};
use crate::par;
use crate::sa_spectrum::{solve_sa_spectrum, BoundaryCondition, HalfLineProblem, Method};
use crate::specfun::{bessel_table, kummer_u_pair, kummer_u_temme, Scaled};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Zeros closer than this to the real axis are not searched for (there are
/// none: real `μ` is never an eigenvalue).
pub const REAL_AXIS_CLEARANCE: f64 = 1e-8;

fn check_gamma(gamma: f64) -> Result<()> {
    if gamma > 0.0 && gamma.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("coupling must be positive and finite, got {gamma}")))
    }
}

/// `q(γ) = π√γ (J_0(2√γ)J_1(2√γ) + Y_0(2√γ)Y_1(2√γ))`.
pub fn q_of_gamma(gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    let t = bessel_table(2.0 * gamma.sqrt())?;
    Ok(PI * gamma.sqrt() * (t.j[0] * t.j[1] + t.y[0] * t.y[1]))
}

/// Which of the two accumulation curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveBranch {
    /// `Υ⁻`, attached to the Dirichlet eigenvalues.
    Minus,
    /// `Υ⁺`, attached to the Neumann eigenvalues.
    Plus,
}

/// Coefficients of the accumulation curves for a coupling `γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveParams {
    /// Coupling `γ`.
    pub gamma: f64,
    /// `q(γ)`.
    pub q: f64,
    /// `(1/(πγ)) log(q²/(1+q²))` — negative; equal to `Im Υ∓`.
    pub upsilon: f64,
    /// `Υ⁻(γ)`.
    pub upsilon_minus: Complex64,
    /// `Υ⁺(γ)`.
    pub upsilon_plus: Complex64,
}

impl CurveParams {
    /// The coefficient of the requested branch.
    pub fn coefficient(&self, branch: CurveBranch) -> Complex64 {
        match branch {
            CurveBranch::Minus => self.upsilon_minus,
            CurveBranch::Plus => self.upsilon_plus,
        }
    }

    /// Common modulus `|Im Υ∓|` of the curve prefactor.
    pub fn prefactor(&self) -> f64 {
        self.upsilon_minus.im.abs()
    }

    /// Curve point `τ∓(t) = t + Υ∓ t^{3/2}` (lower half plane).
    pub fn tau(&self, branch: CurveBranch, t: f64) -> Result<Complex64> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Domain(format!("curve parameter must be positive, got {t}")));
        }
        Ok(t + self.coefficient(branch) * t.powf(1.5))
    }
}

/// `Υ∓(γ)` and the signed `Υ(γ)`.
///
/// Uses the principal complex arctangent; checks `Im Υ⁻ = Im Υ⁺` to `1e−12`.
pub fn upsilon_mp(gamma: f64) -> Result<CurveParams> {
    let q = q_of_gamma(gamma)?;
    let c = 4.0 / (PI * gamma);
    let i = Complex64::i();
    let upsilon_minus = c * (1.0 / (i - 2.0 * q)).atan();
    let upsilon_plus = c * (1.0 / (i + 2.0 * q)).atan();
    let upsilon = (q * q / (1.0 + q * q)).ln() / (PI * gamma);
    let scale = upsilon_minus.norm().max(upsilon_plus.norm()).max(f64::MIN_POSITIVE);
    if (upsilon_minus.im - upsilon_plus.im).abs() > 1e-12 * scale.max(1.0) {
        return Err(Error::Accuracy {
            what: format!("Im Υ⁻ = Im Υ⁺ at γ = {gamma}"),
            achieved: (upsilon_minus.im - upsilon_plus.im).abs(),
        });
    }
    Ok(CurveParams { gamma, q, upsilon, upsilon_minus, upsilon_plus })
}

/// `τ∓(t) = t + Υ∓(γ) t^{3/2}`.
pub fn tau_curve(gamma: f64, branch: CurveBranch, t: f64) -> Result<Complex64> {
    upsilon_mp(gamma)?.tau(branch, t)
}

/// How the Kummer functions in the Jost data are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum JostMethod {
    /// Uniform large-`a` expansion (needs `|γ/(2√−μ)| ≥ 5`).
    Temme,
    /// Laplace integral with contiguous relations.
    #[default]
    Integral,
    /// Direct integration of the differential equation.
    Ode,
}

impl fmt::Display for JostMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JostMethod::Temme => "temme",
            JostMethod::Integral => "integral",
            JostMethod::Ode => "ode",
        })
    }
}

impl FromStr for JostMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "temme" => Ok(JostMethod::Temme),
            "integral" => Ok(JostMethod::Integral),
            "ode" => Ok(JostMethod::Ode),
            other => Err(Error::Argument(format!("unknown Jost method '{other}'"))),
        }
    }
}

/// Integrability of the pair `(φ_μ, φ_{−μ})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairRegime {
    /// `μ ∉ ℝ`: both members decay.
    BothDecaying,
    /// `μ ∈ ℝ \ {0}`: one member is not square integrable, so `μ` cannot be
    /// an eigenvalue.
    OneNonIntegrable,
    /// `μ = 0`.
    Threshold,
}

/// Classifies `μ` for the pair `(φ_μ, φ_{−μ})`.
pub fn pair_regime(mu: Complex64) -> PairRegime {
    if mu.im != 0.0 {
        PairRegime::BothDecaying
    } else if mu.re != 0.0 {
        PairRegime::OneNonIntegrable
    } else {
        PairRegime::Threshold
    }
}

/// `(φ_μ(γ,0), φ'_μ(γ,0))` sharing one scale `e^{log_scale}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JostEvaluation {
    /// Spectral parameter `μ`.
    pub mu: Complex64,
    /// Coupling `γ`.
    pub gamma: f64,
    /// Mantissa of `φ_μ(γ, 0)`.
    pub value_at_0: Complex64,
    /// Mantissa of `φ'_μ(γ, 0)`.
    pub derivative_at_0: Complex64,
    /// Common natural-log scale.
    pub log_scale: f64,
    /// Evaluation method.
    pub method: JostMethod,
}

impl JostEvaluation {
    /// `φ_μ(γ, 0)`.
    pub fn value(&self) -> Scaled {
        Scaled { mant: self.value_at_0, log_scale: self.log_scale }
    }

    /// `φ'_μ(γ, 0)`.
    pub fn derivative(&self) -> Scaled {
        Scaled { mant: self.derivative_at_0, log_scale: self.log_scale }
    }

    /// `φ'_μ(γ, 0)/φ_μ(γ, 0)`.
    pub fn log_derivative(&self) -> Result<Complex64> {
        let r = self.derivative_at_0 / self.value_at_0;
        if r.is_finite() {
            Ok(r)
        } else {
            Err(Error::Pole(format!("φ_μ(γ, 0) vanishes at μ = {}", self.mu)))
        }
    }
}

/// Jost data at the origin.
///
/// Requires `μ ∉ [0, ∞)`. With `k = √−μ`, `a = γ/(2k)`:
/// `φ(0) = (γ/(2k)) e^{−k} U(−a, 0, 2k)` and
/// `φ'(0) = γ e^{−k}/(4k²)·[(γ − 2k) U(−a, −1, 2k) + 2k(1 − k) U(−a, 0, 2k)]`.
pub fn jost_at_zero(mu: Complex64, gamma: f64, method: JostMethod) -> Result<JostEvaluation> {
    check_gamma(gamma)?;
    if !mu.is_finite() {
        return Err(Error::Domain(format!("μ must be finite, got {mu}")));
    }
    if mu.im == 0.0 && mu.re >= 0.0 {
        return Err(Error::Branch(format!("φ_μ does not decay for μ = {} ∈ [0, ∞)", mu.re)));
    }
    let k = (-mu).sqrt();
    let a = gamma / (2.0 * k);
    let (u_m1, u_0, log_u) = match method {
        JostMethod::Ode => {
            let b = integrate_schrodinger(mu, gamma, &IntegrationConfig::default())?;
            return Ok(JostEvaluation {
                mu,
                gamma,
                value_at_0: b.g0,
                derivative_at_0: b.g0_prime,
                log_scale: b.log_scale,
                method,
            });
        }
        JostMethod::Integral => {
            let p = kummer_u_pair(-a, -1, 2.0 * k)?;
            (p.u_b, p.u_b1, p.log_scale)
        }
        JostMethod::Temme => {
            let um1 = kummer_u_temme(a, -1, gamma)?.value;
            let u0 = kummer_u_temme(a, 0, gamma)?.value;
            let s = um1.log_scale.max(u0.log_scale);
            (um1.at_scale(s), u0.at_scale(s), s)
        }
    };
    // e^{−k}: modulus into the scale, phase into the mantissas.
    let phase = Complex64::from_polar(1.0, -k.im);
    let value = gamma / (2.0 * k) * phase * u_0;
    let derivative = gamma / (4.0 * k * k) * phase * ((gamma - 2.0 * k) * u_m1 + 2.0 * k * (1.0 - k) * u_0);
    Ok(JostEvaluation {
        mu,
        gamma,
        value_at_0: value,
        derivative_at_0: derivative,
        log_scale: log_u - k.re,
        method,
    })
}

fn check_off_axis(mu: Complex64) -> Result<()> {
    if !mu.is_finite() {
        return Err(Error::Domain(format!("μ must be finite, got {mu}")));
    }
    if mu.im == 0.0 {
        return Err(Error::Branch(format!(
            "M(μ) needs both Jost branches; μ = {} is real (no eigenvalues on ℝ)",
            mu.re
        )));
    }
    Ok(())
}

/// The two products `φ'_μ φ_{−μ}` and `φ'_{−μ} φ_μ` whose sum is `M(μ)`.
pub fn determinant_terms(mu: Complex64, gamma: f64, method: JostMethod) -> Result<(Scaled, Scaled)> {
    check_off_axis(mu)?;
    let right = jost_at_zero(mu, gamma, method)?;
    let left = jost_at_zero(-mu, gamma, method)?;
    Ok((right.derivative() * left.value(), left.derivative() * right.value()))
}

/// `M(μ) = φ'_μ(γ,0) φ_{−μ}(γ,0) + φ'_{−μ}(γ,0) φ_μ(γ,0)` (integral method).
pub fn determinant_m(mu: Complex64, gamma: f64) -> Result<Scaled> {
    determinant_m_with(mu, gamma, JostMethod::Integral)
}

/// [`determinant_m`] with an explicit Jost method.
pub fn determinant_m_with(mu: Complex64, gamma: f64, method: JostMethod) -> Result<Scaled> {
    let (t1, t2) = determinant_terms(mu, gamma, method)?;
    Ok(t1 + t2)
}

/// `M(μ)` assembled directly from the four Kummer functions
/// `U(−γ/(2√∓μ), {−1, 0}, 2√∓μ)`, bypassing the Jost data:
///
/// `M = γ²√−μ e^{−√−μ−√μ}/(8μ^{5/2})·[(γ√−μ + 2μ) U₋(−1) U₊(0)
///    + (2μ − γ√μ) U₋(0) U₊(−1) + 2μ(√−μ + √μ − 2) U₋(0) U₊(0)]`,
///
/// where `U₋` has `k = √−μ` and `U₊` has `k = √μ`.
pub fn determinant_m_expanded(mu: Complex64, gamma: f64) -> Result<Scaled> {
    check_gamma(gamma)?;
    check_off_axis(mu)?;
    let km = (-mu).sqrt();
    let kp = mu.sqrt();
    let um = kummer_u_pair(-gamma / (2.0 * km), -1, 2.0 * km)?;
    let up = kummer_u_pair(-gamma / (2.0 * kp), -1, 2.0 * kp)?;
    let bracket = (gamma * km + 2.0 * mu) * um.u_b * up.u_b1
        + (2.0 * mu - gamma * kp) * um.u_b1 * up.u_b
        + 2.0 * mu * (km + kp - 2.0) * um.u_b1 * up.u_b1;
    let mu52 = mu * mu * kp;
    let pref = gamma * gamma * km * Complex64::from_polar(1.0, -(km.im + kp.im)) / (8.0 * mu52);
    Ok(Scaled { mant: pref * bracket, log_scale: um.log_scale + up.log_scale - km.re - kp.re }.normalized())
}

/// Relative discrepancy between [`determinant_m`] and
/// [`determinant_m_expanded`], measured against the larger of the two terms
/// of `M` (so that cancellation near a zero is not mistaken for error).
///
/// Errors with [`Error::Accuracy`] (a self-check alarm) above `1e−8`.
pub fn determinant_self_check(mu: Complex64, gamma: f64) -> Result<f64> {
    let (t1, t2) = determinant_terms(mu, gamma, JostMethod::Integral)?;
    let m = t1 + t2;
    let e = determinant_m_expanded(mu, gamma)?;
    let reference = if t1.ln_abs() >= t2.ln_abs() { t1 } else { t2 };
    let diff = (m.ratio(&reference) - e.ratio(&reference)).norm();
    if diff > 1e-8 {
        return Err(Error::Accuracy { what: format!("determinant forms disagree at μ = {mu}"), achieved: diff });
    }
    Ok(diff)
}

/// `m_γ(μ) = φ'_μ(γ,0)/φ_μ(γ,0) + φ'_{−μ}(γ,0)/φ_{−μ}(γ,0)`.
///
/// Errors with [`Error::Pole`] where either Jost value vanishes.
pub fn m_function(mu: Complex64, gamma: f64) -> Result<Complex64> {
    check_off_axis(mu)?;
    let right = jost_at_zero(mu, gamma, JostMethod::Integral)?;
    let left = jost_at_zero(-mu, gamma, JostMethod::Integral)?;
    Ok(right.log_derivative()? + left.log_derivative()?)
}

/// Open quadrant of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quadrant {
    /// `Re > 0`, `Im > 0`.
    I,
    /// `Re < 0`, `Im > 0`.
    II,
    /// `Re < 0`, `Im < 0`.
    III,
    /// `Re > 0`, `Im < 0`.
    IV,
}

impl Quadrant {
    /// All four quadrants in order.
    pub const ALL: [Quadrant; 4] = [Quadrant::I, Quadrant::II, Quadrant::III, Quadrant::IV];

    /// The quadrant containing `z`, or `None` on an axis.
    pub fn of(z: Complex64) -> Option<Quadrant> {
        match (z.re.partial_cmp(&0.0)?, z.im.partial_cmp(&0.0)?) {
            (std::cmp::Ordering::Greater, std::cmp::Ordering::Greater) => Some(Quadrant::I),
            (std::cmp::Ordering::Less, std::cmp::Ordering::Greater) => Some(Quadrant::II),
            (std::cmp::Ordering::Less, std::cmp::Ordering::Less) => Some(Quadrant::III),
            (std::cmp::Ordering::Greater, std::cmp::Ordering::Less) => Some(Quadrant::IV),
            _ => None,
        }
    }

    /// Maps a first-quadrant point into this quadrant by the reflections
    /// `z ↦ −z̄` (II), `z ↦ −z` (III), `z ↦ z̄` (IV).
    pub fn from_first(self, z: Complex64) -> Complex64 {
        match self {
            Quadrant::I => z,
            Quadrant::II => -z.conj(),
            Quadrant::III => -z,
            Quadrant::IV => z.conj(),
        }
    }

    /// Inverse of [`Quadrant::from_first`] (the reflections are involutions).
    pub fn to_first(self, z: Complex64) -> Complex64 {
        self.from_first(z)
    }

    /// Whether the quadrant lies in the right half plane.
    pub fn is_right(self) -> bool {
        matches!(self, Quadrant::I | Quadrant::IV)
    }

    /// The search rectangle `{|Re| ∈ window, REAL_AXIS_CLEARANCE ≤ |Im| ≤ height}`.
    pub fn rect(self, re_window: (f64, f64), height: f64) -> Result<Rect> {
        let (lo, hi) = re_window;
        let re = if self.is_right() { (lo, hi) } else { (-hi, -lo) };
        let im = match self {
            Quadrant::I | Quadrant::II => (REAL_AXIS_CLEARANCE, height),
            Quadrant::III | Quadrant::IV => (-height, -REAL_AXIS_CLEARANCE),
        };
        Rect::new(re, im)
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quadrant::I => "I",
            Quadrant::II => "II",
            Quadrant::III => "III",
            Quadrant::IV => "IV",
        })
    }
}

impl FromStr for Quadrant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "1" | "I" => Ok(Quadrant::I),
            "2" | "II" => Ok(Quadrant::II),
            "3" | "III" => Ok(Quadrant::III),
            "4" | "IV" => Ok(Quadrant::IV),
            other => Err(Error::Argument(format!("unknown quadrant '{other}'"))),
        }
    }
}

/// A located eigenvalue of `A_γ` with its asymptotic predictions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexEigenvalue {
    /// The eigenvalue.
    pub mu: Complex64,
    /// Quadrant of `mu`.
    pub quadrant: Quadrant,
    /// Index `n` of the Dirichlet eigenvalue it is attached to.
    pub n: usize,
    /// `|M(μ)|` relative to the larger of its two terms.
    pub residual: f64,
    /// `λ_n^D + Υ⁻(λ_n^D)^{3/2}`, reflected into the quadrant of `mu`.
    pub predicted_d: Complex64,
    /// `λ_{n+1}^N + Υ⁺(λ_{n+1}^N)^{3/2}`, reflected into the quadrant of `mu`.
    pub predicted_n: Complex64,
}

/// `λ + Υ λ^{3/2}` moved to the first quadrant (the formula itself lands in
/// the fourth, as `Im Υ < 0`).
pub fn first_quadrant_prediction(lambda: f64, upsilon: Complex64) -> Complex64 {
    (lambda + upsilon * lambda.powf(1.5)).conj()
}

/// Half-line eigenvalues `λ_1 > λ_2 > …` needed to index zeros with
/// `|Re μ| ≥ re_min` (plus a margin), for one coupling.
pub(crate) struct PredictionTable {
    pub dirichlet: Vec<f64>,
    pub neumann: Vec<f64>,
    pub upsilon_minus: Complex64,
    pub upsilon_plus: Complex64,
}

impl PredictionTable {
    pub(crate) fn new(gamma: f64, re_min: f64, upsilon_minus: Complex64, upsilon_plus: Complex64) -> Result<Self> {
        let n_max = (gamma / (2.0 * (0.5 * re_min).sqrt())).ceil() as usize + 3;
        let solve = |bc| -> Result<Vec<f64>> {
            let problem = HalfLineProblem::new(gamma, bc)?;
            Ok(solve_sa_spectrum(&problem, n_max + 1, Method::CharExact)?.into_iter().map(|e| e.lambda).collect())
        };
        Ok(PredictionTable {
            dirichlet: solve(BoundaryCondition::Dirichlet)?,
            neumann: solve(BoundaryCondition::Neumann)?,
            upsilon_minus,
            upsilon_plus,
        })
    }

    /// First-quadrant predictions `(D, N)` for index `n` (1-based).
    pub(crate) fn predictions(&self, n: usize) -> (Complex64, Complex64) {
        (
            first_quadrant_prediction(self.dirichlet[n - 1], self.upsilon_minus),
            first_quadrant_prediction(self.neumann[n], self.upsilon_plus),
        )
    }

    /// The index whose Dirichlet prediction is closest to `z` (first quadrant).
    pub(crate) fn nearest(&self, z: Complex64) -> usize {
        (1..self.dirichlet.len())
            .min_by(|&a, &b| {
                let da = (self.predictions(a).0 - z).norm();
                let db = (self.predictions(b).0 - z).norm();
                da.total_cmp(&db)
            })
            .unwrap_or(1)
    }

    /// Builds the eigenvalue record for a located zero.
    pub(crate) fn annotate(&self, mu: Complex64, residual: f64) -> Result<ComplexEigenvalue> {
        let quadrant = Quadrant::of(mu).ok_or_else(|| Error::RootSearch(format!("zero on an axis at {mu}")))?;
        let n = self.nearest(quadrant.to_first(mu));
        let (d, nn) = self.predictions(n);
        Ok(ComplexEigenvalue {
            mu,
            quadrant,
            n,
            residual,
            predicted_d: quadrant.from_first(d),
            predicted_n: quadrant.from_first(nn),
        })
    }
}

fn check_window(re_window: (f64, f64)) -> Result<()> {
    let (lo, hi) = re_window;
    if lo > 0.0 && hi > lo && hi.is_finite() {
        Ok(())
    } else {
        Err(Error::Argument(format!("real-part window must satisfy 0 < lo < hi, got {re_window:?}")))
    }
}

/// Relative residual `|t1 + t2|/max(|t1|, |t2|)` of a two-term determinant.
pub(crate) fn relative_residual((t1, t2): (Scaled, Scaled)) -> f64 {
    let reference = if t1.ln_abs() >= t2.ln_abs() { t1 } else { t2 };
    (t1 + t2).ratio(&reference).norm()
}

/// All eigenvalues of `A_γ` with `|Re μ|` in `re_window` in one quadrant.
///
/// The search strip is `REAL_AXIS_CLEARANCE ≤ |Im μ| ≤ 2γ` (no eigenvalue
/// has `|Im μ| ≥ 2γ`). Results are ordered by index (descending `|Re μ|`).
pub fn locate_complex_eigs(gamma: f64, re_window: (f64, f64), quadrant: Quadrant) -> Result<Vec<ComplexEigenvalue>> {
    locate_complex_eigs_with(gamma, re_window, quadrant, &SearchConfig::default())
}

/// [`locate_complex_eigs`] with explicit search settings.
pub fn locate_complex_eigs_with(
    gamma: f64,
    re_window: (f64, f64),
    quadrant: Quadrant,
    config: &SearchConfig,
) -> Result<Vec<ComplexEigenvalue>> {
    check_gamma(gamma)?;
    check_window(re_window)?;
    let params = upsilon_mp(gamma)?;
    let rect = quadrant.rect(re_window, 2.0 * gamma)?;
    let zeros = locate_zeros(|mu| determinant_m(mu, gamma), rect, config)?;
    let table = PredictionTable::new(gamma, re_window.0, params.upsilon_minus, params.upsilon_plus)?;
    finish(&zeros, &table, |mu| determinant_terms(mu, gamma, JostMethod::Integral))
}

pub(crate) fn finish<F>(zeros: &[LocatedZero], table: &PredictionTable, terms: F) -> Result<Vec<ComplexEigenvalue>>
where
    F: Fn(Complex64) -> Result<(Scaled, Scaled)> + Sync,
{
    let annotated = par::map(zeros, |z| table.annotate(z.z, relative_residual(terms(z.z)?)));
    let mut out = annotated.into_iter().collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| b.mu.re.abs().total_cmp(&a.mu.re.abs()));
    Ok(out)
}

/// Closes a set of eigenvalues under `μ ↦ μ̄` and `μ ↦ −μ̄` (predictions are
/// reflected along). Duplicates (relative distance `≤ 1e−12`) are merged, so
/// extending twice gives the same set.
pub fn symmetry_extend(roots: &[ComplexEigenvalue]) -> Result<Vec<ComplexEigenvalue>> {
    let mut out: Vec<ComplexEigenvalue> = Vec::with_capacity(4 * roots.len());
    for r in roots {
        let q = Quadrant::of(r.mu).ok_or_else(|| Error::Argument(format!("eigenvalue on an axis: {}", r.mu)))?;
        let (mu1, d1, n1) = (q.to_first(r.mu), q.to_first(r.predicted_d), q.to_first(r.predicted_n));
        for target in Quadrant::ALL {
            let mu = target.from_first(mu1);
            if out.iter().any(|e| (e.mu - mu).norm() <= 1e-12 * mu.norm()) {
                continue;
            }
            out.push(ComplexEigenvalue {
                mu,
                quadrant: target,
                predicted_d: target.from_first(d1),
                predicted_n: target.from_first(n1),
                ..*r
            });
        }
    }
    out.sort_by(|a, b| a.quadrant.cmp(&b.quadrant).then(b.mu.re.abs().total_cmp(&a.mu.re.abs())));
    Ok(out)
}

/// Result of fitting `log|Im μ| = slope·log|Re μ| + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveFit {
    /// Number of eigenvalues used.
    pub samples: usize,
    /// Least-squares slope.
    pub slope: f64,
    /// Standard error of the slope.
    pub slope_stderr: f64,
    /// Least-squares intercept.
    pub intercept: f64,
    /// Geometric mean of `|Im μ|/|Re μ|^{3/2}` over the smaller-`|μ|` half.
    pub prefactor: f64,
    /// Expected prefactor `|Im Υ∓(γ)|`.
    pub expected_prefactor: f64,
    /// `|prefactor/expected − 1|`.
    pub prefactor_rel_error: f64,
    /// `|slope − 3/2| ≤ 0.05`.
    pub slope_ok: bool,
    /// `prefactor_rel_error ≤ 0.1`.
    pub prefactor_ok: bool,
}

/// Checks the curve law `|Im μ| ≈ |Im Υ∓|·|Re μ|^{3/2}` on located eigenvalues.
pub fn curve_check(roots: &[ComplexEigenvalue], params: &CurveParams) -> Result<CurveFit> {
    let points: Vec<Complex64> = roots.iter().map(|r| r.mu).collect();
    curve_fit_points(&points, params.prefactor())
}

/// [`curve_check`] on bare points against a given prefactor.
pub fn curve_fit_points(points: &[Complex64], expected_prefactor: f64) -> Result<CurveFit> {
    if points.len() < 5 {
        return Err(Error::Sample(format!("curve fit needs at least 5 eigenvalues, got {}", points.len())));
    }
    if points.iter().any(|z| z.re == 0.0 || z.im == 0.0 || !z.is_finite()) {
        return Err(Error::Argument("curve fit needs points off the axes".into()));
    }
    let xs: Vec<f64> = points.iter().map(|z| z.re.abs().ln()).collect();
    let ys: Vec<f64> = points.iter().map(|z| z.im.abs().ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::Sample("all eigenvalues share one real part".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - intercept - slope * x).powi(2)).sum();
    let slope_stderr = if xs.len() > 2 { (rss / (n - 2.0) / sxx).sqrt() } else { 0.0 };
    let mut by_size: Vec<Complex64> = points.to_vec();
    by_size.sort_by(|a, b| a.norm().total_cmp(&b.norm()));
    let half = &by_size[..by_size.len().div_ceil(2)];
    let log_mean = half.iter().map(|z| z.im.abs().ln() - 1.5 * z.re.abs().ln()).sum::<f64>() / half.len() as f64;
    let prefactor = log_mean.exp();
    let prefactor_rel_error = (prefactor / expected_prefactor - 1.0).abs();
    Ok(CurveFit {
        samples: points.len(),
        slope,
        slope_stderr,
        intercept,
        prefactor,
        expected_prefactor,
        prefactor_rel_error,
        slope_ok: (slope - 1.5).abs() <= 0.05,
        prefactor_ok: prefactor_rel_error <= 0.1,
    })
}
