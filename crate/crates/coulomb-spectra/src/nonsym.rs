//! The indefinite operator with different couplings on the two half lines,
//! `sgn(x)·(−d²/dx² + V)` with `V(x) = −γ₊/(1+x)` for `x > 0` and
//! `V(x) = −γ₋/(1−x)` for `x < 0`.
//!
//! The eigenvalues are the zeros of
//! `M(μ) = φ'_{μ,γ₊}(0) φ_{−μ,γ₋}(0) + φ'_{−μ,γ₋}(0) φ_{μ,γ₊}(0)`. The zero set
//! stays symmetric under conjugation but not under `μ ↦ −μ̄`; in the right
//! half plane the eigenvalues follow the half-line eigenvalues of coupling
//! `γ₋`, in the left half plane those of `γ₊`, with curve coefficients
//!
//! `Υ∓(γ₊,γ₋) = (4/(πγ₋)) arctan(1/f_∓(γ₊,γ₋))` for `Re μ > 0`,
//! `Υ∓(γ₊,γ₋) = (4/(πγ₊)) arctan(1/f_∓(γ₋,γ₊))` for `Re μ < 0`.
//!
//! Matching the small-`μ` limits of the two logarithmic derivatives gives,
//! with `q` as in [`q_of_gamma`](crate::nsa_spectrum::q_of_gamma) and
//! `s_k(x) = J_k²(2√x) + Y_k²(2√x)`,
//!
//! `f_−(ν,η) = σ(i − q(ν)) − q(η)`, `σ = s_1(η)/s_1(ν)`,
//! `f_+(ν,η) = ρ(i + q(ν)) + q(η)`, `ρ = η s_0(η)/(ν s_0(ν))`
//!
//! ([`FForm::Derived`]). Because `s_0 s_1 = (1 + q²)/(π²x)`, the two
//! coefficients share their imaginary part, as they must for both to describe
//! the same eigenvalues. The commonly quoted variant with the single ratio
//! `(J_0² + J_1²)(η)/(J_0² + J_1²)(ν)` in both ([`FForm::AsPrinted`]) agrees
//! for `ν = η` but not otherwise, and misses the located eigenvalues.

use crate::contour::{locate_zeros, SearchConfig};
use crate::error::{Error, Result};
use crate::nsa_spectrum::{
    finish, jost_at_zero, CurveBranch, JostMethod, PredictionTable, Quadrant, ComplexEigenvalue,
};
use crate::specfun::{bessel_table, Scaled};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Couplings of the two half lines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymPotential {
    /// Coupling on `x > 0`.
    pub gamma_plus: f64,
    /// Coupling on `x < 0`.
    pub gamma_minus: f64,
}

impl AsymPotential {
    /// Validated constructor (both couplings positive and finite).
    pub fn new(gamma_plus: f64, gamma_minus: f64) -> Result<Self> {
        let p = AsymPotential { gamma_plus, gamma_minus };
        p.validate()?;
        Ok(p)
    }

    /// Checks both couplings.
    pub fn validate(&self) -> Result<()> {
        for (name, g) in [("γ₊", self.gamma_plus), ("γ₋", self.gamma_minus)] {
            if !(g > 0.0 && g.is_finite()) {
                return Err(Error::Domain(format!("{name} must be positive and finite, got {g}")));
            }
        }
        Ok(())
    }

    /// The potential with the couplings exchanged (the mirror image `x ↦ −x`).
    pub fn swapped(&self) -> Self {
        AsymPotential { gamma_plus: self.gamma_minus, gamma_minus: self.gamma_plus }
    }
}

/// Half of the complex plane, split by the imaginary axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfPlane {
    /// `Re μ > 0`.
    RePositive,
    /// `Re μ < 0`.
    ReNegative,
}

impl fmt::Display for HalfPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HalfPlane::RePositive => "re_positive",
            HalfPlane::ReNegative => "re_negative",
        })
    }
}

impl FromStr for HalfPlane {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "re_positive" | "right" | "+" => Ok(HalfPlane::RePositive),
            "re_negative" | "left" | "-" => Ok(HalfPlane::ReNegative),
            other => Err(Error::Argument(format!("unknown half plane '{other}'"))),
        }
    }
}

/// Which amplitude ratio enters `f_∓`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FForm {
    /// `σ = s_1(η)/s_1(ν)` in `f_−` and `ρ = η s_0(η)/(ν s_0(ν))` in `f_+`.
    #[default]
    Derived,
    /// `(J_0² + J_1²)(η)/(J_0² + J_1²)(ν)` in both, as commonly quoted.
    AsPrinted,
}

/// Bessel data at `2√x`.
struct BesselData {
    /// `π√x (J_0 J_1 + Y_0 Y_1)`.
    q: f64,
    /// `J_0² + Y_0²`.
    s0: f64,
    /// `J_1² + Y_1²`.
    s1: f64,
    /// `J_0² + J_1²`.
    jj: f64,
}

fn bessel_data(x: f64) -> Result<BesselData> {
    let t = bessel_table(2.0 * x.sqrt())?;
    Ok(BesselData {
        q: PI * x.sqrt() * (t.j[0] * t.j[1] + t.y[0] * t.y[1]),
        s0: t.j[0] * t.j[0] + t.y[0] * t.y[0],
        s1: t.j[1] * t.j[1] + t.y[1] * t.y[1],
        jj: t.j[0] * t.j[0] + t.j[1] * t.j[1],
    })
}

/// `f_∓(ν, η)` in the quoted form `(s(η)/s(ν))(i ∓ q(ν)) ∓ q(η)` with
/// `s = J_0² + J_1²` (see [`f_pm_with`] for the derived form).
pub fn f_pm(nu: f64, eta: f64, branch: CurveBranch) -> Result<Complex64> {
    f_pm_with(nu, eta, branch, FForm::AsPrinted)
}

/// `f_∓(ν, η)` in the requested form; `ν` is the coupling on the oscillatory
/// side and `η` the one whose half-line eigenvalues the zeros follow.
pub fn f_pm_with(nu: f64, eta: f64, branch: CurveBranch, form: FForm) -> Result<Complex64> {
    for (name, v) in [("ν", nu), ("η", eta)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Domain(format!("{name} must be positive and finite, got {v}")));
        }
    }
    let n = bessel_data(nu)?;
    let e = bessel_data(eta)?;
    let sign = match branch {
        CurveBranch::Minus => -1.0,
        CurveBranch::Plus => 1.0,
    };
    let ratio = match (form, branch) {
        (FForm::AsPrinted, _) => e.jj / n.jj,
        (FForm::Derived, CurveBranch::Minus) => e.s1 / n.s1,
        (FForm::Derived, CurveBranch::Plus) => eta * e.s0 / (nu * n.s0),
    };
    Ok(ratio * Complex64::new(sign * n.q, 1.0) + sign * e.q)
}

/// Curve coefficient `Υ∓(γ₊, γ₋)` in the requested half plane (derived form).
pub fn upsilon_nonsym(potential: &AsymPotential, branch: CurveBranch, half: HalfPlane) -> Result<Complex64> {
    upsilon_nonsym_with(potential, branch, half, FForm::Derived)
}

/// [`upsilon_nonsym`] with an explicit form of `f_∓`.
pub fn upsilon_nonsym_with(
    potential: &AsymPotential,
    branch: CurveBranch,
    half: HalfPlane,
    form: FForm,
) -> Result<Complex64> {
    potential.validate()?;
    let (gp, gm) = (potential.gamma_plus, potential.gamma_minus);
    let (nu, eta) = match half {
        HalfPlane::RePositive => (gp, gm),
        HalfPlane::ReNegative => (gm, gp),
    };
    let f = f_pm_with(nu, eta, branch, form)?;
    Ok(4.0 / (PI * eta) * (1.0 / f).atan())
}

/// The two terms `φ'_{μ,γ₊} φ_{−μ,γ₋}` and `φ'_{−μ,γ₋} φ_{μ,γ₊}`.
pub fn determinant_nonsym_terms(mu: Complex64, potential: &AsymPotential) -> Result<(Scaled, Scaled)> {
    potential.validate()?;
    if mu.im == 0.0 {
        return Err(Error::Branch(format!("M(μ) needs both Jost branches; μ = {} is real", mu.re)));
    }
    let right = jost_at_zero(mu, potential.gamma_plus, JostMethod::Integral)?;
    let left = jost_at_zero(-mu, potential.gamma_minus, JostMethod::Integral)?;
    Ok((right.derivative() * left.value(), left.derivative() * right.value()))
}

/// Determinant `M(μ)` of the non-symmetric problem (no poles).
pub fn determinant_nonsym(mu: Complex64, potential: &AsymPotential) -> Result<Scaled> {
    let (t1, t2) = determinant_nonsym_terms(mu, potential)?;
    Ok(t1 + t2)
}

/// `m(μ) = φ'_{μ,γ₊}(0)/φ_{μ,γ₊}(0) + φ'_{−μ,γ₋}(0)/φ_{−μ,γ₋}(0)`.
pub fn m_nonsym(mu: Complex64, potential: &AsymPotential) -> Result<Complex64> {
    potential.validate()?;
    if mu.im == 0.0 {
        return Err(Error::Branch(format!("m(μ) needs both Jost branches; μ = {} is real", mu.re)));
    }
    let right = jost_at_zero(mu, potential.gamma_plus, JostMethod::Integral)?;
    let left = jost_at_zero(-mu, potential.gamma_minus, JostMethod::Integral)?;
    Ok(right.log_derivative()? + left.log_derivative()?)
}

/// Eigenvalues with `|Re μ|` in `re_window` in one quadrant.
///
/// Each is indexed against the half-line eigenvalues of the coupling that
/// governs its half plane (`γ₋` for `Re μ > 0`, `γ₊` for `Re μ < 0`) and
/// carries the predictions built from [`upsilon_nonsym`].
pub fn locate_nonsym_eigs(
    potential: &AsymPotential,
    re_window: (f64, f64),
    quadrant: Quadrant,
) -> Result<Vec<ComplexEigenvalue>> {
    locate_nonsym_eigs_with(potential, re_window, quadrant, &SearchConfig::default())
}

/// [`locate_nonsym_eigs`] with explicit search settings.
pub fn locate_nonsym_eigs_with(
    potential: &AsymPotential,
    re_window: (f64, f64),
    quadrant: Quadrant,
    config: &SearchConfig,
) -> Result<Vec<ComplexEigenvalue>> {
    potential.validate()?;
    let (lo, hi) = re_window;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::Argument(format!("real-part window must satisfy 0 < lo < hi, got {re_window:?}")));
    }
    let half = if quadrant.is_right() { HalfPlane::RePositive } else { HalfPlane::ReNegative };
    let governing = match half {
        HalfPlane::RePositive => potential.gamma_minus,
        HalfPlane::ReNegative => potential.gamma_plus,
    };
    let height = 2.0 * potential.gamma_plus.max(potential.gamma_minus);
    let rect = quadrant.rect(re_window, height)?;
    let zeros = locate_zeros(|mu| determinant_nonsym(mu, potential), rect, config)?;
    let table = PredictionTable::new(
        governing,
        lo,
        upsilon_nonsym(potential, CurveBranch::Minus, half)?,
        upsilon_nonsym(potential, CurveBranch::Plus, half)?,
    )?;
    finish(&zeros, &table, |mu| determinant_nonsym_terms(mu, potential))
}
