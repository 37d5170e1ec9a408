//! Continuous arctangent branches of functions with sign-alternating poles,
//! and the tan-equation root solver built on them.
//!
//! For a piecewise smooth `F: ℝ₊ → ℝ` whose singularities are simple poles
//! (one-sided limits `±∞` of opposite sign), the *signed index* `Z_F(x)` counts
//! the `+∞ → −∞` jumps in `(0, x]` minus the `−∞ → +∞` jumps, and
//! `Θ_F(x) = arctan F(x) + π Z_F(x)` is the branch of `arctan F` that is
//! continuous in `x` and vanishes at the origin.
//!
//! [`tan_roots`] solves `tan(s κ) = G(κ)` for `κ` in consecutive period cells
//! seeded by `κ_n = (πn + Θ)/s`, which is how the characteristic equations of
//! the half-line problems are indexed.

use crate::error::{Error, Result};
use crate::par;
use crate::roots::{brent, Tolerance};
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::ops::RangeInclusive;
use std::sync::Arc;

/// Direction of the jump at a pole.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Jump {
    /// Left limit `+∞`, right limit `−∞` (counted `+1`).
    PlusToMinus,
    /// Left limit `−∞`, right limit `+∞` (counted `−1`).
    MinusToPlus,
}

impl Jump {
    /// Contribution to the signed index.
    pub fn weight(self) -> i64 {
        match self {
            Jump::PlusToMinus => 1,
            Jump::MinusToPlus => -1,
        }
    }

    fn flipped(self) -> Self {
        match self {
            Jump::PlusToMinus => Jump::MinusToPlus,
            Jump::MinusToPlus => Jump::PlusToMinus,
        }
    }
}

/// A located pole with its jump direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Singularity {
    /// Position of the pole.
    pub at: f64,
    /// Direction of the jump.
    pub jump: Jump,
}

/// Shared, fallible real function of a positive real variable.
pub type RealFn = Arc<dyn Fn(f64) -> Result<f64> + Send + Sync>;

/// A function of the branched-arctan class together with its analysed poles
/// on `(0, domain_end]`.
///
/// Immutable after construction.
#[derive(Clone)]
pub struct BranchedFunction {
    f: RealFn,
    singularities: Vec<Singularity>,
    domain_end: f64,
}

impl fmt::Debug for BranchedFunction {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt.debug_struct("BranchedFunction")
            .field("singularities", &self.singularities)
            .field("domain_end", &self.domain_end)
            .finish_non_exhaustive()
    }
}

/// `Θ_F(x)` split into its two parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaValue {
    /// Evaluation point.
    pub x: f64,
    /// `arctan F(x) ∈ [−π/2, π/2]`.
    pub arctan_part: f64,
    /// Signed index `Z_F(x)`.
    pub index: i64,
    /// `arctan_part + π·index`.
    pub theta: f64,
}

impl ThetaValue {
    fn new(x: f64, arctan_part: f64, index: i64) -> Self {
        ThetaValue { x, arctan_part, index, theta: arctan_part + PI * index as f64 }
    }
}

/// Default number of sampling cells used by [`BranchedFunction::analyse`].
pub const DEFAULT_GRID: usize = 4000;

/// Relative width (with respect to `x_max`) to which poles are refined.
const POLE_WIDTH: f64 = 1e-12;

impl BranchedFunction {
    /// Analyses `f` on `(0, domain_end]` with `grid` sampling cells.
    pub fn analyse<F>(f: F, domain_end: f64, grid: usize) -> Result<Self>
    where
        F: Fn(f64) -> Result<f64> + Send + Sync + 'static,
    {
        let f: RealFn = Arc::new(f);
        let singularities = detect_singularities(&*f, domain_end, grid)?;
        Ok(BranchedFunction { f, singularities, domain_end })
    }

    /// Builds the record from an already known pole list (no sampling).
    pub fn with_singularities(f: RealFn, singularities: Vec<Singularity>, domain_end: f64) -> Result<Self> {
        if singularities.windows(2).any(|w| w[0].at >= w[1].at) {
            return Err(Error::Argument("singularities must be strictly increasing".into()));
        }
        if singularities.iter().any(|s| s.at <= 0.0 || s.at > domain_end) {
            return Err(Error::Argument("singularities must lie in (0, domain_end]".into()));
        }
        Ok(BranchedFunction { f, singularities, domain_end })
    }

    /// Evaluates `F(x)`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        (self.f)(x)
    }

    /// The located poles in increasing order.
    pub fn singularities(&self) -> &[Singularity] {
        &self.singularities
    }

    /// Right end of the analysed interval.
    pub fn domain_end(&self) -> f64 {
        self.domain_end
    }

    /// `−F`, whose poles have the opposite jump directions.
    pub fn negated(&self) -> Self {
        let f = Arc::clone(&self.f);
        BranchedFunction {
            f: Arc::new(move |x| f(x).map(|v| -v)),
            singularities: self.singularities.iter().map(|s| Singularity { at: s.at, jump: s.jump.flipped() }).collect(),
            domain_end: self.domain_end,
        }
    }

    /// Signed index `Z_F(x)`.
    pub fn signed_index(&self, x: f64) -> Result<i64> {
        self.check_x(x)?;
        Ok(self.singularities.iter().take_while(|s| s.at <= x).map(|s| s.jump.weight()).sum())
    }

    /// `Θ_F(x)`; errors with [`Error::Pole`] when `x` coincides with a pole
    /// (to the resolution with which poles are located).
    pub fn theta_of(&self, x: f64) -> Result<ThetaValue> {
        self.check_x(x)?;
        if let Some(p) = self.pole_at(x) {
            return Err(Error::Pole(format!("Θ_F evaluated at the pole x = {}", p.at)));
        }
        let index = self.signed_index(x)?;
        Ok(ThetaValue::new(x, self.eval(x)?.atan(), index))
    }

    /// `Θ_F(x)`, taking the left limit `±π/2 + π Z_F(x⁻)` when `x` is a pole.
    pub fn theta_left_limit(&self, x: f64) -> Result<ThetaValue> {
        self.check_x(x)?;
        match self.pole_at(x) {
            Some(p) => {
                let before: i64 = self.singularities.iter().take_while(|s| s.at < p.at).map(|s| s.jump.weight()).sum();
                let part = match p.jump {
                    Jump::PlusToMinus => FRAC_PI_2,
                    Jump::MinusToPlus => -FRAC_PI_2,
                };
                Ok(ThetaValue::new(x, part, before))
            }
            None => self.theta_of(x),
        }
    }

    fn pole_at(&self, x: f64) -> Option<&Singularity> {
        let tol = 4.0 * POLE_WIDTH * self.domain_end;
        self.singularities.iter().find(|s| (s.at - x).abs() <= tol)
    }

    fn check_x(&self, x: f64) -> Result<()> {
        if !(x > 0.0 && x.is_finite()) {
            return Err(Error::Domain(format!("Θ_F needs x > 0, got {x}")));
        }
        if x > self.domain_end * (1.0 + 1e-14) {
            return Err(Error::Domain(format!("x = {x} beyond analysed domain end {}", self.domain_end)));
        }
        Ok(())
    }
}

/// Locates the poles of `f` on `(0, x_max]`.
///
/// `f` is sampled on `grid` equal cells; every sign change is refined by
/// bisection to width `1e−12·x_max` and classified as a pole (|f| large on
/// both sides of the refined bracket) or a zero. Local maxima of `|f|` without
/// a sign change are refined as well; if one turns out to be infinite the
/// function has a pole with equal-sign limits and is rejected.
pub fn detect_singularities<F>(f: &F, x_max: f64, grid: usize) -> Result<Vec<Singularity>>
where
    F: Fn(f64) -> Result<f64> + Sync + ?Sized,
{
    if !(x_max > 0.0 && x_max.is_finite()) {
        return Err(Error::Domain(format!("x_max must be positive, got {x_max}")));
    }
    if grid < 4 {
        return Err(Error::Argument("at least four grid cells are required".into()));
    }
    // The origin itself is replaced by half the first cell (F may be singular
    // as a formula at 0 even though its limit vanishes).
    let xs: Vec<f64> = (0..=grid).map(|i| x_max * if i == 0 { 0.5 } else { i as f64 } / grid as f64).collect();
    let values: Vec<f64> = par::map(&xs, |&x| f(x)).into_iter().collect::<Result<_>>()?;
    if let Some(i) = values.iter().position(|v| v.is_nan()) {
        return Err(Error::NotInClass(format!("F is undefined at x = {}", xs[i])));
    }

    let width = POLE_WIDTH * x_max;
    let mut poles = Vec::new();
    for i in 0..grid {
        let (l, r) = (values[i], values[i + 1]);
        if (l >= 0.0) != (r >= 0.0) {
            if let Some(s) = refine_sign_change(f, xs[i], xs[i + 1], l, width)? {
                poles.push(s);
            }
        }
    }
    for i in 1..grid {
        let (l, m, r) = (values[i - 1].abs(), values[i].abs(), values[i + 1].abs());
        let same_sign = (values[i - 1] >= 0.0) == (values[i] >= 0.0) && (values[i] >= 0.0) == (values[i + 1] >= 0.0);
        if same_sign && m > l && m > r && m > 1.0 {
            check_even_pole(f, xs[i - 1], xs[i + 1], width)?;
        }
    }
    Ok(poles)
}

/// Bisects a sign change and reports it if it is a pole.
fn refine_sign_change<F>(f: &F, mut lo: f64, mut hi: f64, mut f_lo: f64, width: f64) -> Result<Option<Singularity>>
where
    F: Fn(f64) -> Result<f64> + ?Sized,
{
    let mut f_hi = f64::NAN;
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid)?;
        if (fm >= 0.0) == (f_lo >= 0.0) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
            f_hi = fm;
        }
    }
    if f_hi.is_nan() {
        f_hi = f(hi)?;
    }
    // At a simple zero |f| ~ slope·width is tiny; at a simple pole it is
    // ~ residue/width. The product separates the two by ~1/width².
    if f_lo.abs() * f_hi.abs() > 1.0 {
        let jump = if f_lo > 0.0 { Jump::PlusToMinus } else { Jump::MinusToPlus };
        Ok(Some(Singularity { at: 0.5 * (lo + hi), jump }))
    } else {
        Ok(None)
    }
}

/// Golden-section search for the maximum of `|f|` on `[a, b]`; an
/// (effectively) infinite maximum means a pole without sign change.
fn check_even_pole<F>(f: &F, mut a: f64, mut b: f64, width: f64) -> Result<()>
where
    F: Fn(f64) -> Result<f64> + ?Sized,
{
    let ratio = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let mut fc = f(c)?.abs();
    let mut fd = f(d)?.abs();
    let start = fc.max(fd);
    while b - a > width {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c)?.abs();
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d)?.abs();
        }
    }
    let peak = fc.max(fd);
    if peak > 1e6 * start.max(1.0) || !peak.is_finite() {
        return Err(Error::NotInClass(format!(
            "F has a pole with equal-sign one-sided limits near x = {}",
            0.5 * (a + b)
        )));
    }
    Ok(())
}

/// One solution of `tan(s κ) = G(κ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TanRoot {
    /// Cell index `n`.
    pub n: i64,
    /// The root `κ_n`.
    pub kappa: f64,
    /// `|sin(sκ) − G cos(sκ)| / √(1 + G²)` at the root.
    pub residual: f64,
    /// `true` if Newton left its cell and the bracketing fallback was used.
    pub bracketed: bool,
}

/// Right-hand side `G(κ)` of a tan equation.
pub type TanRhs<'a> = &'a (dyn Fn(f64) -> f64 + Sync);

/// Solves `tan(scale·κ) = G(κ)` for each `n` in `n_range`.
///
/// The seed is `κ_n = (πn + θ₀)/scale`, where `θ₀` is the continuous-branch
/// value `Θ` of the limit `G₀` of `G`. Without `rhs`, `G ≡ tan θ₀` and the seeds
/// are exact. With `rhs`, Newton refines each root on
/// `sin(sκ) − G(κ) cos(sκ) = 0`; if it moves by `π/(2s)` or more, a Brent search
/// over the period cell centred at the seed is used instead.
pub fn tan_roots(scale: f64, theta0: f64, rhs: Option<TanRhs<'_>>, n_range: RangeInclusive<i64>) -> Result<Vec<TanRoot>> {
    if !(scale > 0.0 && scale.is_finite() && theta0.is_finite()) {
        return Err(Error::Argument(format!("tan_roots needs scale > 0 and finite Θ (got {scale}, {theta0})")));
    }
    let ns: Vec<i64> = n_range.collect();
    par::map(&ns, |&n| tan_root(scale, theta0, rhs, n)).into_iter().collect()
}

fn tan_root(scale: f64, theta0: f64, rhs: Option<TanRhs<'_>>, n: i64) -> Result<TanRoot> {
    let seed = (PI * n as f64 + theta0) / scale;
    let Some(g) = rhs else {
        return Ok(TanRoot { n, kappa: seed, residual: 0.0, bracketed: false });
    };
    let h = |k: f64| {
        let (s, c) = (scale * k).sin_cos();
        let gk = g(k);
        if gk.is_finite() {
            (s - gk * c) / (1.0 + gk * gk).sqrt()
        } else {
            -c * gk.signum()
        }
    };
    let half_cell = FRAC_PI_2 / scale;
    let tol = 1e-15 * seed.abs().max(half_cell);
    let mut k = seed;
    let mut newton_ok = false;
    for _ in 0..60 {
        let step_h = 1e-7 * k.abs().max(half_cell);
        let d = (h(k + step_h) - h(k - step_h)) / (2.0 * step_h);
        let step = h(k) / d;
        if !step.is_finite() {
            break;
        }
        k -= step;
        if (k - seed).abs() >= half_cell {
            break;
        }
        if step.abs() <= tol {
            newton_ok = true;
            break;
        }
    }
    if newton_ok {
        return Ok(TanRoot { n, kappa: k, residual: h(k).abs(), bracketed: false });
    }
    let (a, b) = (seed - half_cell, seed + half_cell);
    let root = brent(|x| Ok(h(x)), a, b, h(a), h(b), Tolerance { abs: 1e-15 * seed.abs(), rel: 1e-15, max_evals: 200 })
        .map_err(|e| Error::RootSearch(format!("tan equation, cell n = {n}: {e}")))?;
    Ok(TanRoot { n, kappa: root, residual: h(root).abs(), bracketed: true })
}
