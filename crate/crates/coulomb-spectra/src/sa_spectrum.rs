//! Negative eigenvalues `−λ_n` of the self-adjoint half-line operators
//! `−d²/dx² − γ/(1+x)` on `x > 0` with a Dirichlet or Neumann condition at 0.
//!
//! With `k = √λ`, `w = 2k` and `a = γ/(2k)`, the decaying solution at the
//! origin is proportional to `U(−a, 0, w)` and its derivative to
//! `(γ − 2k) U(−a, −1, w) + 2k(1 − k) U(−a, 0, w)`; the eigenvalues are the
//! zeros of these *characteristic functions*. For small `λ` the uniform
//! expansion of `U` reduces them to `tan(πa) = G(a)` with `G → −R_1(γ)`
//! (Dirichlet) or `−R_0(γ)` (Neumann), where `R_k(γ) = J_k(2√γ)/Y_k(2√γ)`.
//! Solving with the continuous branch `Θ_{R_k}` gives the two-term law
//!
//! `λ_n = γ²/(4n²)·(1 + 2Θ/(πn) + O(n⁻²))`, `Θ = Θ_{R_1}(γ)` (Dirichlet),
//! `Θ = Θ_{R_0}(γ) + π` (Neumann),
//!
//! with `n = 1` the largest `λ` (the ground state).

use crate::error::{Error, Result};
use crate::oracle;
use crate::par;
use crate::roots::{brent, Tolerance};
use crate::specfun::{bessel_jy, bessel_table, kummer_u_pair};
use crate::theta::{tan_roots, BranchedFunction, ThetaValue, DEFAULT_GRID};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Boundary condition at `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryCondition {
    /// `g(0) = 0`.
    Dirichlet,
    /// `g'(0) = 0`.
    Neumann,
}

impl BoundaryCondition {
    /// Order `k` of the Bessel ratio `R_k` governing the asymptotics.
    pub fn bessel_order(self) -> u32 {
        match self {
            BoundaryCondition::Dirichlet => 1,
            BoundaryCondition::Neumann => 0,
        }
    }
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryCondition::Dirichlet => "dirichlet",
            BoundaryCondition::Neumann => "neumann",
        })
    }
}

impl FromStr for BoundaryCondition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "d" | "dirichlet" => Ok(BoundaryCondition::Dirichlet),
            "n" | "neumann" => Ok(BoundaryCondition::Neumann),
            other => Err(Error::Argument(format!("unknown boundary condition '{other}'"))),
        }
    }
}

/// Coupling and boundary condition of a half-line problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfLineProblem {
    /// Coupling `γ > 0`.
    pub gamma: f64,
    /// Boundary condition at the origin.
    pub bc: BoundaryCondition,
}

impl HalfLineProblem {
    /// Validated constructor.
    pub fn new(gamma: f64, bc: BoundaryCondition) -> Result<Self> {
        let p = HalfLineProblem { gamma, bc };
        p.validate()?;
        Ok(p)
    }

    /// Checks `γ > 0`.
    pub fn validate(&self) -> Result<()> {
        if self.gamma > 0.0 && self.gamma.is_finite() {
            Ok(())
        } else {
            Err(Error::Domain(format!("coupling must be positive and finite, got {}", self.gamma)))
        }
    }
}

/// How an eigenvalue was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Root of the exact characteristic function (Kummer integral).
    CharExact,
    /// Root of the reduced tan equation, refined on the exact characteristic
    /// function.
    CharReduced,
    /// Two-term asymptotic formula.
    Asymptotic,
    /// ODE shooting with node counting.
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::CharExact => "char_exact",
            Method::CharReduced => "char_reduced",
            Method::Asymptotic => "asymptotic",
            Method::Oracle => "oracle",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "char_exact" | "exact" => Ok(Method::CharExact),
            "char_reduced" | "reduced" => Ok(Method::CharReduced),
            "asymptotic" => Ok(Method::Asymptotic),
            "oracle" => Ok(Method::Oracle),
            other => Err(Error::Argument(format!("unknown method '{other}'"))),
        }
    }
}

/// An indexed eigenvalue `−λ_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SAEigenvalue {
    /// Index, `n = 1` for the largest `λ`.
    pub n: usize,
    /// `λ_n > 0`; the eigenvalue is `−λ_n`.
    pub lambda: f64,
    /// How `λ_n` was obtained.
    pub method: Method,
    /// Method-specific residual: `|characteristic function|` (normalised to
    /// `[0, 1]`) for the characteristic and asymptotic methods, the Prüfer
    /// angle mismatch for the oracle.
    pub residual: f64,
}

/// `R_k(x) = J_k(2√x)/Y_k(2√x)`.
pub fn bessel_ratio(order: u32, x: f64) -> Result<f64> {
    let (j, y) = bessel_jy(order, 2.0 * x.sqrt())?;
    Ok(j / y)
}

/// Relative margin by which the analysed interval extends past `γ`, so that
/// a pole sitting exactly at `γ` is detected as an interior sign change.
const DOMAIN_MARGIN: f64 = 1e-6;

/// `R_k` analysed on `(0, γ(1 + 10⁻⁶)]` as a branched function.
pub fn bessel_ratio_branch(order: u32, gamma: f64) -> Result<BranchedFunction> {
    if order > 1 {
        return Err(Error::Argument(format!("R_k is used for k ∈ {{0, 1}}, got {order}")));
    }
    BranchedFunction::analyse(move |x| bessel_ratio(order, x), gamma * (1.0 + DOMAIN_MARGIN), DEFAULT_GRID)
}

/// `Θ_{R_k}(γ)`; a coupling at a zero of `Y_k(2√γ)` is an excluded parameter.
pub fn theta_bessel_ratio(order: u32, gamma: f64) -> Result<ThetaValue> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Error::Domain(format!("coupling must be positive, got {gamma}")));
    }
    bessel_ratio_branch(order, gamma)?.theta_of(gamma).map_err(|e| match e {
        Error::Pole(_) => Error::ExcludedParameter(format!("γ = {gamma} is a zero of Y_{order}(2√γ)")),
        other => other,
    })
}

/// The phase `Θ` of the two-term law: `Θ_{R_1}(γ)` (Dirichlet) or
/// `Θ_{R_0}(γ) + π` (Neumann).
pub fn asymptotic_phase(problem: &HalfLineProblem) -> Result<f64> {
    problem.validate()?;
    let t = theta_bessel_ratio(problem.bc.bessel_order(), problem.gamma)?.theta;
    Ok(match problem.bc {
        BoundaryCondition::Dirichlet => t,
        BoundaryCondition::Neumann => t + PI,
    })
}

/// Exact characteristic function at `λ`, normalised to `[−1, 1]`.
///
/// Dirichlet: `U(−a,0,w)/‖(U(−a,0,w), U(−a,−1,w))‖`. Neumann:
/// `[(γ−2k)U(−a,−1,w) + 2k(1−k)U(−a,0,w)]` divided by the sum of the moduli of
/// its two terms. All nonvanishing prefactors are dropped, so the zeros are
/// exactly the eigenvalues.
pub fn char_value(problem: &HalfLineProblem, lambda: f64) -> Result<f64> {
    problem.validate()?;
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::Domain(format!("λ must be positive, got {lambda}")));
    }
    let k = lambda.sqrt();
    let a = problem.gamma / (2.0 * k);
    let pair = kummer_u_pair(Complex64::new(-a, 0.0), -1, Complex64::new(2.0 * k, 0.0))?;
    let (u_m1, u_0) = (pair.u_b.re, pair.u_b1.re);
    Ok(match problem.bc {
        BoundaryCondition::Dirichlet => u_0 / u_0.hypot(u_m1),
        BoundaryCondition::Neumann => {
            let t1 = (problem.gamma - 2.0 * k) * u_m1;
            let t2 = 2.0 * k * (1.0 - k) * u_0;
            (t1 + t2) / (t1.abs() + t2.abs())
        }
    })
}

/// Which `P`, `Q` polynomials to use in the reduced Neumann equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PqForm {
    /// Derived from the uniform expansion of `U`; satisfies
    /// `P(γ,0)/Q(γ,0) = J_0(2√γ)/Y_0(2√γ)`.
    #[default]
    Corrected,
    /// The coefficient structure `(5k−8)(k+1)`, `(11k−8γ)(2k−γ)`,
    /// `−8√γ k(2k−γ)` as commonly quoted; it does not reduce to `R_0` at
    /// `λ = 0` unless `γ = 1`.
    AsQuoted,
}

/// Bessel coefficients `(c_1, c_2, c_3)` with `P = Σ c_ν J_ν(2√γ)`,
/// `Q = Σ c_ν Y_ν(2√γ)`.
pub fn pq_coefficients(gamma: f64, lambda: f64, form: PqForm) -> [f64; 3] {
    let k = lambda.sqrt();
    let sg = gamma.sqrt();
    match form {
        PqForm::Corrected => [gamma * (1.0 - k), -sg * (gamma - 2.0 * k), -k * (gamma - 2.0 * k)],
        PqForm::AsQuoted => [
            sg * (5.0 * k - 8.0) * (k + 1.0),
            (11.0 * k - 8.0 * gamma) * (2.0 * k - gamma),
            -8.0 * sg * k * (2.0 * k - gamma),
        ],
    }
}

/// `(P(γ, λ), Q(γ, λ))`.
pub fn pq(gamma: f64, lambda: f64, form: PqForm) -> Result<(f64, f64)> {
    let t = bessel_table(2.0 * gamma.sqrt())?;
    let c = pq_coefficients(gamma, lambda, form);
    let p = c[0] * t.j[1] + c[1] * t.j[2] + c[2] * t.j[3];
    let q = c[0] * t.y[1] + c[1] * t.y[2] + c[2] * t.y[3];
    Ok((p, q))
}

/// Both sides of the reduced equation `tan(γπ/(2√λ)) = G`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedSides {
    /// `tan(γπ/(2√λ))`.
    pub tan_lhs: f64,
    /// `G`: `−R_1(γ)` (Dirichlet) or `−P(γ,λ)/Q(γ,λ)` (Neumann).
    pub rhs: f64,
}

impl ReducedSides {
    /// `|sin(πa) − G cos(πa)|/√(1+G²)`: a bounded measure of the mismatch.
    pub fn mismatch(&self) -> f64 {
        let phase = self.tan_lhs.atan();
        let target = self.rhs.atan();
        let d = (phase - target).rem_euclid(PI);
        d.min(PI - d).sin()
    }
}

/// Largest `λ/γ²` for which the reduced equation is considered valid
/// (equivalently `a = γ/(2√λ) ≥ 5`).
pub const REDUCTION_LIMIT: f64 = 0.01;

/// Reduced characteristic equation at `λ` with the corrected `P`, `Q`.
pub fn char_reduced(problem: &HalfLineProblem, lambda: f64) -> Result<ReducedSides> {
    char_reduced_with(problem, lambda, PqForm::Corrected)
}

/// Reduced characteristic equation with a chosen `P`, `Q` form.
pub fn char_reduced_with(problem: &HalfLineProblem, lambda: f64, form: PqForm) -> Result<ReducedSides> {
    problem.validate()?;
    let gamma = problem.gamma;
    if !(lambda >= 0.0 && lambda <= REDUCTION_LIMIT * gamma * gamma) {
        return Err(Error::Regime(format!(
            "reduced equation needs 0 ≤ λ ≤ {REDUCTION_LIMIT}·γ² (got λ = {lambda}, γ = {gamma})"
        )));
    }
    let tan_lhs = if lambda == 0.0 { f64::NAN } else { (gamma * PI / (2.0 * lambda.sqrt())).tan() };
    let rhs = reduced_rhs(problem, lambda, form)?;
    Ok(ReducedSides { tan_lhs, rhs })
}

fn reduced_rhs(problem: &HalfLineProblem, lambda: f64, form: PqForm) -> Result<f64> {
    match problem.bc {
        BoundaryCondition::Dirichlet => Ok(-bessel_ratio(1, problem.gamma)?),
        BoundaryCondition::Neumann => {
            let (p, q) = pq(problem.gamma, lambda, form)?;
            Ok(-p / q)
        }
    }
}

/// Two-term asymptotic value `γ²/(4n²)·(1 + 2Θ/(πn))`.
pub fn lambda_asymptotic(problem: &HalfLineProblem, n: usize) -> Result<f64> {
    let phase = asymptotic_phase(problem)?;
    lambda_from_phase(problem.gamma, phase, n)
}

fn lambda_from_phase(gamma: f64, phase: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Argument("eigenvalue indices start at 1".into()));
    }
    let n = n as f64;
    Ok(gamma * gamma / (4.0 * n * n) * (1.0 + 2.0 * phase / (PI * n)))
}

/// Step (in `a = γ/(2√λ)`) of the sign-change scan of the exact
/// characteristic function; roots are about one unit apart in `a`.
const SCAN_STEP: f64 = 1.0 / 16.0;

/// The first `n_max` eigenvalues by the chosen method, ordered by `n`.
pub fn solve_sa_spectrum(problem: &HalfLineProblem, n_max: usize, method: Method) -> Result<Vec<SAEigenvalue>> {
    problem.validate()?;
    if n_max == 0 {
        return Err(Error::Argument("n_max must be at least 1".into()));
    }
    match method {
        Method::Oracle => {
            let out: Vec<Result<SAEigenvalue>> = par::map_range(n_max, |i| {
                let n = i + 1;
                let lambda = oracle::shoot_index(problem, n)?;
                Ok(SAEigenvalue { n, lambda, method, residual: oracle_residual(problem, n, lambda)? })
            });
            out.into_iter().collect()
        }
        Method::Asymptotic => {
            let phase = asymptotic_phase(problem)?;
            let out: Vec<Result<SAEigenvalue>> = par::map_range(n_max, |i| {
                let lambda = lambda_from_phase(problem.gamma, phase, i + 1)?;
                let residual = if lambda > 0.0 { char_value(problem, lambda)?.abs() } else { f64::NAN };
                Ok(SAEigenvalue { n: i + 1, lambda, method, residual })
            });
            out.into_iter().collect()
        }
        Method::CharExact => solve_exact(problem, n_max),
        Method::CharReduced => solve_reduced(problem, n_max),
    }
}

fn oracle_residual(problem: &HalfLineProblem, n: usize, lambda: f64) -> Result<f64> {
    let config = oracle::IntegrationConfig::default();
    let phi = oracle::prufer_at_zero(lambda, problem.gamma, &config)?;
    let level = -((n - 1) as f64) * PI
        + match problem.bc {
            BoundaryCondition::Dirichlet => 0.0,
            BoundaryCondition::Neumann => PI / 2.0,
        };
    Ok((phi - level).abs())
}

/// Characteristic function as a function of `a = γ/(2√λ)`.
fn char_of_a(problem: &HalfLineProblem, a: f64) -> Result<f64> {
    let k = problem.gamma / (2.0 * a);
    char_value(problem, k * k)
}

fn solve_exact(problem: &HalfLineProblem, n_max: usize) -> Result<Vec<SAEigenvalue>> {
    let gamma = problem.gamma;
    // λ < γ, i.e. a > √γ/2; roots sit about one unit apart in a.
    let a_start = 0.5 * gamma.sqrt() * (1.0 + 1e-9);
    let mut roots: Vec<f64> = Vec::with_capacity(n_max);
    let mut block_start = a_start;
    let block = (n_max as f64 + 4.0).max(8.0);
    while roots.len() < n_max {
        let cells = (block / SCAN_STEP).ceil() as usize;
        let grid: Vec<f64> = (0..=cells).map(|i| block_start + i as f64 * SCAN_STEP).collect();
        let values: Vec<f64> = par::map(&grid, |&a| char_of_a(problem, a)).into_iter().collect::<Result<_>>()?;
        let brackets: Vec<usize> = (0..cells).filter(|&i| (values[i] >= 0.0) != (values[i + 1] >= 0.0)).collect();
        let refined: Vec<Result<f64>> = par::map(&brackets, |&i| {
            brent(|a| char_of_a(problem, a), grid[i], grid[i + 1], values[i], values[i + 1], Tolerance::relative(2e-12))
        });
        for r in refined {
            roots.push(r?);
        }
        block_start = grid[cells];
        if block_start > 1e6 {
            return Err(Error::Indexing(roots.len() + 1));
        }
    }
    roots.truncate(n_max);
    let out: Vec<Result<SAEigenvalue>> = par::map_range(n_max, |i| {
        let a = roots[i];
        let k = gamma / (2.0 * a);
        let lambda = k * k;
        Ok(SAEigenvalue { n: i + 1, lambda, method: Method::CharExact, residual: char_value(problem, lambda)?.abs() })
    });
    out.into_iter().collect()
}

/// Half-width (in `a = γ/(2√λ)`) of the bracket in which a reduced root is
/// refined; consecutive roots are about one unit apart.
const REFINE_HALF_WIDTH: f64 = 0.4;

/// Roots of the reduced tan equation, each refined on the exact
/// characteristic function.
fn solve_reduced(problem: &HalfLineProblem, n_max: usize) -> Result<Vec<SAEigenvalue>> {
    let gamma = problem.gamma;
    let phase = asymptotic_phase(problem)?;
    // tan(πa) = G with a = γκ, κ = 1/(2√λ); seed a_n = n − Θ/π.
    let rhs = |kappa: f64| {
        let lambda = 1.0 / (4.0 * kappa * kappa);
        reduced_rhs(problem, lambda, PqForm::Corrected).unwrap_or(f64::NAN)
    };
    // Indices whose seed lies outside the reduction regime are computed from
    // the exact characteristic function and tagged accordingly.
    let exact_below = (1..=n_max)
        .take_while(|&n| {
            let kappa = (PI * n as f64 - phase) / (PI * gamma);
            kappa <= 0.0 || 1.0 / (4.0 * kappa * kappa) > REDUCTION_LIMIT * gamma * gamma
        })
        .count();
    let roots = if exact_below < n_max {
        tan_roots(PI * gamma, -phase, Some(&rhs), (exact_below as i64 + 1)..=n_max as i64)?
    } else {
        Vec::new()
    };
    let exact = if exact_below > 0 { solve_exact(problem, exact_below)? } else { Vec::new() };
    let out: Vec<Result<SAEigenvalue>> = par::map_range(n_max, |i| {
        if i < exact_below {
            return Ok(exact[i]);
        }
        // The reduced root is accurate to O(λ) in a; the neglected terms are
        // absorbed by refining on the exact characteristic function inside
        // the half-cell around it.
        let seed = gamma * roots[i - exact_below].kappa;
        let (lo, hi) = (seed - REFINE_HALF_WIDTH, seed + REFINE_HALF_WIDTH);
        let (f_lo, f_hi) = (char_of_a(problem, lo)?, char_of_a(problem, hi)?);
        if (f_lo >= 0.0) == (f_hi >= 0.0) {
            return Err(Error::Indexing(i + 1));
        }
        let a = brent(|a| char_of_a(problem, a), lo, hi, f_lo, f_hi, Tolerance::relative(2e-12))?;
        let k = gamma / (2.0 * a);
        let lambda = k * k;
        Ok(SAEigenvalue { n: i + 1, lambda, method: Method::CharReduced, residual: char_value(problem, lambda)?.abs() })
    });
    out.into_iter().collect()
}

/// `λ_n^N > λ_n^D > λ_{n+1}^N` for all available `n`.
pub fn interlaced(dirichlet: &[SAEigenvalue], neumann: &[SAEigenvalue]) -> bool {
    let m = dirichlet.len().min(neumann.len());
    (0..m).all(|i| {
        let ok = neumann[i].lambda > dirichlet[i].lambda;
        let next = neumann.get(i + 1).is_none_or(|nn| dirichlet[i].lambda > nn.lambda);
        ok && next
    })
}
