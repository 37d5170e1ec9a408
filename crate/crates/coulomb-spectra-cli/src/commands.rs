//! The computations behind each subcommand, producing a table and a plot.

use crate::error::CliError;
use crate::svg::{Plot, Scale, Series, Style};
use crate::table::Table;
use coulomb_spectra::contour::SearchConfig;
use coulomb_spectra::nonsym::{locate_nonsym_eigs_with, AsymPotential};
use coulomb_spectra::nsa_spectrum::{locate_complex_eigs_with, upsilon_mp, ComplexEigenvalue, CurveBranch, Quadrant};
use coulomb_spectra::sa_spectrum::{solve_sa_spectrum, BoundaryCondition, HalfLineProblem, Method};
use coulomb_spectra::specfun::{bessel_table, kummer_u_integral, kummer_u_temme};
use coulomb_spectra::Complex64;
use std::f64::consts::PI;

/// Output of a command.
pub struct Report {
    /// Tabular result (the CSV output).
    pub table: Table,
    /// Figure of the same data (the SVG output), if the command has one.
    pub plot: Option<Plot>,
}

/// Real eigenvalues of one half-line problem.
pub fn sa_eigs(gamma: f64, bc: BoundaryCondition, n_max: usize, method: Method) -> Result<Report, CliError> {
    let problem = HalfLineProblem::new(gamma, bc)?;
    let eigs = solve_sa_spectrum(&problem, n_max, method)?;
    let mut table = Table::new(&["n", "lambda", "method", "residual"]);
    for e in &eigs {
        table.push(vec![e.n.into(), e.lambda.into(), e.method.to_string().into(), e.residual.into()]);
    }
    let plot = Plot {
        title: format!("λ_n, γ = {gamma}, {bc}, {method}"),
        x_label: "n".into(),
        y_label: "λ_n".into(),
        x_scale: Scale::Log,
        y_scale: Scale::Log,
        series: vec![Series {
            name: method.to_string(),
            points: eigs.iter().map(|e| (e.n as f64, e.lambda)).collect(),
            style: Style::Dots,
        }],
    };
    Ok(Report { table, plot: Some(plot) })
}

/// Oracle, exact and asymptotic eigenvalues side by side.
pub fn compare(gamma: f64, bc: BoundaryCondition, n_max: usize) -> Result<Report, CliError> {
    let problem = HalfLineProblem::new(gamma, bc)?;
    let oracle = solve_sa_spectrum(&problem, n_max, Method::Oracle)?;
    let exact = solve_sa_spectrum(&problem, n_max, Method::CharExact)?;
    let asym = solve_sa_spectrum(&problem, n_max, Method::Asymptotic)?;
    let mut table = Table::new(&[
        "n",
        "lambda_oracle",
        "lambda_char_exact",
        "lambda_asymptotic",
        "rel_err_char_exact",
        "rel_err_asymptotic",
    ]);
    let mut err_exact = Vec::new();
    let mut err_asym = Vec::new();
    for ((o, e), a) in oracle.iter().zip(&exact).zip(&asym) {
        let re = (e.lambda - o.lambda).abs() / o.lambda;
        let ra = (a.lambda - o.lambda).abs() / o.lambda;
        table.push(vec![o.n.into(), o.lambda.into(), e.lambda.into(), a.lambda.into(), re.into(), ra.into()]);
        err_exact.push((o.n as f64, re));
        err_asym.push((o.n as f64, ra));
    }
    let plot = Plot {
        title: format!("relative error against the oracle, γ = {gamma}, {bc}"),
        x_label: "n".into(),
        y_label: "relative error".into(),
        x_scale: Scale::Log,
        y_scale: Scale::Log,
        series: vec![
            Series { name: "char_exact".into(), points: err_exact, style: Style::Squares },
            Series { name: "asymptotic".into(), points: err_asym, style: Style::Dots },
        ],
    };
    Ok(Report { table, plot: Some(plot) })
}

const EIG_HEADERS: [&str; 8] = ["n", "re_mu", "im_mu", "residual", "pred_D_re", "pred_D_im", "pred_N_re", "pred_N_im"];

fn eig_table(roots: &[ComplexEigenvalue]) -> Table {
    let mut table = Table::new(&EIG_HEADERS);
    for r in roots {
        table.push(vec![
            r.n.into(),
            r.mu.re.into(),
            r.mu.im.into(),
            r.residual.into(),
            r.predicted_d.re.into(),
            r.predicted_d.im.into(),
            r.predicted_n.re.into(),
            r.predicted_n.im.into(),
        ]);
    }
    table
}

fn eig_plot(title: String, roots: &[ComplexEigenvalue]) -> Plot {
    let pts = |f: fn(&ComplexEigenvalue) -> Complex64| roots.iter().map(|r| (f(r).re, f(r).im)).collect();
    Plot {
        title,
        x_label: "Re μ".into(),
        y_label: "Im μ".into(),
        x_scale: Scale::Linear,
        y_scale: Scale::Linear,
        series: vec![
            Series { name: "eigenvalues".into(), points: pts(|r| r.mu), style: Style::Dots },
            Series { name: "predicted (D)".into(), points: pts(|r| r.predicted_d), style: Style::Squares },
            Series { name: "predicted (N)".into(), points: pts(|r| r.predicted_n), style: Style::Squares },
        ],
    }
}

/// Complex eigenvalues of the symmetric indefinite operator in one quadrant.
pub fn nsa_eigs(gamma: f64, re_window: (f64, f64), quadrant: Quadrant, search: &SearchConfig) -> Result<Report, CliError> {
    let roots = locate_complex_eigs_with(gamma, re_window, quadrant, search)?;
    let title = format!("eigenvalues, γ = {gamma}, quadrant {quadrant}");
    Ok(Report { table: eig_table(&roots), plot: Some(eig_plot(title, &roots)) })
}

/// Complex eigenvalues with different couplings on the two half lines.
pub fn nonsym(
    gamma_plus: f64,
    gamma_minus: f64,
    re_window: (f64, f64),
    quadrant: Quadrant,
    search: &SearchConfig,
) -> Result<Report, CliError> {
    let potential = AsymPotential::new(gamma_plus, gamma_minus)?;
    let roots = locate_nonsym_eigs_with(&potential, re_window, quadrant, search)?;
    let title = format!("eigenvalues, γ₊ = {gamma_plus}, γ₋ = {gamma_minus}, quadrant {quadrant}");
    Ok(Report { table: eig_table(&roots), plot: Some(eig_plot(title, &roots)) })
}

/// Accumulation curves `τ∓(t)` on `points` log-spaced parameters.
pub fn curves(gamma: f64, t_range: (f64, f64), points: usize) -> Result<Report, CliError> {
    let (lo, hi) = t_range;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) || points < 2 {
        return Err(CliError::Usage(format!("need 0 < t-min < t-max and at least 2 points, got {t_range:?}, {points}")));
    }
    let params = upsilon_mp(gamma)?;
    let mut table = Table::new(&["t", "re_tau_minus", "im_tau_minus", "re_tau_plus", "im_tau_plus"]);
    let (mut minus, mut plus) = (Vec::new(), Vec::new());
    for j in 0..points {
        let t = (lo.ln() + (hi.ln() - lo.ln()) * j as f64 / (points - 1) as f64).exp();
        let m = params.tau(CurveBranch::Minus, t)?;
        let p = params.tau(CurveBranch::Plus, t)?;
        table.push(vec![t.into(), m.re.into(), m.im.into(), p.re.into(), p.im.into()]);
        minus.push((m.re, m.im));
        plus.push((p.re, p.im));
    }
    let plot = Plot {
        title: format!("accumulation curves, γ = {gamma}"),
        x_label: "Re τ".into(),
        y_label: "Im τ".into(),
        x_scale: Scale::Linear,
        y_scale: Scale::Linear,
        series: vec![
            Series { name: "τ⁻".into(), points: minus, style: Style::Line },
            Series { name: "τ⁺".into(), points: plus, style: Style::Line },
        ],
    };
    Ok(Report { table, plot: Some(plot) })
}

fn slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

/// Special-function self-checks: Bessel identities on a grid and the decay
/// rate of the uniform Kummer expansion. Fails if any check misses its
/// tolerance, after the table is produced.
pub fn specfun_check() -> Result<(Report, usize), CliError> {
    let mut table = Table::new(&["check", "value", "tolerance", "status"]);
    let mut failures = 0;
    let mut record = |table: &mut Table, name: String, value: f64, ok: bool, tol: &str| {
        if !ok {
            failures += 1;
        }
        table.push(vec![name.into(), value.into(), tol.into(), if ok { "pass" } else { "fail" }.into()]);
    };
    let (mut wronskian, mut recurrence, mut amplitude) = (0.0_f64, 0.0_f64, 0.0_f64);
    for j in 0..200 {
        let x = (1e-2f64.ln() + (800f64.ln() - 1e-2f64.ln()) * j as f64 / 199.0).exp();
        let t = bessel_table(x)?;
        wronskian = wronskian.max(((t.j[1] * t.y[0] - t.j[0] * t.y[1]) * PI * x / 2.0 - 1.0).abs());
        for nu in 1..3 {
            for c in [&t.j, &t.y] {
                let rhs = 2.0 * nu as f64 / x * c[nu];
                let scale = c[nu - 1].abs().max(c[nu + 1].abs()).max(rhs.abs());
                recurrence = recurrence.max((c[nu - 1] + c[nu + 1] - rhs).abs() / scale);
            }
        }
        let g = x * x / 4.0;
        let q = PI * g.sqrt() * (t.j[0] * t.j[1] + t.y[0] * t.y[1]);
        let s0 = t.j[0] * t.j[0] + t.y[0] * t.y[0];
        let s1 = t.j[1] * t.j[1] + t.y[1] * t.y[1];
        amplitude = amplitude.max((s0 * s1 * PI * PI * g / (1.0 + q * q) - 1.0).abs());
    }
    record(&mut table, "bessel_wronskian".into(), wronskian, wronskian <= 1e-10, "1e-10");
    record(&mut table, "bessel_recurrence".into(), recurrence, recurrence <= 1e-10, "1e-10");
    record(&mut table, "bessel_amplitude_product".into(), amplitude, amplitude <= 1e-10, "1e-10");
    for c in [0, -1] {
        for gamma in [0.5, 2.5, 10.0] {
            let mut xs = Vec::new();
            let mut ys = Vec::new();
            for k in 0..=5 {
                let a = 10.0 * 2f64.powi(k);
                let approx = kummer_u_temme(Complex64::new(a, 0.0), c, gamma)?;
                let exact = kummer_u_integral(Complex64::new(-a, 0.0), c, Complex64::new(gamma / a, 0.0))?;
                xs.push(a.ln());
                ys.push(approx.value.rel_diff(&exact).ln());
            }
            let s = slope(&xs, &ys);
            record(&mut table, format!("temme_slope_c{c}_gamma{gamma}"), s, (s + 2.0).abs() <= 0.3, "-2±0.3");
        }
    }
    Ok((Report { table, plot: None }, failures))
}

