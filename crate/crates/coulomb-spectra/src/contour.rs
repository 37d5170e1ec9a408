//! Certified location of the zeros of an analytic function in a rectangle.
//!
//! The number of zeros inside a rectangle is the winding number of `f` along
//! its boundary. Edges are sampled by recursive bisection until consecutive
//! samples differ in argument by less than [`SearchConfig::arg_step`];
//! rectangles with a nonzero count are split into four, and a rectangle
//! holding exactly one zero is finished by Newton's method. Every located
//! zero is therefore backed by a winding count, and the number of zeros
//! returned equals the winding number of the outer rectangle.
//!
//! Function values are [`Scaled`] so that functions far outside the `f64`
//! exponent range can be handled; only arguments and ratios are used.

use crate::error::{Error, Result};
use crate::par;
use crate::specfun::Scaled;
use num_complex::Complex64;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::Mutex;

/// An axis-parallel closed rectangle in the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    /// Real-part interval `(lo, hi)`.
    pub re: (f64, f64),
    /// Imaginary-part interval `(lo, hi)`.
    pub im: (f64, f64),
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}] × i[{:e}, {:e}]", self.re.0, self.re.1, self.im.0, self.im.1)
    }
}

impl Rect {
    /// Validated constructor (`lo < hi` in both directions).
    pub fn new(re: (f64, f64), im: (f64, f64)) -> Result<Self> {
        let ok = |(lo, hi): (f64, f64)| lo.is_finite() && hi.is_finite() && lo < hi;
        if ok(re) && ok(im) {
            Ok(Rect { re, im })
        } else {
            Err(Error::Argument(format!("degenerate rectangle re {re:?}, im {im:?}")))
        }
    }

    /// Corners in counter-clockwise order starting at the lower left.
    pub fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.re.0, self.im.0),
            Complex64::new(self.re.1, self.im.0),
            Complex64::new(self.re.1, self.im.1),
            Complex64::new(self.re.0, self.im.1),
        ]
    }

    /// Whether `z` lies in the rectangle enlarged by `slack` times its size.
    pub fn contains(&self, z: Complex64, slack: f64) -> bool {
        let sr = slack * (self.re.1 - self.re.0);
        let si = slack * (self.im.1 - self.im.0);
        z.re >= self.re.0 - sr && z.re <= self.re.1 + sr && z.im >= self.im.0 - si && z.im <= self.im.1 + si
    }

    /// Interior point at fraction `t` of each side, measured geometrically
    /// for intervals that stay on one side of zero and span a large ratio
    /// (zeros accumulating at the origin are spread evenly in `log |z|`).
    pub fn interior(&self, t: f64) -> Complex64 {
        Complex64::new(split_point(self.re, t), split_point(self.im, t))
    }

    /// The four sub-rectangles obtained by cutting at [`Rect::interior`]`(t)`.
    pub fn quarter(&self, t: f64) -> [Rect; 4] {
        let c = self.interior(t);
        [
            Rect { re: (self.re.0, c.re), im: (self.im.0, c.im) },
            Rect { re: (c.re, self.re.1), im: (self.im.0, c.im) },
            Rect { re: (c.re, self.re.1), im: (c.im, self.im.1) },
            Rect { re: (self.re.0, c.re), im: (c.im, self.im.1) },
        ]
    }
}

/// Whether an interval is subdivided on a logarithmic scale.
fn is_geometric(lo: f64, hi: f64) -> bool {
    lo * hi > 0.0 && (hi / lo > 4.0 || lo / hi > 4.0)
}

fn split_point((lo, hi): (f64, f64), t: f64) -> f64 {
    if t == 0.5 {
        return midpoint(lo, hi);
    }
    if is_geometric(lo, hi) {
        lo.signum() * ((1.0 - t) * lo.abs().ln() + t * hi.abs().ln()).exp()
    } else {
        lo + t * (hi - lo)
    }
}

/// Symmetric midpoint (`midpoint(a, b) == midpoint(b, a)` exactly, so edges
/// shared by neighbouring rectangles are sampled at identical points).
fn midpoint(a: f64, b: f64) -> f64 {
    if is_geometric(a, b) {
        a.signum() * (a.abs() * b.abs()).sqrt()
    } else {
        0.5 * (a + b)
    }
}

/// Midpoint of an axis-parallel segment.
fn segment_midpoint(p: Complex64, q: Complex64) -> Complex64 {
    if p.re == q.re {
        Complex64::new(p.re, midpoint(p.im, q.im))
    } else {
        Complex64::new(midpoint(p.re, q.re), p.im)
    }
}

/// Settings of [`locate_zeros`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    /// Maximum rectangle subdivision depth.
    pub max_depth: usize,
    /// Minimum number of bisection levels on every edge (`2^levels` segments).
    pub min_edge_levels: usize,
    /// Maximum bisection depth on an edge; exceeding it signals a zero on or
    /// extremely close to the edge.
    pub max_edge_levels: usize,
    /// Largest accepted change of `arg f` between neighbouring samples.
    pub arg_step: f64,
    /// Largest accepted change of `ln |f|` between neighbouring samples. Fast
    /// rotation of `arg f` along an edge goes with fast variation of `|f|`
    /// nearby, so this guards against sampling that skips whole turns.
    pub log_modulus_step: f64,
    /// Newton stopping rule `|Δz| ≤ newton_tol·|z|`.
    pub newton_tol: f64,
    /// Relative step of the central-difference derivative.
    pub derivative_step: f64,
    /// Maximum Newton iterations.
    pub newton_iterations: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_depth: 40,
            min_edge_levels: 6,
            max_edge_levels: 36,
            arg_step: 0.5,
            log_modulus_step: 1.0,
            newton_tol: 1e-10,
            derivative_step: 1e-6,
            newton_iterations: 60,
        }
    }
}

/// A zero certified by a unit winding count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocatedZero {
    /// Position after Newton refinement.
    pub z: Complex64,
    /// Size of the last Newton step.
    pub last_step: f64,
    /// The rectangle whose winding number certified the zero.
    pub certificate: Rect,
}

/// Ways a sub-search can fail; `EdgeHazard` triggers a shifted split.
enum Failure {
    EdgeHazard(Complex64),
    Fatal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Fatal(e)
    }
}

type Eval<'a> = dyn Fn(Complex64) -> Result<Scaled> + Sync + 'a;

struct Locator<'a> {
    f: &'a Eval<'a>,
    config: SearchConfig,
    cache: Mutex<HashMap<(u64, u64), Scaled>>,
}

/// Cut positions tried in turn when a split line passes too close to a zero.
const SPLIT_FRACTIONS: [f64; 7] = [0.5, 0.43, 0.57, 0.37, 0.63, 0.31, 0.69];

/// All zeros of `f` inside `rect`, sorted by descending modulus.
///
/// `f` must be analytic on a neighbourhood of the closed rectangle. Fails
/// with [`Error::IncompleteSearch`] if a rectangle cannot be resolved within
/// the depth limit, and with [`Error::RootSearch`] if a zero lies on the
/// outer boundary.
pub fn locate_zeros<F>(f: F, rect: Rect, config: &SearchConfig) -> Result<Vec<LocatedZero>>
where
    F: Fn(Complex64) -> Result<Scaled> + Sync,
{
    let locator = Locator { f: &f, config: *config, cache: Mutex::new(HashMap::new()) };
    let total = match locator.winding(&rect) {
        Ok(w) => w,
        Err(Failure::EdgeHazard(z)) => {
            return Err(Error::RootSearch(format!("zero on or near the search boundary at {z}")))
        }
        Err(Failure::Fatal(e)) => return Err(e),
    };
    let mut zeros = match locator.search(rect, total, 0) {
        Ok(z) => z,
        Err(Failure::EdgeHazard(z)) => {
            return Err(Error::IncompleteSearch {
                found: 0,
                expected: total,
                rect: format!("{rect} (unresolvable zero near {z})"),
            })
        }
        Err(Failure::Fatal(e)) => return Err(e),
    };
    if zeros.len() as i64 != total {
        return Err(Error::IncompleteSearch { found: zeros.len(), expected: total, rect: rect.to_string() });
    }
    zeros.sort_by(|a, b| b.z.norm().total_cmp(&a.z.norm()));
    Ok(zeros)
}

/// Winding number of `f` along the boundary of `rect`.
pub fn winding_number<F>(f: F, rect: Rect, config: &SearchConfig) -> Result<i64>
where
    F: Fn(Complex64) -> Result<Scaled> + Sync,
{
    let locator = Locator { f: &f, config: *config, cache: Mutex::new(HashMap::new()) };
    locator.winding(&rect).map_err(|e| match e {
        Failure::EdgeHazard(z) => Error::RootSearch(format!("zero on or near the contour at {z}")),
        Failure::Fatal(e) => e,
    })
}

impl Locator<'_> {
    fn eval(&self, z: Complex64) -> Result<Scaled> {
        let key = (z.re.to_bits(), z.im.to_bits());
        if let Some(v) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(*v);
        }
        let v = (self.f)(z)?;
        if !(v.mant.is_finite() && v.log_scale.is_finite()) {
            return Err(Error::RootSearch(format!("non-finite function value at {z}")));
        }
        self.cache.lock().expect("cache lock").insert(key, v);
        Ok(v)
    }

    fn winding(&self, rect: &Rect) -> std::result::Result<i64, Failure> {
        let c = rect.corners();
        let edges: Vec<(Complex64, Complex64)> = (0..4).map(|i| (c[i], c[(i + 1) % 4])).collect();
        let changes = par::map(&edges, |&(p, q)| self.edge_change(p, q));
        let mut total = 0.0;
        for change in changes {
            total += change?;
        }
        let turns = total / (2.0 * PI);
        let rounded = turns.round();
        if (turns - rounded).abs() > 0.05 {
            return Err(Failure::Fatal(Error::RootSearch(format!(
                "non-integer winding {turns:.4} around {rect}"
            ))));
        }
        if rounded < 0.0 {
            return Err(Failure::Fatal(Error::RootSearch(format!(
                "negative winding {rounded} around {rect}: function not analytic there"
            ))));
        }
        Ok(rounded as i64)
    }

    /// Continuous change of `arg f` from `p` to `q`.
    fn edge_change(&self, p: Complex64, q: Complex64) -> std::result::Result<f64, Failure> {
        let fp = self.eval(p)?;
        let fq = self.eval(q)?;
        self.refine(p, fp, q, fq, 0)
    }

    fn refine(&self, p: Complex64, fp: Scaled, q: Complex64, fq: Scaled, level: usize) -> std::result::Result<f64, Failure> {
        let m = segment_midpoint(p, q);
        let fm = self.eval(m)?;
        let d1 = fm.ratio(&fp).arg();
        let d2 = fq.ratio(&fm).arg();
        let (step, mod_step) = (self.config.arg_step, self.config.log_modulus_step);
        let smooth = d1.abs() < step
            && d2.abs() < step
            && (d1 - d2).abs() < 0.5 * step
            && (fm.ln_abs() - fp.ln_abs()).abs() < mod_step
            && (fq.ln_abs() - fm.ln_abs()).abs() < mod_step;
        if level + 1 >= self.config.min_edge_levels && smooth {
            return Ok(d1 + d2);
        }
        if level >= self.config.max_edge_levels {
            return Err(Failure::EdgeHazard(m));
        }
        Ok(self.refine(p, fp, m, fm, level + 1)? + self.refine(m, fm, q, fq, level + 1)?)
    }

    fn search(&self, rect: Rect, winding: i64, depth: usize) -> std::result::Result<Vec<LocatedZero>, Failure> {
        if winding == 0 {
            return Ok(Vec::new());
        }
        if winding == 1 {
            if let Ok((z, last_step)) = self.newton(rect.interior(0.5)) {
                if rect.contains(z, 1e-9) {
                    return Ok(vec![LocatedZero { z, last_step, certificate: rect }]);
                }
            }
        }
        if depth >= self.config.max_depth {
            return Err(Failure::Fatal(Error::IncompleteSearch {
                found: 0,
                expected: winding,
                rect: rect.to_string(),
            }));
        }
        let mut last_hazard = rect.interior(0.5);
        for &t in &SPLIT_FRACTIONS {
            let children = rect.quarter(t);
            let counts = par::map(&children, |c| self.winding(c));
            let mut ws = [0i64; 4];
            let mut hazard = None;
            for (w, c) in ws.iter_mut().zip(counts) {
                match c {
                    Ok(v) => *w = v,
                    Err(Failure::EdgeHazard(z)) => hazard = Some(z),
                    Err(fatal) => return Err(fatal),
                }
            }
            if let Some(z) = hazard {
                last_hazard = z;
                continue;
            }
            let sum: i64 = ws.iter().sum();
            if sum != winding {
                return Err(Failure::Fatal(Error::IncompleteSearch {
                    found: sum as usize,
                    expected: winding,
                    rect: format!("{rect} (children disagree with parent)"),
                }));
            }
            let pairs: Vec<(Rect, i64)> = children.into_iter().zip(ws).collect();
            let results = par::map(&pairs, |&(c, w)| self.search(c, w, depth + 1));
            let mut zeros = Vec::new();
            for r in results {
                zeros.extend(r?);
            }
            return Ok(zeros);
        }
        Err(Failure::EdgeHazard(last_hazard))
    }

    /// Newton's method with a central-difference derivative; all values are
    /// taken relative to the scale of `f(z)`.
    fn newton(&self, z0: Complex64) -> Result<(Complex64, f64)> {
        let mut z = z0;
        for _ in 0..self.config.newton_iterations {
            let h = self.config.derivative_step * z.norm();
            let f0 = (self.f)(z)?;
            if f0.mant == Complex64::new(0.0, 0.0) {
                return Ok((z, 0.0));
            }
            let fp = (self.f)(z + h)?;
            let fm = (self.f)(z - h)?;
            let deriv = (fp.at_scale(f0.log_scale) - fm.at_scale(f0.log_scale)) / (2.0 * h);
            let step = f0.mant / deriv;
            if !step.is_finite() {
                return Err(Error::RootSearch(format!("Newton step undefined at {z}")));
            }
            z -= step;
            if step.norm() <= self.config.newton_tol * z.norm() {
                return Ok((z, step.norm()));
            }
        }
        Err(Error::RootSearch(format!("Newton did not converge from {z0}")))
    }
}
