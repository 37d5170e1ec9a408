//! Complex numbers carried with a separate real logarithmic scale.

use num_complex::Complex64;
use std::ops::{Add, Mul, Neg, Sub};

/// A complex value `mant · e^{log_scale}`.
///
/// Kummer functions and Gamma factors over the parameter ranges used here
/// routinely exceed the `f64` exponent range; keeping the scale apart lets them
/// be combined without overflow. The representation is not unique — use
/// [`Scaled::normalized`] or compare through [`Scaled::ratio`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    /// Mantissa.
    pub mant: Complex64,
    /// Natural-log scale exponent.
    pub log_scale: f64,
}

impl Scaled {
    /// Exact zero.
    pub const ZERO: Scaled = Scaled { mant: Complex64::new(0.0, 0.0), log_scale: 0.0 };

    /// Wraps a plain complex value.
    pub fn new(value: Complex64) -> Self {
        Scaled { mant: value, log_scale: 0.0 }
    }

    /// Builds `e^{log}` from a complex logarithm.
    pub fn from_log(log: Complex64) -> Self {
        Scaled { mant: Complex64::from_polar(1.0, log.im), log_scale: log.re }
    }

    /// Rescales so that `|mant|` is 1 (or leaves zero untouched).
    pub fn normalized(self) -> Self {
        let m = self.mant.norm();
        if m == 0.0 || !m.is_finite() {
            return self;
        }
        Scaled { mant: self.mant / m, log_scale: self.log_scale + m.ln() }
    }

    /// Natural log of the modulus.
    pub fn ln_abs(&self) -> f64 {
        self.mant.norm().ln() + self.log_scale
    }

    /// Principal-argument complex logarithm of the value.
    pub fn ln(&self) -> Complex64 {
        Complex64::new(self.ln_abs(), self.mant.arg())
    }

    /// Converts to a plain complex number (may overflow to infinity or underflow to zero).
    pub fn to_complex(&self) -> Complex64 {
        self.mant * self.log_scale.exp()
    }

    /// Mantissa re-expressed at a given scale: returns `z` with `z·e^{scale} = self`.
    pub fn at_scale(&self, scale: f64) -> Complex64 {
        self.mant * (self.log_scale - scale).exp()
    }

    /// `self / other` as a plain complex number.
    pub fn ratio(&self, other: &Scaled) -> Complex64 {
        self.mant / other.mant * (self.log_scale - other.log_scale).exp()
    }

    /// Multiplies by a plain complex factor.
    pub fn scale_by(self, factor: Complex64) -> Self {
        Scaled { mant: self.mant * factor, log_scale: self.log_scale }
    }

    /// Relative difference `|self/other − 1|`.
    pub fn rel_diff(&self, other: &Scaled) -> f64 {
        (self.ratio(other) - 1.0).norm()
    }

    /// Multiplicative inverse.
    pub fn recip(self) -> Self {
        Scaled { mant: self.mant.inv(), log_scale: -self.log_scale }
    }
}

impl Mul for Scaled {
    type Output = Scaled;
    fn mul(self, rhs: Scaled) -> Scaled {
        Scaled { mant: self.mant * rhs.mant, log_scale: self.log_scale + rhs.log_scale }.normalized()
    }
}

impl Add for Scaled {
    type Output = Scaled;
    fn add(self, rhs: Scaled) -> Scaled {
        if self.mant == Complex64::new(0.0, 0.0) {
            return rhs;
        }
        if rhs.mant == Complex64::new(0.0, 0.0) {
            return self;
        }
        let s = self.log_scale.max(rhs.log_scale);
        Scaled { mant: self.at_scale(s) + rhs.at_scale(s), log_scale: s }
    }
}

impl Neg for Scaled {
    type Output = Scaled;
    fn neg(self) -> Scaled {
        Scaled { mant: -self.mant, log_scale: self.log_scale }
    }
}

impl Sub for Scaled {
    type Output = Scaled;
    fn sub(self, rhs: Scaled) -> Scaled {
        self + (-rhs)
    }
}
