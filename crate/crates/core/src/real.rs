//! Scalar abstraction over `f64` and the double-double type.
//!
//! Every margin expression in the verifier is written once, generically
//! over [`Real`], and instantiated at native and extended precision. Only
//! the functions actually used by margin evaluators are on the trait, and
//! the transcendentals are only required on the argument ranges the
//! certification grids produce (documented per method in `dd`).

use std::ops::{Add, Div, Mul, Neg, Sub};

pub trait Real:
    Copy
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Exact conversion from f64 (grid coordinates and parameter samples
    /// are f64 values; the embedding must not round).
    fn from_f64(x: f64) -> Self;
    /// Nearest f64.
    fn to_f64(self) -> f64;
    fn pi() -> Self;
    /// Relative truncation threshold for series evaluated at this
    /// precision.
    fn series_eps() -> f64;
    /// Margin-guard width per unit of scale: anything closer to zero than
    /// `guard_eps() * scale` is too close to call at this precision.
    fn guard_eps() -> f64;
    /// Exact embedding of a two-limb constant (used to hand double-double
    /// sharp constants to generic code; the f64 side rounds to nearest).
    fn from_dd(hi: f64, lo: f64) -> Self;

    fn abs(self) -> Self;
    fn max(self, other: Self) -> Self;
    fn sqrt(self) -> Self;
    fn cbrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;
    fn asin(self) -> Self;
    fn atan(self) -> Self;
    fn asinh(self) -> Self;
    fn ln(self) -> Self;
    fn ln_1p(self) -> Self;

    /// `sin(t)/t` with the guarded series fallback below 1e−6.
    fn sinc(self) -> Self {
        let t = self;
        if t.abs().to_f64() < 1e-6 {
            let t2 = t * t;
            let c120 = Self::from_f64(120.0);
            let c6 = Self::from_f64(6.0);
            Self::from_f64(1.0) - t2 / c6 + t2 * t2 / c120
        } else {
            t.sin() / t
        }
    }

    /// `sinh(t)/t`, series-guarded the same way.
    fn sinhc(self) -> Self {
        let t = self;
        if t.abs().to_f64() < 1e-6 {
            let t2 = t * t;
            let c120 = Self::from_f64(120.0);
            let c6 = Self::from_f64(6.0);
            Self::from_f64(1.0) + t2 / c6 + t2 * t2 / c120
        } else {
            t.sinh() / t
        }
    }
}

impl Real for f64 {
    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
    #[inline]
    fn pi() -> Self {
        std::f64::consts::PI
    }
    #[inline]
    fn series_eps() -> f64 {
        1e-17
    }
    #[inline]
    fn guard_eps() -> f64 {
        // The 4-ulp band, with ε·|x| standing in for ulp(x).
        4.0 * f64::EPSILON
    }
    #[inline]
    fn from_dd(hi: f64, lo: f64) -> Self {
        hi + lo
    }
    #[inline]
    fn abs(self) -> Self {
        f64::abs(self)
    }
    #[inline]
    fn max(self, other: Self) -> Self {
        f64::max(self, other)
    }
    #[inline]
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    #[inline]
    fn cbrt(self) -> Self {
        f64::cbrt(self)
    }
    #[inline]
    fn sin(self) -> Self {
        f64::sin(self)
    }
    #[inline]
    fn cos(self) -> Self {
        f64::cos(self)
    }
    #[inline]
    fn sinh(self) -> Self {
        f64::sinh(self)
    }
    #[inline]
    fn cosh(self) -> Self {
        f64::cosh(self)
    }
    #[inline]
    fn asin(self) -> Self {
        f64::asin(self)
    }
    #[inline]
    fn atan(self) -> Self {
        f64::atan(self)
    }
    #[inline]
    fn asinh(self) -> Self {
        f64::asinh(self)
    }
    #[inline]
    fn ln(self) -> Self {
        f64::ln(self)
    }
    #[inline]
    fn ln_1p(self) -> Self {
        f64::ln_1p(self)
    }
}
