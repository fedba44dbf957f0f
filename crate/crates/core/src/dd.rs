//! Double-double arithmetic: an unevaluated sum of two f64s giving ~31
//! significant digits.
//!
//! The verifier re-evaluates any margin that native precision cannot
//! certify (inside the 4-ulp guard band) in this type. Basic operations
//! follow the classic error-free transformations (Knuth two_sum, FMA-based
//! two_prod, Dekker-style renormalization); the transcendentals are series
//! implementations valid on the argument ranges the certification grids
//! actually produce:
//!
//! - `sin`, `cos`: t ∈ [0, π/2] (co-function reflection at π/4)
//! - `sinh`, `cosh`: t ∈ [0, 20]
//! - `asin`: x ∈ [0, 1) (half-angle reduction above 0.5)
//! - `atan`: z ∈ [0, 1] (π/4 shift above 0.4)
//! - `asinh`: z ≥ 0; `ln`: x > 0; `sqrt`, `cbrt`: x > 0
//!
//! Negative arguments are handled by oddness where the function is odd.
//! Worst-case relative error through the series paths is a few units of
//! 2⁻¹⁰⁴; the verifier budgets 4·2⁻⁹⁹ per comparison on top of that.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::real::Real;

#[derive(Clone, Copy, Debug)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub const PI: Dd = Dd { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };
pub const FRAC_PI_2: Dd = Dd { hi: 1.5707963267948966, lo: 6.123233995736766e-17 };
pub const FRAC_PI_4: Dd = Dd { hi: 0.7853981633974483, lo: 3.061616997868383e-17 };
pub const LN2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };

/// Series convergence cutoff, well below the representable tail.
const EPS: f64 = 1e-35;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    debug_assert!(a == 0.0 || a.abs() >= b.abs() || a.is_nan());
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_sign_negative_value(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0)
    }

    pub fn abs(self) -> Self {
        if self.is_sign_negative_value() {
            -self
        } else {
            self
        }
    }

    /// Exact scaling by a power of two.
    fn ldexp(self, e: i32) -> Self {
        let s = pow2(e);
        Dd { hi: self.hi * s, lo: self.lo * s }
    }

    pub fn sqrt(self) -> Self {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::from_f64(0.0);
        }
        debug_assert!(self.hi > 0.0);
        // f64 seed + one dd Newton step: y ← y + (x − y²)/(2y).
        let y0 = Dd::from_f64(self.hi.sqrt());
        let y1 = y0 + (self - y0 * y0) / (y0 + y0);
        y1 + (self - y1 * y1) / (y1 + y1)
    }

    pub fn cbrt(self) -> Self {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::from_f64(0.0);
        }
        let mut y = Dd::from_f64(self.hi.cbrt());
        for _ in 0..3 {
            let y2 = y * y;
            y = y - (y2 * y - self) / (Dd::from_f64(3.0) * y2);
        }
        y
    }

    /// sin on [−π/2, π/2] via co-function reflection at π/4.
    pub fn sin(self) -> Self {
        if self.is_sign_negative_value() {
            return -(-self).sin();
        }
        debug_assert!(self.hi <= FRAC_PI_2.hi * (1.0 + 1e-9));
        if self > FRAC_PI_4 {
            cos_series(FRAC_PI_2 - self)
        } else {
            sin_series(self)
        }
    }

    /// cos on [−π/2, π/2].
    pub fn cos(self) -> Self {
        let t = self.abs();
        debug_assert!(t.hi <= FRAC_PI_2.hi * (1.0 + 1e-9));
        if t > FRAC_PI_4 {
            sin_series(FRAC_PI_2 - t)
        } else {
            cos_series(t)
        }
    }

    pub fn sinh(self) -> Self {
        if self.is_sign_negative_value() {
            return -(-self).sinh();
        }
        debug_assert!(self.hi <= 20.5);
        // All-positive series: no cancellation anywhere on the range.
        let t2 = self * self;
        let mut term = self;
        let mut sum = self;
        let mut k = 1.0f64;
        loop {
            term = term * t2 / Dd::from_f64(2.0 * k * (2.0 * k + 1.0));
            sum = sum + term;
            k += 1.0;
            if term.hi < EPS * sum.hi || k > 200.0 {
                return sum;
            }
        }
    }

    pub fn cosh(self) -> Self {
        let t = self.abs();
        debug_assert!(t.hi <= 20.5);
        let t2 = t * t;
        let one = Dd::from_f64(1.0);
        let mut term = one;
        let mut sum = one;
        let mut k = 1.0f64;
        loop {
            term = term * t2 / Dd::from_f64((2.0 * k - 1.0) * (2.0 * k));
            sum = sum + term;
            k += 1.0;
            if term.hi < EPS * sum.hi || k > 200.0 {
                return sum;
            }
        }
    }

    /// asin on (−1, 1); |x| > 1/2 reduces through
    /// asin x = π/2 − 2 asin √((1−x)/2).
    pub fn asin(self) -> Self {
        if self.is_sign_negative_value() {
            return -(-self).asin();
        }
        if self > Dd::from_f64(0.5) {
            let half = Dd::from_f64(0.5);
            let u = ((Dd::from_f64(1.0) - self) * half).sqrt();
            FRAC_PI_2 - Dd::from_f64(2.0) * asin_series(u)
        } else {
            asin_series(self)
        }
    }

    /// atan on [−1, 1]; |z| > 0.4 shifts through
    /// atan z = π/4 + atan((z−1)/(z+1)).
    pub fn atan(self) -> Self {
        if self.is_sign_negative_value() {
            return -(-self).atan();
        }
        debug_assert!(self.hi <= 1.0 + 1e-12);
        if self > Dd::from_f64(0.4) {
            let one = Dd::from_f64(1.0);
            FRAC_PI_4 + atan_series((self - one) / (self + one))
        } else {
            atan_series(self)
        }
    }

    /// asinh on all of ℝ; small arguments by series, otherwise the
    /// logarithmic form (no cancellation for positive z).
    pub fn asinh(self) -> Self {
        if self.is_sign_negative_value() {
            return -(-self).asinh();
        }
        if self < Dd::from_f64(0.25) {
            asinh_series(self)
        } else {
            (self + (self * self + Dd::from_f64(1.0)).sqrt()).ln()
        }
    }

    /// Natural log for x > 0: x = m·2ᵉ with m ∈ [1,2),
    /// ln m = 2 atanh((m−1)/(m+1)).
    pub fn ln(self) -> Self {
        debug_assert!(self.hi > 0.0);
        let e = exponent_of(self.hi);
        let m = self.ldexp(-e);
        let one = Dd::from_f64(1.0);
        let z = (m - one) / (m + one);
        let two = Dd::from_f64(2.0);
        two * atanh_series(z) + Dd::from_f64(e as f64) * LN2
    }

    /// ln(1+x) without forming 1+x when x is small:
    /// ln(1+x) = 2 atanh(x/(2+x)).
    pub fn ln_1p(self) -> Self {
        if self.abs() < Dd::from_f64(0.5) {
            Dd::from_f64(2.0) * atanh_series(self / (Dd::from_f64(2.0) + self))
        } else {
            (Dd::from_f64(1.0) + self).ln()
        }
    }
}

/// 2^e as f64 (|e| < 1023 in our uses).
fn pow2(e: i32) -> f64 {
    f64::from_bits(((1023 + e) as u64) << 52)
}

fn exponent_of(x: f64) -> i32 {
    ((x.to_bits() >> 52) & 0x7ff) as i32 - 1023
}

fn sin_series(t: Dd) -> Dd {
    let t2 = t * t;
    let mut term = t;
    let mut sum = t;
    let mut k = 1.0f64;
    loop {
        term = -term * t2 / Dd::from_f64(2.0 * k * (2.0 * k + 1.0));
        sum = sum + term;
        k += 1.0;
        if term.hi.abs() < EPS * sum.hi.abs() || k > 40.0 {
            return sum;
        }
    }
}

fn cos_series(t: Dd) -> Dd {
    let t2 = t * t;
    let one = Dd::from_f64(1.0);
    let mut term = one;
    let mut sum = one;
    let mut k = 1.0f64;
    loop {
        term = -term * t2 / Dd::from_f64((2.0 * k - 1.0) * (2.0 * k));
        sum = sum + term;
        k += 1.0;
        if term.hi.abs() < EPS * sum.hi.abs() || k > 40.0 {
            return sum;
        }
    }
}

/// Σ (2k−1)!!/(2k)!! · x^{2k+1}/(2k+1) for |x| ≤ 1/2.
fn asin_series(x: Dd) -> Dd {
    let x2 = x * x;
    let mut pow = x;
    let mut coef = Dd::from_f64(1.0);
    let mut sum = x;
    let mut k = 1.0f64;
    loop {
        pow = pow * x2;
        coef = coef * Dd::from_f64((2.0 * k - 1.0) / (2.0 * k));
        let term = coef * pow / Dd::from_f64(2.0 * k + 1.0);
        sum = sum + term;
        k += 1.0;
        if term.hi.abs() < EPS * sum.hi.abs() || k > 120.0 {
            return sum;
        }
    }
}

/// Alternating double-factorial series for |z| ≤ 1/4.
fn asinh_series(z: Dd) -> Dd {
    let z2 = z * z;
    let mut pow = z;
    let mut coef = Dd::from_f64(1.0);
    let mut sum = z;
    let mut k = 1.0f64;
    loop {
        pow = pow * z2;
        coef = -coef * Dd::from_f64((2.0 * k - 1.0) / (2.0 * k));
        let term = coef * pow / Dd::from_f64(2.0 * k + 1.0);
        sum = sum + term;
        k += 1.0;
        if term.hi.abs() < EPS * sum.hi.abs() || k > 80.0 {
            return sum;
        }
    }
}

/// z − z³/3 + z⁵/5 − … for |z| ≤ 0.45.
fn atan_series(z: Dd) -> Dd {
    let z2 = z * z;
    let mut pow = z;
    let mut sum = z;
    let mut k = 1.0f64;
    loop {
        pow = -pow * z2;
        let term = pow / Dd::from_f64(2.0 * k + 1.0);
        sum = sum + term;
        k += 1.0;
        if term.hi.abs() < EPS * sum.hi.abs() || k > 120.0 {
            return sum;
        }
    }
}

/// z + z³/3 + z⁵/5 + … for |z| ≤ 1/3.
fn atanh_series(z: Dd) -> Dd {
    let z2 = z * z;
    let mut pow = z;
    let mut sum = z;
    let mut k = 1.0f64;
    loop {
        pow = pow * z2;
        let term = pow / Dd::from_f64(2.0 * k + 1.0);
        sum = sum + term;
        k += 1.0;
        if term.hi.abs() < EPS * sum.hi.abs() || k > 80.0 {
            return sum;
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s1, e1) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s1, e1 + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Dd::from_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e } + Dd::from_f64(q3)
    }
}

impl PartialEq for Dd {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Real for Dd {
    fn from_f64(x: f64) -> Self {
        Dd::from_f64(x)
    }
    fn to_f64(self) -> f64 {
        Dd::to_f64(self)
    }
    fn pi() -> Self {
        PI
    }
    fn series_eps() -> f64 {
        1e-35
    }
    fn guard_eps() -> f64 {
        // Budget for the series transcendentals on top of the 2^-104
        // arithmetic: a few units in the 30th digit.
        1e-29
    }
    fn from_dd(hi: f64, lo: f64) -> Self {
        Dd::new(hi, lo)
    }
    fn abs(self) -> Self {
        Dd::abs(self)
    }
    fn max(self, other: Self) -> Self {
        if self > other {
            self
        } else {
            other
        }
    }
    fn sqrt(self) -> Self {
        Dd::sqrt(self)
    }
    fn cbrt(self) -> Self {
        Dd::cbrt(self)
    }
    fn sin(self) -> Self {
        Dd::sin(self)
    }
    fn cos(self) -> Self {
        Dd::cos(self)
    }
    fn sinh(self) -> Self {
        Dd::sinh(self)
    }
    fn cosh(self) -> Self {
        Dd::cosh(self)
    }
    fn asin(self) -> Self {
        Dd::asin(self)
    }
    fn atan(self) -> Self {
        Dd::atan(self)
    }
    fn asinh(self) -> Self {
        Dd::asinh(self)
    }
    fn ln(self) -> Self {
        Dd::ln(self)
    }
    fn ln_1p(self) -> Self {
        Dd::ln_1p(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// |got − (hi + lo)| ≤ tol, evaluated without rounding the reference.
    fn assert_close(got: Dd, ref_hi: f64, ref_lo: f64, tol: f64) {
        let diff = ((got - Dd::new(ref_hi, 0.0)) - Dd::new(ref_lo, 0.0)).to_f64();
        assert!(
            diff.abs() <= tol,
            "got ({}, {}), want ({ref_hi}, {ref_lo}), diff {diff:e}",
            got.hi,
            got.lo
        );
    }

    #[test]
    fn arithmetic_identities() {
        let a = Dd::from_f64(0.1) + Dd::from_f64(0.2);
        let b = a - Dd::from_f64(0.2);
        assert!((b.to_f64() - 0.1).abs() < 1e-30);
        let c = Dd::from_f64(3.0) / Dd::from_f64(7.0) * Dd::from_f64(7.0);
        assert_close(c, 3.0, 0.0, 1e-30);
        let s = Dd::from_f64(2.0).sqrt();
        assert_close(s * s, 2.0, 0.0, 1e-30);
    }

    // Reference pairs generated with 60-digit arithmetic.
    #[test]
    fn transcendentals_match_references() {
        assert_close(Dd::from_f64(0.7).sin(), 0.644217687237691, 3.6839873053850086e-17, 3e-32);
        assert_close(Dd::from_f64(0.7).cos(), 0.7648421872844884, 4.2275485752611174e-17, 3e-32);
        assert_close(Dd::from_f64(1.55).sin(), 0.999783764189357, -2.9870276268197097e-17, 3e-32);
        assert_close(Dd::from_f64(1.55).cos(), 0.020794827803092473, 8.095674024609904e-19, 3e-32);
        assert_close(Dd::from_f64(2.0).sqrt(), 1.4142135623730951, -9.667293313452913e-17, 3e-32);
        assert_close(Dd::from_f64(2.0).cbrt(), 1.2599210498948732, -2.589933375300507e-17, 3e-32);
        assert_close(Dd::from_f64(2.345).ln(), 0.8522854018982426, 4.2375319386081014e-17, 3e-32);
        assert_close(
            Dd::from_f64(1.00000001).ln(),
            9.999999950000001e-09,
            -6.8713432625464845e-25,
            1e-40,
        );
        assert_close(Dd::from_f64(12345.678).ln(), 9.421061321291832, -1.8142686559359818e-16, 3e-31);
        assert_close(Dd::from_f64(0.3).asin(), 0.3046926540153975, -1.583144043021605e-17, 3e-32);
        assert_close(Dd::from_f64(0.95).asin(), 1.2532358975033753, -1.475023209817616e-17, 3e-32);
        assert_close(Dd::from_f64(0.9).atan(), 0.7328151017865066, 4.078915117731779e-17, 3e-32);
        assert_close(Dd::from_f64(0.05).atan(), 0.04995839572194276, 3.17143005494661e-18, 1e-33);
        assert_close(Dd::from_f64(0.8).asinh(), 0.7326682560454109, 4.676622664692552e-18, 3e-32);
        assert_close(
            Dd::from_f64(0.001).asinh(),
            0.0009999998333334083,
            8.14627993289836e-20,
            1e-36,
        );
        assert_close(Dd::from_f64(0.9).sinh(), 1.0265167257081753, -3.8976697222266466e-17, 3e-32);
        assert_close(Dd::from_f64(0.9).cosh(), 1.4330863854487743, 7.41972416181378e-17, 3e-32);
        assert_close(Dd::from_f64(12.0).sinh(), 81377.39570642986, -5.0467284870835705e-12, 3e-27);
        assert_close(Dd::from_f64(12.0).cosh(), 81377.39571257407, -4.2045279280626504e-12, 3e-27);
    }

    #[test]
    fn pythagorean_identity_in_dd() {
        for t in [1e-6, 0.3, 0.7853981633974483, 1.2, 1.5707963] {
            let s = Dd::from_f64(t).sin();
            let c = Dd::from_f64(t).cos();
            let r = (s * s + c * c - Dd::from_f64(1.0)).to_f64();
            assert!(r.abs() < 1e-30, "t = {t}: residual {r:e}");
        }
    }

    #[test]
    fn ordering_uses_both_limbs() {
        let a = Dd::new(1.0, 1e-20);
        let b = Dd::new(1.0, -1e-20);
        assert!(a > b);
        assert!(Dd::from_f64(-2.0).abs() == Dd::from_f64(2.0));
    }
}
