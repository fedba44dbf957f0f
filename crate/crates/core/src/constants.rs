//! Sharp constants and regime thresholds.
//!
//! Closed forms:
//!
//! ```text
//! p0 = 1/(π−3)                        ≈ 7.0625   (global lower-bound edge)
//! p1 = (2√(6π+1) + 3π − 2)/(12 − 3π)  ≈ 6.3433   (sharp-λ edge)
//! p2 = (3π − 2 − 2√(6π+1))/(12 − 3π)  ≈ −0.5770  (companion root of p1)
//! ```
//!
//! Root-found: p3 (the cubic −3p³+13p²+21p+9), x1(p) (sign change of u3 in
//! x), t0(p) (sign change of g in t), and δ_p, the best upper-bound factor
//! on (p1, p0].
//!
//! Note on p2: it is the second root of the quadratic
//! (12−3π)p² − (6π−4)p − 3π that factors g(π/2⁻, p), so it is negative;
//! `p2()` returns that root. It drives no bound and is exposed only
//! because the g-endpoint factorization uses it.

use std::f64::consts::PI;

use crate::kernel::raw;
use crate::root::{bracketed_root, RootResult, Tolerances};
use crate::{Error, Result};

/// p0 = 1/(π−3) ≈ 7.0625: the lower bound H1(cos t,p) < sin t/t holds iff
/// p ∈ [0, p0].
pub fn p0() -> f64 {
    1.0 / (PI - 3.0)
}

/// p1 ≈ 6.3433: the λ-form upper bound holds iff p ∈ [0, p1].
pub fn p1() -> f64 {
    (2.0 * (6.0 * PI + 1.0).sqrt() + 3.0 * PI - 2.0) / (12.0 - 3.0 * PI)
}

/// p2 ≈ −0.5770: companion root of the g(π/2⁻, ·) factorization.
pub fn p2() -> f64 {
    (3.0 * PI - 2.0 - 2.0 * (6.0 * PI + 1.0).sqrt()) / (12.0 - 3.0 * PI)
}

/// p3 ≈ 5.6630: unique root of u3(0,p) = −3p³+13p²+21p+9 beyond the
/// cubic's local maximum at (13+√358)/9.
pub fn p3() -> Result<RootResult> {
    let lo = (13.0 + 358f64.sqrt()) / 9.0;
    bracketed_root(|p| raw::u3_at_zero(p), lo, 16.0, Tolerances::default())
}

/// x1(p) for p ∈ (p3, 9): the unique sign change of x ↦ u3(x,p) on (0,1)
/// (u3 < 0 left of it, > 0 right of it).
pub fn x1(p: f64) -> Result<RootResult> {
    let p3v = p3()?.value;
    if !(p > p3v && p < 9.0) {
        return Err(Error::Domain { what: "x1 requires p in (p3, 9)", value: p });
    }
    bracketed_root(|x| raw::u3(x, p), 0.0, 1.0, Tolerances::default())
}

/// t0(p) for p ∈ (p1, 9): the unique root of g(·,p) on (0, π/2), located
/// inside (arccos x1(p), π/2) where g changes from + to −.
pub fn t0(p: f64) -> Result<RootResult> {
    if !(p > p1() && p < 9.0) {
        return Err(Error::Domain { what: "t0 requires p in (p1, 9)", value: p });
    }
    let lo = x1(p)?.value.acos();
    bracketed_root(|t| raw::g(t, p), lo, PI / 2.0 - 1e-9, Tolerances::default())
}

/// δ_p for p ∈ (p1, p0]: the best possible factor in
/// H1 < sin t/t < δ_p·H1, attained at t0(p):
/// δ_p = (sin t0/t0) · ((3p+1) + 2cos t0)/(2p + (p+3)cos t0).
pub fn delta(p: f64) -> Result<f64> {
    if !(p > p1() && p <= p0()) {
        return Err(Error::Domain { what: "delta requires p in (p1, p0]", value: p });
    }
    let t0v = t0(p)?.value;
    Ok(delta_at_t0(p, t0v))
}

/// The δ quotient at a given t0 (shared with the extended-precision path).
pub(crate) fn delta_at_t0(p: f64, t0: f64) -> f64 {
    let x = t0.cos();
    (t0.sin() / t0) * ((3.0 * p + 1.0) + 2.0 * x) / (2.0 * p + (p + 3.0) * x)
}

/// All four fixed thresholds, ordered p3 < p1 < p0 < 9.
#[derive(Clone, Copy, Debug)]
pub struct SharpConstants {
    pub p0: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

impl SharpConstants {
    pub fn compute() -> Result<Self> {
        Ok(SharpConstants { p0: p0(), p1: p1(), p2: p2(), p3: p3()?.value })
    }

    pub fn t0(&self, p: f64) -> Result<RootResult> {
        t0(p)
    }

    pub fn delta(&self, p: f64) -> Result<f64> {
        delta(p)
    }

    pub fn x1(&self, p: f64) -> Result<RootResult> {
        x1(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::PView;
    use crate::{kernel, CircularArg, Param};

    #[test]
    fn closed_forms_match_reported_digits() {
        assert!((p0() - 7.063).abs() < 5e-4);
        assert!(((PI - 3.0) * p0() - 1.0).abs() < 1e-15);
        assert!((p1() - 6.343).abs() < 5e-4);
        assert!(p2() < 0.0);
        assert!(p0() > p1());
    }

    #[test]
    fn p2_factors_g_at_the_right_endpoint() {
        // g(π/2⁻,p) = π/2 − u1(0,p)/u2(0,p) must equal
        // −((12−3π)/(6(p+1)²))(p−p1)(p−p2); zero at p1 by construction.
        for p in [5.0, 6.0, 8.0, p1()] {
            let lhs = PI / 2.0 - raw::u1(0.0, p) / raw::u2(0.0, p);
            let rhs = -(12.0 - 3.0 * PI) / (6.0 * (p + 1.0) * (p + 1.0)) * (p - p1()) * (p - p2());
            assert!((lhs - rhs).abs() < 1e-13, "p = {p}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn p3_contracts() {
        let r = p3().unwrap();
        assert!((r.value - 5.663).abs() < 5e-4);
        assert!(raw::u3_at_zero(r.value).abs() < 1e-10);
        assert!(raw::u3_at_zero(5.6) > 0.0);
        assert!(raw::u3_at_zero(5.7) < 0.0);
        assert!(r.bracket.1 - r.bracket.0 <= 1e-13);
        assert!(r.value < p1());
    }

    #[test]
    fn x1_contracts() {
        let r = x1(7.0).unwrap();
        assert!(raw::u3(r.value, 7.0).abs() < 1e-10);
        assert!(raw::u3(0.0, 7.0) < 0.0);
        assert!(raw::u3(1.0, 7.0) > 0.0);
        assert!(x1(5.0).is_err());
        assert!(x1(9.0).is_err());
        // x1 sweeps from 0⁺ to 1⁻ monotonically as p runs over (p3, 9).
        let p3v = p3().unwrap().value;
        let mut prev = -1.0;
        let mut p = p3v + 0.01;
        while p < 8.995 {
            let v = x1(p).unwrap().value;
            assert!(v > prev, "x1 not increasing at p = {p}");
            prev = v;
            p += 0.25;
        }
        assert!(x1(p3v + 0.01).unwrap().value < 0.2);
        assert!(x1(8.99).unwrap().value > 0.95);
    }

    #[test]
    fn t0_contracts() {
        let r = t0(p0()).unwrap();
        assert!((r.value - 1.305).abs() < 5e-4);
        assert!(raw::g(r.value, p0()).abs() < 1e-10);
        // g < 0 approaching π/2 inside the (p1, 9) regime.
        assert!(raw::g(PI / 2.0 - 1e-4, 7.0) < 0.0);
        assert!(t0(6.0).is_err());
        assert!(t0(9.5).is_err());
    }

    #[test]
    fn delta_contracts() {
        let d = delta(p0()).unwrap();
        assert!((d - 1.0015).abs() < 5e-5);
        let mut p = p1() + 0.05;
        while p <= p0() {
            let d = delta(p).unwrap();
            assert!(d > 1.0, "delta({p}) = {d}");
            // exp(f(t0,p)) and the displayed quotient agree to 1e−13.
            let t0v = t0(p).unwrap().value;
            let via_f = kernel::f(CircularArg::new(t0v).unwrap(), Param::finite(p).unwrap()).exp();
            assert!((via_f - d).abs() < 1e-13, "p = {p}");
            p += 0.1;
        }
        assert!(delta(p0() + 0.01).is_err());
        assert!(delta(p1()).is_err());
    }

    #[test]
    fn ordering_invariant() {
        let c = SharpConstants::compute().unwrap();
        assert!(c.p3 < c.p1 && c.p1 < c.p0 && c.p0 < 9.0);
        assert!(c.p2 < 0.0);
    }

    #[test]
    fn f_is_unimodal_between_p1_and_nine() {
        // For p ∈ (p1, 9): df/dt > 0 left of t0(p), < 0 right of it.
        for p in [6.5, p0(), 8.0] {
            let t0v = t0(p).unwrap().value;
            let pv = PView::<f64>::Fin(p);
            for k in 1..50 {
                let tl = t0v * k as f64 / 51.0;
                assert!(raw::df_dt(tl, pv) > 0.0, "p={p} t={tl}");
                let tr = t0v + (PI / 2.0 - 1e-6 - t0v) * k as f64 / 51.0;
                assert!(raw::df_dt(tr, pv) < 0.0, "p={p} t={tr}");
            }
        }
    }
}
