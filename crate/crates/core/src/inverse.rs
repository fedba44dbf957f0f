//! Shafer-Fink-type enclosures for arcsin on (0,1), obtained from the
//! circular enclosures through the substitution sin t = x.
//!
//! With y = √(1−x²):  x/H1(y,p) < arcsin x < (πp/(3p+1))·x/H1(y,p) in the
//! upper-H1 regime (reversed on [0, p1]), and the half-angle variant uses
//! cos(t/2) = (√(1+x)+√(1−x))/2, which turns X(t,p) into a radical
//! expression in x. Near x = 1, 1−x² is formed as (1−x)(1+x) to dodge the
//! cancellation.

use crate::bounds::{classify, Enclosure, Family, Regime};
use crate::kernel::{raw, PView};
use crate::real::Real;
use crate::{Error, Param, Result, UnitArg};

/// x / H1(√(1−x²), p), the core member of the full-angle enclosure.
pub(crate) fn full_core<R: Real>(x: R, p: PView<R>) -> R {
    let one = R::from_f64(1.0);
    let y = ((one - x) * (one + x)).sqrt();
    x / raw::h1_pv(y, p)
}

/// 2((3p+1)(√(1+x)−√(1−x)) + 2x)/(4p + (p+3)(√(1+x)+√(1−x))), the core
/// member of the half-angle enclosure (equals x/X(t,p) at t = arcsin x).
pub(crate) fn half_core<R: Real>(x: R, p: PView<R>) -> R {
    let one = R::from_f64(1.0);
    let two = R::from_f64(2.0);
    let a = (one + x).sqrt();
    let b = (one - x).sqrt();
    match p {
        PView::Fin(p) => {
            let three = R::from_f64(3.0);
            let four = R::from_f64(4.0);
            two * ((three * p + one) * (a - b) + two * x)
                / (four * p + (p + three) * (a + b))
        }
        PView::Inf => R::from_f64(6.0) * (a - b) / (R::from_f64(4.0) + a + b),
    }
}

/// Full-angle enclosure of arcsin x. Direct for p in the upper-H1 regime,
/// reversed on [0, p1]; at p = 0 the reversed lower member degenerates to
/// Jordan's x.
pub fn arcsin_enclosure_full(x: UnitArg, p: Param) -> Result<Enclosure> {
    let core = full_core(x.get(), PView::<f64>::of(p));
    let inv_lambda = match p {
        Param::Finite(v) if v != 0.0 => std::f64::consts::PI * v / (3.0 * v + 1.0),
        Param::Finite(_) => f64::NAN, // p = 0, only used on the reversed branch below
        _ => std::f64::consts::PI / 3.0,
    };
    match classify(p) {
        Regime::UpperH1 => Ok(Enclosure {
            lower: core,
            upper: inv_lambda * core,
            lower_strict: true,
            upper_strict: true,
            family: Family::Ma,
            p,
        }),
        Regime::LowerH1SharpLambda => {
            let lower = if p == Param::Finite(0.0) { x.get() } else { inv_lambda * core };
            Ok(Enclosure {
                lower,
                upper: core,
                lower_strict: true,
                upper_strict: true,
                family: Family::MbLambda,
                p,
            })
        }
        _ => Err(Error::Regime {
            what: "the arcsin enclosure needs p <= -1, p >= 9 or p in [0, p1]",
            p: p.as_finite().unwrap_or(f64::INFINITY),
        }),
    }
}

/// Half-angle enclosure of arcsin x (σ_p sharp).
pub fn arcsin_enclosure_halfangle(x: UnitArg, p: Param) -> Result<Enclosure> {
    let core = half_core(x.get(), PView::<f64>::of(p));
    let inv_sigma = 1.0 / raw::sigma_pv(PView::<f64>::of(p));
    match classify(p) {
        Regime::UpperH1 => Ok(Enclosure {
            lower: core,
            upper: inv_sigma * core,
            lower_strict: true,
            upper_strict: true,
            family: Family::Md,
            p,
        }),
        Regime::LowerH1SharpLambda => Ok(Enclosure {
            lower: inv_sigma * core,
            upper: core,
            lower_strict: true,
            upper_strict: true,
            family: Family::Md,
            p,
        }),
        _ => Err(Error::Regime {
            what: "the half-angle arcsin enclosure needs p <= -1, p >= 9 or p in [0, p1]",
            p: p.as_finite().unwrap_or(f64::INFINITY),
        }),
    }
}

/// Which refinement chain around arcsin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcsinChain {
    /// p = 9 instance; its sharp constant is 1/(3σ_9).
    P31,
    /// p = ∞ instance (Shafer's bound inside Fink's), constant (1+2√2)π/12.
    P32,
    /// p = 1 instance (reversed), constant (√2+3)π/14.
    P33,
}

/// The five chain values in display order; index 2 is arcsin x itself.
pub fn arcsin_chain(x: UnitArg, which: ArcsinChain) -> [f64; 5] {
    match which {
        ArcsinChain::P31 => chain_p31(x.get()),
        ArcsinChain::P32 => chain_p32(x.get()),
        ArcsinChain::P33 => chain_p33(x.get()),
    }
}

pub(crate) fn chain_p31<R: Real>(x: R) -> [R; 5] {
    let one = R::from_f64(1.0);
    let y = ((one - x) * (one + x)).sqrt();
    let outer = x * (y + R::from_f64(14.0)) / (R::from_f64(2.0) * y + R::from_f64(3.0));
    let inner = half_core(x, PView::Fin(R::from_f64(9.0)));
    let c = one / raw::sigma_pv(PView::Fin(R::from_f64(9.0)));
    [
        outer / R::from_f64(3.0),
        inner,
        x.asin(),
        c * inner,
        R::from_f64(3.0) * R::pi() / R::from_f64(28.0) * outer,
    ]
}

pub(crate) fn chain_p32<R: Real>(x: R) -> [R; 5] {
    let one = R::from_f64(1.0);
    let y = ((one - x) * (one + x)).sqrt();
    let two = R::from_f64(2.0);
    let outer = x / (two + y);
    let inner = half_core(x, PView::Inf);
    let c = (one + two * two.sqrt()) * R::pi() / R::from_f64(12.0);
    [R::from_f64(3.0) * outer, inner, x.asin(), c * inner, R::pi() * outer]
}

pub(crate) fn chain_p33<R: Real>(x: R) -> [R; 5] {
    let one = R::from_f64(1.0);
    let y = ((one - x) * (one + x)).sqrt();
    let two = R::from_f64(2.0);
    let outer = x * (y + two) / (two * y + one);
    let inner = half_core(x, PView::Fin(one));
    let c = (two.sqrt() + R::from_f64(3.0)) * R::pi() / R::from_f64(14.0);
    [R::pi() / R::from_f64(4.0) * outer, c * inner, x.asin(), inner, outer]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::sinc_enclosure;
    use crate::CircularArg;
    use std::f64::consts::{FRAC_PI_6, PI};

    fn x(v: f64) -> UnitArg {
        UnitArg::new(v).unwrap()
    }

    fn fin(v: f64) -> Param {
        Param::finite(v).unwrap()
    }

    #[test]
    fn full_reduces_to_shafer_fink_at_infinity() {
        for xv in [0.1, 0.5, 0.9] {
            let e = arcsin_enclosure_full(x(xv), Param::PosInf).unwrap();
            let y = (1.0 - xv * xv).sqrt();
            assert!((e.lower - 3.0 * xv / (2.0 + y)).abs() < 1e-15);
            assert!((e.upper - PI * xv / (2.0 + y)).abs() < 1e-15);
            let a = xv.asin();
            assert!(e.lower < a && a < e.upper);
        }
    }

    #[test]
    fn full_contains_known_angles() {
        let e = arcsin_enclosure_full(x(0.5), fin(9.0)).unwrap();
        assert!(e.lower < FRAC_PI_6 && FRAC_PI_6 < e.upper);
        let e = arcsin_enclosure_full(x(0.9), fin(9.0)).unwrap();
        let a = 0.9f64.asin();
        assert!(e.lower < a && a < e.upper);
        assert!(e.upper - e.lower < 3e-3);
        // Reversed regime at p = 0: lower degenerates to x.
        let e0 = arcsin_enclosure_full(x(0.3), fin(0.0)).unwrap();
        assert_eq!(e0.lower, 0.3);
        assert!(0.3f64.asin() < e0.upper);
        assert!(arcsin_enclosure_full(x(0.5), fin(7.5)).is_err());
    }

    #[test]
    fn halfangle_reduces_to_shafer_at_infinity() {
        for xv in [0.2, 0.7, 0.99] {
            let e = arcsin_enclosure_halfangle(x(xv), Param::PosInf).unwrap();
            let (a, b) = ((1.0 + xv).sqrt(), (1.0 - xv).sqrt());
            let shafer = 6.0 * (a - b) / (4.0 + a + b);
            assert!((e.lower - shafer).abs() < 1e-15);
            let v = xv.asin();
            assert!(e.lower < v && v < e.upper);
        }
        let e = arcsin_enclosure_halfangle(x(0.5), fin(9.0)).unwrap();
        assert!(e.lower < FRAC_PI_6 && FRAC_PI_6 < e.upper);
        // Both members vanish at 0⁺ with ratio 1/σ_p.
        let e = arcsin_enclosure_halfangle(x(1e-9), fin(9.0)).unwrap();
        let sigma9 = raw::sigma_pv(PView::<f64>::Fin(9.0));
        assert!((e.upper / e.lower - 1.0 / sigma9).abs() < 1e-12);
    }

    #[test]
    fn chains_increase_and_p32_outer_is_classical() {
        for which in [ArcsinChain::P31, ArcsinChain::P32, ArcsinChain::P33] {
            for xv in [0.1, 0.5, 0.95] {
                let c = arcsin_chain(x(xv), which);
                for i in 0..4 {
                    assert!(c[i] < c[i + 1], "{which:?} x={xv} link {i}: {c:?}");
                }
                assert_eq!(c[2], xv.asin());
            }
        }
        let c = arcsin_chain(x(0.5), ArcsinChain::P32);
        let y = (1.0f64 - 0.25).sqrt();
        assert!((c[0] - 3.0 * 0.5 / (2.0 + y)).abs() < 1e-15);
        assert!((c[4] - PI * 0.5 / (2.0 + y)).abs() < 1e-15);
        assert!((c[2] - FRAC_PI_6).abs() < 1e-15);
    }

    #[test]
    fn members_stay_finite_near_one() {
        // √(1−x²) is formed as √((1−x)(1+x)); nothing blows up at 1−1e−12.
        let e = arcsin_enclosure_full(x(1.0 - 1e-12), fin(9.0)).unwrap();
        assert!(e.lower.is_finite() && e.upper.is_finite());
        assert!(e.lower < (1.0f64 - 1e-12).asin());
    }

    #[test]
    fn substitution_consistency_with_sinc_enclosures() {
        // arcsin members at x = sin t must equal sin t / (sinc members) to
        // 1e−13: the two modules agree through the change of variables.
        for tv in [0.3, 0.9, 1.4] {
            for p in [fin(-4.0), fin(9.0), fin(15.0), fin(1.0), fin(3.0)] {
                let s = tv.sin();
                let circ = sinc_enclosure(CircularArg::new(tv).unwrap(), p).unwrap();
                let inv = arcsin_enclosure_full(x(s), p).unwrap();
                let want_lower = s / circ.upper;
                let want_upper = if p == fin(0.0) { s } else { s / circ.lower };
                assert!((inv.lower - want_lower).abs() < 1e-13 * want_lower.abs());
                assert!((inv.upper - want_upper).abs() < 1e-13 * want_upper.abs());
            }
        }
    }
}
