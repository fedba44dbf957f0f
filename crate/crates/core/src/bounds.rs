//! Regime classification and enclosure construction for sin(t)/t and
//! sinh(t)/t.
//!
//! The parameter line splits at the thresholds −1, 0, p1, p0, 9 (circular)
//! and 0, 1/9 (hyperbolic):
//!
//! - p ≤ −1 or p ≥ 9: H1 is an upper bound, λ_p·H1 = H2 a lower bound.
//! - 0 ≤ p ≤ p1: H1 is a lower bound, H2 an upper bound (λ_p sharp).
//! - p1 < p ≤ p0: H1 is a lower bound, δ_p·H1 the sharp upper bound.
//! - p0 < p < 9: neither direction holds globally; asking for an
//!   enclosure here is an error rather than a best-effort guess.

use crate::constants;
use crate::kernel::{self, raw, PView};
use crate::real::Real;
use crate::{Abscissa, CircularArg, Error, HyperbolicArg, Param, Result};

/// Which global bound direction a parameter admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// p ∈ (−∞,−1] ∪ [9,∞]: sin t/t < H1, with sharp lower companion H2.
    UpperH1,
    /// p ∈ [0, p1]: H1 < sin t/t < H2 with λ_p best possible.
    LowerH1SharpLambda,
    /// p ∈ (p1, p0]: H1 < sin t/t < δ_p·H1 with δ_p best possible.
    LowerH1SharpDelta,
    /// p ∈ (p0, 9): no global bound in either direction.
    NoGlobalBound,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Regime::UpperH1 => "upper-H1",
            Regime::LowerH1SharpLambda => "lower-H1-sharp-lambda",
            Regime::LowerH1SharpDelta => "lower-H1-sharp-delta",
            Regime::NoGlobalBound => "no-global-bound",
        };
        f.write_str(s)
    }
}

/// Which theorem family produced an enclosure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Ma,
    MbLambda,
    MbDelta,
    Md,
    Me1,
    Me2,
    Me3,
    Mf,
    Mg,
}

/// A certified-by-construction lower/upper pair around a target value.
///
/// For two-parameter families (Mf and the mean enclosures) `p` records the
/// lower member's parameter.
#[derive(Clone, Copy, Debug)]
pub struct Enclosure {
    pub lower: f64,
    pub upper: f64,
    pub lower_strict: bool,
    pub upper_strict: bool,
    pub family: Family,
    pub p: Param,
}

/// One-sided bound (the hyperbolic theorem only ever gives one side).
#[derive(Clone, Copy, Debug)]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Clone, Copy, Debug)]
pub struct SideBound {
    pub value: f64,
    pub side: Side,
    pub strict: bool,
}

/// Classify an admissible parameter against the thresholds p1, p0, 9.
pub fn classify(p: Param) -> Regime {
    let v = match p {
        Param::Finite(v) => v,
        Param::PosInf | Param::NegInf => return Regime::UpperH1,
    };
    if v <= -1.0 || v >= 9.0 {
        Regime::UpperH1
    } else if v <= constants::p1() {
        Regime::LowerH1SharpLambda
    } else if v <= constants::p0() {
        Regime::LowerH1SharpDelta
    } else {
        Regime::NoGlobalBound
    }
}

fn cos_abscissa(t: CircularArg) -> Abscissa {
    // cos maps (0, π/2) into (0, 1); roundoff cannot reach the endpoints.
    Abscissa::new(t.get().cos()).expect("cos t stays inside (0,1)")
}

/// Theorem-Ma enclosure H2 < sin t/t < H1 for p in the upper-H1 regime.
pub fn sinc_enclosure_ma(t: CircularArg, p: Param) -> Result<Enclosure> {
    if classify(p) != Regime::UpperH1 {
        return Err(regime_err("H1 is an upper bound (p <= -1 or p >= 9)", p));
    }
    let x = cos_abscissa(t);
    Ok(Enclosure {
        lower: kernel::h2(x, p)?,
        upper: kernel::h1(x, p),
        lower_strict: true,
        upper_strict: true,
        family: Family::Ma,
        p,
    })
}

/// Theorem-Mb enclosure for p ∈ [0, p0]: H1 below; above, H2 on [0, p1]
/// (λ_p sharp), δ_p·H1 on (p1, p0] (δ_p sharp, attained at t0(p)), and
/// Jordan's trivial upper 1 at p = 0 where λ is undefined.
pub fn sinc_enclosure_mb(t: CircularArg, p: f64) -> Result<Enclosure> {
    let param = Param::finite(p)?;
    let regime = classify(param);
    let x = cos_abscissa(t);
    let lower = kernel::h1(x, param);
    match regime {
        Regime::LowerH1SharpLambda => {
            let (upper, upper_strict) = if p == 0.0 { (1.0, true) } else { (kernel::h2(x, param)?, true) };
            Ok(Enclosure {
                lower,
                upper,
                lower_strict: true,
                upper_strict,
                family: Family::MbLambda,
                p: param,
            })
        }
        Regime::LowerH1SharpDelta => Ok(Enclosure {
            lower,
            upper: constants::delta(p)? * lower,
            lower_strict: true,
            // δ_p is attained: equality holds exactly at t = t0(p).
            upper_strict: false,
            family: Family::MbDelta,
            p: param,
        }),
        _ => Err(regime_err("H1 is a lower bound (0 <= p <= p0)", param)),
    }
}

/// Best available enclosure for the regime of `p` (Ma or Mb).
pub fn sinc_enclosure(t: CircularArg, p: Param) -> Result<Enclosure> {
    match classify(p) {
        Regime::UpperH1 => sinc_enclosure_ma(t, p),
        Regime::LowerH1SharpLambda | Regime::LowerH1SharpDelta => {
            sinc_enclosure_mb(t, p.as_finite().expect("finite in lower regimes"))
        }
        Regime::NoGlobalBound => {
            Err(regime_err("no global bound direction holds on (p0, 9)", p))
        }
    }
}

/// The interpolation chain of Theorem Mc, in display order:
///
/// ```text
/// H1(x,0) < x^{1/3}·|_{x=cos t} < H1(x,q) < sin t/t
///         < H1(x,r) < (2+x)/3 < H1(x,s)
/// ```
///
/// for q ∈ [1, p0], r ∈ [9, ∞), s ∈ (−∞, −1]. Returns all seven values
/// (index 3 is sin t/t itself); the verifier certifies the ordering.
pub fn sinc_chain_mc(t: CircularArg, q: f64, r: f64, s: f64) -> Result<[f64; 7]> {
    if !(1.0..=constants::p0()).contains(&q) {
        return Err(Error::Domain { what: "Mc requires q in [1, p0]", value: q });
    }
    if r < 9.0 {
        return Err(Error::Domain { what: "Mc requires r >= 9", value: r });
    }
    if s > -1.0 {
        return Err(Error::Domain { what: "Mc requires s <= -1", value: s });
    }
    Ok(mc_chain(t.get(), q, r, s))
}

pub(crate) fn mc_chain<R: Real>(t: R, q: f64, r: f64, s: f64) -> [R; 7] {
    let x = t.cos();
    [
        raw::h1(x, R::from_f64(0.0)),
        x.cbrt(),
        raw::h1(x, R::from_f64(q)),
        t.sinc(),
        raw::h1(x, R::from_f64(r)),
        (R::from_f64(2.0) + x) / R::from_f64(3.0),
        raw::h1(x, R::from_f64(s)),
    ]
}

/// Theorem-Md half-angle enclosure around sin t/t, built from
/// X(t,p) = cos(t/2)·H1(cos(t/2), p):
/// (σ_p·X, X) in the upper-H1 regime, (X, σ_p·X) reversed on [0, p1].
pub fn sinc_enclosure_md(t: CircularArg, p: Param) -> Result<Enclosure> {
    let x = raw::x_half(t.get(), PView::<f64>::of(p));
    let sigma = kernel::sigma_const(p);
    match classify(p) {
        Regime::UpperH1 => Ok(Enclosure {
            lower: sigma * x,
            upper: x,
            lower_strict: true,
            upper_strict: true,
            family: Family::Md,
            p,
        }),
        Regime::LowerH1SharpLambda => Ok(Enclosure {
            lower: x,
            upper: sigma * x,
            lower_strict: true,
            upper_strict: true,
            family: Family::Md,
            p,
        }),
        _ => Err(regime_err("the half-angle bound needs p <= -1, p >= 9 or p in [0, p1]", p)),
    }
}

/// Which refinement chain of Theorem Me.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeChain {
    /// p = 9: H2(cos t,9) < σ_9·X < sin t/t < X < H1(cos t,9).
    Me1,
    /// p = ∞: (2+cos t)/π < σ_∞·X < sin t/t < X < (2+cos t)/3.
    Me2,
    /// p = 1 (reversed): H1(cos t,1) < X < sin t/t < σ_1·X < H2(cos t,1).
    Me3,
}

/// The five chain values in display order; index 2 is sin t/t itself.
///
/// All constants come from the σ_p/λ_p formulas, not from the printed
/// corollary displays (two of which carry typos; the verifier keeps
/// printed variants as separate documentation claims).
pub fn sinc_chain_me(t: CircularArg, which: MeChain) -> [f64; 5] {
    match which {
        MeChain::Me1 => me_chain_direct::<f64>(t.get(), PView::Fin(9.0)),
        MeChain::Me2 => me_chain_direct::<f64>(t.get(), PView::Inf),
        MeChain::Me3 => me_chain_reversed::<f64>(t.get(), 1.0),
    }
}

/// Direct-regime Me chain at parameter view `p` (9 or ∞).
pub(crate) fn me_chain_direct<R: Real>(t: R, p: PView<R>) -> [R; 5] {
    let x = t.cos();
    let xh = raw::x_half(t, p);
    let sigma = raw::sigma_pv(p);
    [raw::h2_pv(x, p), sigma * xh, t.sinc(), xh, raw::h1_pv(x, p)]
}

/// Reversed-regime Me chain at finite p ∈ [0, p1] (Me3 uses p = 1).
pub(crate) fn me_chain_reversed<R: Real>(t: R, p: f64) -> [R; 5] {
    let x = t.cos();
    let pv = PView::Fin(R::from_f64(p));
    let xh = raw::x_half(t, pv);
    let sigma = raw::sigma_pv(pv);
    [raw::h1(x, R::from_f64(p)), xh, t.sinc(), sigma * xh, raw::h2(x, R::from_f64(p))]
}

/// Theorem-Mf enclosure u2/u1(cos t, p) < sin t/t < u2/u1(cos t, q) for
/// p ∈ (−∞,−1] ∪ [9,∞) and q ∈ [0, p1].
pub fn sinc_enclosure_mf(t: CircularArg, p: f64, q: f64) -> Result<Enclosure> {
    if !(p <= -1.0 || p >= 9.0) {
        return Err(Error::Regime { what: "the u2/u1 lower bound holds (p <= -1 or p >= 9)", p });
    }
    if !(0.0..=constants::p1()).contains(&q) {
        return Err(Error::Regime { what: "the u2/u1 upper bound holds (q in [0, p1])", p: q });
    }
    let x = t.get().cos();
    Ok(Enclosure {
        lower: raw::u2(x, p) / raw::u1(x, p),
        upper: raw::u2(x, q) / raw::u1(x, q),
        lower_strict: true,
        upper_strict: true,
        family: Family::Mf,
        p: Param::finite(p)?,
    })
}

/// Theorem-Mg one-sided bound for sinh t/t: the lower bound
/// H5(cosh t, p) for p ∈ (−∞,−1] ∪ [1/9,∞], reversed to the upper bound
/// (2+cosh t)/3 exactly at p = 0.
pub fn sinhc_bound_mg(t: HyperbolicArg, p: Param) -> Result<SideBound> {
    let x = t.get().cosh();
    match p {
        Param::Finite(v) if v == 0.0 => Ok(SideBound {
            value: (2.0 + x) / 3.0,
            side: Side::Upper,
            strict: true,
        }),
        Param::Finite(v) if v > 0.0 && v < 1.0 / 9.0 => {
            Err(Error::Regime { what: "the hyperbolic bound holds (p <= -1, p = 0 or p >= 1/9)", p: v })
        }
        _ => Ok(SideBound {
            value: raw::h5_pv(x, PView::<f64>::of(p)),
            side: Side::Lower,
            strict: true,
        }),
    }
}

fn regime_err(what: &'static str, p: Param) -> Error {
    Error::Regime { what, p: p.as_finite().unwrap_or(f64::INFINITY) }
}
