//! Margin evaluators: each claim's defining quantity as a function of one
//! grid coordinate, generic over the evaluation precision.
//!
//! A margin is "the quantity required positive"; for chains it is the
//! minimum over consecutive links. Every link also reports the scale of
//! the compared magnitudes so the engine can apply the guard band, and
//! whether any link fell inside its guard (the escalation trigger).

use crate::bounds;
use crate::inverse;
use crate::kernel::{raw, PView};
use crate::means::{self, MeanKind};
use crate::real::Real;
use crate::si;

/// Worst link of one evaluated point.
#[derive(Clone, Copy, Debug)]
pub struct PointEval {
    pub margin: f64,
    pub scale: f64,
    pub link: u32,
    /// Some link was too close to zero to certify at this precision.
    pub borderline: bool,
}

/// Parameter sample: finite value or the symbolic limit point.
#[derive(Clone, Copy, Debug)]
pub enum PSpec {
    F(f64),
    Inf,
}

impl PSpec {
    pub fn view<R: Real>(self) -> PView<R> {
        match self {
            PSpec::F(v) => PView::Fin(R::from_f64(v)),
            PSpec::Inf => PView::Inf,
        }
    }

    pub fn label(self) -> f64 {
        match self {
            PSpec::F(v) => v,
            PSpec::Inf => f64::INFINITY,
        }
    }
}

/// Accumulates chain links, keeping the worst margin.
struct Links {
    guard_eps: f64,
    margin: f64,
    scale: f64,
    link: u32,
    count: u32,
    borderline: bool,
}

impl Links {
    fn new<R: Real>() -> Self {
        Links {
            guard_eps: R::guard_eps(),
            margin: f64::INFINITY,
            scale: 1.0,
            link: 0,
            count: 0,
            borderline: false,
        }
    }

    /// Strict link `lo < hi`.
    fn lt<R: Real>(&mut self, lo: R, hi: R) {
        let m = (hi - lo).to_f64();
        let s = lo.abs().max(hi.abs()).to_f64();
        self.push(m, s);
    }

    /// Positivity link `v > 0` at an explicit magnitude scale.
    fn pos<R: Real>(&mut self, v: R, scale: R) {
        self.push(v.to_f64(), scale.abs().to_f64());
    }

    /// Equality-within-tolerance link `|v| ≤ tol`.
    fn eq_within<R: Real>(&mut self, v: R, tol: f64) {
        self.push(tol - v.abs().to_f64(), tol);
    }

    fn push(&mut self, m: f64, s: f64) {
        if m <= self.guard_eps * s.abs().max(f64::MIN_POSITIVE) {
            self.borderline = true;
        }
        if m < self.margin {
            self.margin = m;
            self.scale = s;
            self.link = self.count;
        }
        self.count += 1;
    }

    fn done(self) -> PointEval {
        PointEval {
            margin: self.margin,
            scale: self.scale,
            link: self.link,
            borderline: self.borderline,
        }
    }
}

/// Ordered chain: min over consecutive strict links.
fn chain_eval<R: Real, const N: usize>(values: [R; N]) -> PointEval {
    let mut l = Links::new::<R>();
    for i in 0..N - 1 {
        l.lt(values[i], values[i + 1]);
    }
    l.done()
}

// ---------------------------------------------------------------------------
// Section 2 lemmas
// ---------------------------------------------------------------------------

/// h1 strictly increasing and h2 strictly decreasing in p (same branch,
/// p < q). The h2 link is skipped when the pair touches p = 0.
pub fn h12_mono<R: Real>(coord: f64, p: f64, q: f64) -> PointEval {
    let x = R::from_f64(coord);
    let (rp, rq) = (R::from_f64(p), R::from_f64(q));
    let mut l = Links::new::<R>();
    l.lt(raw::h1(x, rp), raw::h1(x, rq));
    if p != 0.0 && q != 0.0 {
        l.lt(raw::h2(x, rq), raw::h2(x, rp));
    }
    l.done()
}

/// Exact limit values at ±∞ plus convergence of the finite family toward
/// them (|h(x, ±1e8) − limit| below 1e−7).
pub fn h12_limits<R: Real>(coord: f64) -> PointEval {
    let x = R::from_f64(coord);
    let three = R::from_f64(3.0);
    let two = R::from_f64(2.0);
    let lim1 = (two + x) / three;
    let lim2 = (two + x) / R::pi();
    let mut l = Links::new::<R>();
    l.eq_within(raw::h1_pv(x, PView::Inf) - lim1, 1e-16);
    l.eq_within(raw::h2_pv(x, PView::Inf) - lim2, 1e-16);
    l.eq_within(raw::h1(x, R::from_f64(1e8)) - lim1, 1e-7);
    l.eq_within(raw::h1(x, R::from_f64(-1e8)) - lim1, 1e-7);
    l.eq_within(raw::h2(x, R::from_f64(1e8)) - lim2, 1e-7);
    l.eq_within(raw::h2(x, R::from_f64(-1e8)) - lim2, 1e-7);
    l.done()
}

/// u1, u2 > 0, guarded against the absolute size of their terms.
pub fn u_pos<R: Real>(coord: f64, p: f64) -> PointEval {
    let x = R::from_f64(coord);
    let rp = R::from_f64(p);
    let mut l = Links::new::<R>();
    l.pos(raw::u1(x, rp), u1_term_scale(x, rp));
    l.pos(raw::u2(x, rp), u2_term_scale(x, rp));
    l.done()
}

fn u1_term_scale<R: Real>(x: R, p: R) -> R {
    let two = R::from_f64(2.0);
    let three = R::from_f64(3.0);
    let one = R::from_f64(1.0);
    ((two * p).abs() + ((three + p) * x).abs()) * ((three * p + one).abs() + two * x)
}

fn u2_term_scale<R: Real>(x: R, p: R) -> R {
    let two = R::from_f64(2.0);
    let three = R::from_f64(3.0);
    let eight = R::from_f64(8.0);
    let one = R::from_f64(1.0);
    (two * (p + three) * x * x * x).abs()
        + (eight * p * x * x).abs()
        + (two * p * (three * p + one) * x).abs()
        + three * (p + one) * (p + one)
}

fn u3_term_scale<R: Real>(x: R, p: R) -> R {
    let three = R::from_f64(3.0);
    let seven = R::from_f64(7.0);
    ((p + three) * (p + three) * x * x).abs()
        + ((p + three) * (seven * p + three) * x).abs()
        + raw::u3_at_zero(p).abs()
}

/// Sign of u3 when it is one-signed: u3 ≥ 0 (p ≤ p3) or ≤ 0 (p ≥ 9).
pub fn u3_fixed_sign<R: Real>(coord: f64, p: f64, nonneg: bool) -> PointEval {
    let x = R::from_f64(coord);
    let rp = R::from_f64(p);
    let v = raw::u3(x, rp);
    let mut l = Links::new::<R>();
    l.pos(if nonneg { v } else { -v }, u3_term_scale(x, rp));
    l.done()
}

/// u3 < 0 left of x1(p), > 0 right of it (p ∈ (p3, 9)); x1 arrives as a
/// two-limb constant.
pub fn u3_crossing<R: Real>(coord: f64, p: f64, x1: (f64, f64)) -> PointEval {
    let x = R::from_f64(coord);
    let rp = R::from_f64(p);
    let v = raw::u3(x, rp);
    let signed = if x < R::from_dd(x1.0, x1.1) { -v } else { v };
    let mut l = Links::new::<R>();
    l.pos(signed, u3_term_scale(x, rp));
    l.done()
}

fn g_scale<R: Real>(t: R, p: R) -> R {
    let x = t.cos();
    t.abs().max((raw::u1(x, p) / raw::u2(x, p) * t.sin()).abs())
}

/// One-signed g: g < 0 (p ≤ −1 or p ≥ 9) or g > 0 (0 ≤ p ≤ p1).
pub fn g_sign<R: Real>(coord: f64, p: f64, negative: bool) -> PointEval {
    let t = R::from_f64(coord);
    let rp = R::from_f64(p);
    let v = raw::g(t, rp);
    let mut l = Links::new::<R>();
    l.pos(if negative { -v } else { v }, g_scale(t, rp));
    l.done()
}

/// g > 0 below t0(p), < 0 above it (p ∈ (p1, 9)).
pub fn g_crossing<R: Real>(coord: f64, p: f64, t0: (f64, f64)) -> PointEval {
    let t = R::from_f64(coord);
    let rp = R::from_f64(p);
    let v = raw::g(t, rp);
    let signed = if t < R::from_dd(t0.0, t0.1) { v } else { -v };
    let mut l = Links::new::<R>();
    l.pos(signed, g_scale(t, rp));
    l.done()
}

fn df_parts<R: Real>(t: R, p: PView<R>) -> (R, R) {
    let x = t.cos();
    let ratio = raw::u2_over_u1_pv(x, p);
    (ratio / t.sin(), R::from_f64(1.0) / t)
}

/// Sign of ∂f/∂t: negative (f decreasing) for p ≤ −1 or p ≥ 9, positive
/// for 0 ≤ p ≤ p1.
pub fn df_sign<R: Real>(coord: f64, p: PSpec, decreasing: bool) -> PointEval {
    let t = R::from_f64(coord);
    let (a, b) = df_parts(t, p.view::<R>());
    let mut l = Links::new::<R>();
    let v = a - b;
    l.pos(if decreasing { -v } else { v }, a.abs().max(b.abs()));
    l.done()
}

/// ∂f/∂t > 0 below t0(p), < 0 above (p ∈ (p1, 9)).
pub fn df_crossing<R: Real>(coord: f64, p: f64, t0: (f64, f64)) -> PointEval {
    let t = R::from_f64(coord);
    let (a, b) = df_parts(t, PView::Fin(R::from_f64(p)));
    let v = a - b;
    let signed = if t < R::from_dd(t0.0, t0.1) { v } else { -v };
    let mut l = Links::new::<R>();
    l.pos(signed, a.abs().max(b.abs()));
    l.done()
}

/// H1(x³,p) ⋛ x one-sidedly: ≥ for p ∈ (−∞,−1] ∪ [1,∞), ≤ for p = 0.
pub fn h1x_sign<R: Real>(coord: f64, p: f64, geq: bool) -> PointEval {
    let x = R::from_f64(coord);
    let h = raw::h1(x * x * x, R::from_f64(p));
    let v = h - x;
    let mut l = Links::new::<R>();
    l.pos(if geq { v } else { -v }, h.abs().max(x.abs()));
    l.done()
}

/// H1(x³,p) − x takes both signs (the "neither direction" witness for
/// p strictly between 0 and 1); evaluated under the Mixed flavor.
pub fn h1x_mixed<R: Real>(coord: f64, p: f64) -> PointEval {
    let x = R::from_f64(coord);
    let h = raw::h1(x * x * x, R::from_f64(p));
    let v = h - x;
    let s = h.abs().max(x.abs()).to_f64();
    let m = v.to_f64();
    PointEval {
        margin: m,
        scale: s,
        link: 0,
        borderline: m.abs() <= R::guard_eps() * s,
    }
}

// ---------------------------------------------------------------------------
// Main theorems (circular)
// ---------------------------------------------------------------------------

/// Theorem-Ma pair: H2 < sin t/t < H1.
pub fn ma_enclosure<R: Real>(coord: f64, p: PSpec) -> PointEval {
    let t = R::from_f64(coord);
    let pv = p.view::<R>();
    let x = t.cos();
    let s = t.sinc();
    let mut l = Links::new::<R>();
    l.lt(raw::h2_pv(x, pv), s);
    l.lt(s, raw::h1_pv(x, pv));
    l.done()
}

/// The full monotone chain of the Ma corollary (10 strict links from 2/π
/// up to 1).
pub fn ma_chain<R: Real>(coord: f64) -> PointEval {
    let t = R::from_f64(coord);
    let x = t.cos();
    let h2 = |p: f64| raw::h2(x, R::from_f64(p));
    let h1 = |p: f64| raw::h1(x, R::from_f64(p));
    chain_eval([
        h2(-1.0),
        h2(-3.0),
        raw::h2_pv(x, PView::Inf),
        h2(50.0),
        h2(9.0),
        t.sinc(),
        h1(9.0),
        h1(50.0),
        raw::h1_pv(x, PView::Inf),
        h1(-3.0),
        h1(-1.0),
    ])
}

/// Theorem-Mb λ regime: H1 < sin t/t < H2 (upper 1 at p = 0).
pub fn mb_lambda<R: Real>(coord: f64, p: f64) -> PointEval {
    let t = R::from_f64(coord);
    let x = t.cos();
    let s = t.sinc();
    let rp = R::from_f64(p);
    let mut l = Links::new::<R>();
    l.lt(raw::h1(x, rp), s);
    if p == 0.0 {
        l.lt(s, R::from_f64(1.0));
    } else {
        l.lt(s, raw::h2(x, rp));
    }
    l.done()
}

/// Theorem-Mb δ regime: H1 < sin t/t ≤ δ_p·H1 (equality exactly at t0).
pub fn mb_delta<R: Real>(coord: f64, p: f64, delta: (f64, f64)) -> PointEval {
    let t = R::from_f64(coord);
    let x = t.cos();
    let s = t.sinc();
    let h = raw::h1(x, R::from_f64(p));
    let mut l = Links::new::<R>();
    l.lt(h, s);
    l.lt(s, R::from_dd(delta.0, delta.1) * h);
    l.done()
}

/// The lower half of Mb alone (the side that breaks beyond p0).
pub fn mb_lower_only<R: Real>(coord: f64, p: f64) -> PointEval {
    let t = R::from_f64(coord);
    let mut l = Links::new::<R>();
    l.lt(raw::h1(t.cos(), R::from_f64(p)), t.sinc());
    l.done()
}

/// Theorem-Mc interpolation chain (7 values, 6 links).
pub fn mc_chain<R: Real>(coord: f64, q: f64, r: f64, s: f64) -> PointEval {
    chain_eval(bounds::mc_chain::<R>(R::from_f64(coord), q, r, s))
}

/// Theorem-Md half-angle pair, direct (σX < sinc < X) or reversed.
pub fn md_enclosure<R: Real>(coord: f64, p: PSpec, direct: bool) -> PointEval {
    let t = R::from_f64(coord);
    let pv = p.view::<R>();
    let x = raw::x_half(t, pv);
    let sx = raw::sigma_pv(pv) * x;
    let s = t.sinc();
    let mut l = Links::new::<R>();
    if direct {
        l.lt(sx, s);
        l.lt(s, x);
    } else {
        l.lt(x, s);
        l.lt(s, sx);
    }
    l.done()
}

/// Theorem-Me chains with constants computed from σ_p/λ_p.
pub fn me_chain<R: Real>(coord: f64, which: u8) -> PointEval {
    let t = R::from_f64(coord);
    match which {
        1 => chain_eval(bounds::me_chain_direct::<R>(t, PView::Fin(R::from_f64(9.0)))),
        2 => chain_eval(bounds::me_chain_direct::<R>(t, PView::Inf)),
        _ => chain_eval(bounds::me_chain_reversed::<R>(t, 1.0)),
    }
}

/// The printed (Me1)/(Main d1) lower constant, verbatim: 41(2√2−25)/(7π).
/// It is negative; the computed counterpart is 2(41√2−25)/(7π) = 3σ_9.
fn me1_printed_const<R: Real>() -> R {
    let sqrt2 = R::from_f64(2.0).sqrt();
    R::from_f64(41.0) * (R::from_f64(2.0) * sqrt2 - R::from_f64(25.0))
        / (R::from_f64(7.0) * R::pi())
}

/// The printed inner member of (Me3)/(Main d4): (2cos²(t/2)+1)/(cos(t/2)+2).
/// The normative member carries cos(t/2), not 1, in the numerator.
fn me3_printed_member<R: Real>(t: R) -> R {
    let c = (t / R::from_f64(2.0)).cos();
    let two = R::from_f64(2.0);
    (two * c * c + R::from_f64(1.0)) / (c + two)
}

/// Printed-variant Me1 chain (documents the sign typo; fails at link 0).
pub fn me1_printed<R: Real>(coord: f64) -> PointEval {
    let t = R::from_f64(coord);
    let x = t.cos();
    let c = (t / R::from_f64(2.0)).cos();
    let two = R::from_f64(2.0);
    let three = R::from_f64(3.0);
    let inner = me1_printed_const::<R>() * (two * c * c + three * c) / (c + R::from_f64(14.0));
    let nine = R::from_f64(9.0);
    chain_eval([
        raw::h2(x, nine),
        inner,
        t.sinc(),
        raw::x_half(t, PView::Fin(nine)),
        raw::h1(x, nine),
    ])
}

/// Printed-variant (Main d1): vacuously true two-sided bound.
pub fn d1_printed<R: Real>(coord: f64) -> PointEval {
    let t = R::from_f64(coord);
    let c = (t / R::from_f64(2.0)).cos();
    let two = R::from_f64(2.0);
    let three = R::from_f64(3.0);
    let core = (two * c * c + three * c) / (c + R::from_f64(14.0));
    chain_eval([me1_printed_const::<R>() * core, t.sinc(), three * core])
}

/// Printed-variant Me3 chain (fails: the inner member exceeds sin t/t).
pub fn me3_printed<R: Real>(coord: f64) -> PointEval {
    let t = R::from_f64(coord);
    let x = t.cos();
    let w = me3_printed_member(t);
    let sigma1 = raw::sigma_pv(PView::Fin(R::from_f64(1.0)));
    chain_eval([
        raw::h1(x, R::from_f64(1.0)),
        w,
        t.sinc(),
        sigma1 * w,
        raw::h2(x, R::from_f64(1.0)),
    ])
}

/// Printed-variant (Main d4) (fails the same way).
pub fn d4_printed<R: Real>(coord: f64) -> PointEval {
    let t = R::from_f64(coord);
    let w = me3_printed_member(t);
    let sigma1 = raw::sigma_pv(PView::Fin(R::from_f64(1.0)));
    chain_eval([w, t.sinc(), sigma1 * w])
}

/// Theorem-Mf pair: u2/u1(·,p) < sin t/t < u2/u1(·,q).
pub fn mf_enclosure<R: Real>(coord: f64, p: f64, q: f64) -> PointEval {
    let t = R::from_f64(coord);
    let x = t.cos();
    let s = t.sinc();
    let lo = raw::u2(x, R::from_f64(p)) / raw::u1(x, R::from_f64(p));
    let hi = raw::u2(x, R::from_f64(q)) / raw::u1(x, R::from_f64(q));
    let mut l = Links::new::<R>();
    l.lt(lo, s);
    l.lt(s, hi);
    l.done()
}

/// u2/u1 strictly decreasing in p along each branch (p < q, coordinate is
/// the abscissa x).
pub fn mf_mono<R: Real>(coord: f64, p: f64, q: f64) -> PointEval {
    let x = R::from_f64(coord);
    let at = |pp: f64| raw::u2(x, R::from_f64(pp)) / raw::u1(x, R::from_f64(pp));
    let mut l = Links::new::<R>();
    l.lt(at(q), at(p));
    l.done()
}

// ---------------------------------------------------------------------------
// Theorem Mg and corollaries (hyperbolic)
// ---------------------------------------------------------------------------

/// H5(cosh t, p) < sinh t/t (the Mg lower bound).
pub fn mg_lower<R: Real>(coord: f64, p: PSpec) -> PointEval {
    let t = R::from_f64(coord);
    let mut l = Links::new::<R>();
    l.lt(raw::h5_pv(t.cosh(), p.view::<R>()), t.sinhc());
    l.done()
}

/// sinh t/t < (2+cosh t)/3 (the p = 0 reversal).
pub fn mg_upper_at_zero<R: Real>(coord: f64) -> PointEval {
    let t = R::from_f64(coord);
    let mut l = Links::new::<R>();
    l.lt(t.sinhc(), (R::from_f64(2.0) + t.cosh()) / R::from_f64(3.0));
    l.done()
}

/// The hyperbolic family chain: 1 = H5(·,−1) < H5(·,−5) < H5(·,±∞)
/// < H5(·,5) < H5(·,1) < H5(·,1/9) < sinh t/t < (2+cosh t)/3.
pub fn mg_chain<R: Real>(coord: f64) -> PointEval {
    let t = R::from_f64(coord);
    let x = t.cosh();
    let h5 = |p: f64| raw::h5(x, R::from_f64(p));
    chain_eval([
        R::from_f64(1.0),
        h5(-5.0),
        raw::h5_pv(x, PView::Inf),
        h5(5.0),
        h5(1.0),
        h5(1.0 / 9.0),
        t.sinhc(),
        (R::from_f64(2.0) + x) / R::from_f64(3.0),
    ])
}

/// Cube-root interpolation: H5(·,p) < (1+2cosh t)/(2+cosh t)
/// < cosh^{1/3} t < sinh t/t < (2+cosh t)/3, for p ≤ −1 or p > 1.
pub fn mg_cube_chain<R: Real>(coord: f64, p: PSpec) -> PointEval {
    let t = R::from_f64(coord);
    let x = t.cosh();
    let one = R::from_f64(1.0);
    let two = R::from_f64(2.0);
    chain_eval([
        raw::h5_pv(x, p.view::<R>()),
        (one + two * x) / (two + x),
        x.cbrt(),
        t.sinhc(),
        (two + x) / R::from_f64(3.0),
    ])
}

// ---------------------------------------------------------------------------
// Section 4.1: arcsin enclosures
// ---------------------------------------------------------------------------

/// Full-angle arcsin pair (direct or reversed); at p = 0 the reversed
/// lower member is Jordan's x.
pub fn p1_enclosure<R: Real>(coord: f64, p: PSpec, direct: bool) -> PointEval {
    let x = R::from_f64(coord);
    let pv = p.view::<R>();
    let core = inverse::full_core(x, pv);
    let a = x.asin();
    let inv_lambda = match p {
        PSpec::F(v) if v != 0.0 => R::pi() * R::from_f64(v) / (R::from_f64(3.0 * v + 1.0)),
        PSpec::F(_) => R::from_f64(0.0),
        PSpec::Inf => R::pi() / R::from_f64(3.0),
    };
    let mut l = Links::new::<R>();
    if direct {
        l.lt(core, a);
        l.lt(a, inv_lambda * core);
    } else {
        let lower = if matches!(p, PSpec::F(v) if v == 0.0) { x } else { inv_lambda * core };
        l.lt(lower, a);
        l.lt(a, core);
    }
    l.done()
}

/// Half-angle arcsin pair with 1/σ_p as the widening factor.
pub fn p2_enclosure<R: Real>(coord: f64, p: PSpec, direct: bool) -> PointEval {
    let x = R::from_f64(coord);
    let pv = p.view::<R>();
    let core = inverse::half_core(x, pv);
    let widened = core / raw::sigma_pv(pv);
    let a = x.asin();
    let mut l = Links::new::<R>();
    if direct {
        l.lt(core, a);
        l.lt(a, widened);
    } else {
        l.lt(widened, a);
        l.lt(a, core);
    }
    l.done()
}

/// The three printed arcsin chains with computed constants.
pub fn p3_chain<R: Real>(coord: f64, which: u8) -> PointEval {
    let x = R::from_f64(coord);
    match which {
        1 => chain_eval(inverse::chain_p31::<R>(x)),
        2 => chain_eval(inverse::chain_p32::<R>(x)),
        _ => chain_eval(inverse::chain_p33::<R>(x)),
    }
}

/// P31 with the printed constant (41√2+25)π/782 in place of 1/(3σ_9).
/// The two agree exactly; both records are kept per the claim registry.
pub fn p31_printed<R: Real>(coord: f64) -> PointEval {
    let x = R::from_f64(coord);
    let mut values = inverse::chain_p31::<R>(x);
    let sqrt2 = R::from_f64(2.0).sqrt();
    let c = (R::from_f64(41.0) * sqrt2 + R::from_f64(25.0)) * R::pi() / R::from_f64(782.0);
    values[3] = c * values[1];
    chain_eval(values)
}

// ---------------------------------------------------------------------------
// Section 4.2: mean inequalities (coordinate = ratio b/a at a = 1)
// ---------------------------------------------------------------------------

/// First-Seiffert enclosure (P4).
pub fn p4_mean<R: Real>(coord: f64, p: PSpec, q: PSpec) -> PointEval {
    let (a, b) = (R::from_f64(1.0), R::from_f64(coord));
    let target = means::mean_r(MeanKind::SeiffertP, a, b);
    let mut l = Links::new::<R>();
    l.lt(means::p4_member(a, b, p.view::<R>()), target);
    l.lt(target, means::p4_member(a, b, q.view::<R>()));
    l.done()
}

/// Second-Seiffert enclosure (P5).
pub fn p5_mean<R: Real>(coord: f64, p: PSpec, q: PSpec) -> PointEval {
    let (a, b) = (R::from_f64(1.0), R::from_f64(coord));
    let target = means::mean_r(MeanKind::SeiffertT, a, b);
    let mut l = Links::new::<R>();
    l.lt(means::p5_member(a, b, p.view::<R>()), target);
    l.lt(target, means::p5_member(a, b, q.view::<R>()));
    l.done()
}

/// Logarithmic-mean bound (P6): lower for the admissible regime, upper at
/// p = 0.
pub fn p6_mean<R: Real>(coord: f64, p: PSpec, upper_at_zero: bool) -> PointEval {
    let (a, b) = (R::from_f64(1.0), R::from_f64(coord));
    let target = means::mean_r(MeanKind::Logarithmic, a, b);
    let member = means::p6_member(a, b, p.view::<R>());
    let mut l = Links::new::<R>();
    if upper_at_zero {
        l.lt(target, member);
    } else {
        l.lt(member, target);
    }
    l.done()
}

/// Neuman-Sándor bound (P7), same shape as P6.
pub fn p7_mean<R: Real>(coord: f64, p: PSpec, upper_at_zero: bool) -> PointEval {
    let (a, b) = (R::from_f64(1.0), R::from_f64(coord));
    let target = means::mean_r(MeanKind::NeumanSandor, a, b);
    let member = means::p7_member(a, b, p.view::<R>());
    let mut l = Links::new::<R>();
    if upper_at_zero {
        l.lt(target, member);
    } else {
        l.lt(member, target);
    }
    l.done()
}

// ---------------------------------------------------------------------------
// Section 4.3: sine integral
// ---------------------------------------------------------------------------

/// (P8): the enclosure brackets the series reference.
pub fn p8_si<R: Real>(coord: f64) -> PointEval {
    let x = R::from_f64(coord);
    let target = si::si_series(x);
    let mut l = Links::new::<R>();
    l.lt(si::si_lower(x), target);
    l.lt(target, si::si_upper(x));
    l.done()
}

/// The numeric remark at x = π/2: members reproduce 1.3682/1.3713 to four
/// decimals and bracket the reference.
pub fn si_remark<R: Real>(_coord: f64) -> PointEval {
    let x = R::pi() / R::from_f64(2.0);
    let lo = si::si_lower(x);
    let hi = si::si_upper(x);
    let target = si::si_series(x);
    let mut l = Links::new::<R>();
    l.eq_within(lo - R::from_f64(1.3682), 5e-5);
    l.eq_within(hi - R::from_f64(1.3713), 5e-5);
    l.lt(lo, target);
    l.lt(target, hi);
    l.done()
}

// ---------------------------------------------------------------------------
// Prior-work cross-checks
// ---------------------------------------------------------------------------

/// 3cos t/(1+2cos t) < sin t/t < 3/(4−cos t).
pub fn xcheck_wu2<R: Real>(coord: f64) -> PointEval {
    let t = R::from_f64(coord);
    let x = t.cos();
    let s = t.sinc();
    let three = R::from_f64(3.0);
    chain_eval([
        three * x / (R::from_f64(1.0) + R::from_f64(2.0) * x),
        s,
        three / (R::from_f64(4.0) - x),
    ])
}

/// (7+5cos t)/(11+cos t) < sin t/t < (9+6cos t)/(14+cos t).
pub fn xcheck_lihe<R: Real>(coord: f64) -> PointEval {
    let t = R::from_f64(coord);
    let x = t.cos();
    chain_eval([
        (R::from_f64(7.0) + R::from_f64(5.0) * x) / (R::from_f64(11.0) + x),
        t.sinc(),
        (R::from_f64(9.0) + R::from_f64(6.0) * x) / (R::from_f64(14.0) + x),
    ])
}

/// (1+2cos t)/(2+cos t) < sin t/t.
pub fn xcheck_jiang<R: Real>(coord: f64) -> PointEval {
    let t = R::from_f64(coord);
    let x = t.cos();
    let two = R::from_f64(2.0);
    chain_eval([(R::from_f64(1.0) + two * x) / (two + x), t.sinc()])
}

/// (8/π)(t/sin t) + cos t < 4 < 3(t/sin t) + cos t.
pub fn xcheck_neuman<R: Real>(coord: f64) -> PointEval {
    let t = R::from_f64(coord);
    let x = t.cos();
    let inv_sinc = R::from_f64(1.0) / t.sinc();
    let four = R::from_f64(4.0);
    chain_eval([
        R::from_f64(8.0) / R::pi() * inv_sinc + x,
        four,
        R::from_f64(3.0) * inv_sinc + x,
    ])
}
