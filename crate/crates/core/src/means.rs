//! Bivariate means and their rational enclosures.
//!
//! For a, b > 0 the classical means A, G, Q and the difference-quotient
//! means
//!
//! ```text
//! L  = (a−b)/(ln a − ln b)            P  = (a−b)/(2 arcsin((a−b)/(a+b)))
//! T  = (a−b)/(2 arctan((a−b)/(a+b)))  NS = (a−b)/(2 arcsinh((a−b)/(a+b)))
//! ```
//!
//! The circular enclosures transfer through (sin x)/x = P/A, cos x = G/A
//! (and T/Q, A/Q for the arctan substitution); the hyperbolic bound
//! transfers through (sinh x)/x = L/G, cosh x = A/G (and NS/A, Q/A).
//! Every evaluator canonicalizes to (max, min), so swapping the arguments
//! is exactly invariant.

use crate::bounds::{Enclosure, Family, Side, SideBound};
use crate::constants;
use crate::kernel::{raw, PView};
use crate::real::Real;
use crate::{Error, Param, Result};

/// An unordered pair of positive reals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeanPair {
    a: f64,
    b: f64,
}

impl MeanPair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::Domain { what: "mean arguments must be positive", value: a });
        }
        if !(b.is_finite() && b > 0.0) {
            return Err(Error::Domain { what: "mean arguments must be positive", value: b });
        }
        Ok(MeanPair { a, b })
    }

    pub fn a(self) -> f64 {
        self.a
    }

    pub fn b(self) -> f64 {
        self.b
    }

    fn distinct(self, what: &'static str) -> Result<Self> {
        if self.a == self.b {
            Err(Error::Domain { what, value: self.a })
        } else {
            Ok(self)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeanKind {
    Arithmetic,
    Geometric,
    Quadratic,
    Logarithmic,
    SeiffertP,
    SeiffertT,
    NeumanSandor,
}

impl MeanKind {
    /// Means with a removable singularity at a = b.
    fn needs_distinct(self) -> bool {
        matches!(
            self,
            MeanKind::Logarithmic | MeanKind::SeiffertP | MeanKind::SeiffertT | MeanKind::NeumanSandor
        )
    }
}

/// Evaluate a mean. The four difference-quotient means reject a = b.
pub fn mean(kind: MeanKind, pair: MeanPair) -> Result<f64> {
    if kind.needs_distinct() {
        pair.distinct("this mean requires a != b")?;
    }
    Ok(mean_r(kind, pair.a, pair.b))
}

pub(crate) fn mean_r<R: Real>(kind: MeanKind, a: R, b: R) -> R {
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    let two = R::from_f64(2.0);
    match kind {
        MeanKind::Arithmetic => (hi + lo) / two,
        MeanKind::Geometric => (hi * lo).sqrt(),
        MeanKind::Quadratic => ((hi * hi + lo * lo) / two).sqrt(),
        MeanKind::Logarithmic => log_mean(hi, lo),
        MeanKind::SeiffertP => {
            let d = hi - lo;
            d / (two * (d / (hi + lo)).asin())
        }
        MeanKind::SeiffertT => {
            let d = hi - lo;
            d / (two * (d / (hi + lo)).atan())
        }
        MeanKind::NeumanSandor => {
            let d = hi - lo;
            d / (two * (d / (hi + lo)).asinh())
        }
    }
}

/// L with cancellation control: ln(hi/lo) is formed as ln1p(d/lo), and for
/// z = d/(hi+lo) < 1e−8 the series A(1 − z²/3 − 4z⁴/45) takes over.
fn log_mean<R: Real>(hi: R, lo: R) -> R {
    let d = hi - lo;
    let s = hi + lo;
    let z = d / s;
    if z.to_f64() < 1e-8 {
        let z2 = z * z;
        let one = R::from_f64(1.0);
        s / R::from_f64(2.0)
            * (one - z2 / R::from_f64(3.0) - R::from_f64(4.0 / 45.0) * z2 * z2)
    } else {
        d / (d / lo).ln_1p()
    }
}

/// Lower or upper member A·H1(G/A, p) of the first-Seiffert enclosure.
pub(crate) fn p4_member<R: Real>(a: R, b: R, p: PView<R>) -> R {
    let am = mean_r(MeanKind::Arithmetic, a, b);
    let gm = mean_r(MeanKind::Geometric, a, b);
    am * raw::h1_pv(gm / am, p)
}

/// Member Q·H1(A/Q, p) of the second-Seiffert enclosure.
pub(crate) fn p5_member<R: Real>(a: R, b: R, p: PView<R>) -> R {
    let am = mean_r(MeanKind::Arithmetic, a, b);
    let qm = mean_r(MeanKind::Quadratic, a, b);
    qm * raw::h1_pv(am / qm, p)
}

/// Member G·H5(A/G, p) of the logarithmic-mean bound.
pub(crate) fn p6_member<R: Real>(a: R, b: R, p: PView<R>) -> R {
    let am = mean_r(MeanKind::Arithmetic, a, b);
    let gm = mean_r(MeanKind::Geometric, a, b);
    gm * raw::h5_pv(am / gm, p)
}

/// Member A·H5(Q/A, p) of the Neuman-Sándor bound.
pub(crate) fn p7_member<R: Real>(a: R, b: R, p: PView<R>) -> R {
    let am = mean_r(MeanKind::Arithmetic, a, b);
    let qm = mean_r(MeanKind::Quadratic, a, b);
    am * raw::h5_pv(qm / am, p)
}

/// A·(2pA+(p+3)G)/((3p+1)A+2G) < P < (same at q), for p ∈ [0, p0] and
/// q ∈ (−∞,−1] ∪ [9,∞].
pub fn seiffert_p_enclosure(pair: MeanPair, p: f64, q: Param) -> Result<Enclosure> {
    pair.distinct("the Seiffert enclosure requires a != b")?;
    check_mean_regimes(p, q)?;
    Ok(Enclosure {
        lower: p4_member(pair.a, pair.b, PView::Fin(p)),
        upper: p4_member(pair.a, pair.b, PView::<f64>::of(q)),
        lower_strict: true,
        upper_strict: true,
        family: Family::Ma,
        p: Param::finite(p)?,
    })
}

/// Q·(2pQ+(p+3)A)/((3p+1)Q+2A) < T < (same at q), same regimes as P.
pub fn seiffert_t_enclosure(pair: MeanPair, p: f64, q: Param) -> Result<Enclosure> {
    pair.distinct("the Seiffert enclosure requires a != b")?;
    check_mean_regimes(p, q)?;
    Ok(Enclosure {
        lower: p5_member(pair.a, pair.b, PView::Fin(p)),
        upper: p5_member(pair.a, pair.b, PView::<f64>::of(q)),
        lower_strict: true,
        upper_strict: true,
        family: Family::Ma,
        p: Param::finite(p)?,
    })
}

fn check_mean_regimes(p: f64, q: Param) -> Result<()> {
    if !(0.0..=constants::p0()).contains(&p) {
        return Err(Error::Regime { what: "the mean lower bound holds (p in [0, p0])", p });
    }
    if let Param::Finite(qv) = q {
        if !(qv <= -1.0 || qv >= 9.0) {
            return Err(Error::Regime { what: "the mean upper bound holds (q <= -1 or q >= 9)", p: qv });
        }
    }
    Ok(())
}

/// G·(2G+(1+3p)A)/((3+p)G+2pA) < L for p ∈ (−∞,−1] ∪ [1/9,∞]; at p = 0
/// the reversed inequality gives the upper bound (2G+A)/3.
pub fn log_mean_bound(pair: MeanPair, p: Param) -> Result<SideBound> {
    pair.distinct("the logarithmic-mean bound requires a != b")?;
    hyperbolic_side(pair, p, p6_member::<f64>)
}

/// A·(2A+(1+3p)Q)/((3+p)A+2pQ) < NS, same regimes as the L bound; at
/// p = 0 the reversal gives NS < (2A+Q)/3.
pub fn neuman_sandor_bound(pair: MeanPair, p: Param) -> Result<SideBound> {
    pair.distinct("the Neuman-Sandor bound requires a != b")?;
    hyperbolic_side(pair, p, p7_member::<f64>)
}

fn hyperbolic_side(
    pair: MeanPair,
    p: Param,
    member: fn(f64, f64, PView<f64>) -> f64,
) -> Result<SideBound> {
    match p {
        Param::Finite(v) if v == 0.0 => Ok(SideBound {
            value: member(pair.a, pair.b, PView::Fin(0.0)),
            side: Side::Upper,
            strict: true,
        }),
        Param::Finite(v) if v > 0.0 && v < 1.0 / 9.0 => {
            Err(Error::Regime { what: "the hyperbolic mean bound holds (p <= -1, p = 0 or p >= 1/9)", p: v })
        }
        _ => Ok(SideBound {
            value: member(pair.a, pair.b, PView::of(p)),
            side: Side::Lower,
            strict: true,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn pair(a: f64, b: f64) -> MeanPair {
        MeanPair::new(a, b).unwrap()
    }

    #[test]
    fn perfect_square_values() {
        assert_eq!(mean(MeanKind::Geometric, pair(4.0, 9.0)).unwrap(), 6.0);
        assert_eq!(mean(MeanKind::Arithmetic, pair(4.0, 9.0)).unwrap(), 6.5);
        assert_eq!(mean(MeanKind::Quadratic, pair(1.0, 7.0)).unwrap(), 5.0);
        // P(1,3) = 6/π via arcsin(1/2) = π/6.
        assert!((mean(MeanKind::SeiffertP, pair(1.0, 3.0)).unwrap() - 6.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn classical_ordering_at_1_2() {
        let p = pair(1.0, 2.0);
        let vals = [
            mean(MeanKind::Geometric, p).unwrap(),
            mean(MeanKind::Logarithmic, p).unwrap(),
            mean(MeanKind::SeiffertP, p).unwrap(),
            mean(MeanKind::Arithmetic, p).unwrap(),
            mean(MeanKind::NeumanSandor, p).unwrap(),
            mean(MeanKind::SeiffertT, p).unwrap(),
            mean(MeanKind::Quadratic, p).unwrap(),
        ];
        for w in vals.windows(2) {
            assert!(w[0] < w[1], "ordering violated: {vals:?}");
        }
    }

    #[test]
    fn swap_invariance_is_exact() {
        for kind in [
            MeanKind::Arithmetic,
            MeanKind::Geometric,
            MeanKind::Quadratic,
            MeanKind::Logarithmic,
            MeanKind::SeiffertP,
            MeanKind::SeiffertT,
            MeanKind::NeumanSandor,
        ] {
            let v1 = mean(kind, pair(1.7, 4.3)).unwrap();
            let v2 = mean(kind, pair(4.3, 1.7)).unwrap();
            assert_eq!(v1.to_bits(), v2.to_bits(), "{kind:?}");
        }
        let e1 = seiffert_p_enclosure(pair(1.0, 2.0), 1.0, Param::finite(9.0).unwrap()).unwrap();
        let e2 = seiffert_p_enclosure(pair(2.0, 1.0), 1.0, Param::finite(9.0).unwrap()).unwrap();
        assert_eq!(e1.lower.to_bits(), e2.lower.to_bits());
        assert_eq!(e1.upper.to_bits(), e2.upper.to_bits());
    }

    #[test]
    fn homogeneity() {
        let kinds = [
            MeanKind::Arithmetic,
            MeanKind::Geometric,
            MeanKind::Quadratic,
            MeanKind::Logarithmic,
            MeanKind::SeiffertP,
            MeanKind::SeiffertT,
            MeanKind::NeumanSandor,
        ];
        for kind in kinds {
            for lambda in [0.5, 3.0] {
                let base = mean(kind, pair(1.3, 2.9)).unwrap();
                let scaled = mean(kind, pair(lambda * 1.3, lambda * 2.9)).unwrap();
                assert!(
                    (scaled - lambda * base).abs() <= 1e-13 * scaled.abs(),
                    "{kind:?} lambda={lambda}"
                );
            }
        }
    }

    #[test]
    fn log_mean_series_guard_joins_smoothly() {
        // Straddle the 1e−8 switch; both branches agree to 1e−15 relative.
        for eps in [1e-9, 9e-9, 1.1e-8, 1e-7] {
            let l = mean(MeanKind::Logarithmic, pair(1.0, 1.0 + eps)).unwrap();
            let direct = eps / (1.0 + eps).ln();
            assert!(
                (l - direct).abs() <= 1e-13 * l,
                "eps={eps}: {l} vs {direct}"
            );
        }
        assert!(mean(MeanKind::Logarithmic, pair(2.0, 2.0)).is_err());
    }

    #[test]
    fn seiffert_enclosures_bracket() {
        let p = pair(1.0, 2.0);
        let pm = mean(MeanKind::SeiffertP, p).unwrap();
        let e = seiffert_p_enclosure(p, 1.0, Param::finite(9.0).unwrap()).unwrap();
        assert!(e.lower < pm && pm < e.upper);
        let tm = mean(MeanKind::SeiffertT, p).unwrap();
        let e = seiffert_t_enclosure(p, 1.0, Param::finite(9.0).unwrap()).unwrap();
        assert!(e.lower < tm && tm < e.upper);
        // q = ±∞ upper reduces to the Cusa means form (2A+G)/3.
        let e = seiffert_p_enclosure(p, 0.0, Param::PosInf).unwrap();
        let (am, gm) = (1.5, 2f64.sqrt());
        assert!((e.upper - (2.0 * am + gm) / 3.0).abs() < 1e-15);
        assert!(seiffert_p_enclosure(p, 8.0, Param::finite(9.0).unwrap()).is_err());
        assert!(seiffert_p_enclosure(p, 1.0, Param::finite(3.0).unwrap()).is_err());
    }

    #[test]
    fn hyperbolic_bounds() {
        let p = pair(1.0, 2.0);
        let l = mean(MeanKind::Logarithmic, p).unwrap();
        let ns = mean(MeanKind::NeumanSandor, p).unwrap();
        // p = 1/9 lower bounds.
        let lb = log_mean_bound(p, Param::finite(1.0 / 9.0).unwrap()).unwrap();
        assert!(matches!(lb.side, Side::Lower) && lb.value < l);
        let nb = neuman_sandor_bound(p, Param::finite(1.0 / 9.0).unwrap()).unwrap();
        assert!(matches!(nb.side, Side::Lower) && nb.value < ns);
        // p = 0 reversals: L < (2G+A)/3 and NS < (2A+Q)/3.
        let lu = log_mean_bound(p, Param::finite(0.0).unwrap()).unwrap();
        let (am, gm) = (1.5, 2f64.sqrt());
        assert!(matches!(lu.side, Side::Upper));
        assert!((lu.value - (2.0 * gm + am) / 3.0).abs() < 1e-15);
        assert!(l < lu.value);
        let nu = neuman_sandor_bound(p, Param::finite(0.0).unwrap()).unwrap();
        let qm = (2.5f64).sqrt();
        assert!((nu.value - (2.0 * am + qm) / 3.0).abs() < 1e-15);
        assert!(ns < nu.value);
        assert!(log_mean_bound(p, Param::finite(0.05).unwrap()).is_err());
    }

    #[test]
    fn substitution_consistency() {
        // x = arcsin((b−a)/(a+b)) gives (sin x)/x = P/A and cos x = G/A;
        // x = arctanh((b−a)/(a+b)) gives (sinh x)/x = L/G and cosh x = A/G.
        let (a, b) = (1.0, 2.7);
        let p = pair(a, b);
        let (am, gm) = (mean(MeanKind::Arithmetic, p).unwrap(), mean(MeanKind::Geometric, p).unwrap());
        let x = ((b - a) / (a + b)).asin();
        let pm = mean(MeanKind::SeiffertP, p).unwrap();
        assert!((x.sin() / x - pm / am).abs() < 1e-15);
        assert!((x.cos() - gm / am).abs() < 1e-15);
        let xh = ((b - a) / (a + b)).atanh();
        let lm = mean(MeanKind::Logarithmic, p).unwrap();
        assert!((xh.sinh() / xh - lm / gm).abs() < 1e-14);
        assert!((xh.cosh() - am / gm).abs() < 1e-15);
    }
}
