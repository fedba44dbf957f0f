//! The claim registry: every in-scope statement, its parameter samples,
//! grids, zones and margin evaluators.
//!
//! Exclusion zones: grids keep 1e−6 away from each interval endpoint by
//! default (the inequalities degenerate to equalities there faster than
//! any fixed precision can resolve). Samples that sit exactly ON a
//! degeneracy threshold — p = 9 circular, p = 1/9 hyperbolic, and the
//! q = 1 cube-root links, where the near-zero margin falls to order t⁶ or
//! t⁷ — widen the near-zero zone to 2e−4 so that every remaining grid
//! point is decidable in double-double (worst such margin ≈ 3e−26 against
//! a 1e−29 guard). The mean-ratio floor widens from 1+1e−6 to 1+2e−4 for
//! the analogous samples.

use std::f64::consts::FRAC_PI_2;
use std::sync::Arc;

use super::margins::{self, PSpec, PointEval};
use super::{Claim, Expectation, Flavor, Sample, SampleGrid};
use crate::constants;
use crate::dd::Dd;
use crate::kernel::raw;

/// Default endpoint exclusion.
const Z: f64 = 1e-6;
/// Near-zero exclusion for samples on a degeneracy threshold.
const Z_SHARP: f64 = 2e-4;
/// Hyperbolic grids certify on [Z, H_MAX].
const H_MAX: f64 = 15.0;
/// Mean-ratio grid: [1+floor, RATIO_MAX], log-spaced.
const RATIO_MAX: f64 = 1e4;

fn circular(z_lo: f64) -> SampleGrid {
    SampleGrid::Interval { lo: z_lo, hi: FRAC_PI_2 - Z, log: false }
}

fn unit() -> SampleGrid {
    SampleGrid::Interval { lo: Z, hi: 1.0 - Z, log: false }
}

fn hyperbolic(z_lo: f64) -> SampleGrid {
    SampleGrid::Interval { lo: z_lo, hi: H_MAX, log: false }
}

fn ratios(floor: f64) -> SampleGrid {
    SampleGrid::Interval { lo: 1.0 + floor, hi: RATIO_MAX, log: true }
}

type EvalPair = (super::Eval, super::Eval);

fn sample(label: Vec<(&'static str, f64)>, grid: SampleGrid, evals: EvalPair) -> Sample {
    Sample { label, grid, eval64: evals.0, evaldd: evals.1 }
}

/// Instantiate one generic margin function at both precisions.
macro_rules! ev {
    ($f:path $(, $arg:expr)*) => {{
        (
            Arc::new(move |c: f64| -> PointEval { $f::<f64>(c $(, $arg)*) }) as super::Eval,
            Arc::new(move |c: f64| -> PointEval { $f::<Dd>(c $(, $arg)*) }) as super::Eval,
        )
    }};
}

fn claim(
    id: &'static str,
    about: &'static str,
    expectation: Expectation,
    coord_name: &'static str,
    samples: Vec<Sample>,
) -> Claim {
    Claim { id, about, expectation, flavor: Flavor::Strict, coord_name, samples }
}

/// t0(p) polished to double-double by Newton steps on g.
fn t0_dd(p: f64) -> (f64, f64) {
    let seed = constants::t0(p).expect("t0 exists on (p1, 9)").value;
    let pd = Dd::from_f64(p);
    let mut t = Dd::from_f64(seed);
    for _ in 0..3 {
        t = t - raw::g(t, pd) / raw::dg_dt(t, pd);
    }
    (t.hi, t.lo)
}

/// δ_p in double-double, via the quotient form at the polished t0.
fn delta_dd(p: f64) -> (f64, f64) {
    let (hi, lo) = t0_dd(p);
    let t0 = Dd::new(hi, lo);
    let pd = Dd::from_f64(p);
    let x = t0.cos();
    let two = Dd::from_f64(2.0);
    let three = Dd::from_f64(3.0);
    let d = t0.sin() / t0 * ((three * pd + Dd::from_f64(1.0)) + two * x)
        / (two * pd + (pd + three) * x);
    (d.hi, d.lo)
}

/// x1(p) in double-double via the cancellation-free quadratic root
/// x1 = 2(−C)/(B + √(B²−4AC)) of u3(·,p) = Ax² + Bx + C (C < 0 here).
fn x1_dd(p: f64) -> (f64, f64) {
    let pd = Dd::from_f64(p);
    let three = Dd::from_f64(3.0);
    let a = (pd + three) * (pd + three);
    let b = (pd + three) * (Dd::from_f64(7.0) * pd + three);
    let c = raw::u3_at_zero(pd);
    let x1 = Dd::from_f64(2.0) * (-c) / (b + (b * b - Dd::from_f64(4.0) * a * c).sqrt());
    (x1.hi, x1.lo)
}

/// Build the full registry.
pub fn registry() -> Vec<Claim> {
    let p0v = constants::p0();
    let p1v = constants::p1();
    let p3v = constants::p3().expect("p3 bracket is sign-changing").value;
    let ninth = 1.0 / 9.0;

    let mut claims = Vec::new();

    // --- Section 2 lemmas -------------------------------------------------
    claims.push(claim(
        "LEM_H12_MONO",
        "H1 strictly increasing and H2 strictly decreasing in p on each branch",
        Expectation::Pass,
        "x",
        [(-5.0, -2.0), (-2.0, -1.0), (0.0, 0.5), (0.5, 1.0), (1.0, 9.0), (9.0, 50.0)]
            .into_iter()
            .map(|(p, q)| {
                sample(vec![("p", p), ("q", q)], unit(), ev!(margins::h12_mono, p, q))
            })
            .collect(),
    ));

    claims.push(claim(
        "LEM_H12_LIMITS",
        "H1(x,±inf) = (2+x)/3 and H2(x,±inf) = (2+x)/pi, approached by the finite family",
        Expectation::Pass,
        "x",
        vec![sample(vec![], unit(), ev!(margins::h12_limits))],
    ));

    claims.push(claim(
        "LEM_U_POS",
        "u1 and u2 are positive on the admissible set",
        Expectation::Pass,
        "x",
        [-10.0, -2.0, -1.0, 0.0, 1.0, 9.0, 50.0]
            .into_iter()
            .map(|p| sample(vec![("p", p)], unit(), ev!(margins::u_pos, p)))
            .collect(),
    ));

    claims.push(claim(
        "LEM_U3_SIGN_A",
        "u3(x,p) >= 0 on (0,1) for p <= p3",
        Expectation::Pass,
        "x",
        [-10.0, -3.0, -1.0, 0.0, 3.0, p3v]
            .into_iter()
            .map(|p| sample(vec![("p", p)], unit(), ev!(margins::u3_fixed_sign, p, true)))
            .collect(),
    ));

    claims.push(claim(
        "LEM_U3_SIGN_B",
        "u3(x,p) <= 0 on (0,1) for p >= 9",
        Expectation::Pass,
        "x",
        [9.0, 20.0, 100.0]
            .into_iter()
            .map(|p| sample(vec![("p", p)], unit(), ev!(margins::u3_fixed_sign, p, false)))
            .collect(),
    ));

    claims.push(claim(
        "LEM_U3_SIGN_C",
        "for p in (p3,9), u3 < 0 left of x1(p) and > 0 right of it",
        Expectation::Pass,
        "x",
        [5.7, 6.0, 7.0, 8.5]
            .into_iter()
            .map(|p| {
                let x1 = x1_dd(p);
                sample(vec![("p", p)], unit(), ev!(margins::u3_crossing, p, x1))
            })
            .collect(),
    ));

    claims.push(claim(
        "LEM_SGNG_A",
        "g(t,p) < 0 on (0,pi/2) for p <= -1 or p >= 9",
        Expectation::Pass,
        "t",
        [-10.0, -3.0, -1.0, 9.0, 20.0, 100.0]
            .into_iter()
            .map(|p| {
                let z = if p == 9.0 { Z_SHARP } else { Z };
                sample(vec![("p", p)], circular(z), ev!(margins::g_sign, p, true))
            })
            .collect(),
    ));

    claims.push(claim(
        "LEM_SGNG_B",
        "g(t,p) > 0 on (0,pi/2) for 0 <= p <= p1",
        Expectation::Pass,
        "t",
        [0.0, 1.0, 3.0, p3v, p1v]
            .into_iter()
            .map(|p| sample(vec![("p", p)], circular(Z), ev!(margins::g_sign, p, false)))
            .collect(),
    ));

    claims.push(claim(
        "LEM_SGNG_C",
        "for p in (p1,9), g changes sign exactly once, at t0(p)",
        Expectation::Pass,
        "t",
        [6.5, p0v, 8.0, 8.9]
            .into_iter()
            .map(|p| {
                let t0 = t0_dd(p);
                sample(vec![("p", p)], circular(Z), ev!(margins::g_crossing, p, t0))
            })
            .collect(),
    ));

    claims.push(claim(
        "LEM_SGNDF_A",
        "f is decreasing in t iff p <= -1 or p >= 9 (df/dt < 0)",
        Expectation::Pass,
        "t",
        [-10.0, -1.0, 9.0, 50.0]
            .into_iter()
            .map(|p| {
                let z = if p == 9.0 { Z_SHARP } else { Z };
                sample(vec![("p", p)], circular(z), ev!(margins::df_sign, PSpec::F(p), true))
            })
            .collect(),
    ));

    claims.push(claim(
        "LEM_SGNDF_B",
        "f is increasing in t for 0 <= p <= p1 (df/dt > 0)",
        Expectation::Pass,
        "t",
        [0.0, 1.0, 5.0, p1v]
            .into_iter()
            .map(|p| sample(vec![("p", p)], circular(Z), ev!(margins::df_sign, PSpec::F(p), false)))
            .collect(),
    ));

    claims.push(claim(
        "LEM_SGNDF_C",
        "for p in (p1,9), f increases up to t0(p) then decreases",
        Expectation::Pass,
        "t",
        [6.5, p0v, 8.5]
            .into_iter()
            .map(|p| {
                let t0 = t0_dd(p);
                sample(vec![("p", p)], circular(Z), ev!(margins::df_crossing, p, t0))
            })
            .collect(),
    ));

    claims.push(claim(
        "LEM_H1X",
        "H1(x^3,p) >= x iff p <= -1 or p >= 1; <= x iff p = 0",
        Expectation::Pass,
        "x",
        {
            let mut v: Vec<Sample> = [-2.0, -1.0, 1.0, 3.0]
                .into_iter()
                .map(|p| sample(vec![("p", p)], unit(), ev!(margins::h1x_sign, p, true)))
                .collect();
            v.push(sample(vec![("p", 0.0)], unit(), ev!(margins::h1x_sign, 0.0, false)));
            v
        },
    ));

    claims.push(Claim {
        id: "LEM_H1X_NEITHER",
        about: "for p strictly between 0 and 1 neither comparison holds globally",
        expectation: Expectation::Pass,
        flavor: Flavor::Mixed,
        coord_name: "x",
        samples: vec![sample(vec![("p", 0.5)], unit(), ev!(margins::h1x_mixed, 0.5))],
    });

    // --- Main circular theorems -------------------------------------------
    claims.push(claim(
        "THM_MA",
        "H2(cos t,p) < sin t/t < H1(cos t,p) for p <= -1 or p >= 9",
        Expectation::Pass,
        "t",
        {
            let mut v: Vec<Sample> = [-10.0, -3.0, -1.0, 9.0, 20.0]
                .into_iter()
                .map(|p| {
                    let z = if p == 9.0 { Z_SHARP } else { Z };
                    sample(vec![("p", p)], circular(z), ev!(margins::ma_enclosure, PSpec::F(p)))
                })
                .collect();
            v.push(sample(
                vec![("p", f64::INFINITY)],
                circular(Z),
                ev!(margins::ma_enclosure, PSpec::Inf),
            ));
            v
        },
    ));

    claims.push(claim(
        "COR_MA_CHAIN",
        "the nested family chain from 2/pi up to 1 around sin t/t",
        Expectation::Pass,
        "t",
        vec![sample(vec![], circular(Z_SHARP), ev!(margins::ma_chain))],
    ));

    claims.push(claim(
        "THM_MB_LAMBDA",
        "H1 < sin t/t < H2 for 0 <= p <= p1 (lambda_p best possible)",
        Expectation::Pass,
        "t",
        [0.0, 0.5, 1.0, 3.0, p1v]
            .into_iter()
            .map(|p| sample(vec![("p", p)], circular(Z), ev!(margins::mb_lambda, p)))
            .collect(),
    ));

    claims.push(claim(
        "THM_MB_DELTA",
        "H1 < sin t/t <= delta_p*H1 for p1 < p <= p0 (equality at t0)",
        Expectation::Pass,
        "t",
        [6.7, p0v]
            .into_iter()
            .map(|p| {
                let d = delta_dd(p);
                sample(vec![("p", p)], circular(Z), ev!(margins::mb_delta, p, d))
            })
            .collect(),
    ));

    claims.push(claim(
        "THM_MC_CHAIN",
        "the cube-root interpolation chain at the regime corners",
        Expectation::Pass,
        "t",
        {
            let mut v = Vec::new();
            for q in [1.0, p0v] {
                for r in [9.0, 50.0] {
                    for s in [-1.0, -10.0] {
                        let z = if q == 1.0 || r == 9.0 { Z_SHARP } else { Z };
                        v.push(sample(
                            vec![("q", q), ("r", r), ("s", s)],
                            circular(z),
                            ev!(margins::mc_chain, q, r, s),
                        ));
                    }
                }
            }
            v
        },
    ));

    let md_samples = |claims: &mut Vec<Claim>| {
        claims.push(claim(
            "THM_MD",
            "sigma_p*X < sin t/t < X for p <= -1 or p >= 9; reversed on [0, p1]",
            Expectation::Pass,
            "t",
            {
                let mut v: Vec<Sample> = [-10.0, -1.0, 9.0, 20.0]
                    .into_iter()
                    .map(|p| {
                        let z = if p == 9.0 { Z_SHARP } else { Z };
                        sample(vec![("p", p)], circular(z), ev!(margins::md_enclosure, PSpec::F(p), true))
                    })
                    .collect();
                v.push(sample(
                    vec![("p", f64::INFINITY)],
                    circular(Z),
                    ev!(margins::md_enclosure, PSpec::Inf, true),
                ));
                for p in [0.0, 1.0, 3.0, p1v] {
                    v.push(sample(
                        vec![("p", p)],
                        circular(Z),
                        ev!(margins::md_enclosure, PSpec::F(p), false),
                    ));
                }
                v
            },
        ));
    };
    md_samples(&mut claims);

    claims.push(claim(
        "COR_MD_D1",
        "the p = 9 half-angle instance, constant computed from sigma_9",
        Expectation::Pass,
        "t",
        vec![sample(vec![("p", 9.0)], circular(Z_SHARP), ev!(margins::md_enclosure, PSpec::F(9.0), true))],
    ));
    claims.push(claim(
        "COR_MD_D1_PRINTED",
        "the p = 9 instance with the printed constant 41(2sqrt2-25)/(7pi); vacuously true (negative lower bound)",
        Expectation::Record,
        "t",
        vec![sample(vec![("p", 9.0)], circular(Z_SHARP), ev!(margins::d1_printed))],
    ));
    claims.push(claim(
        "COR_MD_D2",
        "the p = inf half-angle instance",
        Expectation::Pass,
        "t",
        vec![sample(vec![("p", f64::INFINITY)], circular(Z), ev!(margins::md_enclosure, PSpec::Inf, true))],
    ));
    claims.push(claim(
        "COR_MD_D3",
        "the p = 0 half-angle instance (reversed)",
        Expectation::Pass,
        "t",
        vec![sample(vec![("p", 0.0)], circular(Z), ev!(margins::md_enclosure, PSpec::F(0.0), false))],
    ));
    claims.push(claim(
        "COR_MD_D4",
        "the p = 1 half-angle instance (reversed), inner member from the normative X formula",
        Expectation::Pass,
        "t",
        vec![sample(vec![("p", 1.0)], circular(Z), ev!(margins::md_enclosure, PSpec::F(1.0), false))],
    ));
    claims.push(claim(
        "COR_MD_D4_PRINTED",
        "the printed (2cos^2(t/2)+1)/(cos(t/2)+2) inner member; fails (typo for 2cos^2+cos)",
        Expectation::Record,
        "t",
        vec![sample(vec![("p", 1.0)], circular(Z), ev!(margins::d4_printed))],
    ));

    claims.push(claim(
        "THM_ME1",
        "the p = 9 refinement chain, constants from sigma_9",
        Expectation::Pass,
        "t",
        vec![sample(vec![("p", 9.0)], circular(Z_SHARP), ev!(margins::me_chain, 1))],
    ));
    claims.push(claim(
        "THM_ME1_PRINTED",
        "the printed Me1 chain with 41(2sqrt2-25)/(7pi); fails at the first link",
        Expectation::Record,
        "t",
        vec![sample(vec![("p", 9.0)], circular(Z_SHARP), ev!(margins::me1_printed))],
    ));
    claims.push(claim(
        "THM_ME2",
        "the p = inf refinement chain",
        Expectation::Pass,
        "t",
        vec![sample(vec![("p", f64::INFINITY)], circular(Z), ev!(margins::me_chain, 2))],
    ));
    claims.push(claim(
        "THM_ME2_PRINTED",
        "the printed Me2 chain; its constant 12(2sqrt2-1)/(7pi) equals sigma_inf exactly",
        Expectation::Record,
        "t",
        vec![sample(vec![("p", f64::INFINITY)], circular(Z), ev!(margins::me_chain, 2))],
    ));
    claims.push(claim(
        "THM_ME3",
        "the p = 1 refinement chain (reversed), inner member from the normative X formula",
        Expectation::Pass,
        "t",
        vec![sample(vec![("p", 1.0)], circular(Z), ev!(margins::me_chain, 3))],
    ));
    claims.push(claim(
        "THM_ME3_PRINTED",
        "the printed Me3 chain with (2cos^2(t/2)+1); fails (same typo as Main d4)",
        Expectation::Record,
        "t",
        vec![sample(vec![("p", 1.0)], circular(Z), ev!(margins::me3_printed))],
    ));

    claims.push(claim(
        "THM_MF",
        "u2/u1(cos t,p) < sin t/t < u2/u1(cos t,q) for p in the upper regime, q in [0,p1]",
        Expectation::Pass,
        "t",
        [(9.0, 0.0), (-1.0, p1v), (-10.0, 3.0), (50.0, 1.0), (-3.0, 6.0)]
            .into_iter()
            .map(|(p, q)| {
                let z = if p == 9.0 { Z_SHARP } else { Z };
                sample(vec![("p", p), ("q", q)], circular(z), ev!(margins::mf_enclosure, p, q))
            })
            .collect(),
    ));

    claims.push(claim(
        "THM_MF_MONO",
        "u2/u1 is strictly decreasing in p along each branch",
        Expectation::Pass,
        "x",
        [(-10.0, -2.0), (-2.0, -1.0), (0.0, 1.0), (1.0, 9.0), (9.0, 100.0)]
            .into_iter()
            .map(|(p, q)| sample(vec![("p", p), ("q", q)], unit(), ev!(margins::mf_mono, p, q)))
            .collect(),
    ));

    // --- Hyperbolic --------------------------------------------------------
    claims.push(claim(
        "THM_MG",
        "H5(cosh t,p) < sinh t/t for p <= -1 or p >= 1/9; reversed at p = 0",
        Expectation::Pass,
        "t",
        {
            let mut v: Vec<Sample> = [-10.0, -1.0, ninth, 1.0, 5.0]
                .into_iter()
                .map(|p| {
                    let z = if p == ninth { Z_SHARP } else { Z };
                    sample(vec![("p", p)], hyperbolic(z), ev!(margins::mg_lower, PSpec::F(p)))
                })
                .collect();
            v.push(sample(
                vec![("p", f64::INFINITY)],
                hyperbolic(Z),
                ev!(margins::mg_lower, PSpec::Inf),
            ));
            v.push(sample(vec![("p", 0.0)], hyperbolic(Z), ev!(margins::mg_upper_at_zero)));
            v
        },
    ));

    claims.push(claim(
        "COR_MG_CHAIN",
        "the nested hyperbolic family chain from 1 up to (2+cosh t)/3",
        Expectation::Pass,
        "t",
        vec![sample(vec![], hyperbolic(Z_SHARP), ev!(margins::mg_chain))],
    ));

    claims.push(claim(
        "COR_MG_CUBE",
        "H5 < (1+2cosh t)/(2+cosh t) < cosh^{1/3} t < sinh t/t for p <= -1 or p > 1",
        Expectation::Pass,
        "t",
        [-10.0, -1.0, 1.5, 3.0, 50.0]
            .into_iter()
            .map(|p| {
                sample(vec![("p", p)], hyperbolic(Z_SHARP), ev!(margins::mg_cube_chain, PSpec::F(p)))
            })
            .collect(),
    ));

    // --- Section 4.1: arcsin ----------------------------------------------
    claims.push(claim(
        "PROP_P1",
        "the full-angle arcsin enclosure, direct and reversed regimes",
        Expectation::Pass,
        "x",
        {
            let mut v: Vec<Sample> = [-10.0, -1.0, 9.0, 20.0]
                .into_iter()
                .map(|p| {
                    let z = if p == 9.0 { Z_SHARP } else { Z };
                    let grid = SampleGrid::Interval { lo: z, hi: 1.0 - Z, log: false };
                    sample(vec![("p", p)], grid, ev!(margins::p1_enclosure, PSpec::F(p), true))
                })
                .collect();
            v.push(sample(
                vec![("p", f64::INFINITY)],
                unit(),
                ev!(margins::p1_enclosure, PSpec::Inf, true),
            ));
            for p in [0.0, 1.0, p1v] {
                v.push(sample(vec![("p", p)], unit(), ev!(margins::p1_enclosure, PSpec::F(p), false)));
            }
            v
        },
    ));

    claims.push(claim(
        "PROP_P2",
        "the half-angle arcsin enclosure (sigma_p best constant)",
        Expectation::Pass,
        "x",
        {
            let mut v: Vec<Sample> = [-10.0, -1.0, 9.0, 20.0]
                .into_iter()
                .map(|p| {
                    let z = if p == 9.0 { Z_SHARP } else { Z };
                    let grid = SampleGrid::Interval { lo: z, hi: 1.0 - Z, log: false };
                    sample(vec![("p", p)], grid, ev!(margins::p2_enclosure, PSpec::F(p), true))
                })
                .collect();
            v.push(sample(
                vec![("p", f64::INFINITY)],
                unit(),
                ev!(margins::p2_enclosure, PSpec::Inf, true),
            ));
            for p in [0.0, 1.0, p1v] {
                v.push(sample(vec![("p", p)], unit(), ev!(margins::p2_enclosure, PSpec::F(p), false)));
            }
            v
        },
    ));

    claims.push(claim(
        "PROP_P31",
        "the p = 9 arcsin chain, constant computed as 1/(3 sigma_9)",
        Expectation::Pass,
        "x",
        vec![sample(
            vec![("p", 9.0)],
            SampleGrid::Interval { lo: Z_SHARP, hi: 1.0 - Z, log: false },
            ev!(margins::p3_chain, 1),
        )],
    ));
    claims.push(claim(
        "PROP_P31_PRINTED",
        "the same chain with the printed constant (41sqrt2+25)pi/782, which equals 1/(3 sigma_9) exactly",
        Expectation::Record,
        "x",
        vec![sample(
            vec![("p", 9.0)],
            SampleGrid::Interval { lo: Z_SHARP, hi: 1.0 - Z, log: false },
            ev!(margins::p31_printed),
        )],
    ));
    claims.push(claim(
        "PROP_P32",
        "Zhu's chain: Shafer's bound nested inside Fink's",
        Expectation::Pass,
        "x",
        vec![sample(vec![("p", f64::INFINITY)], unit(), ev!(margins::p3_chain, 2))],
    ));
    claims.push(claim(
        "PROP_P33",
        "the p = 1 arcsin chain (reversed regime)",
        Expectation::Pass,
        "x",
        vec![sample(vec![("p", 1.0)], unit(), ev!(margins::p3_chain, 3))],
    ));

    // --- Section 4.2: means -------------------------------------------------
    claims.push(claim(
        "PROP_P4",
        "the first-Seiffert enclosure A*H1(G/A,p) < P < A*H1(G/A,q)",
        Expectation::Pass,
        "ratio",
        p4_style_samples(p0v, margins_p4()),
    ));
    claims.push(claim(
        "PROP_P5",
        "the second-Seiffert enclosure Q*H1(A/Q,p) < T < Q*H1(A/Q,q)",
        Expectation::Pass,
        "ratio",
        p4_style_samples(p0v, margins_p5()),
    ));

    claims.push(claim(
        "PROP_P6",
        "G*H5(A/G,p) < L for the admissible regime; reversed at p = 0",
        Expectation::Pass,
        "ratio",
        p6_style_samples(ninth, margins_p6()),
    ));
    claims.push(claim(
        "PROP_P7",
        "A*H5(Q/A,p) < NS for the admissible regime; reversed at p = 0",
        Expectation::Pass,
        "ratio",
        p6_style_samples(ninth, margins_p7()),
    ));

    // --- Section 4.3: sine integral -----------------------------------------
    claims.push(claim(
        "PROP_P8",
        "((4sqrt2-2)/(7pi))*S(x) < Si(x) < S(x)/6 on (0, pi/2]",
        Expectation::Pass,
        "x",
        vec![sample(
            vec![],
            SampleGrid::Interval { lo: Z, hi: FRAC_PI_2, log: false },
            ev!(margins::p8_si),
        )],
    ));
    claims.push(claim(
        "REMARK_SI_NUMBERS",
        "the enclosure at pi/2 reproduces 1.3682/1.3713 and brackets Si(pi/2)",
        Expectation::Pass,
        "x",
        vec![sample(vec![], SampleGrid::Single(FRAC_PI_2), ev!(margins::si_remark))],
    ));

    // --- Prior-work cross-checks ---------------------------------------------
    claims.push(claim(
        "XCHECK_WU2",
        "3cos t/(1+2cos t) < sin t/t < 3/(4-cos t)",
        Expectation::Pass,
        "t",
        vec![sample(vec![], circular(Z), ev!(margins::xcheck_wu2))],
    ));
    claims.push(claim(
        "XCHECK_LIHE",
        "(7+5cos t)/(11+cos t) < sin t/t < (9+6cos t)/(14+cos t)",
        Expectation::Pass,
        "t",
        vec![sample(vec![], circular(Z_SHARP), ev!(margins::xcheck_lihe))],
    ));
    claims.push(claim(
        "XCHECK_JIANG",
        "(1+2cos t)/(2+cos t) < sin t/t",
        Expectation::Pass,
        "t",
        vec![sample(vec![], circular(Z), ev!(margins::xcheck_jiang))],
    ));
    claims.push(claim(
        "XCHECK_NEUMAN",
        "(8/pi)(t/sin t)+cos t < 4 < 3(t/sin t)+cos t",
        Expectation::Pass,
        "t",
        vec![sample(vec![], circular(Z), ev!(margins::xcheck_neuman))],
    ));

    // --- Outside-the-regime probes (must fail with a witness) ----------------
    claims.push(claim(
        "THM_MA_AT_P8",
        "the Ma upper bound probed inside the (p0,9) gap; fails near t = 0",
        Expectation::Fail,
        "t",
        vec![sample(vec![("p", 8.0)], circular(Z), ev!(margins::ma_enclosure, PSpec::F(8.0)))],
    ));
    claims.push(claim(
        "THM_MB_PAST_P0",
        "the Mb lower bound probed just past p0; fails near t = pi/2",
        Expectation::Fail,
        "t",
        vec![sample(vec![("p", p0v + 0.05)], circular(Z), ev!(margins::mb_lower_only, p0v + 0.05))],
    ));
    claims.push(claim(
        "THM_MB_LAMBDA_PAST_P1",
        "the lambda-form upper bound probed just past p1; fails near t0",
        Expectation::Fail,
        "t",
        vec![sample(vec![("p", p1v + 0.05)], circular(Z), ev!(margins::mb_lambda, p1v + 0.05))],
    ));
    claims.push(claim(
        "THM_MG_BELOW_NINTH",
        "the Mg lower bound probed below 1/9; fails near t = 0",
        Expectation::Fail,
        "t",
        vec![sample(vec![("p", 0.08)], hyperbolic(Z), ev!(margins::mg_lower, PSpec::F(0.08)))],
    ));
    claims.push(claim(
        "LEM_H1X_BELOW_ONE",
        "H1(x^3,p) >= x probed at p = 0.95; fails near x = 1",
        Expectation::Fail,
        "x",
        vec![sample(vec![("p", 0.95)], unit(), ev!(margins::h1x_sign, 0.95, true))],
    ));
    claims.push(claim(
        "LEM_H1X_PAST_ZERO",
        "H1(x^3,p) <= x probed at p = 0.05; fails near x = 0",
        Expectation::Fail,
        "x",
        vec![sample(vec![("p", 0.05)], unit(), ev!(margins::h1x_sign, 0.05, false))],
    ));
    claims.push(claim(
        "LEM_U3_PAST_P3",
        "u3 >= 0 probed just past p3; fails near x = 0",
        Expectation::Fail,
        "x",
        vec![sample(vec![("p", p3v + 0.05)], unit(), ev!(margins::u3_fixed_sign, p3v + 0.05, true))],
    ));

    claims
}

type MeanEvalBuilder = fn(PSpec, PSpec) -> EvalPair;
type SideEvalBuilder = fn(PSpec, bool) -> EvalPair;

fn margins_p4() -> MeanEvalBuilder {
    |p, q| ev!(margins::p4_mean, p, q)
}

fn margins_p5() -> MeanEvalBuilder {
    |p, q| ev!(margins::p5_mean, p, q)
}

fn margins_p6() -> SideEvalBuilder {
    |p, upper| ev!(margins::p6_mean, p, upper)
}

fn margins_p7() -> SideEvalBuilder {
    |p, upper| ev!(margins::p7_mean, p, upper)
}

/// (p, q) corners of the Seiffert enclosures; q = 9 samples take the
/// widened ratio floor.
fn p4_style_samples(p0v: f64, build: MeanEvalBuilder) -> Vec<Sample> {
    let corners: [(f64, PSpec); 6] = [
        (0.0, PSpec::F(9.0)),
        (0.0, PSpec::F(-1.0)),
        (p0v, PSpec::F(9.0)),
        (p0v, PSpec::F(-1.0)),
        (1.0, PSpec::Inf),
        (3.0, PSpec::F(-10.0)),
    ];
    corners
        .into_iter()
        .map(|(p, q)| {
            let floor = if matches!(q, PSpec::F(v) if v == 9.0) { Z_SHARP } else { Z };
            sample(
                vec![("p", p), ("q", q.label())],
                ratios(floor),
                build(PSpec::F(p), q),
            )
        })
        .collect()
}

/// Parameter line of the hyperbolic mean bounds; p = 1/9 takes the
/// widened ratio floor, and p = 0 flips to the upper-bound direction.
fn p6_style_samples(ninth: f64, build: SideEvalBuilder) -> Vec<Sample> {
    let mut v: Vec<Sample> = [-10.0, -1.0, ninth, 1.0, 9.0]
        .into_iter()
        .map(|p| {
            let floor = if p == ninth { Z_SHARP } else { Z };
            sample(vec![("p", p)], ratios(floor), build(PSpec::F(p), false))
        })
        .collect();
    v.push(sample(vec![("p", f64::INFINITY)], ratios(Z), build(PSpec::Inf, false)));
    v.push(sample(vec![("p", 0.0)], ratios(Z), build(PSpec::F(0.0), true)));
    v
}
