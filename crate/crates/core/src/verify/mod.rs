//! Grid-certification engine.
//!
//! Every lemma, theorem, corollary and proposition in scope is registered
//! as a [`Claim`]: a set of parameter samples, each with its own grid
//! interval (exclusion zones built in) and a margin evaluator at native
//! and extended precision. The engine evaluates margins across the grid,
//! escalates any point the native 4-ulp guard cannot certify to
//! double-double, and reduces to the worst margin with a deterministic,
//! order-independent rule (exact minimum, ties broken by lowest flat
//! index) — parallel and sequential runs produce bit-identical reports.

pub mod grid;
pub(crate) mod margins;
mod probe;
mod registry;

use std::sync::Arc;

use crate::{Error, Result};
pub use grid::{GridSpec, Precision};
pub use margins::PointEval;
pub use probe::{threshold_probe, ProbeFamily, ProbeOutcome};
pub use registry::registry;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// What a claim's verification is expected to show.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// The statement holds; its report must pass.
    Pass,
    /// A deliberate outside-the-regime probe; its report must fail with a
    /// concrete witness.
    Fail,
    /// A documentation claim (printed-variant constants); recorded either
    /// way.
    Record,
}

/// How the margin field is judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Flavor {
    /// Pass iff the worst margin clears the guard band from above.
    Strict,
    /// Pass iff margins of both signs occur (a "neither direction holds"
    /// witness); the reported margin is the weaker side's evidence.
    Mixed,
}

/// Grid layout of one parameter sample.
#[derive(Clone, Copy, Debug)]
pub(crate) enum SampleGrid {
    Interval { lo: f64, hi: f64, log: bool },
    Single(f64),
}

type Eval = Arc<dyn Fn(f64) -> PointEval + Send + Sync>;

pub(crate) struct Sample {
    pub label: Vec<(&'static str, f64)>,
    pub grid: SampleGrid,
    pub eval64: Eval,
    pub evaldd: Eval,
}

/// A registered statement with its parameter samples and margin
/// evaluators.
pub struct Claim {
    pub id: &'static str,
    pub about: &'static str,
    pub expectation: Expectation,
    pub(crate) flavor: Flavor,
    /// Name of the grid coordinate in witnesses ("t", "x" or "ratio").
    pub coord_name: &'static str,
    pub(crate) samples: Vec<Sample>,
}

impl Claim {
    /// The parameter tuples this claim samples.
    pub fn parameter_samples(&self) -> Vec<Vec<(&'static str, f64)>> {
        self.samples.iter().map(|s| s.label.clone()).collect()
    }

    /// The grid interval of each sample (post exclusion zones).
    pub fn domains(&self) -> Vec<(f64, f64)> {
        self.samples
            .iter()
            .map(|s| match s.grid {
                SampleGrid::Interval { lo, hi, .. } => (lo, hi),
                SampleGrid::Single(x) => (x, x),
            })
            .collect()
    }
}

/// Outcome of verifying one claim on one grid spec.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub claim_id: String,
    pub expectation: Expectation,
    pub pass: bool,
    /// Points evaluated (all samples, clusters included).
    pub points: usize,
    /// Minimum margin across the grid (for Mixed claims, the weaker
    /// side's evidence).
    pub worst_margin: f64,
    /// Arguments attaining the worst margin, plus the failing link index.
    pub witness: Vec<(&'static str, f64)>,
    /// Points re-evaluated in double-double.
    pub escalated: usize,
    /// Points still inside the guard band at extended precision.
    pub indeterminate: usize,
}

impl VerificationReport {
    /// Did the report land on the side its expectation calls for?
    pub fn as_expected(&self) -> bool {
        match self.expectation {
            Expectation::Pass => self.pass,
            Expectation::Fail => !self.pass,
            Expectation::Record => true,
        }
    }
}

/// Sequential or rayon-parallel grid evaluation. Reports are bit-identical
/// either way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            ExecMode::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            ExecMode::Sequential
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Candidate {
    margin: f64,
    idx: usize,
    scale: f64,
    link: u32,
    dd: bool,
}

impl Candidate {
    fn guard(&self) -> f64 {
        let eps = if self.dd { crate::dd::Dd::guard_eps() } else { f64::guard_eps() };
        eps * self.scale.abs().max(f64::MIN_POSITIVE)
    }
}

use crate::real::Real;

#[derive(Clone, Copy, Debug, Default)]
struct Acc {
    min: Option<Candidate>,
    max: Option<Candidate>,
    escalated: usize,
    indeterminate: usize,
}

impl Acc {
    fn absorb(mut self, c: Candidate, escalated: bool, indeterminate: bool) -> Self {
        self.escalated += escalated as usize;
        self.indeterminate += indeterminate as usize;
        self.min = Some(match self.min {
            Some(m) if (m.margin, m.idx) <= (c.margin, c.idx) => m,
            _ => c,
        });
        self.max = Some(match self.max {
            Some(m) if (m.margin, std::cmp::Reverse(m.idx)) >= (c.margin, std::cmp::Reverse(c.idx)) => m,
            _ => c,
        });
        self
    }

    fn merge(a: Acc, b: Acc) -> Acc {
        let mut out = a;
        out.escalated += b.escalated;
        out.indeterminate += b.indeterminate;
        if let Some(c) = b.min {
            out.min = Some(match out.min {
                Some(m) if (m.margin, m.idx) <= (c.margin, c.idx) => m,
                _ => c,
            });
        }
        if let Some(c) = b.max {
            out.max = Some(match out.max {
                Some(m) if (m.margin, std::cmp::Reverse(m.idx)) >= (c.margin, std::cmp::Reverse(c.idx)) => m,
                _ => c,
            });
        }
        out
    }
}

fn sample_points(grid: SampleGrid, spec: &GridSpec) -> usize {
    match grid {
        SampleGrid::Interval { .. } => grid::total(spec.points),
        SampleGrid::Single(_) => 1,
    }
}

fn sample_coordinate(grid: SampleGrid, spec: &GridSpec, k: usize) -> f64 {
    match grid {
        SampleGrid::Interval { lo, hi, log } => grid::coordinate(lo, hi, spec.points, log, k),
        SampleGrid::Single(x) => x,
    }
}

/// Run one claim against a grid spec.
pub fn run_claim(claim: &Claim, spec: &GridSpec, mode: ExecMode) -> VerificationReport {
    let counts: Vec<usize> = claim.samples.iter().map(|s| sample_points(s.grid, spec)).collect();
    let mut offsets = Vec::with_capacity(counts.len());
    let mut total = 0usize;
    for c in &counts {
        offsets.push(total);
        total += c;
    }

    let locate = |i: usize| -> (usize, usize) {
        // Few samples per claim; a linear scan is fine and allocation-free.
        let mut si = counts.len() - 1;
        for (j, off) in offsets.iter().enumerate().skip(1) {
            if i < *off {
                si = j - 1;
                break;
            }
        }
        (si, i - offsets[si])
    };

    let eval_one = |i: usize| -> Acc {
        let (si, k) = locate(i);
        let s = &claim.samples[si];
        let coord = sample_coordinate(s.grid, spec, k);
        let (e, dd, escalated) = match spec.precision {
            Precision::Extended => ((s.evaldd)(coord), true, false),
            Precision::Native => {
                let e = (s.eval64)(coord);
                if e.borderline {
                    ((s.evaldd)(coord), true, true)
                } else {
                    (e, false, false)
                }
            }
        };
        let cand = Candidate { margin: e.margin, idx: i, scale: e.scale, link: e.link, dd };
        Acc::default().absorb(cand, escalated, dd && e.borderline)
    };

    let acc = match mode {
        ExecMode::Sequential => (0..total).fold(Acc::default(), |a, i| Acc::merge(a, eval_one(i))),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => (0..total)
            .into_par_iter()
            .fold(Acc::default, |a, i| Acc::merge(a, eval_one(i)))
            .reduce(Acc::default, Acc::merge),
    };

    let min = acc.min.expect("claims always have at least one point");
    let max = acc.max.expect("claims always have at least one point");

    let (pass, worst, at) = match claim.flavor {
        Flavor::Strict => (min.margin > -min.guard(), min.margin, min),
        Flavor::Mixed => {
            let neg_evidence = -min.margin;
            let pos_evidence = max.margin;
            let ok = neg_evidence > min.guard() && pos_evidence > max.guard();
            if pos_evidence <= neg_evidence {
                (ok, pos_evidence, max)
            } else {
                (ok, neg_evidence, min)
            }
        }
    };

    let (si, k) = locate(at.idx);
    let s = &claim.samples[si];
    let mut witness = vec![(claim.coord_name, sample_coordinate(s.grid, spec, k))];
    witness.extend(s.label.iter().copied());
    witness.push(("link", at.link as f64));

    VerificationReport {
        claim_id: claim.id.to_string(),
        expectation: claim.expectation,
        pass,
        points: total,
        worst_margin: worst,
        witness,
        escalated: acc.escalated,
        indeterminate: acc.indeterminate,
    }
}

/// Verify one claim by id.
pub fn verify(claim_id: &str, spec: &GridSpec, mode: ExecMode) -> Result<VerificationReport> {
    let claims = registry();
    let claim = claims
        .iter()
        .find(|c| c.id == claim_id)
        .ok_or_else(|| Error::UnknownClaim { id: claim_id.to_string() })?;
    Ok(run_claim(claim, spec, mode))
}

/// Verify the whole registry, in registry order.
pub fn verify_all(spec: &GridSpec, mode: ExecMode) -> Vec<VerificationReport> {
    registry().iter().map(|c| run_claim(c, spec, mode)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> GridSpec {
        GridSpec { points: 256, precision: Precision::Native }
    }

    #[test]
    fn registry_is_well_formed() {
        let claims = registry();
        assert!(claims.len() >= 40, "registry has {} claims", claims.len());
        let mut ids: Vec<&str> = claims.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len(), "duplicate claim ids");
        for required in [
            "LEM_H12_MONO",
            "LEM_H12_LIMITS",
            "LEM_U_POS",
            "LEM_U3_SIGN_A",
            "LEM_U3_SIGN_B",
            "LEM_U3_SIGN_C",
            "LEM_SGNG_A",
            "LEM_SGNG_B",
            "LEM_SGNG_C",
            "LEM_SGNDF_A",
            "LEM_SGNDF_B",
            "LEM_SGNDF_C",
            "LEM_H1X",
            "THM_MA",
            "COR_MA_CHAIN",
            "THM_MB_LAMBDA",
            "THM_MB_DELTA",
            "THM_MC_CHAIN",
            "THM_MD",
            "COR_MD_D1",
            "COR_MD_D2",
            "COR_MD_D3",
            "COR_MD_D4",
            "THM_ME1",
            "THM_ME1_PRINTED",
            "THM_ME2",
            "THM_ME2_PRINTED",
            "THM_ME3",
            "THM_ME3_PRINTED",
            "THM_MF",
            "THM_MF_MONO",
            "THM_MG",
            "COR_MG_CHAIN",
            "COR_MG_CUBE",
            "PROP_P1",
            "PROP_P2",
            "PROP_P31",
            "PROP_P32",
            "PROP_P33",
            "PROP_P4",
            "PROP_P5",
            "PROP_P6",
            "PROP_P7",
            "PROP_P8",
            "REMARK_SI_NUMBERS",
            "XCHECK_WU2",
            "XCHECK_LIHE",
            "XCHECK_JIANG",
            "XCHECK_NEUMAN",
        ] {
            assert!(ids.binary_search(&required).is_ok(), "missing claim {required}");
        }
    }

    #[test]
    fn unknown_claim_errors() {
        assert!(matches!(
            verify("NO_SUCH_CLAIM", &small(), ExecMode::Sequential),
            Err(Error::UnknownClaim { .. })
        ));
    }

    #[test]
    fn reports_are_deterministic_and_mode_independent() {
        let spec = small();
        for id in ["THM_MA", "THM_MB_DELTA", "PROP_P4", "LEM_SGNG_C"] {
            let a = verify(id, &spec, ExecMode::Sequential).unwrap();
            let b = verify(id, &spec, ExecMode::Sequential).unwrap();
            assert_eq!(a.worst_margin.to_bits(), b.worst_margin.to_bits(), "{id}");
            assert_eq!(a.witness, b.witness, "{id}");
            #[cfg(feature = "parallel")]
            {
                let c = verify(id, &spec, ExecMode::Parallel).unwrap();
                assert_eq!(a.worst_margin.to_bits(), c.worst_margin.to_bits(), "{id}");
                assert_eq!(a.witness, c.witness, "{id}");
                assert_eq!(a.escalated, c.escalated, "{id}");
                assert_eq!(a.indeterminate, c.indeterminate, "{id}");
            }
        }
    }

    #[test]
    fn extended_precision_agrees_on_pass_verdicts() {
        let native = small();
        let extended = GridSpec { points: 256, precision: Precision::Extended };
        for id in ["THM_MA", "XCHECK_NEUMAN", "PROP_P8"] {
            let a = verify(id, &native, ExecMode::default()).unwrap();
            let b = verify(id, &extended, ExecMode::default()).unwrap();
            assert_eq!(a.pass, b.pass, "{id}");
            assert!(b.escalated == 0);
        }
    }
}
