//! Two-sided estimate of the sine integral Si(x) = ∫₀ˣ sin(t)/t dt on
//! (0, π/2], plus a high-accuracy series reference.
//!
//! Integrating the p = ∞ half-angle enclosure of sin(t)/t termwise gives
//!
//! ```text
//! (4√2−2)/(7π) · S(x)  <  Si(x)  <  S(x)/6,
//! S(x) = x + sin x + 8 sin(x/2),
//! ```
//!
//! with both members exact antiderivatives of the corresponding integrand
//! bounds.

use crate::bounds::{Enclosure, Family};
use crate::real::Real;
use crate::{Error, Param, Result, SiArg};

/// The shared antiderivative core S(x) = x + sin x + 8 sin(x/2).
pub(crate) fn si_core<R: Real>(x: R) -> R {
    x + x.sin() + R::from_f64(8.0) * (x / R::from_f64(2.0)).sin()
}

pub(crate) fn si_lower<R: Real>(x: R) -> R {
    let sqrt2 = R::from_f64(2.0).sqrt();
    (R::from_f64(4.0) * sqrt2 - R::from_f64(2.0)) / (R::from_f64(7.0) * R::pi()) * si_core(x)
}

pub(crate) fn si_upper<R: Real>(x: R) -> R {
    si_core(x) / R::from_f64(6.0)
}

/// The enclosure ((4√2−2)/(7π))·S(x) < Si(x) < S(x)/6.
pub fn si_enclosure(x: SiArg) -> Enclosure {
    Enclosure {
        lower: si_lower(x.get()),
        upper: si_upper(x.get()),
        lower_strict: true,
        upper_strict: true,
        family: Family::Md,
        p: Param::PosInf,
    }
}

/// Reference oracle: the Maclaurin series
/// Si(x) = Σ (−1)ᵏ x^{2k+1} / ((2k+1)(2k+1)!),
/// truncated when a term falls below 1e−17 of the partial sum. The
/// alternating-series bound keeps the truncation error under the first
/// omitted term; validity is restricted to [0, 10] where the largest
/// intermediate term stays within two orders of the result.
pub fn si_reference(x: f64) -> Result<f64> {
    if !(0.0..=10.0).contains(&x) {
        return Err(Error::Domain { what: "the Si series oracle is rated for [0, 10]", value: x });
    }
    Ok(si_series(x))
}

pub(crate) fn si_series<R: Real>(x: R) -> R {
    let x2 = x * x;
    let mut power_term = x; // x^{2k+1}/(2k+1)!
    let mut sum = x;
    let mut k = 1.0f64;
    loop {
        power_term = -power_term * x2 / R::from_f64(2.0 * k * (2.0 * k + 1.0));
        let term = power_term / R::from_f64(2.0 * k + 1.0);
        sum = sum + term;
        k += 1.0;
        if term.abs().to_f64() < R::series_eps() * sum.abs().to_f64() || k > 120.0 {
            return sum;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn remark_numbers_at_right_endpoint() {
        let e = si_enclosure(SiArg::new(FRAC_PI_2).unwrap());
        assert!((e.lower - 1.3682).abs() < 5e-5);
        assert!((e.upper - 1.3713).abs() < 5e-5);
        let si = si_reference(FRAC_PI_2).unwrap();
        assert!(e.lower < si && si < e.upper);
    }

    #[test]
    fn series_reference_values() {
        assert_eq!(si_reference(0.0).unwrap(), 0.0);
        // 60-digit references.
        assert!((si_reference(1.0).unwrap() - 0.946083070367183).abs() < 1e-15);
        assert!((si_reference(FRAC_PI_2).unwrap() - 1.3707621681544884).abs() < 1e-15);
        assert!(si_reference(-0.5).is_err());
        assert!(si_reference(10.5).is_err());
    }

    #[test]
    fn enclosure_ratio_is_constant() {
        // Both members share the S(x) factor.
        let want = 7.0 * std::f64::consts::PI / (6.0 * (4.0 * 2f64.sqrt() - 2.0));
        for x in [1e-6, 0.3, 1.0, FRAC_PI_2] {
            let e = si_enclosure(SiArg::new(x).unwrap());
            assert!((e.upper / e.lower - want).abs() < 1e-13);
        }
    }

    #[test]
    fn enclosure_brackets_reference_on_grid() {
        for k in 0..=2048 {
            let x = 1e-6 + (FRAC_PI_2 - 1e-6) * k as f64 / 2048.0;
            let e = si_enclosure(SiArg::new(x).unwrap());
            let si = si_series(x);
            assert!(e.lower < si && si < e.upper, "x = {x}");
        }
    }

    #[test]
    fn reference_is_grid_monotone_up_to_pi() {
        let mut prev = -1.0;
        for k in 0..=300 {
            let x = std::f64::consts::PI * k as f64 / 300.0;
            let v = si_reference(x).unwrap();
            assert!(v > prev || k == 0, "x = {x}");
            prev = v;
        }
    }

    #[test]
    fn integrand_bound_forms_agree() {
        // d/dx of the lower member equals ((4√2−2)/(7π))(1 + cos x + 4cos(x/2)),
        // and the printed integrand constant 4(2√2−1)/7 times
        // (cos²(x/2)+2cos(x/2))/π is the same function.
        for x in [0.1, 0.7, 1.3] {
            let c = (x / 2.0f64).cos();
            let lhs = (4.0 * 2f64.sqrt() - 2.0) / (7.0 * std::f64::consts::PI)
                * (1.0 + x.cos() + 4.0 * c);
            let rhs = 4.0 * (2.0 * 2f64.sqrt() - 1.0) / 7.0 * (c * c + 2.0 * c)
                / std::f64::consts::PI;
            assert!((lhs - rhs).abs() < 1e-13, "x = {x}");
        }
    }
}
