//! Bracketed root finding: bisection with secant acceleration.
//!
//! The solver always maintains a sign-changing bracket. Each step first
//! tries the secant point of the current bracket; if that lands strictly
//! inside and shrinks the bracket enough it is used, otherwise the step
//! falls back to the midpoint. Robustness over speed: every function we
//! solve is smooth and cheap.

use crate::{Error, Result};

/// A bracketed root together with the evidence for its contracts.
#[derive(Clone, Copy, Debug)]
pub struct RootResult {
    /// Approximate root, always inside `bracket`.
    pub value: f64,
    /// Function value at `value`.
    pub residual: f64,
    /// Number of function evaluations spent inside the iteration.
    pub iterations: u32,
    /// Final sign-changing bracket (lo, hi); width ≤ the width tolerance.
    pub bracket: (f64, f64),
}

/// Stopping tolerances. Defaults: bracket width 1e−13 (absolute),
/// residual 1e−10, 200 iterations.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    pub width: f64,
    pub residual: f64,
    pub max_iter: u32,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { width: 1e-13, residual: 1e-10, max_iter: 200 }
    }
}

/// Find the root of `f` on the sign-changing bracket `[lo, hi]`.
///
/// Errors if `f(lo)` and `f(hi)` have the same (nonzero) sign, or if the
/// residual contract cannot be met within the iteration budget.
pub fn bracketed_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: Tolerances) -> Result<RootResult> {
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let mut fb = f(b);
    let mut iterations = 2u32;

    if fa == 0.0 {
        return finish(a, 0.0, iterations, (a, a), tol);
    }
    if fb == 0.0 {
        return finish(b, 0.0, iterations, (b, b), tol);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Bracket { lo, hi, flo: fa, fhi: fb });
    }

    while b - a > tol.width && iterations < tol.max_iter {
        // Secant proposal from the bracket endpoints; accept only if it
        // falls strictly inside and is not hugging an endpoint.
        let mid = 0.5 * (a + b);
        let sec = b - fb * (b - a) / (fb - fa);
        let margin = 0.01 * (b - a);
        let x = if sec > a + margin && sec < b - margin { sec } else { mid };

        let fx = f(x);
        iterations += 1;
        if fx == 0.0 {
            return finish(x, 0.0, iterations, (x, x), tol);
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }

    // Report the endpoint with the smaller residual.
    let (value, residual) = if fa.abs() <= fb.abs() { (a, fa) } else { (b, fb) };
    finish(value, residual, iterations, (a, b), tol)
}

fn finish(value: f64, residual: f64, iterations: u32, bracket: (f64, f64), tol: Tolerances) -> Result<RootResult> {
    if residual.abs() > tol.residual {
        return Err(Error::Residual { value, residual });
    }
    Ok(RootResult { value, residual, iterations, bracket })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt2() {
        let r = bracketed_root(|x| x * x - 2.0, 0.0, 2.0, Tolerances::default()).unwrap();
        assert!((r.value - 2f64.sqrt()).abs() < 1e-12);
        assert!(r.bracket.1 - r.bracket.0 <= 1e-13);
        assert!(r.value >= r.bracket.0 && r.value <= r.bracket.1);
        assert!(r.residual.abs() <= 1e-10);
    }

    #[test]
    fn rejects_bad_bracket() {
        assert!(matches!(
            bracketed_root(|x| x * x + 1.0, -1.0, 1.0, Tolerances::default()),
            Err(Error::Bracket { .. })
        ));
    }

    #[test]
    fn accepts_exact_zero_at_endpoint() {
        let r = bracketed_root(|x| x, 0.0, 1.0, Tolerances::default()).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.residual, 0.0);
    }
}
