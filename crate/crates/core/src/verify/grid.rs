//! Deterministic certification grids.
//!
//! A grid over [lo, hi] consists of `points` uniformly spaced nodes
//! (endpoints included) plus [`CLUSTER`] extra Chebyshev-clustered nodes
//! packed into the first and last uniform cell, because the tight spots of
//! every claim sit against the interval ends. Coordinates are pure
//! functions of the index, so parallel and sequential evaluation see the
//! same grid, point for point.

/// Extra clustered nodes per endpoint.
pub const CLUSTER: usize = 64;

/// How a grid specification samples an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precision {
    /// f64 evaluation with double-double re-evaluation of every point the
    /// 4-ulp guard cannot certify.
    Native,
    /// Double-double evaluation of every point.
    Extended,
}

/// Grid density and evaluation precision for a verification run.
#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    /// Uniform nodes per interval (the clustered nodes come on top).
    pub points: usize,
    pub precision: Precision,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { points: 4096, precision: Precision::Native }
    }
}

/// Total nodes an interval sample contributes.
pub fn total(points: usize) -> usize {
    points + 2 * CLUSTER
}

/// The k-th node of the grid over [lo, hi]; `log` switches to geometric
/// spacing (used for mean ratios).
pub fn coordinate(lo: f64, hi: f64, points: usize, log: bool, k: usize) -> f64 {
    let (a, b) = if log { (lo.ln(), hi.ln()) } else { (lo, hi) };
    let n1 = (points.max(2) - 1) as f64;
    let cell = (b - a) / n1;
    let v = if k < points {
        if k == points - 1 {
            b
        } else {
            a + cell * k as f64
        }
    } else if k < points + CLUSTER {
        a + cell * cheb(k - points + 1)
    } else {
        b - cell * cheb(k - points - CLUSTER + 1)
    };
    if log {
        v.exp()
    } else {
        v
    }
}

/// sin²(πj / (2(CLUSTER+1))): sweeps (0,1) with quadratic clustering at 0.
fn cheb(j: usize) -> f64 {
    let s = (std::f64::consts::PI * j as f64 / (2.0 * (CLUSTER as f64 + 1.0))).sin();
    s * s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_are_exact_and_nodes_stay_inside() {
        let (lo, hi) = (1e-6, 1.5707953267948966);
        let n = 4096;
        assert_eq!(coordinate(lo, hi, n, false, 0), lo);
        assert_eq!(coordinate(lo, hi, n, false, n - 1), hi);
        for k in 0..total(n) {
            let c = coordinate(lo, hi, n, false, k);
            assert!((lo..=hi).contains(&c), "node {k} = {c}");
        }
        // Clustered nodes live inside the first/last uniform cell.
        let cell = (hi - lo) / (n - 1) as f64;
        for k in n..n + CLUSTER {
            let c = coordinate(lo, hi, n, false, k);
            assert!(c > lo && c < lo + cell);
        }
        for k in n + CLUSTER..total(n) {
            let c = coordinate(lo, hi, n, false, k);
            assert!(c < hi && c > hi - cell);
        }
    }

    #[test]
    fn log_grid_spans_geometrically() {
        let (lo, hi) = (1.000001, 1e4);
        let n = 128;
        assert!((coordinate(lo, hi, n, true, 0) - lo).abs() < 1e-12);
        assert!((coordinate(lo, hi, n, true, n - 1) - hi).abs() < 1e-8);
        let mid = coordinate(lo, hi, n, true, n / 2);
        assert!(mid > 50.0 && mid < 200.0);
    }
}
