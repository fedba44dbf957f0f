//! Certified rational enclosures for `sin(t)/t` and friends.
//!
//! The library evaluates two one-parameter rational bound families in
//! `cos t`,
//!
//! ```text
//! H1(x,p) = (2p + (p+3)x) / (3p + 1 + 2x)
//! H2(x,p) = (3p+1)/(πp) · H1(x,p)
//! ```
//!
//! whose parameter `p` sweeps between the Jordan- and Cusa-type bounds of
//! `sin(t)/t` on `(0, π/2)`, together with their hyperbolic, inverse-sine,
//! bivariate-mean and sine-integral consequences. Every sharp constant
//! (`p0`, `p1`, `p3`, `t0(p)`, `δ_p`, `λ_p`, `σ_p`) is computed by closed
//! form or bracketed root-finding, and a grid-certification engine
//! ([`verify`]) checks every claimed inequality, with double-double
//! re-evaluation of points too close to call in native precision.
//!
//! Grid evaluation is data-parallel via rayon when the default `parallel`
//! feature is enabled; build with `--no-default-features` for the pure
//! sequential fallback.

pub mod bounds;
pub mod constants;
pub mod dd;
mod error;
pub mod inverse;
pub mod kernel;
pub mod means;
mod param;
pub mod real;
pub mod root;
pub mod si;
pub mod verify;

pub use error::Error;
pub use param::{Abscissa, CircularArg, CoshArg, HyperbolicArg, Param, SiArg, UnitArg};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
