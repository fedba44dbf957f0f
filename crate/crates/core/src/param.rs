//! Validated argument types shared by every module.
//!
//! All evaluators take these newtypes so that domain checks happen once, at
//! construction. The raw-formula layer in [`crate::kernel::raw`] works on
//! unchecked floats for the few places (root brackets, endpoint limits)
//! that legitimately step outside the open domains.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Bound-family parameter: a finite real in (−∞,−1] ∪ [0,∞), or one of the
/// symbolic limit points ±∞.
///
/// The infinities are kept symbolic rather than as large floats so that the
/// limit formulas `H1(x,±∞) = (2+x)/3` and `H2(x,±∞) = (2+x)/π` are exact.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Param {
    Finite(f64),
    PosInf,
    NegInf,
}

impl Param {
    /// Admissible finite parameter. Values in the open gap (−1, 0) are
    /// rejected, as are NaN and the floating infinities (use the symbolic
    /// variants for those).
    pub fn finite(p: f64) -> Result<Self, Error> {
        if p.is_finite() && (p <= -1.0 || p >= 0.0) {
            Ok(Param::Finite(p))
        } else {
            Err(Error::InadmissibleParam { value: p })
        }
    }

    /// The finite value, if any.
    pub fn as_finite(self) -> Option<f64> {
        match self {
            Param::Finite(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        !matches!(self, Param::Finite(_))
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "inf" | "+inf" | "oo" | "+oo" => Ok(Param::PosInf),
            "-inf" | "-oo" => Ok(Param::NegInf),
            other => {
                let p: f64 = other
                    .parse()
                    .map_err(|_| Error::InadmissibleParam { value: f64::NAN })?;
                Param::finite(p)
            }
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Finite(p) => write!(f, "{p}"),
            Param::PosInf => write!(f, "+inf"),
            Param::NegInf => write!(f, "-inf"),
        }
    }
}

macro_rules! open_interval_newtype {
    ($(#[$doc:meta])* $name:ident, $what:expr, $lo:expr, $hi:expr) => {
        $(#[$doc])*
        #[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
        pub struct $name(f64);

        impl $name {
            pub fn new(v: f64) -> Result<Self, Error> {
                if v > $lo && v < $hi {
                    Ok(Self(v))
                } else {
                    Err(Error::Domain { what: $what, value: v })
                }
            }

            #[inline]
            pub fn get(self) -> f64 {
                self.0
            }
        }
    };
}

open_interval_newtype!(
    /// Abscissa of the bound families: x ∈ (0,1), semantically `cos t`.
    Abscissa,
    "abscissa must lie in (0,1)",
    0.0,
    1.0
);

open_interval_newtype!(
    /// Circular argument t ∈ (0, π/2), radians.
    CircularArg,
    "circular argument must lie in (0, pi/2)",
    0.0,
    std::f64::consts::FRAC_PI_2
);

open_interval_newtype!(
    /// Hyperbolic argument t ∈ (0, ∞).
    HyperbolicArg,
    "hyperbolic argument must be positive and finite",
    0.0,
    f64::INFINITY
);

open_interval_newtype!(
    /// Abscissa of the hyperbolic family: x ∈ (1, ∞), semantically `cosh t`.
    CoshArg,
    "hyperbolic abscissa must exceed 1",
    1.0,
    f64::INFINITY
);

open_interval_newtype!(
    /// Argument of the inverse-sine enclosures: x ∈ (0,1).
    UnitArg,
    "arcsine argument must lie in (0,1)",
    0.0,
    1.0
);

/// Argument of the sine-integral estimate: x ∈ (0, π/2].
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct SiArg(f64);

impl SiArg {
    pub fn new(v: f64) -> Result<Self, Error> {
        if v > 0.0 && v <= std::f64::consts::FRAC_PI_2 {
            Ok(Self(v))
        } else {
            Err(Error::Domain { what: "sine-integral argument must lie in (0, pi/2]", value: v })
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_set_has_a_gap() {
        assert!(Param::finite(-1.0).is_ok());
        assert!(Param::finite(0.0).is_ok());
        assert!(Param::finite(9.0).is_ok());
        assert!(Param::finite(-250.0).is_ok());
        assert!(Param::finite(-0.5).is_err());
        assert!(Param::finite(-1.0 + 1e-12).is_err());
        assert!(Param::finite(-1e-12).is_err());
        assert!(Param::finite(f64::NAN).is_err());
        assert!(Param::finite(f64::INFINITY).is_err());
    }

    #[test]
    fn param_parses_symbolic_infinities() {
        assert_eq!("inf".parse::<Param>().unwrap(), Param::PosInf);
        assert_eq!("-inf".parse::<Param>().unwrap(), Param::NegInf);
        assert_eq!("9".parse::<Param>().unwrap(), Param::Finite(9.0));
        assert!("-0.3".parse::<Param>().is_err());
    }

    #[test]
    fn open_intervals_reject_endpoints() {
        assert!(Abscissa::new(0.0).is_err());
        assert!(Abscissa::new(1.0).is_err());
        assert!(Abscissa::new(0.5).is_ok());
        assert!(CircularArg::new(std::f64::consts::FRAC_PI_2).is_err());
        assert!(CircularArg::new(1.0).is_ok());
        assert!(HyperbolicArg::new(0.0).is_err());
        assert!(HyperbolicArg::new(1e6).is_ok());
        assert!(CoshArg::new(1.0).is_err());
        assert!(SiArg::new(std::f64::consts::FRAC_PI_2).is_ok());
        assert!(SiArg::new(1.6).is_err());
    }
}
