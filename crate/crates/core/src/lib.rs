//! Exact continued fractions.
//!
//! - [`rational`]: arbitrary-precision rationals with true floor.
//! - [`cf`]: finite continued fractions, the Euclidean expansion and
//!   convergents.
//! - [`quadratic`]: exact arithmetic and comparisons in `Q(sqrt d)`.
//! - [`surd`]: quadratic irrationals and their periodic expansions.
//! - [`pell`]: `x^2 - n y^2 = ±1` via the convergents of `sqrt n`.
//! - [`iteration`]: the `[κ; κ, ...]` and `x = -b - c/x` fixed-point
//!   iterations, their limits and convergence classification.
//! - [`notation`]: the `[a0;a1,(b1,b2)]` text format.
//! - [`report`]: CSV and JSON views used by the command-line tool.
//!
//! ```
//! use cfrac::{expand_rational, parse_cf, sqrt_cf, solve_fundamental, ContinuedFraction, Rational};
//!
//! let cf = expand_rational(&"47/17".parse::<Rational>()?);
//! assert_eq!(cf.to_string(), "[2;1,3,4]");
//!
//! let ContinuedFraction::Periodic(golden) = parse_cf("[(1)]")? else { unreachable!() };
//! assert_eq!(golden.to_surd().to_string(), "(1+√5)/2");
//!
//! assert_eq!(sqrt_cf(13)?.to_string(), "[3;(1,1,1,1,6)]");
//! let s = solve_fundamental(61)?;
//! assert_eq!((s.x.to_string(), s.y.to_string(), s.sign), ("29718".into(), "3805".into(), -1));
//! # Ok::<(), cfrac::Error>(())
//! ```

pub mod cf;
pub mod error;
pub mod iteration;
pub mod notation;
pub mod pell;
pub mod quadratic;
pub mod rational;
pub mod report;
pub mod surd;

pub use cf::{convergents, Convergent, ConvergentIter, FiniteCF};
pub use error::{Error, Result};
pub use iteration::{
    classify_monic, golden_error_bound_check, iterate_monic, iterate_simple, limit_simple,
    BoundRow, IterationTrace, MonicClassification, MonicTerm, MonicVerdict, Seed,
};
pub use notation::{format_cf, parse_cf, ContinuedFraction, ParseError, ParseErrorKind};
pub use pell::{solve_fundamental, solve_negative, solve_positive, verify, PellSolution, PellSolutions};
pub use quadratic::QuadraticNumber;
pub use rational::{ArithOp, Rational};
pub use surd::{sqrt_cf, PeriodicCF, QuadraticSurd, DEFAULT_MAX_TERMS};

/// Expansion of a rational as a canonical finite continued fraction.
pub fn expand_rational(r: &Rational) -> FiniteCF {
    FiniteCF::expand(r)
}

/// Exact value of a finite continued fraction.
pub fn evaluate(cf: &FiniteCF) -> Rational {
    cf.evaluate()
}

pub fn canonicalize(cf: &FiniteCF) -> FiniteCF {
    cf.canonicalize()
}

pub fn expand_surd(s: &QuadraticSurd, max_terms: usize) -> Result<PeriodicCF> {
    s.expand(max_terms)
}

pub fn periodic_to_surd(pcf: &PeriodicCF) -> QuadraticSurd {
    pcf.to_surd()
}

pub fn decimal_approx(s: &QuadraticSurd, digits: usize) -> String {
    s.decimal(digits)
}
