//! Fixed-point iterations behind the infinite continued fractions
//! `[κ; κ, κ, ...]` and `x = -b - c/x`.
//!
//! Everything is exact. Limits are quadratic irrationals and all comparisons
//! against them are done in the quadratic field; floats appear only in the
//! convergence-rate measurement.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::quadratic::QuadraticNumber;
use crate::rational::Rational;
use crate::surd::QuadraticSurd;

/// How the first terms of a `[κ; κ, ...]` table are produced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Seed {
    /// `t_0 = κ`, `t_{n+1} = κ + 1/t_n`.
    #[default]
    Recurrence,
    /// The hand-written tables: `t_0 = κ`, `t_1 = κ + 1`, then the
    /// recurrence continues from `t_0`, so `t_n` is the recurrence's
    /// `t_{n-1}` for `n >= 2`. Coincides with `Recurrence` when `κ = 1`.
    Paper,
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Seed::Recurrence => "recurrence",
            Seed::Paper => "paper",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationTrace {
    pub kappa: BigInt,
    pub seed: Seed,
    pub terms: Vec<Rational>,
}

impl IterationTrace {
    pub fn decimals(&self, digits: usize) -> Vec<String> {
        self.terms.iter().map(|t| t.to_decimal(digits)).collect()
    }
}

/// The first `n_terms` values of `t_{n+1} = κ + 1/t_n`.
pub fn iterate_simple(kappa: impl Into<BigInt>, n_terms: usize, seed: Seed) -> Result<IterationTrace> {
    let kappa = kappa.into();
    if !kappa.is_positive() {
        return Err(Error::InvalidArgument(format!("kappa must be at least 1, got {kappa}")));
    }
    if n_terms == 0 {
        return Err(Error::InvalidArgument("at least one term is required".into()));
    }
    let k = Rational::from_integer(kappa.clone());
    let recurrence_len = match seed {
        Seed::Recurrence => n_terms,
        Seed::Paper => n_terms.saturating_sub(1).max(1),
    };
    let mut terms = Vec::with_capacity(n_terms);
    let mut t = k.clone();
    terms.push(t.clone());
    for _ in 1..recurrence_len {
        t = &k + &t.recip().expect("terms stay positive");
        terms.push(t.clone());
    }
    if seed == Seed::Paper && n_terms > 1 {
        terms.insert(1, &k + &Rational::one());
    }
    Ok(IterationTrace { kappa, seed, terms })
}

/// `(κ + sqrt(κ^2 + 4)) / 2`, the positive root of `x^2 - κx - 1`.
pub fn limit_simple(kappa: impl Into<BigInt>) -> Result<QuadraticSurd> {
    let kappa = kappa.into();
    if !kappa.is_positive() {
        return Err(Error::InvalidArgument(format!("kappa must be at least 1, got {kappa}")));
    }
    let d = &kappa * &kappa + 4;
    QuadraticSurd::new(kappa, d, 2)
}

/// One row of [`golden_error_bound_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub n: usize,
    /// `|R_n - φ|`
    pub lhs: QuadraticNumber,
    /// `(1/φ)^(n-1) |R_1 - φ|`
    pub rhs: QuadraticNumber,
    pub holds: bool,
}

/// Checks `|R_n - φ| <= (1/φ)^(n-1) |R_1 - φ|` for `n = 1..=n_max`, where
/// `R_n = F_{n+1}/F_n` is the ratio of consecutive Fibonacci numbers
/// (`F_1 = F_2 = 1`). Exact in `Q(sqrt 5)`.
pub fn golden_error_bound_check(n_max: usize) -> Vec<BoundRow> {
    let half = Rational::new(1, 2).unwrap();
    let phi = QuadraticNumber::new(half.clone(), half, 5.into()).unwrap();
    let inv_phi = &phi - &QuadraticNumber::rational(Rational::one());
    let ratio = |f_next: &BigInt, f: &BigInt| {
        QuadraticNumber::rational(Rational::new(f_next.clone(), f.clone()).unwrap())
    };
    let (mut f, mut f_next) = (BigInt::one(), BigInt::one());
    let first_error = (&ratio(&f_next, &f) - &phi).abs();
    let mut scale = QuadraticNumber::rational(Rational::one());
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let lhs = (&ratio(&f_next, &f) - &phi).abs();
        let rhs = &scale * &first_error;
        rows.push(BoundRow {
            n,
            holds: lhs <= rhs,
            lhs,
            rhs,
        });
        (f, f_next) = (f_next.clone(), f + f_next);
        scale = &scale * &inv_phi;
    }
    rows
}

/// A term of an `x -> -b - c/x` trace; `Pole` follows a zero term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonicTerm {
    Value(Rational),
    Pole,
}

impl MonicTerm {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            MonicTerm::Value(v) => Some(v),
            MonicTerm::Pole => None,
        }
    }
}

/// `x_{k+1} = -b - c/x_k` from `x_0`. A zero term is followed by a pole and
/// the pole by `-b` (as `c/∞ = 0`).
pub fn iterate_monic(b: &Rational, c: &Rational, x0: &Rational, n_terms: usize) -> Vec<MonicTerm> {
    let mut out = Vec::with_capacity(n_terms);
    let mut x = MonicTerm::Value(x0.clone());
    for _ in 0..n_terms {
        let next = match &x {
            MonicTerm::Pole => MonicTerm::Value(-b),
            MonicTerm::Value(v) if v.is_zero() => {
                if c.is_zero() {
                    MonicTerm::Value(-b)
                } else {
                    MonicTerm::Pole
                }
            }
            MonicTerm::Value(v) => MonicTerm::Value(-b - c.checked_div(v).unwrap()),
        };
        out.push(std::mem::replace(&mut x, next));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum MonicVerdict {
    /// `b = 0`: the convergents alternate between 0 and ∞.
    TotallyDivergentBZero,
    /// Negative discriminant.
    OscillatoryDivergent,
    /// Zero discriminant; converges to the double root.
    ConvergesDoubleRoot { root: Rational },
    /// Positive discriminant; converges to the root of larger magnitude at a
    /// rate governed by `ratio = |smaller root / larger root|`.
    ConvergesLargerRoot {
        root: QuadraticNumber,
        ratio: QuadraticNumber,
    },
}

impl MonicVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            MonicVerdict::TotallyDivergentBZero => "totally-divergent-b-zero",
            MonicVerdict::OscillatoryDivergent => "oscillatory-divergent",
            MonicVerdict::ConvergesDoubleRoot { .. } => "converges-double-root",
            MonicVerdict::ConvergesLargerRoot { .. } => "converges-larger-root",
        }
    }

    /// The limit, when the iteration converges.
    pub fn limit(&self) -> Option<QuadraticNumber> {
        match self {
            MonicVerdict::ConvergesDoubleRoot { root } => Some(root.clone().into()),
            MonicVerdict::ConvergesLargerRoot { root, .. } => Some(root.clone()),
            _ => None,
        }
    }
}

/// Convergence behaviour of `x = -b - c/x` for `x^2 + bx + c = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicClassification {
    pub b: Rational,
    pub c: Rational,
    pub discriminant: Rational,
    pub verdict: MonicVerdict,
}

pub fn classify_monic(b: &Rational, c: &Rational) -> MonicClassification {
    let discriminant = b * b - &(c * &Rational::from_integer(4));
    let half = Rational::new(1, 2).unwrap();
    let verdict = if b.is_zero() {
        MonicVerdict::TotallyDivergentBZero
    } else if discriminant.is_negative() {
        MonicVerdict::OscillatoryDivergent
    } else if discriminant.is_zero() {
        MonicVerdict::ConvergesDoubleRoot { root: -b * &half }
    } else {
        let sqrt_disc = QuadraticNumber::sqrt_of(&discriminant).expect("positive");
        // larger magnitude: the square root takes the sign of -b
        let sign = if b.is_negative() { half.clone() } else { -&half };
        let root = &QuadraticNumber::rational(-b * &half) + &(&sqrt_disc * &QuadraticNumber::rational(sign));
        // product of roots is c
        let ratio = QuadraticNumber::rational(c.abs())
            .checked_div(&(&root * &root))
            .expect("larger root is nonzero");
        MonicVerdict::ConvergesLargerRoot { root, ratio }
    };
    MonicClassification {
        b: b.clone(),
        c: c.clone(),
        discriminant,
        verdict,
    }
}

/// Geometric mean of `|x_{k+1} - root| / |x_k - root|` for `k >= burn_in`.
///
/// `None` if the trace has a pole past the burn-in, if the error fails to
/// decrease strictly, or if there are fewer than two terms to compare.
/// An exact hit on the root gives `Some(0.0)`.
pub fn convergence_rate(trace: &[MonicTerm], root: &QuadraticNumber, burn_in: usize) -> Option<f64> {
    let errors: Vec<QuadraticNumber> = trace
        .get(burn_in..)?
        .iter()
        .map(|t| t.value().map(|v| (&QuadraticNumber::rational(v.clone()) - root).abs()))
        .collect::<Option<_>>()?;
    if errors.len() < 2 {
        return None;
    }
    if errors.last().unwrap().is_zero() {
        return Some(0.0);
    }
    if errors.windows(2).any(|w| w[1] >= w[0]) {
        return None;
    }
    let first = errors[0].to_f64();
    let last = errors.last().unwrap().to_f64();
    let steps = (errors.len() - 1) as f64;
    Some(((last.ln() - first.ln()) / steps).exp())
}

/// Whether some stretch of `window` consecutive step sizes
/// `|x_{k+1} - x_k|` shrinks strictly at every step. Poles break a stretch.
pub fn has_shrinking_window(trace: &[MonicTerm], window: usize) -> bool {
    let steps: Vec<Option<Rational>> = trace
        .windows(2)
        .map(|w| match (w[0].value(), w[1].value()) {
            (Some(a), Some(b)) => Some((b - a).abs()),
            _ => None,
        })
        .collect();
    let mut run = 0usize;
    for w in steps.windows(2) {
        match (&w[0], &w[1]) {
            (Some(a), Some(b)) if b < a => {
                run += 1;
                if run >= window {
                    return true;
                }
            }
            _ => run = 0,
        }
    }
    false
}
