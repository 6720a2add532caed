//! Quadratic irrationals `(P + sqrt(D)) / Q` and their eventually periodic
//! continued fractions.
//!
//! A surd is kept in the normalized form where `Q` divides `D - P^2`. In that
//! form the complete quotients of the expansion stay in the same shape:
//!
//! ```text
//! a  = floor((P + sqrt(D)) / Q)
//! P' = a*Q - P
//! Q' = (D - P'^2) / Q
//! ```
//!
//! so the whole expansion runs on the integer pair `(P, Q)` with `D` fixed,
//! and a period is found as the first repeated pair.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cf::{check_coefficients, ConvergentIter};
use crate::error::{Error, Result};
use crate::quadratic::{exact_sqrt, QuadraticNumber};
use crate::rational::Rational;

/// Default safety valve for [`QuadraticSurd::expand`].
pub const DEFAULT_MAX_TERMS: usize = 1_000_000;

/// `(p + sqrt(d)) / q`, normalized so that `q | d - p^2` and
/// `gcd(p, q, (d - p^2)/q) = 1`. The square root is the positive one; the
/// sign of the irrational part is carried by `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: BigInt,
    d: BigInt,
    q: BigInt,
}

impl QuadraticSurd {
    pub fn new(p: impl Into<BigInt>, d: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, d, q) = (p.into(), d.into(), q.into());
        if q.is_zero() {
            return Err(Error::ZeroSurdDenominator);
        }
        if !d.is_positive() {
            return Err(Error::NonPositiveRadicand(d));
        }
        if exact_sqrt(&d).is_some() {
            return Err(Error::PerfectSquare(d));
        }
        Ok(Self::normalize(p, d, q))
    }

    /// Assumes `d` positive and non-square, `q` nonzero.
    fn normalize(p: BigInt, d: BigInt, q: BigInt) -> Self {
        let (p, d, q) = if (&d - &p * &p).is_multiple_of(&q) {
            (p, d, q)
        } else {
            let m = q.abs();
            (p * &m, d * &q * &q, q * m)
        };
        let n = (&d - &p * &p) / &q;
        // any common factor g of p, q, n has g^2 | d = p^2 + n q
        let g = p.gcd(&q).gcd(&n);
        if g.is_one() {
            QuadraticSurd { p, d, q }
        } else {
            QuadraticSurd {
                p: p / &g,
                d: d / (&g * &g),
                q: q / g,
            }
        }
    }

    /// The surd with value `a + b*sqrt(d)`, or `None` when `b` is zero.
    pub fn from_quadratic(x: &QuadraticNumber) -> Option<Self> {
        if x.is_rational() {
            return None;
        }
        let (a, b) = (x.rational_part(), x.irrational_coefficient());
        // a = A/L, b = B/L, value = (A + B sqrt(d)) / L = (s*A + sqrt(B^2 d)) / (s*L), s = sign(B)
        let l = a.denom().lcm(b.denom());
        let big_a = a.numer() * (&l / a.denom());
        let big_b = b.numer() * (&l / b.denom());
        let radicand = &big_b * &big_b * x.radicand();
        let (p, q) = if big_b.is_negative() { (-big_a, -l) } else { (big_a, l) };
        Some(Self::normalize(p, radicand, q))
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// `(p - sqrt(d)) / q`.
    pub fn conjugate(&self) -> Self {
        QuadraticSurd {
            p: -&self.p,
            d: self.d.clone(),
            q: -&self.q,
        }
    }

    pub fn to_quadratic(&self) -> QuadraticNumber {
        let denom = Rational::from_integer(self.q.clone());
        QuadraticNumber::new(
            Rational::from_integer(self.p.clone()).checked_div(&denom).unwrap(),
            Rational::one().checked_div(&denom).unwrap(),
            self.d.clone(),
        )
        .expect("d is positive")
    }

    /// Coefficients `(b, c)` of the monic quadratic `x^2 + b x + c` whose
    /// roots are this surd and its conjugate.
    pub fn minimal_polynomial(&self) -> (Rational, Rational) {
        let q = Rational::from_integer(self.q.clone());
        let q2 = &q * &q;
        let b = Rational::from_integer(-&self.p * 2).checked_div(&q).unwrap();
        let c = Rational::from_integer(&self.p * &self.p - &self.d)
            .checked_div(&q2)
            .unwrap();
        (b, c)
    }

    pub fn floor(&self) -> BigInt {
        let s = self.d.sqrt();
        if self.q.is_positive() {
            (&self.p + s).div_floor(&self.q)
        } else {
            // (p + sqrt d)/q = (-p - sqrt d)/|q| and floor(-p - sqrt d) = -p - s - 1
            let top: BigInt = -&self.p - s - 1;
            top.div_floor(&-&self.q)
        }
    }

    /// One step of the expansion: the leading coefficient and the next
    /// complete quotient.
    pub fn step(&self) -> (BigInt, QuadraticSurd) {
        let a = self.floor();
        let p = &a * &self.q - &self.p;
        let q = (&self.d - &p * &p) / &self.q;
        (
            a,
            QuadraticSurd {
                p,
                d: self.d.clone(),
                q,
            },
        )
    }

    /// The eventually periodic expansion, detecting the period as the first
    /// repeated complete quotient. Fails if no repeat is seen within
    /// `max_terms` coefficients.
    pub fn expand(&self, max_terms: usize) -> Result<PeriodicCF> {
        // complete quotients along the way share d, so (p, q) identifies them
        let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
        let mut terms = Vec::new();
        let mut state = self.clone();
        loop {
            if let Some(&start) = seen.get(&(state.p.clone(), state.q.clone())) {
                let period = terms.split_off(start);
                return Ok(PeriodicCF {
                    pre_period: terms,
                    period,
                });
            }
            if terms.len() >= max_terms {
                return Err(Error::PeriodNotFoundWithinBudget(max_terms));
            }
            seen.insert((state.p.clone(), state.q.clone()), terms.len());
            let (a, next) = state.step();
            terms.push(a);
            state = next;
        }
    }

    /// Correctly rounded decimal expansion with `digits` fractional digits.
    pub fn decimal(&self, digits: usize) -> String {
        self.to_quadratic().to_decimal(digits)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // (p + sqrt d)/q == (-p - sqrt d)/|q| when q < 0
        let (p, minus, q) = if self.q.is_negative() {
            (-&self.p, true, -&self.q)
        } else {
            (self.p.clone(), false, self.q.clone())
        };
        let root = format!("√{}", self.d);
        let numerator = match (p.is_zero(), minus) {
            (true, false) => root,
            (true, true) => format!("-{root}"),
            (false, false) => format!("{p}+{root}"),
            (false, true) => format!("{p}-{root}"),
        };
        if q.is_one() {
            f.write_str(&numerator)
        } else if p.is_zero() && !minus {
            write!(f, "{numerator}/{q}")
        } else {
            write!(f, "({numerator})/{q}")
        }
    }
}

/// `[a0, ..., ak, (b1, ..., bh)]`: a pre-period followed by a repeating
/// block, held with a minimal period and the shortest pre-period.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicCF {
    pre_period: Vec<BigInt>,
    period: Vec<BigInt>,
}

impl PeriodicCF {
    /// Validates the coefficients and reduces to the minimal period and
    /// shortest pre-period, so `[1;2,(2,2)]` becomes `[1;(2)]`.
    pub fn new(pre_period: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidCoefficients("empty period".into()));
        }
        let mut all = pre_period.clone();
        all.extend(period.iter().cloned());
        check_coefficients(&all)?;
        if pre_period.is_empty() && !period[0].is_positive() {
            return Err(Error::InvalidCoefficients(
                "repeating terms must be at least 1".into(),
            ));
        }
        let mut pre_period = pre_period;
        let mut period = minimal_period(period);
        while pre_period.last().is_some_and(|a| Some(a) == period.last()) {
            pre_period.pop();
            period.rotate_right(1);
        }
        Ok(PeriodicCF { pre_period, period })
    }

    pub fn pre_period(&self) -> &[BigInt] {
        &self.pre_period
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    /// The infinite coefficient stream.
    pub fn terms(&self) -> impl Iterator<Item = BigInt> + Clone + '_ {
        self.pre_period
            .iter()
            .chain(self.period.iter().cycle())
            .cloned()
    }

    pub fn convergents(&self) -> ConvergentIter<impl Iterator<Item = BigInt> + Clone + '_> {
        ConvergentIter::new(self.terms())
    }

    /// The quadratic irrational with this expansion.
    ///
    /// The purely periodic tail `y` satisfies `y = (p y + p') / (q y + q')`
    /// with `p/q`, `p'/q'` the last two convergents of one period; its root
    /// above 1 is taken and the pre-period is folded back in with
    /// `x = a + 1/x`.
    pub fn to_surd(&self) -> QuadraticSurd {
        let cs: Vec<_> = ConvergentIter::new(self.period.iter().cloned()).collect();
        let last = cs.last().unwrap();
        let (p, q) = (&last.p, &last.q);
        let (p_prev, q_prev) = match cs.len() {
            1 => (BigInt::one(), BigInt::zero()),
            n => (cs[n - 2].p.clone(), cs[n - 2].q.clone()),
        };
        // q y^2 + (q' - p) y - p' = 0, positive root
        let b = p - &q_prev;
        let disc = &b * &b + BigInt::from(4) * q * &p_prev;
        let mut x = QuadraticSurd::normalize(b, disc, q * 2);
        for a in self.pre_period.iter().rev() {
            // a + 1/x with 1/x = (-P + sqrt D) / ((D - P^2)/Q)
            let n = (&x.d - &x.p * &x.p) / &x.q;
            x = QuadraticSurd::normalize(a * &n - &x.p, x.d, n);
        }
        x
    }
}

fn minimal_period(period: Vec<BigInt>) -> Vec<BigInt> {
    let h = period.len();
    for len in (1..h).filter(|len| h.is_multiple_of(*len)) {
        if (len..h).all(|i| period[i] == period[i - len]) {
            return period[..len].to_vec();
        }
    }
    period
}

impl fmt::Display for PeriodicCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self.pre_period.split_first() {
            None => write!(f, "[({})]", join(&self.period)),
            Some((a0, [])) => write!(f, "[{a0};({})]", join(&self.period)),
            Some((a0, rest)) => write!(f, "[{a0};{},({})]", join(rest), join(&self.period)),
        }
    }
}

/// Periodic expansion of `sqrt(n)`.
pub fn sqrt_cf(n: impl Into<BigInt>) -> Result<PeriodicCF> {
    let n = n.into();
    if n < BigInt::from(2) {
        return Err(if n.is_one() || n.is_zero() {
            Error::PerfectSquare(n)
        } else {
            Error::NonPositiveRadicand(n)
        });
    }
    QuadraticSurd::new(0, n, 1)?.expand(DEFAULT_MAX_TERMS)
}
