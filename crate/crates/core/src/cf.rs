//! Finite simple continued fractions and the convergent recurrences.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `[a0; a1, ..., an]` with `a_i >= 1` for `i >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteCF {
    coefficients: Vec<BigInt>,
}

impl FiniteCF {
    pub fn new(coefficients: Vec<BigInt>) -> Result<Self> {
        check_coefficients(&coefficients)?;
        Ok(FiniteCF { coefficients })
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<BigInt> {
        self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Expansion of a rational by repeated floor and reciprocal (the
    /// Euclidean algorithm on numerator and denominator).
    pub fn expand(r: &Rational) -> Self {
        let mut num = r.numer().clone();
        let mut den = r.denom().clone();
        let mut coefficients = Vec::new();
        loop {
            let (a, rem) = num.div_mod_floor(&den);
            coefficients.push(a);
            if rem.is_zero() {
                break;
            }
            num = std::mem::replace(&mut den, rem);
        }
        FiniteCF { coefficients }
    }

    /// Back-substitution from the innermost term.
    pub fn evaluate(&self) -> Rational {
        let mut iter = self.coefficients.iter().rev();
        let last = iter.next().expect("nonempty");
        // value = num / den
        let mut num = last.clone();
        let mut den = BigInt::one();
        for a in iter {
            let next = a * &num + &den;
            den = num;
            num = next;
        }
        Rational::new(num, den).expect("tail denominators are positive")
    }

    /// Folds a trailing `1` into the previous term: `[.., a, 1] -> [.., a + 1]`.
    pub fn canonicalize(&self) -> Self {
        let mut coefficients = self.coefficients.clone();
        if coefficients.len() > 1 && coefficients.last().is_some_and(|a| a.is_one()) {
            coefficients.pop();
            *coefficients.last_mut().unwrap() += 1;
        }
        FiniteCF { coefficients }
    }

    pub fn is_canonical(&self) -> bool {
        self.coefficients.len() == 1 || !self.coefficients.last().unwrap().is_one()
    }

    pub fn convergents(&self) -> Vec<Convergent> {
        ConvergentIter::new(self.coefficients.iter().cloned()).collect()
    }
}

impl fmt::Display for FiniteCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.coefficients[0])?;
        for (i, a) in self.coefficients[1..].iter().enumerate() {
            f.write_str(if i == 0 { ";" } else { "," })?;
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

pub(crate) fn check_coefficients(coefficients: &[BigInt]) -> Result<()> {
    if coefficients.is_empty() {
        return Err(Error::InvalidCoefficients("empty coefficient list".into()));
    }
    if let Some((i, a)) = coefficients
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, a)| !a.is_positive())
    {
        return Err(Error::InvalidCoefficients(format!(
            "coefficient a{i} = {a} must be at least 1"
        )));
    }
    Ok(())
}

/// The `n`-th convergent `p/q` of a coefficient stream.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Convergent {
    pub index: usize,
    pub p: BigInt,
    pub q: BigInt,
}

impl Convergent {
    pub fn value(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone()).expect("q >= 1")
    }
}

impl fmt::Display for Convergent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Lazily applies `p_n = a_n p_{n-1} + p_{n-2}`, `q_n = a_n q_{n-1} + q_{n-2}`
/// seeded with `p_{-1} = 1, p_{-2} = 0, q_{-1} = 0, q_{-2} = 1`.
#[derive(Clone, Debug)]
pub struct ConvergentIter<I> {
    coefficients: I,
    index: usize,
    p: (BigInt, BigInt),
    q: (BigInt, BigInt),
}

impl<I: Iterator<Item = BigInt>> ConvergentIter<I> {
    pub fn new(coefficients: impl IntoIterator<IntoIter = I>) -> Self {
        ConvergentIter {
            coefficients: coefficients.into_iter(),
            index: 0,
            p: (BigInt::one(), BigInt::zero()),
            q: (BigInt::zero(), BigInt::one()),
        }
    }
}

impl<I: Iterator<Item = BigInt>> Iterator for ConvergentIter<I> {
    type Item = Convergent;

    fn next(&mut self) -> Option<Convergent> {
        let a = self.coefficients.next()?;
        let p = &a * &self.p.0 + &self.p.1;
        let q = &a * &self.q.0 + &self.q.1;
        self.p = (p.clone(), std::mem::take(&mut self.p.0));
        self.q = (q.clone(), std::mem::take(&mut self.q.0));
        let index = self.index;
        self.index += 1;
        Some(Convergent { index, p, q })
    }
}

/// The first `count` convergents of `coefficients`.
pub fn convergents(coefficients: &[BigInt], count: usize) -> Result<Vec<Convergent>> {
    if count > coefficients.len() {
        return Err(Error::InsufficientCoefficients {
            needed: count,
            available: coefficients.len(),
        });
    }
    check_coefficients(&coefficients[..count.max(1)])?;
    Ok(ConvergentIter::new(coefficients[..count].iter().cloned()).collect())
}
