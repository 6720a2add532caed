//! `x^2 - n y^2 = ±1` from the convergents of `sqrt(n)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::surd::{sqrt_cf, PeriodicCF};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PellSolution {
    pub n: BigInt,
    pub x: BigInt,
    pub y: BigInt,
    /// +1 or -1.
    pub sign: i8,
}

/// `x^2 - n y^2`.
pub fn verify(n: &BigInt, x: &BigInt, y: &BigInt) -> BigInt {
    x * x - n * y * y
}

/// Solutions of `x^2 - n y^2 = ±1` in increasing order, read off the
/// convergents of `sqrt(n)`. Every solution is a convergent, and a
/// convergent `p_k/q_k` solves the equation exactly when `k + 1` is a
/// multiple of the period length.
#[derive(Clone, Debug)]
pub struct PellSolutions {
    n: BigInt,
    expansion: PeriodicCF,
}

impl PellSolutions {
    pub fn new(n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        let expansion = sqrt_cf(n.clone())?;
        Ok(PellSolutions { n, expansion })
    }

    pub fn expansion(&self) -> &PeriodicCF {
        &self.expansion
    }

    pub fn period_len(&self) -> usize {
        self.expansion.period().len()
    }

    /// All solutions to either sign, smallest first. Scans every convergent
    /// and tests it by substitution.
    pub fn iter(&self) -> impl Iterator<Item = PellSolution> + '_ {
        self.expansion.convergents().filter_map(move |c| {
            let v = verify(&self.n, &c.p, &c.q);
            let sign = if v.is_one() {
                1
            } else if v == -BigInt::one() {
                -1
            } else {
                return None;
            };
            Some(PellSolution {
                n: self.n.clone(),
                x: c.p,
                y: c.q,
                sign,
            })
        })
    }

    pub fn fundamental(&self) -> PellSolution {
        self.iter().next().expect("sqrt(n) convergents always contain a solution")
    }

    /// First `k` solutions with the given sign.
    pub fn with_sign(&self, sign: i8, k: usize) -> Result<Vec<PellSolution>> {
        if sign < 0 && self.period_len().is_even() {
            return Err(Error::NoNegativeSolution { n: self.n.clone() });
        }
        Ok(self.iter().filter(|s| s.sign == sign).take(k).collect())
    }
}

/// Smallest positive solution of `x^2 - n y^2 = ±1`; the sign is -1 exactly
/// when the period of `sqrt(n)` is odd.
pub fn solve_fundamental(n: impl Into<BigInt>) -> Result<PellSolution> {
    Ok(PellSolutions::new(n)?.fundamental())
}

/// First `k` solutions of `x^2 - n y^2 = 1`.
pub fn solve_positive(n: impl Into<BigInt>, k: usize) -> Result<Vec<PellSolution>> {
    PellSolutions::new(n)?.with_sign(1, k)
}

/// First `k` solutions of `x^2 - n y^2 = -1`; fails when the period of
/// `sqrt(n)` is even.
pub fn solve_negative(n: impl Into<BigInt>, k: usize) -> Result<Vec<PellSolution>> {
    PellSolutions::new(n)?.with_sign(-1, k)
}
