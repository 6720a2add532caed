//! Exact arithmetic in a real quadratic field.
//!
//! A [`QuadraticNumber`] is `a + b*sqrt(d)` with rational `a`, `b` and a
//! positive integer radicand `d`. Signs and comparisons are decided by sign
//! analysis and squaring, so no floating point is involved.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_scaled, Rational};

/// Values compare equal when they are equal as real numbers, even if the
/// radicands differ by a square factor (`sqrt 20 / 4 == sqrt 5 / 2`).
#[derive(Clone, Debug)]
pub struct QuadraticNumber {
    a: Rational,
    b: Rational,
    d: BigInt,
}

/// `Some(sqrt(n))` when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

impl QuadraticNumber {
    /// `a + b*sqrt(d)`. A perfect-square `d` folds the irrational part into
    /// the rational one.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::NonPositiveRadicand(d));
        }
        if let Some(s) = exact_sqrt(&d) {
            return Ok(QuadraticNumber::rational(a + b * Rational::from_integer(s)));
        }
        let (f, d) = strip_small_squares(d);
        let b = b * Rational::from_integer(f);
        Ok(QuadraticNumber { a, b, d }.tidy())
    }

    pub fn rational(a: Rational) -> Self {
        QuadraticNumber {
            a,
            b: Rational::zero(),
            d: BigInt::one(),
        }
    }

    /// `sqrt(r)` for a non-negative rational `r`.
    pub fn sqrt_of(r: &Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::NonPositiveRadicand(r.numer().clone()));
        }
        if r.is_zero() {
            return Ok(QuadraticNumber::rational(Rational::zero()));
        }
        if let Some(s) = exact_sqrt(r.denom()) {
            return QuadraticNumber::new(Rational::zero(), Rational::new(1, s)?, r.numer().clone());
        }
        // sqrt(n/m) = sqrt(n*m)/m
        let radicand = r.numer() * r.denom();
        QuadraticNumber::new(
            Rational::zero(),
            Rational::new(1, r.denom().clone())?,
            radicand,
        )
    }

    fn tidy(mut self) -> Self {
        if self.b.is_zero() {
            self.d = BigInt::one();
        }
        self
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_coefficient(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn conjugate(&self) -> Self {
        QuadraticNumber {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// `a^2 - b^2 d`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &(&self.b * &self.b) * &Rational::from_integer(self.d.clone())
    }

    pub fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: whichever of a^2 and b^2 d is larger wins
        match self.norm().signum() {
            1 => sa,
            -1 => sb,
            _ => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conjugate();
        Ok(QuadraticNumber {
            a: c.a.checked_div(&n)?,
            b: c.b.checked_div(&n)?,
            d: c.d,
        }
        .tidy())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = QuadraticNumber::rational(Rational::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Greatest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor();
        }
        // value = (x + y*sqrt(d)) / z with z > 0
        let z = self.a.denom().lcm(self.b.denom());
        let x = self.a.numer() * (&z / self.a.denom());
        let y = self.b.numer() * (&z / self.b.denom());
        let m = &y * &y * &self.d;
        let s = m.sqrt();
        // floor(x + y*sqrt(d)) with y*sqrt(d) irrational
        let inner = if y.is_positive() { x + s } else { x - s - 1 };
        inner.div_floor(&z)
    }

    /// Correctly rounded decimal with `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = Rational::from_integer(BigInt::from(10u32).pow(digits as u32));
        let scaled = self * &QuadraticNumber::rational(scale);
        let half = QuadraticNumber::rational(Rational::new(1, 2).unwrap());
        let magnitude = (&scaled.abs() + &half).floor();
        format_scaled(scaled.signum() < 0 && !magnitude.is_zero(), &magnitude, digits)
    }

    /// Floating approximation that survives cancellation between the
    /// rational and irrational parts.
    pub fn to_f64(&self) -> f64 {
        if self.b.is_zero() {
            return self.a.to_f64();
        }
        let d = Rational::from_integer(self.d.clone()).to_f64().sqrt();
        let a = self.a.to_f64();
        let bs = self.b.to_f64() * d;
        if a.signum() == bs.signum() {
            return a + bs;
        }
        // a + b*sqrt(d) = norm / (a - b*sqrt(d))
        self.norm().to_f64() / (a - bs)
    }

    /// Irrational coefficients of both operands over a shared radicand.
    ///
    /// Panics when the radicands do not differ by a rational square, i.e.
    /// the operands live in different fields.
    fn align(&self, rhs: &Self) -> (Rational, Rational, BigInt) {
        match (self.b.is_zero(), rhs.b.is_zero()) {
            (true, _) => (self.b.clone(), rhs.b.clone(), rhs.d.clone()),
            (_, true) => (self.b.clone(), rhs.b.clone(), self.d.clone()),
            _ if self.d == rhs.d => (self.b.clone(), rhs.b.clone(), self.d.clone()),
            _ => {
                // sqrt(big) = (s / small) sqrt(small) with s = sqrt(big * small)
                let s = exact_sqrt(&(&self.d * &rhs.d))
                    .unwrap_or_else(|| panic!("sqrt {} and sqrt {} lie in different fields", self.d, rhs.d));
                if self.d < rhs.d {
                    let k = Rational::new(s, self.d.clone()).unwrap();
                    (self.b.clone(), &rhs.b * &k, self.d.clone())
                } else {
                    let k = Rational::new(s, rhs.d.clone()).unwrap();
                    (&self.b * &k, rhs.b.clone(), rhs.d.clone())
                }
            }
        }
    }
}

/// Splits `d = f^2 * rest` over the primes below 1000.
fn strip_small_squares(mut d: BigInt) -> (BigInt, BigInt) {
    let mut f = BigInt::one();
    let mut p = 2u32;
    while p < 1000 {
        let pp = BigInt::from(p * p);
        if pp > d {
            break;
        }
        while d.is_multiple_of(&pp) {
            d /= &pp;
            f *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (f, d)
}

impl PartialEq for QuadraticNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.a != other.a {
            return false;
        }
        if self.b.is_zero() || other.b.is_zero() {
            return self.b.is_zero() && other.b.is_zero();
        }
        exact_sqrt(&(&self.d * &other.d)).is_some() && {
            let (x, y, _) = self.align(other);
            x == y
        }
    }
}

impl Eq for QuadraticNumber {}

impl From<Rational> for QuadraticNumber {
    fn from(r: Rational) -> Self {
        QuadraticNumber::rational(r)
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let (x, y, d) = self.align(rhs);
        QuadraticNumber {
            a: &self.a + &rhs.a,
            b: x + y,
            d,
        }
        .tidy()
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        self + &(-rhs)
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let (x, y, d) = self.align(rhs);
        let dr = Rational::from_integer(d.clone());
        QuadraticNumber {
            a: &self.a * &rhs.a + &(&x * &y) * &dr,
            b: &self.a * &y + &x * &rhs.a,
            d,
        }
        .tidy()
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |r: &Rational| {
            if r.is_integer() {
                r.numer().to_string()
            } else {
                r.to_string()
            }
        };
        if self.b.is_zero() {
            return f.write_str(&show(&self.a));
        }
        let mut out = String::new();
        if !self.a.is_zero() {
            out.push_str(&show(&self.a));
            out.push(if self.b.is_negative() { '-' } else { '+' });
        } else if self.b.is_negative() {
            out.push('-');
        }
        let b = self.b.abs();
        if b != 1 {
            out.push_str(&show(&b));
            out.push('*');
        }
        out.push_str(&format!("√{}", self.d));
        f.write_str(&out)
    }
}
