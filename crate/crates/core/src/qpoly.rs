//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial `Σ c_e q^e`.
///
/// Stored densely from the lowest nonzero exponent; the coefficient vector
/// never has zero entries at either end, and the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    /// `c q^e`.
    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        Self::from_dense(e, vec![c.into()])
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, 1)
    }

    /// `Σ_i coeffs[i] q^{low + i}`.
    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { low, coeffs };
        p.normalize();
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        terms.into_iter().map(|(e, c)| QPoly::monomial(e, c)).sum()
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// `q^e · self`.
    pub fn scale_by_q_power(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QPoly { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn shifted(mut self, e: i64) -> Self {
        if !self.is_zero() {
            self.low += e;
        }
        self
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Value at `q = 1`.
    pub fn eval_q1(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at an integer point; negative exponents are rejected.
    pub fn eval_int(&self, x: i64) -> Option<BigInt> {
        if self.low < 0 && x != 1 && x != -1 {
            return None;
        }
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        // for x = ±1, x^{-k} = x^k
        Some(acc * num_traits::pow(x, self.low.unsigned_abs() as usize))
    }

    /// True if no term has a negative exponent.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    /// All coefficients `≥ 0` and all exponents `≥ 0`.
    pub fn is_positive(&self) -> bool {
        self.is_polynomial() && self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; `None` if `divisor` does not divide `self` in `Z[q, q^{-1}]`.
    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_lead = divisor.coeffs.last().unwrap();
        let dl = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dl {
            return None;
        }
        let qlen = rem.len() - dl + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(d_lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(QPoly::from_dense(self.low - divisor.low, quot))
    }
}

/// `[n]_q = 1 + q + ⋯ + q^{n-1}`.
pub fn qint(n: i64) -> Result<QPoly> {
    if n < 0 {
        return Err(Error::NegativeQInteger(n));
    }
    Ok(QPoly::from_dense(0, vec![BigInt::one(); n as usize]))
}

/// The Gaussian binomial; zero unless `0 ≤ r ≤ n`.
pub fn qbinom(n: i64, r: i64) -> QPoly {
    if n < 0 || r < 0 || r > n {
        return QPoly::zero();
    }
    let r = r.min(n - r);
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for i in 0..r {
        num = &num * &qint(n - i).unwrap();
        den = &den * &qint(i + 1).unwrap();
    }
    num.div_exact(&den).expect("q-binomial division left a remainder")
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        self.accumulate(rhs, false);
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        self.accumulate(rhs, true);
    }
}

impl QPoly {
    fn accumulate(&mut self, rhs: &QPoly, negate: bool) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if negate { -rhs } else { rhs.clone() };
            return;
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        if low < self.low {
            let pad = (self.low - low) as usize;
            self.coeffs.splice(0..0, core::iter::repeat_n(BigInt::zero(), pad));
            self.low = low;
        }
        self.coeffs.resize((high - low + 1) as usize, BigInt::zero());
        let off = (rhs.low - self.low) as usize;
        for (i, c) in rhs.coeffs.iter().enumerate() {
            if negate {
                self.coeffs[off + i] -= c;
            } else {
                self.coeffs[off + i] += c;
            }
        }
        self.normalize();
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly { (&self).$method(&rhs) }
        }
        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly { (&self).$method(rhs) }
        }
        impl $trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly { self.$method(&rhs) }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl AddAssign<QPoly> for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        *self += &rhs;
    }
}

impl SubAssign<QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: QPoly) {
        *self -= &rhs;
    }
}

impl Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        let mut acc = QPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl<'a> Sum<&'a QPoly> for QPoly {
    fn sum<I: Iterator<Item = &'a QPoly>>(iter: I) -> QPoly {
        let mut acc = QPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

/// Plain ascending form, e.g. `1 + 2q - q^3`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let unit = mag.is_one();
            if !unit || e == 0 {
                write!(f, "{}", mag)?;
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{}", e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({})", self)
    }
}
