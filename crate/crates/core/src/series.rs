//! Truncated power series in `x` with exact rational coefficients.
//!
//! A series of order `N` stores the coefficients of `x^0 ..= x^N`. Binary
//! operations truncate to the smaller order of their operands.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Builds a series from coefficients `c_0 ..= c_N`; an empty vector is
    /// taken as the zero series of order 0.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let mut out = Self::zero(order);
        for (k, &c) in coeffs.iter().enumerate().take(order + 1) {
            out.coeffs[k] = rational::int(c);
        }
        out
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = c;
        out
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// The series of `f(m·x)`: coefficient `c_k` becomes `c_k·m^k`.
    pub fn rescale_variable(&self, m: &Rational) -> Self {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &power);
            power *= m;
        }
        Self { coeffs }
    }

    /// Quotient `q` with `q·divisor = self` to the available order.
    ///
    /// A common factor `x^m` is cancelled first, which costs `m` orders of
    /// precision.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self> {
        let order = self.order().min(divisor.order());
        let shift = match divisor.valuation() {
            Some(v) if v <= order => v,
            _ => return Err(Error::DivisionByZeroSeries),
        };
        if let Some(va) = self.valuation() {
            if va < shift {
                return Err(Error::DivisionByZeroSeries);
            }
        }
        let order = order - shift;
        let a = &self.coeffs[shift..=shift + order];
        let b = &divisor.coeffs[shift..=shift + order];
        let inv_lead = b[0].recip();
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = a[k].clone();
            for j in 1..=k {
                if b[j].is_zero() || q[k - j].is_zero() {
                    continue;
                }
                acc -= &b[j] * &q[k - j];
            }
            q.push(acc * &inv_lead);
        }
        Ok(Self { coeffs: q })
    }

    /// Horner evaluation of the truncated polynomial in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + rational::to_f64(c))
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·x")?,
                _ => write!(f, "({c})·x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries { coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries { coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: PowerSeries) -> PowerSeries {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&PowerSeries> for PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: &PowerSeries) -> PowerSeries {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        -&self
    }
}

/// Taylor coefficients of `sinh(c·x/4) / x` up to `x^order`.
fn sinh_over_x(c: &Rational, order: usize) -> PowerSeries {
    // sinh(c x/4)/x = Σ_k (c/4)^(2k+1) x^(2k) / (2k+1)!
    let quarter = c / rational::int(4);
    let quarter_sq = &quarter * &quarter;
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut term = quarter;
    let mut k = 0usize;
    while 2 * k <= order {
        coeffs[2 * k] = term.clone();
        let denom = BigInt::from((2 * k + 2) * (2 * k + 3));
        term = &term * &quarter_sq / Rational::from_integer(denom);
        k += 1;
    }
    PowerSeries { coeffs }
}

/// Series of `sinh(num·x/4) / sinh(den·x/4)` to the given order.
///
/// The common factor of `x` is cancelled analytically, so the constant term is
/// `num/den`. Only even powers of `x` appear.
pub fn sinh_ratio_series(num: &Rational, den: &Rational, order: usize) -> Result<PowerSeries> {
    if den.is_zero() {
        return Err(Error::ZeroDenominatorForm);
    }
    if num.is_zero() {
        return Ok(PowerSeries::zero(order));
    }
    sinh_over_x(num, order).checked_div(&sinh_over_x(den, order))
}
