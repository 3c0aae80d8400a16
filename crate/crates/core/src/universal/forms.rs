use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::params::{Perm, VogelParams};
use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};
use crate::series::{sinh_ratio_series, PowerSeries};

/// An integer linear form `a·α + b·β + c·γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm(pub [i64; 3]);

impl LinearForm {
    pub const ALPHA: LinearForm = LinearForm([1, 0, 0]);
    pub const BETA: LinearForm = LinearForm([0, 1, 0]);
    pub const GAMMA: LinearForm = LinearForm([0, 0, 1]);

    pub fn coeffs(self) -> [i64; 3] {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn eval(self, v: &VogelParams) -> Rational {
        self.0.iter().zip(v.as_array()).map(|(&c, x)| int(c) * x).sum()
    }

    pub fn eval_f64(self, v: [f64; 3]) -> f64 {
        self.0.iter().zip(v).map(|(&c, x)| c as f64 * x).sum()
    }

    /// The form `L'` with `L'(v) = L(v.permuted(perm))`.
    pub fn permute(self, perm: Perm) -> Self {
        let mut out = [0; 3];
        for (i, &c) in self.0.iter().enumerate() {
            out[perm.0[i]] += c;
        }
        LinearForm(out)
    }

    /// `Some(c)` when `self = c·other` with `other ≠ 0`.
    pub fn ratio_to(self, other: LinearForm) -> Option<Rational> {
        let (u, w) = (self.0, other.0);
        let k = w.iter().position(|&c| c != 0)?;
        let proportional = (0..3).all(|i| (0..3).all(|j| u[i] * w[j] == u[j] * w[i]));
        proportional.then(|| Rational::new(u[k].into(), w[k].into()))
    }
}

impl Add for LinearForm {
    type Output = LinearForm;

    fn add(self, rhs: LinearForm) -> LinearForm {
        LinearForm([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl Sub for LinearForm {
    type Output = LinearForm;

    fn sub(self, rhs: LinearForm) -> LinearForm {
        self + (-rhs)
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;

    fn neg(self) -> LinearForm {
        LinearForm(self.0.map(|c| -c))
    }
}

impl Mul<LinearForm> for i64 {
    type Output = LinearForm;

    fn mul(self, rhs: LinearForm) -> LinearForm {
        LinearForm(rhs.0.map(|c| self * c))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&c, sym) in self.0.iter().zip(['α', 'β', 'γ']) {
            if c == 0 {
                continue;
            }
            match (c < 0, first) {
                (true, _) => write!(f, "-")?,
                (false, false) => write!(f, "+")?,
                (false, true) => {}
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{sym}")?;
            first = false;
        }
        Ok(())
    }
}

/// `±Π sinh(Nᵢ·x/4) / Π sinh(Dᵢ·x/4)` with equally many numerator and
/// denominator forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinhProduct {
    negative: bool,
    numerators: Vec<LinearForm>,
    denominators: Vec<LinearForm>,
}

impl Default for SinhProduct {
    fn default() -> Self {
        Self::one()
    }
}

/// A product reduced at a specific parameter point: `coefficient · Π sinh(n·x/4)/sinh(d·x/4)`.
struct Reduced {
    coefficient: Rational,
    pairs: Vec<(Rational, Rational)>,
}

impl SinhProduct {
    pub fn one() -> Self {
        Self { negative: false, numerators: Vec::new(), denominators: Vec::new() }
    }

    pub fn ratio(numerator: LinearForm, denominator: LinearForm) -> Self {
        Self { negative: false, numerators: vec![numerator], denominators: vec![denominator] }
    }

    pub fn from_forms(numerators: Vec<LinearForm>, denominators: Vec<LinearForm>) -> Self {
        assert_eq!(numerators.len(), denominators.len(), "unbalanced sinh product");
        Self { negative: false, numerators, denominators }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn numerators(&self) -> &[LinearForm] {
        &self.numerators
    }

    pub fn denominators(&self) -> &[LinearForm] {
        &self.denominators
    }

    pub fn negated(mut self) -> Self {
        self.negative = !self.negative;
        self
    }

    pub fn times(mut self, other: &SinhProduct) -> Self {
        self.negative ^= other.negative;
        self.numerators.extend_from_slice(&other.numerators);
        self.denominators.extend_from_slice(&other.denominators);
        self
    }

    /// The same product evaluated at permuted parameters.
    pub fn permuted(&self, perm: Perm) -> Self {
        Self {
            negative: self.negative,
            numerators: self.numerators.iter().map(|l| l.permute(perm)).collect(),
            denominators: self.denominators.iter().map(|l| l.permute(perm)).collect(),
        }
    }

    /// Cancels numerator/denominator pairs equal up to sign. Since `sinh` is
    /// odd, `sinh(-L)/sinh(L) = -1` identically.
    pub fn simplified(&self) -> Self {
        let mut negative = self.negative;
        let mut numerators = self.numerators.clone();
        let mut denominators = Vec::with_capacity(self.denominators.len());
        for &d in &self.denominators {
            if let Some(i) = numerators.iter().position(|&n| n == d) {
                numerators.swap_remove(i);
            } else if let Some(i) = numerators.iter().position(|&n| n == -d) {
                numerators.swap_remove(i);
                negative = !negative;
            } else {
                denominators.push(d);
            }
        }
        Self { negative, numerators, denominators }
    }

    /// Whether any numerator form vanishes identically.
    pub fn is_identically_zero(&self) -> bool {
        self.numerators.iter().any(|n| n.is_zero())
    }

    /// Reduces at `v`. Vanishing denominators are first matched with
    /// proportional vanishing numerators (`sinh(cL)/sinh(L) → c` as `L → 0`);
    /// any left over are resolved along `direction` if given, otherwise they
    /// are poles.
    fn reduce(&self, v: &VogelParams, direction: Option<&VogelParams>) -> Result<Option<Reduced>> {
        let s = self.simplified();
        if s.is_identically_zero() {
            return Ok(None);
        }
        let mut coefficient = if s.negative { -Rational::one() } else { Rational::one() };
        let mut nums: Vec<(LinearForm, Rational)> = s.numerators.iter().map(|&l| (l, l.eval(v))).collect();
        let mut dens: Vec<(LinearForm, Rational)> = Vec::new();
        let mut pending: Vec<LinearForm> = Vec::new();
        for &d in &s.denominators {
            let val = d.eval(v);
            if !val.is_zero() {
                dens.push((d, val));
                continue;
            }
            let matched = nums.iter().position(|(n, nv)| nv.is_zero() && n.ratio_to(d).is_some());
            match matched {
                Some(i) => {
                    let (n, _) = nums.swap_remove(i);
                    coefficient *= n.ratio_to(d).expect("proportional");
                }
                None => pending.push(d),
            }
        }

        let vanishing_nums: Vec<LinearForm> =
            nums.iter().filter(|(_, nv)| nv.is_zero()).map(|(n, _)| *n).collect();
        if pending.is_empty() {
            if !vanishing_nums.is_empty() {
                return Ok(None);
            }
        } else {
            let Some(dir) = direction else {
                return Err(Error::PoleAtParameters { form: pending[0], at: v.to_string() });
            };
            let mut slope = Rational::one();
            for &d in &pending {
                let dd = d.eval(dir);
                if dd.is_zero() {
                    return Err(Error::PoleAtParameters { form: d, at: v.to_string() });
                }
                slope /= dd;
            }
            if vanishing_nums.len() > pending.len() {
                return Ok(None);
            }
            for &n in &vanishing_nums {
                let nd = n.eval(dir);
                if nd.is_zero() {
                    return Ok(None);
                }
                slope *= nd;
            }
            if vanishing_nums.len() < pending.len() {
                return Err(Error::PoleAtParameters { form: pending[vanishing_nums.len()], at: v.to_string() });
            }
            coefficient *= slope;
            nums.retain(|(_, nv)| !nv.is_zero());
        }
        debug_assert_eq!(nums.len(), dens.len());
        let pairs = nums.into_iter().zip(dens).map(|((_, n), (_, d))| (n, d)).collect();
        Ok(Some(Reduced { coefficient, pairs }))
    }

    fn series_of(reduced: Option<Reduced>, order: usize) -> Result<PowerSeries> {
        let Some(r) = reduced else {
            return Ok(PowerSeries::zero(order));
        };
        let mut acc = PowerSeries::constant(r.coefficient, order);
        for (n, d) in &r.pairs {
            if n != d {
                acc = &acc * &sinh_ratio_series(n, d, order)?;
            }
        }
        Ok(acc)
    }

    fn dimension_of(reduced: Option<Reduced>) -> Rational {
        match reduced {
            None => Rational::zero(),
            Some(r) => r.pairs.iter().fold(r.coefficient, |acc, (n, d)| acc * n / d),
        }
    }

    /// Exact series at `v`; a denominator vanishing at `v` that no
    /// proportional numerator cancels is reported as a pole.
    pub fn series(&self, v: &VogelParams, order: usize) -> Result<PowerSeries> {
        Self::series_of(self.reduce(v, None)?, order)
    }

    /// The limit of the series as `v + ε·direction → v`.
    pub fn series_on_line(&self, v: &VogelParams, direction: &VogelParams, order: usize) -> Result<PowerSeries> {
        Self::series_of(self.reduce(v, Some(direction))?, order)
    }

    /// Constant term of [`Self::series`].
    pub fn dimension(&self, v: &VogelParams) -> Result<Rational> {
        Ok(Self::dimension_of(self.reduce(v, None)?))
    }

    pub fn dimension_on_line(&self, v: &VogelParams, direction: &VogelParams) -> Result<Rational> {
        Ok(Self::dimension_of(self.reduce(v, Some(direction))?))
    }

    /// Direct floating-point evaluation at real parameters and `x ≠ 0`.
    pub fn value_f64(&self, v: [f64; 3], x: f64) -> Result<f64> {
        let s = self.simplified();
        let sign = if s.negative { -1.0 } else { 1.0 };
        s.numerators.iter().zip(&s.denominators).try_fold(sign, |acc, (n, d)| {
            let den = (d.eval_f64(v) * x / 4.0).sinh();
            if den == 0.0 || !den.is_finite() {
                return Err(Error::PoleAtX { x });
            }
            Ok(acc * (n.eval_f64(v) * x / 4.0).sinh() / den)
        })
    }

    /// Floating-point evaluation at exact parameters, after the same
    /// reduction as [`Self::series`].
    pub fn value_at(&self, v: &VogelParams, x: f64) -> Result<f64> {
        let Some(r) = self.reduce(v, None)? else {
            return Ok(0.0);
        };
        r.pairs.iter().try_fold(rational::to_f64(&r.coefficient), |acc, (n, d)| {
            let den = (rational::to_f64(d) * x / 4.0).sinh();
            if den == 0.0 || !den.is_finite() {
                return Err(Error::PoleAtX { x });
            }
            Ok(acc * (rational::to_f64(n) * x / 4.0).sinh() / den)
        })
    }

    /// Smallest `|D(v)|` over the simplified denominators.
    pub fn min_abs_denominator(&self, v: [f64; 3]) -> f64 {
        self.simplified().denominators.iter().map(|d| d.eval_f64(v).abs()).fold(f64::INFINITY, f64::min)
    }

    /// Denominator forms left after cancellation.
    pub fn denominator_forms(&self) -> Vec<LinearForm> {
        self.simplified().denominators
    }
}

impl fmt::Display for SinhProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        let mut first = true;
        for (n, d) in self.numerators.iter().zip(&self.denominators) {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "[{n}|{d}]")?;
            first = false;
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}
