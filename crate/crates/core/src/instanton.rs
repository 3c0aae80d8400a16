//! One-instanton sums `Σₙ e^{nσ(ε₁+ε₂)} χ_{nθ}(xρ)` built from universal
//! Cartan-power characters.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::universal::formulas::cartan_power;
use crate::universal::{SinhProduct, VogelParams};
use crate::DEFAULT_ORDER;

/// Relative size of the last retained series term at which evaluation stops.
pub const SERIES_TAIL_TOLERANCE: f64 = 1e-12;
/// Highest truncation order tried before falling back to direct evaluation.
pub const MAX_SERIES_ORDER: usize = 80;
/// `|last term| / |partial sum|` below which a table is flagged converged.
pub const CONVERGENCE_RATIO: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstantonParams {
    pub eps1: f64,
    pub eps2: f64,
    /// Expansion parameter of the instanton sum.
    pub sigma_n: f64,
    /// Coordinate along the Weyl line.
    pub x: f64,
    pub n_max: u32,
}

impl InstantonParams {
    pub fn new(eps1: f64, eps2: f64, sigma_n: f64, x: f64, n_max: u32) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::InvalidInstanton("n_max must be at least 1".into()));
        }
        if !(eps1.is_finite() && eps2.is_finite() && sigma_n.is_finite()) {
            return Err(Error::InvalidInstanton("ε₁, ε₂ and σ must be finite".into()));
        }
        if !x.is_finite() {
            return Err(Error::PoleAtX { x });
        }
        Ok(Self { eps1, eps2, sigma_n, x, n_max })
    }

    /// `e^{nσ(ε₁+ε₂)}`.
    pub fn weight(&self, n: u32) -> f64 {
        (n as f64 * self.sigma_n * (self.eps1 + self.eps2)).exp()
    }
}

/// Value at `x` of a character, through its exact series with the order
/// doubled until the last nonzero retained term is below
/// [`SERIES_TAIL_TOLERANCE`] relative to the sum. Past
/// [`MAX_SERIES_ORDER`] the reduced sinh product is evaluated directly.
pub fn eval_character(formula: &SinhProduct, v: &VogelParams, x: f64) -> Result<f64> {
    let mut order = DEFAULT_ORDER;
    while order <= MAX_SERIES_ORDER {
        let series = formula.series(v, order)?;
        let value = series.eval_f64(x);
        let tail = series
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .find(|(_, c)| !c.is_zero())
            .map_or(0.0, |(k, c)| (crate::rational::to_f64(c) * x.powi(k as i32)).abs());
        if tail <= SERIES_TAIL_TOLERANCE * value.abs() || (tail == 0.0 && value == 0.0) {
            return Ok(value);
        }
        order *= 2;
    }
    formula.value_at(v, x)
}

/// The `n`-th summand `e^{nσ(ε₁+ε₂)} χ_{nθ}(xρ)`.
pub fn one_instanton_term(v: &VogelParams, ip: &InstantonParams, n: u32) -> Result<f64> {
    if n == 0 || n > ip.n_max {
        return Err(Error::InvalidInstanton(format!("term index {n} outside 1..={}", ip.n_max)));
    }
    Ok(ip.weight(n) * eval_character(&cartan_power(n), v, ip.x)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstantonRow {
    pub n: u32,
    pub term: f64,
    pub partial_sum: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstantonTermTable {
    pub rows: Vec<InstantonRow>,
    pub converged: bool,
}

impl InstantonTermTable {
    pub fn sum(&self) -> f64 {
        self.rows.last().map_or(0.0, |r| r.partial_sum)
    }
}

/// Terms `n = 1..=n_max` with running partial sums.
pub fn one_instanton_sum(v: &VogelParams, ip: &InstantonParams) -> Result<InstantonTermTable> {
    let terms: Vec<f64> =
        (1..=ip.n_max).into_par_iter().map(|n| one_instanton_term(v, ip, n)).collect::<Result<_>>()?;
    let mut partial = 0.0;
    let rows: Vec<InstantonRow> = terms
        .into_iter()
        .zip(1..)
        .map(|(term, n)| {
            partial += term;
            InstantonRow { n, term, partial_sum: partial }
        })
        .collect();
    let last = rows.last().expect("n_max ≥ 1");
    let converged = last.partial_sum != 0.0 && (last.term / last.partial_sum).abs() < CONVERGENCE_RATIO;
    Ok(InstantonTermTable { rows, converged })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universal::formulas::adjoint;
    use crate::universal::{vogel_params, AlgebraId};

    #[test]
    fn rejects_bad_params() {
        assert!(matches!(InstantonParams::new(0.1, 0.2, -1.0, 0.5, 0), Err(Error::InvalidInstanton(_))));
        assert!(matches!(InstantonParams::new(0.1, 0.2, -1.0, f64::NAN, 3), Err(Error::PoleAtX { .. })));
    }

    #[test]
    fn first_term_is_weighted_adjoint() {
        let v = vogel_params(AlgebraId::A(5)).unwrap();
        let ip = InstantonParams::new(0.3, -0.1, 0.7, 0.4, 3).unwrap();
        let t1 = one_instanton_term(&v, &ip, 1).unwrap();
        let f = adjoint().value_f64(v.to_f64(), 0.4).unwrap();
        assert!((t1 - (0.7f64 * 0.2).exp() * f).abs() < 1e-10 * t1.abs());
    }

    #[test]
    fn zero_exponent_gives_raw_dimensions() {
        let v = vogel_params(AlgebraId::A(5)).unwrap();
        let ip = InstantonParams::new(0.0, 0.0, 2.0, 0.0, 2).unwrap();
        assert_eq!(one_instanton_term(&v, &ip, 1).unwrap(), 35.0);
        assert_eq!(one_instanton_term(&v, &ip, 2).unwrap(), 405.0);
    }

    #[test]
    fn partial_sums_are_prefix_sums() {
        let v = vogel_params(AlgebraId::G2).unwrap();
        let ip = InstantonParams::new(0.1, 0.2, -3.0, 0.3, 6).unwrap();
        let table = one_instanton_sum(&v, &ip).unwrap();
        assert_eq!(table.rows.len(), 6);
        let mut acc = 0.0;
        for (row, n) in table.rows.iter().zip(1..) {
            let term = one_instanton_term(&v, &ip, n).unwrap();
            acc += term;
            assert_eq!(row.n, n);
            assert_eq!(row.term, term);
            assert_eq!(row.partial_sum, acc);
        }
        let single = InstantonParams { n_max: 1, ..ip };
        let one = one_instanton_sum(&v, &single).unwrap();
        assert_eq!(one.rows.len(), 1);
        assert_eq!(one.sum(), one.rows[0].term);
    }

    #[test]
    fn strongly_damped_sum_converges() {
        let v = vogel_params(AlgebraId::G2).unwrap();
        let ip = InstantonParams::new(1.0, 1.0, -10.0, 0.2, 8).unwrap();
        assert!(one_instanton_sum(&v, &ip).unwrap().converged);
    }
}
