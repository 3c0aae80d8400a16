//! Universal quantum dimensions of simple Lie algebras.
//!
//! Characters restricted to the Weyl line `xρ` are computed two ways: from
//! closed-form products of `sinh` ratios in Vogel's parameters `(α, β, γ)`
//! ([`universal`]), and from explicit root systems through the Weyl character
//! formula ([`rootsys`]). Everything is carried out as truncated power series
//! in `x` with exact rational coefficients ([`series`]), so identities between
//! characters can be checked for exact vanishing ([`identities`]).

pub mod appendix;
pub mod error;
pub mod identities;
pub mod instanton;
pub mod rational;
pub mod rootsys;
pub mod series;
pub mod universal;

pub use error::{Error, Result};
pub use rational::Rational;
pub use series::{sinh_ratio_series, PowerSeries};
pub use universal::{AlgebraId, LineId, Slot, VogelParams};

/// Truncation order used when the caller does not ask for one.
pub const DEFAULT_ORDER: usize = 20;
