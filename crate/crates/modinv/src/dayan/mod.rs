//! Generalized Dayan division engine: extended modular inverses from a
//! single remainder/gamma trace, plus the series formulas derived from
//! the same recurrences.

mod series;
mod strategy;
mod trace;

pub use series::{
    convergent_inverse_check, inverse_series_first_type, inverse_series_first_type_condensed,
    inverse_series_second_type, remainder_chain, AlternatingSeries, RemainderChain,
};
pub use strategy::SignStrategy;
pub use trace::{
    ext_inverse_sum_f, ext_inverse_sum_fraction, ext_mod_inverse, ext_mod_inverse_with_trace,
    run_trace, DayanStep, DayanTrace, ExtInverseOutcome, Termination,
};

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DayanError {
    #[error("trace inputs need 0 < q < p and 0 <= a < p, got p={p} q={q} a={a}")]
    InvalidTraceInputs { p: BigInt, q: BigInt, a: BigInt },
    #[error("series inputs need 1 < q < p, got p={p} q={q}")]
    InvalidSeriesInputs { p: BigInt, q: BigInt },
    #[error("explicit sign sequence exhausted at step {step}")]
    ExplicitSignsExhausted { step: usize },
    #[error("no solution: gcd={gcd} does not divide the target")]
    NoSolution { gcd: BigInt },
    #[error("not coprime, gcd={gcd}")]
    NotCoprime { gcd: BigInt },
    #[error("modulus {modulus} must exceed 1")]
    ModulusTooSmall { modulus: BigInt },
    #[error("multiplier a must be nonzero")]
    ZeroMultiplier,
}
