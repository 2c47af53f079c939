//! Binary expansions of real numbers with two non-integer bases.
//!
//! A digit 0 contracts by `β₀`, a digit 1 contracts by `β₁` and shifts by
//! `β₁`; a sequence `s` names the point
//! `π(s) = Σ sᵢ β₀^{#zeros in s₁..sᵢ} β₁^{#ones in s₁..sᵢ}` of
//! `I = [0, β₁/(1−β₁)]`. The crate computes greedy, lazy and intermediate
//! expansions, enumerates and counts all expansions to a finite depth,
//! decides uniqueness of eventually periodic expansions exactly, and checks
//! the existence results for continua and univoque sets.
//!
//! All algorithms are generic over [`Scalar`]; the exact instantiation is
//! [`ExactRational`] and every correctness claim is made for it. The float
//! aliases exist for fast exploration away from interval boundaries.

pub mod analysis;
pub mod cli;
pub mod digits;
mod error;
pub mod expansion;
pub mod numerics;
pub mod sequences;

pub use error::{Error, Result};
pub use expansion::{Affine, BasePair, Enclosure, Regime, RegimeReport};
pub use numerics::{parse_rational, render_rational, Interval, Scalar};
pub use sequences::{Digit, DigitWord, EventuallyPeriodic};

/// Arbitrary-precision rational, the exact scalar.
pub type ExactRational = num_rational::BigRational;
pub type RatInterval = Interval<ExactRational>;
pub type ExactBasePair = BasePair<ExactRational>;

pub type F64Interval = Interval<f64>;
pub type F64BasePair = BasePair<f64>;
pub type F32BasePair = BasePair<f32>;
