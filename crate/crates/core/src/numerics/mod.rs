//! Scalar abstraction, exact rational text forms and intervals with
//! explicit endpoint openness.

mod interval;
mod rational;
mod scalar;

pub use interval::Interval;
pub use rational::{parse_rational, render_rational};
pub use scalar::Scalar;
