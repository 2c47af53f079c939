//! Greedy, lazy and intermediate digit extraction.
//!
//! Each algorithm iterates a piecewise map on `I` built from the inverse
//! contractions and reads off which branch it used. The branch is picked by
//! a threshold: greedy takes 1 iff `x ≥ β₁`, lazy takes 1 iff
//! `x > β₀β₁/(1−β₁)`, intermediate takes 1 iff `x ≥ α`.

use std::fmt;

use crate::error::{Error, Result};
use crate::expansion::BasePair;
use crate::numerics::{Interval, Scalar};
use crate::sequences::{Digit, DigitWord};

#[derive(Clone, Debug, PartialEq)]
pub enum AlgorithmKind<T> {
    Greedy,
    Lazy,
    /// Threshold `α` strictly inside the overlap `(β₁, β₀β₁/(1−β₁))`.
    Intermediate(T),
}

impl<T: Scalar> fmt::Display for AlgorithmKind<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgorithmKind::Greedy => f.write_str("greedy"),
            AlgorithmKind::Lazy => f.write_str("lazy"),
            AlgorithmKind::Intermediate(alpha) => write!(f, "intermediate(alpha = {})", alpha.render()),
        }
    }
}

/// Digits and the orbit `[x, R(x), …, Rⁿ(x)]` that produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct Expansion<T> {
    pub digits: DigitWord,
    pub orbit: Vec<T>,
}

impl<T: Scalar> Expansion<T> {
    /// `Rⁿ(x)`; the composed contractions of `digits` map it back to `x`.
    pub fn remainder(&self) -> &T {
        self.orbit.last().expect("orbit always holds the starting point")
    }
}

fn check_kind<T: Scalar>(bases: &BasePair<T>, kind: &AlgorithmKind<T>) -> Result<()> {
    if let AlgorithmKind::Intermediate(alpha) = kind {
        let allowed = Interval::open(bases.beta1().clone(), bases.overlap_hi());
        if !allowed.contains(alpha) {
            return Err(Error::OutOfDomain {
                value: alpha.render(),
                domain: format!("the threshold range {allowed}"),
            });
        }
    }
    Ok(())
}

fn choose<T: Scalar>(bases: &BasePair<T>, kind: &AlgorithmKind<T>, x: &T) -> Digit {
    let one = match kind {
        AlgorithmKind::Greedy => *x >= *bases.beta1(),
        AlgorithmKind::Lazy => *x > bases.overlap_hi(),
        AlgorithmKind::Intermediate(alpha) => x >= alpha,
    };
    one as Digit
}

/// One application of the algorithm's map: the digit read and the image.
pub fn step<T: Scalar>(bases: &BasePair<T>, kind: &AlgorithmKind<T>, x: &T) -> Result<(Digit, T)> {
    check_kind(bases, kind)?;
    bases.check_domain(x)?;
    let d = choose(bases, kind, x);
    Ok((d, bases.invert_unchecked(d, x)))
}

/// The first `depth` digits of the expansion of `x` along with the orbit.
pub fn expand<T: Scalar>(bases: &BasePair<T>, kind: &AlgorithmKind<T>, x: &T, depth: usize) -> Result<Expansion<T>> {
    check_kind(bases, kind)?;
    bases.check_domain(x)?;
    let mut digits = DigitWord::empty();
    let mut orbit = Vec::with_capacity(depth + 1);
    orbit.push(x.clone());
    let mut current = x.clone();
    for _ in 0..depth {
        let d = choose(bases, kind, &current);
        current = bases.invert_unchecked(d, &current);
        if !T::EXACT {
            // rounding can push the orbit a hair outside I
            current = T::max_of(T::zero(), T::min_of(current, bases.interval_max()));
        }
        digits.push(d);
        orbit.push(current.clone());
    }
    Ok(Expansion { digits, orbit })
}

pub fn digits<T: Scalar>(bases: &BasePair<T>, kind: &AlgorithmKind<T>, x: &T, depth: usize) -> Result<DigitWord> {
    expand(bases, kind, x, depth).map(|e| e.digits)
}

pub fn orbit<T: Scalar>(bases: &BasePair<T>, kind: &AlgorithmKind<T>, x: &T, depth: usize) -> Result<Vec<T>> {
    expand(bases, kind, x, depth).map(|e| e.orbit)
}
