//! The nested branching intervals `Λₙ` and the explicit construction of
//! many expansions from them.
//!
//! `Λ₀ = T₀(J) ∩ T₁(J)` is where both digits can be taken; `Λₙ₊₁` collects
//! points that reach `Λ₀` after at most `n + 1` inverse contractions. Under
//! `β₁² + β₀ > 1` every `Λₙ` is the open interval
//! `(β₀ⁿβ₁, (β₁ⁿ(β₀−1)+1)·β₁/(1−β₁))` and the `Λₙ` exhaust `J`.

use crate::error::{Error, Result};
use crate::expansion::{BasePair, Regime};
use crate::numerics::{Interval, Scalar};
use crate::sequences::{Digit, DigitWord};

pub fn lambda_interval_closed_form<T: Scalar>(bases: &BasePair<T>, n: usize) -> Result<Interval<T>> {
    bases.require(Regime::Continuum)?;
    Ok(closed_form(bases, n))
}

fn closed_form<T: Scalar>(bases: &BasePair<T>, n: usize) -> Interval<T> {
    let n = n as u32;
    let lo = bases.beta0().pow(n) * bases.beta1().clone();
    let hi = (bases.beta1().pow(n) * (bases.beta0().clone() - T::one()) + T::one()) * bases.interval_max();
    Interval::open(lo, hi)
}

/// `Λₙ` built by the recursion `Λₙ₊₁ = T₀(Λₙ) ∪ Λ₀ ∪ T₁(Λₙ)` with exact
/// interval unions.
pub fn lambda_interval_recursive<T: Scalar>(bases: &BasePair<T>, n: usize) -> Result<Interval<T>> {
    bases.require(Regime::Continuum)?;
    let interior = bases.interior();
    let zero = T::zero();
    let shift0 = interior.map_affine(bases.beta0(), &zero);
    let shift1 = interior.map_affine(bases.beta1(), bases.beta1());
    let base = shift0.intersect(&shift1);
    let mut current = base.clone();
    for _ in 0..n {
        let left = current.map_affine(bases.beta0(), &zero);
        let right = current.map_affine(bases.beta1(), bases.beta1());
        current = left.union_connected(&base)?.union_connected(&right)?;
    }
    Ok(current)
}

/// The least `n` with `x ∈ Λₙ`.
pub fn branching_depth<T: Scalar>(bases: &BasePair<T>, x: &T) -> Result<usize> {
    bases.require(Regime::Continuum)?;
    check_interior(bases, x)?;
    Ok(depth_unchecked(bases, x))
}

fn check_interior<T: Scalar>(bases: &BasePair<T>, x: &T) -> Result<()> {
    let interior = bases.interior();
    if interior.contains(x) {
        Ok(())
    } else {
        Err(Error::OutOfDomain { value: x.render(), domain: format!("J = {interior}") })
    }
}

fn depth_unchecked<T: Scalar>(bases: &BasePair<T>, x: &T) -> usize {
    let max = bases.interval_max();
    let mut pow0 = T::one();
    let mut pow1 = T::one();
    for n in 0.. {
        let lo = pow0.clone() * bases.beta1().clone();
        let hi = (pow1.clone() * (bases.beta0().clone() - T::one()) + T::one()) * max.clone();
        if lo < *x && *x < hi {
            return n;
        }
        pow0 = pow0 * bases.beta0().clone();
        pow1 = pow1 * bases.beta1().clone();
    }
    unreachable!("the branching intervals exhaust the interior")
}

/// One node of a branching witness: a point of `J` and, unless it is a leaf,
/// the split that yields two expansions diverging after `prefix`.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchNode<T> {
    pub value: T,
    pub split: Option<Split<T>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Split<T> {
    /// Branching depth `k` of the node value.
    pub depth: usize,
    /// `s₁ … s_k`, leading the value into `Λ₀`.
    pub prefix: DigitWord,
    /// Continuations after digit 0 and digit 1 respectively.
    pub children: Box<[BranchNode<T>; 2]>,
}

impl<T: Scalar> BranchNode<T> {
    pub fn leaf_count(&self) -> usize {
        match &self.split {
            None => 1,
            Some(s) => s.children.iter().map(BranchNode::leaf_count).sum(),
        }
    }

    /// One expansion prefix per leaf; no word is a prefix of another.
    pub fn expansion_prefixes(&self) -> Vec<DigitWord> {
        let Some(split) = &self.split else {
            return vec![DigitWord::empty()];
        };
        let mut out = Vec::new();
        for (digit, child) in split.children.iter().enumerate() {
            for tail in child.expansion_prefixes() {
                let mut word = split.prefix.clone();
                word.push(digit as Digit);
                word.extend_from(&tail);
                out.push(word);
            }
        }
        out
    }
}

/// A binary tree of `splits` levels certifying `2^splits` pairwise
/// diverging expansion prefixes of `x`.
///
/// Each node descends from its value to `Λ₀` along `Λₙ`, preferring digit 0
/// when both inverse images stay in the next interval, then splits into the
/// two inverse images of the landing point.
pub fn branching_witness<T: Scalar>(bases: &BasePair<T>, x: &T, splits: usize) -> Result<BranchNode<T>> {
    bases.require(Regime::Continuum)?;
    check_interior(bases, x)?;
    build(bases, x.clone(), splits)
}

fn build<T: Scalar>(bases: &BasePair<T>, value: T, splits: usize) -> Result<BranchNode<T>> {
    check_interior(bases, &value).map_err(|_| Error::OutOfDomain {
        value: value.render(),
        domain: "the interior J (descent reached its boundary)".into(),
    })?;
    if splits == 0 {
        return Ok(BranchNode { value, split: None });
    }
    let depth = depth_unchecked(bases, &value);
    let mut prefix = DigitWord::empty();
    let mut y = value.clone();
    for level in (0..depth).rev() {
        let target = closed_form(bases, level);
        let next = [0, 1].into_iter().find_map(|d| {
            if !bases.contraction_image(d).contains(&y) {
                return None;
            }
            let pre = bases.invert_unchecked(d, &y);
            target.contains(&pre).then_some((d, pre))
        });
        let (d, pre) = next.ok_or_else(|| {
            Error::Regime(format!("no inverse image of {} lies in the next branching interval", y.render()))
        })?;
        prefix.push(d);
        y = pre;
    }
    let zero = build(bases, bases.invert_unchecked(0, &y), splits - 1)?;
    let one = build(bases, bases.invert_unchecked(1, &y), splits - 1)?;
    Ok(BranchNode { value, split: Some(Split { depth, prefix, children: Box::new([zero, one]) }) })
}
