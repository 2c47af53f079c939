use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::expansion::BasePair;
use crate::numerics::Scalar;
use crate::sequences::{Digit, DigitWord};

/// Levels of the enumeration tree handed to rayon as separate tasks.
const PARALLEL_LEVELS: usize = 8;

/// Counts are `u128`, so depth is bounded by its width.
pub const MAX_COUNT_DEPTH: usize = 127;

/// A length-`n` prefix of some expansion of `x` together with the pullback
/// `r = (T_{w₁} ∘ … ∘ T_{wₙ})⁻¹(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionNode<T> {
    pub prefix: DigitWord,
    pub pullback: T,
}

/// Digits `d` with `x ∈ T_d(I)`: 0 below the overlap, 1 above it, both inside.
pub fn allowed_digits<T: Scalar>(bases: &BasePair<T>, x: &T) -> Result<&'static [Digit]> {
    bases.check_domain(x)?;
    Ok(allowed_unchecked(bases, x))
}

fn allowed_unchecked<T: Scalar>(bases: &BasePair<T>, x: &T) -> &'static [Digit] {
    if x < bases.beta1() {
        &[0]
    } else if *x > bases.overlap_hi() {
        &[1]
    } else {
        &[0, 1]
    }
}

/// All words `w` of length `depth` with `x ∈ T_w(I)`, in lexicographic order.
pub fn enumerate_prefixes<T: Scalar>(bases: &BasePair<T>, x: &T, depth: usize) -> Result<Vec<ExpansionNode<T>>> {
    bases.check_domain(x)?;
    let mut out = Vec::new();
    descend(bases, DigitWord::empty(), x.clone(), depth, &mut out);
    Ok(out)
}

fn descend<T: Scalar>(
    bases: &BasePair<T>,
    prefix: DigitWord,
    pullback: T,
    remaining: usize,
    out: &mut Vec<ExpansionNode<T>>,
) {
    if remaining == 0 {
        out.push(ExpansionNode { prefix, pullback });
        return;
    }
    let digits = allowed_unchecked(bases, &pullback);
    let child = |d: Digit| {
        let mut p = prefix.clone();
        p.push(d);
        (p, bases.invert_unchecked(d, &pullback))
    };
    if digits.len() == 2 && prefix.len() < PARALLEL_LEVELS && remaining > 4 {
        let (zero, one) = (child(0), child(1));
        let (mut left, right) = rayon::join(
            || {
                let mut v = Vec::new();
                descend(bases, zero.0, zero.1, remaining - 1, &mut v);
                v
            },
            || {
                let mut v = Vec::new();
                descend(bases, one.0, one.1, remaining - 1, &mut v);
                v
            },
        );
        out.append(&mut left);
        out.extend(right);
    } else {
        for &d in digits {
            let (p, r) = child(d);
            descend(bases, p, r, remaining - 1, out);
        }
    }
}

/// The number of length-`depth` expansion prefixes of `x`.
///
/// Walks the tree level by level, merging nodes with equal pullbacks. A
/// pullback after `a` zeros and `b` ones is `N / (D·p₀ᵃ·p₁ᵇ)` where
/// `x = X/D`, `β₀ = p₀/q₀` and `β₁ = p₁/q₁`, so nodes are keyed by the
/// integer pair `(a, N)` and no gcd is ever taken.
pub fn count_expansions(bases: &BasePair<BigRational>, x: &BigRational, depth: usize) -> Result<u128> {
    bases.check_domain(x)?;
    if depth > MAX_COUNT_DEPTH {
        return Err(Error::DepthCap { depth, cap: MAX_COUNT_DEPTH });
    }
    let (p0, q0) = (bases.beta0().numer().clone(), bases.beta0().denom().clone());
    let (p1, q1) = (bases.beta1().numer().clone(), bases.beta1().denom().clone());
    let d = x.denom().clone();
    // digit 0 allowed iff r ≤ p₀p₁ / (q₀(q₁ − p₁))
    let zero_factor = &q0 * (&q1 - &p1);
    let zero_bound = &p0 * &p1;

    let mut pow0 = vec![BigInt::from(1u8)];
    let mut pow1 = vec![BigInt::from(1u8)];
    for _ in 0..=depth {
        pow0.push(pow0.last().unwrap() * &p0);
        pow1.push(pow1.last().unwrap() * &p1);
    }

    let mut level: HashMap<(usize, BigInt), u128> = HashMap::new();
    level.insert((0, x.numer().clone()), 1);
    for n in 0..depth {
        // scale[a] = D·p₀ᵃ·p₁ⁿ⁻ᵃ, the denominator shared by nodes with a zeros
        let scale: Vec<BigInt> = (0..=n).map(|a| &d * &pow0[a] * &pow1[n - a]).collect();
        let mut next: HashMap<(usize, BigInt), u128> = HashMap::with_capacity(level.len() * 2);
        for ((a, numer), count) in level {
            let s = &scale[a];
            if &numer * &zero_factor <= &zero_bound * s {
                *next.entry((a + 1, &numer * &q0)).or_insert(0) += count;
            }
            let lifted = &numer * &q1;
            let one_bound = &p1 * s;
            if lifted >= one_bound {
                let child = lifted - one_bound;
                debug_assert!(!child.is_negative());
                *next.entry((a, child)).or_insert(0) += count;
            }
        }
        level = next;
    }
    Ok(level.values().sum())
}
