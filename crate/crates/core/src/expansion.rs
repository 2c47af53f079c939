//! The base pair, the contractions `T₀(x) = β₀x` and `T₁(x) = β₁x + β₁`
//! on `I = [0, β₁/(1−β₁)]`, and the projection from digit sequences to
//! points of `I`.

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{Interval, Scalar};
use crate::sequences::{Digit, DigitWord, EventuallyPeriodic};

/// Words shorter than this are split across rayon tasks in sweeps.
const PARALLEL_LEVELS: usize = 6;

/// Two bases with `1/2 < β₁ ≤ β₀ < 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct BasePair<T> {
    beta0: T,
    beta1: T,
}

/// The affine map `x ↦ weight·x + offset` obtained by composing contractions.
#[derive(Clone, Debug, PartialEq)]
pub struct Affine<T> {
    pub weight: T,
    pub offset: T,
}

impl<T: Scalar> Affine<T> {
    pub fn apply(&self, x: &T) -> T {
        self.weight.clone() * x.clone() + self.offset.clone()
    }
}

/// Two-sided enclosure of the projection of a sequence from a prefix.
#[derive(Clone, Debug, PartialEq)]
pub struct Enclosure<T> {
    pub value: T,
    pub tail_bound: T,
}

/// Hypotheses under which the existence theorems apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `β₁² + β₀ > 1`: every interior point has a continuum of expansions.
    Continuum,
    /// `β₀(1 + β₁) < 1`: countably many points with a unique expansion.
    CountableUnique,
    /// `β₀(1 + 2β₁ − β₀β₁) < 1`: uncountably many, positive dimension.
    UncountableUnique,
}

/// Exact truth values of the three regime inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RegimeReport {
    pub continuum_all: bool,
    pub countable_unique: bool,
    pub uncountable_unique: bool,
}

impl<T: Scalar> BasePair<T> {
    pub fn new(beta0: T, beta1: T) -> Result<Self> {
        let half = T::from_ratio(1, 2);
        let violated = if beta1 <= half {
            Some("beta1 > 1/2")
        } else if beta1 > beta0 {
            Some("beta1 <= beta0")
        } else if beta0 >= T::one() {
            Some("beta0 < 1")
        } else {
            None
        };
        match violated {
            Some(rule) => Err(Error::InvalidBasePair(format!(
                "beta0 = {}, beta1 = {} violates {rule} (need 1/2 < beta1 <= beta0 < 1)",
                beta0.render(),
                beta1.render()
            ))),
            None => Ok(BasePair { beta0, beta1 }),
        }
    }

    pub fn beta0(&self) -> &T {
        &self.beta0
    }

    pub fn beta1(&self) -> &T {
        &self.beta1
    }

    pub fn product(&self) -> T {
        self.beta0.clone() * self.beta1.clone()
    }

    /// Right endpoint of `I`, `β₁/(1−β₁)`.
    pub fn interval_max(&self) -> T {
        self.beta1.clone() / (T::one() - self.beta1.clone())
    }

    /// Right endpoint of `T₀(I)`, `β₀β₁/(1−β₁)`.
    pub fn overlap_hi(&self) -> T {
        self.beta0.clone() * self.interval_max()
    }

    /// `I = [0, β₁/(1−β₁)]`.
    pub fn domain(&self) -> Interval<T> {
        Interval::closed(T::zero(), self.interval_max())
    }

    /// `J`, the interior of `I`.
    pub fn interior(&self) -> Interval<T> {
        Interval::open(T::zero(), self.interval_max())
    }

    /// `T₀(I) ∩ T₁(I) = [β₁, β₀β₁/(1−β₁)]`.
    pub fn overlap(&self) -> Interval<T> {
        Interval::closed(self.beta1.clone(), self.overlap_hi())
    }

    pub(crate) fn check_domain(&self, x: &T) -> Result<()> {
        if self.domain().contains(x) {
            Ok(())
        } else {
            Err(Error::OutOfDomain { value: x.render(), domain: format!("I = {}", self.domain()) })
        }
    }

    pub(crate) fn contract_unchecked(&self, digit: Digit, x: &T) -> T {
        match digit {
            0 => self.beta0.clone() * x.clone(),
            _ => self.beta1.clone() * x.clone() + self.beta1.clone(),
        }
    }

    pub(crate) fn invert_unchecked(&self, digit: Digit, x: &T) -> T {
        match digit {
            0 => x.clone() / self.beta0.clone(),
            _ => x.clone() / self.beta1.clone() - T::one(),
        }
    }

    /// `T_d(x)` for `x ∈ I`.
    pub fn apply_contraction(&self, digit: Digit, x: &T) -> Result<T> {
        self.check_domain(x)?;
        Ok(self.contract_unchecked(digit, x))
    }

    /// `T_d⁻¹(x)` for `x ∈ T_d(I)`.
    pub fn invert_contraction(&self, digit: Digit, x: &T) -> Result<T> {
        let image = self.contraction_image(digit);
        if !image.contains(x) {
            return Err(Error::OutOfDomain {
                value: x.render(),
                domain: format!("T{digit}(I) = {image}"),
            });
        }
        Ok(self.invert_unchecked(digit, x))
    }

    /// `T_d(I)`.
    pub fn contraction_image(&self, digit: Digit) -> Interval<T> {
        match digit {
            0 => Interval::closed(T::zero(), self.overlap_hi()),
            _ => Interval::closed(self.beta1.clone(), self.interval_max()),
        }
    }

    /// `T_{w₁} ∘ … ∘ T_{wₙ}` as an affine map.
    pub fn compose(&self, word: &DigitWord) -> Affine<T> {
        let mut weight = T::one();
        let mut offset = T::zero();
        for &d in word.digits() {
            if d == 0 {
                weight = weight * self.beta0.clone();
            } else {
                weight = weight * self.beta1.clone();
                offset = offset + weight.clone();
            }
        }
        Affine { weight, offset }
    }

    /// `T_{w₁} ∘ … ∘ T_{wₙ}(I)`.
    pub fn cylinder_interval(&self, word: &DigitWord) -> Interval<T> {
        let Affine { weight, offset } = self.compose(word);
        let hi = offset.clone() + weight * self.interval_max();
        Interval::closed(offset, hi)
    }

    /// `T_{w₁} ∘ … ∘ T_{wₙ}(r)` for `r ∈ I`.
    pub fn project_prefix_with_remainder(&self, word: &DigitWord, remainder: &T) -> Result<T> {
        self.check_domain(remainder)?;
        Ok(self.compose(word).apply(remainder))
    }

    /// Partial sum of the first `n` terms and the bound on the remaining tail.
    pub fn project_truncated(&self, sequence: &EventuallyPeriodic, n: usize) -> Enclosure<T> {
        self.enclose_prefix(&sequence.prefix(n))
    }

    pub fn enclose_prefix(&self, prefix: &DigitWord) -> Enclosure<T> {
        let Affine { weight, offset } = self.compose(prefix);
        Enclosure { value: offset, tail_bound: weight * self.interval_max() }
    }

    /// The exact projection of `u·(v)^ω`.
    ///
    /// The periodic tail is the fixed point `d/(1−c)` of the period's affine
    /// map `x ↦ cx + d`, pulled forward through the preperiod.
    pub fn project_eventually_periodic(&self, sequence: &EventuallyPeriodic) -> T {
        let Affine { weight, offset } = self.compose(sequence.period());
        let tail = offset / (T::one() - weight);
        self.compose(sequence.preperiod()).apply(&tail)
    }

    /// `β₀ᵘ·β₁/(1−β₁)`: sequences agreeing on `u` digits project closer than this.
    pub fn continuity_modulus(&self, agreeing: usize) -> T {
        self.beta0.pow(agreeing as u32) * self.interval_max()
    }

    /// Whether the `2ⁿ` cylinders of depth `n` cover `I` exactly.
    pub fn coverage_check(&self, depth: usize) -> bool {
        let mut cylinders = Vec::with_capacity(1 << depth.min(24));
        self.collect_cylinders(T::one(), T::zero(), depth, &mut cylinders);
        cylinders.sort_by(|a, b| {
            a.lo().partial_cmp(&b.lo()).unwrap_or(std::cmp::Ordering::Equal)
        });
        let mut covered = Interval::Empty;
        for c in &cylinders {
            match covered.union_connected(c) {
                Ok(next) => covered = next,
                Err(_) => return false,
            }
        }
        covered == self.domain()
    }

    fn collect_cylinders(&self, weight: T, offset: T, remaining: usize, out: &mut Vec<Interval<T>>) {
        if remaining == 0 {
            let hi = offset.clone() + weight * self.interval_max();
            out.push(Interval::closed(offset, hi));
            return;
        }
        let zero = (weight.clone() * self.beta0.clone(), offset.clone());
        let w1 = weight * self.beta1.clone();
        let one = (w1.clone(), offset + w1);
        if remaining > PARALLEL_LEVELS {
            let (mut left, right) = rayon::join(
                || {
                    let mut v = Vec::new();
                    self.collect_cylinders(zero.0.clone(), zero.1.clone(), remaining - 1, &mut v);
                    v
                },
                || {
                    let mut v = Vec::new();
                    self.collect_cylinders(one.0.clone(), one.1.clone(), remaining - 1, &mut v);
                    v
                },
            );
            out.append(&mut left);
            out.extend(right);
        } else {
            self.collect_cylinders(zero.0, zero.1, remaining - 1, out);
            self.collect_cylinders(one.0, one.1, remaining - 1, out);
        }
    }

    /// `β₁² + β₀`, compared against 1 by [`Regime::Continuum`].
    pub fn continuum_quantity(&self) -> T {
        self.beta1.clone() * self.beta1.clone() + self.beta0.clone()
    }

    /// `β₀(1 + β₁)`.
    pub fn countable_quantity(&self) -> T {
        self.beta0.clone() * (T::one() + self.beta1.clone())
    }

    /// `β₀(1 + 2β₁ − β₀β₁)`.
    pub fn uncountable_quantity(&self) -> T {
        let two = T::one() + T::one();
        self.beta0.clone() * (T::one() + two * self.beta1.clone() - self.product())
    }

    /// `β₁(1 + 2β₀ − β₀β₁)`: the inequality behind the smallest one-led
    /// projection from the alternating set clearing the overlap.
    pub fn extremal_quantity(&self) -> T {
        let two = T::one() + T::one();
        self.beta1.clone() * (T::one() + two * self.beta0.clone() - self.product())
    }

    pub fn regime_report(&self) -> RegimeReport {
        let report = RegimeReport {
            continuum_all: self.continuum_quantity() > T::one(),
            countable_unique: self.countable_quantity() < T::one(),
            uncountable_unique: self.uncountable_quantity() < T::one(),
        };
        assert!(
            !(report.continuum_all && report.countable_unique),
            "continuum and countable-unique regimes are mutually exclusive for valid bases"
        );
        report
    }

    /// Fails with the violated inequality, rendered exactly, when `regime`
    /// does not hold. The uncountable regime also demands the extremal
    /// inequality `β₁(1 + 2β₀ − β₀β₁) < 1`.
    pub fn require(&self, regime: Regime) -> Result<()> {
        let fail = |name: &str, relation: &str, value: T| {
            Err(Error::Regime(format!(
                "{name} {relation} 1 does not hold ({name} = {})",
                value.render()
            )))
        };
        match regime {
            Regime::Continuum => {
                let v = self.continuum_quantity();
                if v > T::one() {
                    Ok(())
                } else {
                    fail("beta1^2 + beta0", ">", v)
                }
            }
            Regime::CountableUnique => {
                let v = self.countable_quantity();
                if v < T::one() {
                    Ok(())
                } else {
                    fail("beta0*(1 + beta1)", "<", v)
                }
            }
            Regime::UncountableUnique => {
                let v = self.uncountable_quantity();
                if v >= T::one() {
                    return fail("beta0*(1 + 2*beta1 - beta0*beta1)", "<", v);
                }
                let e = self.extremal_quantity();
                if e >= T::one() {
                    return fail("beta1*(1 + 2*beta0 - beta0*beta1)", "<", e);
                }
                Ok(())
            }
        }
    }
}

impl BasePair<BigRational> {
    pub fn parse(beta0: &str, beta1: &str) -> Result<Self> {
        Self::new(crate::numerics::parse_rational(beta0)?, crate::numerics::parse_rational(beta1)?)
    }

    /// The same pair in another scalar type, without revalidation.
    pub fn approximate<U: Scalar>(&self) -> BasePair<U> {
        BasePair { beta0: U::from_rational(&self.beta0), beta1: U::from_rational(&self.beta1) }
    }
}
