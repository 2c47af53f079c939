//! Dimension of the attractor of `F = T₀∘T₁`, `G = T₁∘T₀`, the projection
//! of the alternating set `{01, 10}^ℕ`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::expansion::{BasePair, Regime};
use crate::numerics::{Interval, Scalar};

/// Deepest level at which [`box_count_estimate`] materializes the images.
pub const MAX_BOX_DEPTH: usize = 24;

/// `log(branches) / −log(ratio)`, the similarity dimension of a two-map
/// IFS with common contraction ratio `ratio = β₀β₁`.
#[derive(Clone, Debug, PartialEq)]
pub struct DimensionFormula<T> {
    pub branches: u32,
    pub ratio: T,
}

impl<T: Scalar> DimensionFormula<T> {
    /// Argument of the logarithm in the denominator, `1/ratio`.
    pub fn inverse_ratio(&self) -> T {
        T::one() / self.ratio.clone()
    }

    pub fn value(&self) -> f64 {
        (self.branches as f64).ln() / -self.ratio.to_f64().ln()
    }
}

impl DimensionFormula<BigRational> {
    /// The dimension as an exact rational, when it is one.
    ///
    /// For a rational ratio the value is rational exactly when
    /// `ratio = branches^(−j)` for a positive integer `j`, giving `1/j`.
    pub fn exact(&self) -> Option<BigRational> {
        let inverse = self.inverse_ratio();
        if !inverse.is_integer() || self.branches < 2 {
            return None;
        }
        let base = BigInt::from(self.branches);
        let mut power = BigInt::one();
        for j in 1u32.. {
            power *= &base;
            if power == *inverse.numer() {
                return Some(BigRational::new(BigInt::one(), BigInt::from(j)));
            }
            if power > *inverse.numer() {
                return None;
            }
        }
        None
    }
}

/// The formula, without checking that it applies.
pub fn dimension_formula<T: Scalar>(bases: &BasePair<T>) -> DimensionFormula<T> {
    DimensionFormula { branches: 2, ratio: bases.product() }
}

/// Hausdorff dimension of the alternating attractor.
///
/// Requires the uncountable-uniqueness regime, and checks the resulting
/// separation `F(J̄) ∩ G(J̄) = ∅` directly.
pub fn hausdorff_dimension<T: Scalar>(bases: &BasePair<T>) -> Result<DimensionFormula<T>> {
    bases.require(Regime::UncountableUnique)?;
    if !ifs_disjoint(bases, 1) {
        return Err(Error::Regime("the images F(J) and G(J) overlap".into()));
    }
    Ok(dimension_formula(bases))
}

/// Closure of the invariant interval, `[0, β₁/(1−β₀β₁)]`.
fn hull<T: Scalar>(bases: &BasePair<T>) -> Interval<T> {
    Interval::closed(T::zero(), bases.beta1().clone() / (T::one() - bases.product()))
}

/// Images of the hull under all `2^depth` compositions of `F` and `G`,
/// sorted by left endpoint.
pub fn ifs_images<T: Scalar>(bases: &BasePair<T>, depth: usize) -> Vec<Interval<T>> {
    let ratio = bases.product();
    let f_shift = ratio.clone();
    let g_shift = bases.beta1().clone();
    let hull = hull(bases);
    // (scale, offset) of each composed map
    let mut maps = vec![(T::one(), T::zero())];
    for _ in 0..depth {
        maps = maps
            .into_iter()
            .flat_map(|(scale, offset)| {
                let next = scale.clone() * ratio.clone();
                let f = (next.clone(), offset.clone() + scale.clone() * f_shift.clone());
                let g = (next, offset + scale * g_shift.clone());
                [f, g]
            })
            .collect();
    }
    let mut images: Vec<Interval<T>> = maps.iter().map(|(s, o)| hull.map_affine(s, o)).collect();
    images.sort_by(|a, b| a.lo().partial_cmp(&b.lo()).unwrap_or(std::cmp::Ordering::Equal));
    images
}

/// Whether the depth-`depth` images have pairwise disjoint interiors.
pub fn ifs_disjoint<T: Scalar>(bases: &BasePair<T>, depth: usize) -> bool {
    let images = ifs_images(bases, depth);
    images.windows(2).all(|pair| !pair[0].interiors_overlap(&pair[1]))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoxCount {
    pub depth: usize,
    /// Connected clusters of images after merging overlapping interiors.
    pub components: usize,
    pub box_width: f64,
    pub estimate: f64,
}

/// `log N / −log ε` for the `N` clusters of depth-`depth` images of width `ε`.
pub fn box_count_estimate<T: Scalar>(bases: &BasePair<T>, depth: usize) -> Result<BoxCount> {
    bases.require(Regime::UncountableUnique)?;
    if depth == 0 || depth > MAX_BOX_DEPTH {
        return Err(Error::DepthCap { depth, cap: MAX_BOX_DEPTH });
    }
    let images = ifs_images(bases, depth);
    let mut components = 0usize;
    let mut reach: Option<T> = None;
    for image in &images {
        let (lo, hi) = (image.lo().unwrap(), image.hi().unwrap());
        match &reach {
            Some(r) if lo < r => {
                if hi > r {
                    reach = Some(hi.clone());
                }
            }
            _ => {
                components += 1;
                reach = Some(hi.clone());
            }
        }
    }
    let width = bases.product().pow(depth as u32) * hull(bases).width();
    let box_width = width.to_f64();
    Ok(BoxCount { depth, components, box_width, estimate: (components as f64).ln() / -box_width.ln() })
}
