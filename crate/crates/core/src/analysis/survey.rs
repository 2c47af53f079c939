use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::count_expansions;
use crate::error::Result;
use crate::expansion::BasePair;

/// Sample points are `m/2^GRID_BITS · β₁/(1−β₁)` for integer `m`.
pub const GRID_BITS: u32 = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct SurveySample {
    pub x: BigRational,
    pub count: u128,
}

/// Expansion counts at fixed depth over seeded grid points of `I`.
#[derive(Clone, Debug, PartialEq)]
pub struct SurveyReport {
    pub depth: usize,
    pub threshold: u128,
    pub samples: Vec<SurveySample>,
    pub min: u128,
    /// Lower median of the counts.
    pub median: u128,
    pub max: u128,
    /// Samples whose count exceeds `threshold`.
    pub above_threshold: usize,
}

impl SurveyReport {
    pub fn fraction_above(&self) -> f64 {
        self.above_threshold as f64 / self.samples.len().max(1) as f64
    }
}

/// Draws `samples` grid points from a ChaCha8 stream seeded with `seed` and
/// counts expansion prefixes of each to `depth`.
///
/// Evidence only: a high fraction of branching points says nothing
/// measure-theoretic.
pub fn survey(
    bases: &BasePair<BigRational>,
    samples: usize,
    depth: usize,
    seed: u64,
    threshold: u128,
) -> Result<SurveyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = 1u64 << GRID_BITS;
    let points: Vec<BigRational> = (0..samples)
        .map(|_| {
            let m = rng.gen_range(0..=grid);
            BigRational::new(BigInt::from(m), BigInt::from(grid)) * bases.interval_max()
        })
        .collect();
    let counts = points
        .par_iter()
        .map(|x| count_expansions(bases, x, depth))
        .collect::<Result<Vec<_>>>()?;
    let samples: Vec<SurveySample> =
        points.into_iter().zip(counts).map(|(x, count)| SurveySample { x, count }).collect();
    let mut sorted: Vec<u128> = samples.iter().map(|s| s.count).collect();
    sorted.sort_unstable();
    let pick = |i: usize| sorted.get(i).copied().unwrap_or(0);
    Ok(SurveyReport {
        depth,
        threshold,
        min: pick(0),
        median: pick(sorted.len().saturating_sub(1) / 2),
        max: sorted.last().copied().unwrap_or(0),
        above_threshold: sorted.iter().filter(|&&c| c > threshold).count(),
        samples,
    })
}
