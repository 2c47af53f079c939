use std::fmt;

use crate::error::{Error, Result};
use crate::expansion::{BasePair, Regime};
use crate::numerics::Scalar;
use crate::sequences::{DigitWord, EventuallyPeriodic};

/// Outcome of the exact uniqueness test for `π(s)`.
///
/// The expansion `s` is the only expansion of `π(s)` iff no shift `σᵏ(s)`
/// projects into the closed overlap `[β₁, β₀β₁/(1−β₁)]`. An eventually
/// periodic `s` has finitely many distinct shifts, all of them checked here.
#[derive(Clone, Debug, PartialEq)]
pub struct UniquenessCertificate<T> {
    pub sequence: EventuallyPeriodic,
    /// `π(σᵏ(s))` for `k = 0 .. distinct_shift_count`.
    pub shifted_values: Vec<T>,
    pub verdict: bool,
    /// First shift landing in the overlap when the verdict is false.
    pub witness_shift: Option<usize>,
}

pub fn unique_eventually_periodic<T: Scalar>(
    bases: &BasePair<T>,
    sequence: &EventuallyPeriodic,
) -> UniquenessCertificate<T> {
    let overlap = bases.overlap();
    let shifted_values: Vec<T> = (0..sequence.distinct_shift_count())
        .map(|k| bases.project_eventually_periodic(&sequence.shift(k)))
        .collect();
    let witness_shift = shifted_values.iter().position(|v| overlap.contains(v));
    UniquenessCertificate {
        sequence: sequence.clone(),
        shifted_values,
        verdict: witness_shift.is_none(),
        witness_shift,
    }
}

/// `0^zeros·(01)^ω`, each with a unique expansion when `β₀(1 + β₁) < 1`.
pub fn countable_unique_family<T: Scalar>(bases: &BasePair<T>, zeros: usize) -> Result<EventuallyPeriodic> {
    bases.require(Regime::CountableUnique)?;
    EventuallyPeriodic::new(DigitWord::repeat(0, zeros), "01".parse()?)
}

/// Letters of the block alphabet: `A ↦ 01`, `B ↦ 10`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    A,
    B,
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Block::A => "A",
            Block::B => "B",
        })
    }
}

pub fn parse_pattern(text: &str) -> Result<Vec<Block>> {
    text.chars()
        .map(|c| match c {
            'A' | 'a' => Ok(Block::A),
            'B' | 'b' => Ok(Block::B),
            other => Err(Error::Parse {
                what: "block pattern",
                text: text.to_string(),
                reason: format!("unexpected letter {other:?}, expected A or B"),
            }),
        })
        .collect()
}

fn substitute(pattern: &[Block]) -> Result<DigitWord> {
    if pattern.is_empty() {
        return Err(Error::Parse {
            what: "block pattern",
            text: String::new(),
            reason: "pattern must be nonempty".into(),
        });
    }
    let digits = pattern
        .iter()
        .flat_map(|b| match b {
            Block::A => [0, 1],
            Block::B => [1, 0],
        })
        .collect();
    DigitWord::new(digits)
}

fn check_shift(shift: usize) -> Result<()> {
    if shift > 1 {
        return Err(Error::OutOfRange { index: shift, len: 2 });
    }
    Ok(())
}

/// Finite piece of an element of `{01, 10}^ℕ` with `shift` leading digits dropped.
pub fn v_set_word(pattern: &[Block], shift: usize) -> Result<DigitWord> {
    check_shift(shift)?;
    let word = substitute(pattern)?;
    Ok(DigitWord::new(word.digits()[shift..].to_vec()).expect("binary by construction"))
}

/// The element `σ^shift((pattern)^ω)` of the shift-closed alternating set.
pub fn u_element(pattern: &[Block], shift: usize) -> Result<EventuallyPeriodic> {
    check_shift(shift)?;
    Ok(EventuallyPeriodic::periodic(substitute(pattern)?)?.shift(shift))
}
