//! Finite binary words and eventually periodic binary sequences.
//!
//! Only eventually periodic sequences `u·(v)^ω` are represented exactly;
//! arbitrary sequences appear as finite truncations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Digit = u8;

/// A finite word over {0, 1}. Ordering is lexicographic.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct DigitWord(Vec<Digit>);

impl DigitWord {
    pub fn new(digits: Vec<Digit>) -> Result<Self> {
        if let Some(bad) = digits.iter().find(|&&d| d > 1) {
            return Err(Error::Parse {
                what: "digit word",
                text: format!("{digits:?}"),
                reason: format!("digit {bad} is not 0 or 1"),
            });
        }
        Ok(DigitWord(digits))
    }

    pub fn empty() -> Self {
        DigitWord(Vec::new())
    }

    pub fn repeat(digit: Digit, count: usize) -> Self {
        assert!(digit <= 1, "binary digit expected");
        DigitWord(vec![digit; count])
    }

    pub fn digits(&self) -> &[Digit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, digit: Digit) {
        assert!(digit <= 1, "binary digit expected");
        self.0.push(digit);
    }

    pub fn extend_from(&mut self, other: &DigitWord) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn prefix(&self, n: usize) -> Result<DigitWord> {
        if n > self.len() {
            return Err(Error::OutOfRange { index: n, len: self.len() });
        }
        Ok(DigitWord(self.0[..n].to_vec()))
    }

    /// Number of zeros and ones among the first `n` digits.
    pub fn digit_counts(&self, n: usize) -> Result<(usize, usize)> {
        if n > self.len() {
            return Err(Error::OutOfRange { index: n, len: self.len() });
        }
        let ones = self.0[..n].iter().filter(|&&d| d == 1).count();
        Ok((n - ones, ones))
    }

    /// The metric `Σ |sᵢ − tᵢ| 2^{−i}` restricted to the common length.
    pub fn distance(&self, other: &DigitWord) -> Result<BigRational> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        let n = self.len();
        // Σ 2^{-i} over differing i, as an integer over 2^n
        let mut numer = BigInt::zero();
        for (i, (a, b)) in self.0.iter().zip(&other.0).enumerate() {
            if a != b {
                numer += BigInt::from(1u8) << (n - 1 - i);
            }
        }
        Ok(BigRational::new(numer, BigInt::from(1u8) << n))
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DigitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse {
                    what: "digit word",
                    text: s.to_string(),
                    reason: format!("unexpected character {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(DigitWord)
    }
}

/// `preperiod · (period)^ω` in canonical form: the period is primitive and
/// the preperiod is as short as possible, so structural equality is
/// sequence equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSequence", into = "RawSequence")]
pub struct EventuallyPeriodic {
    preperiod: DigitWord,
    period: DigitWord,
}

#[derive(Serialize, Deserialize)]
struct RawSequence {
    preperiod: Vec<Digit>,
    period: Vec<Digit>,
}

impl TryFrom<RawSequence> for EventuallyPeriodic {
    type Error = Error;

    fn try_from(raw: RawSequence) -> Result<Self> {
        EventuallyPeriodic::new(DigitWord::new(raw.preperiod)?, DigitWord::new(raw.period)?)
    }
}

impl From<EventuallyPeriodic> for RawSequence {
    fn from(s: EventuallyPeriodic) -> Self {
        RawSequence { preperiod: s.preperiod.0, period: s.period.0 }
    }
}

impl EventuallyPeriodic {
    pub fn new(preperiod: DigitWord, period: DigitWord) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Parse {
                what: "eventually periodic sequence",
                text: format!("{preperiod}()"),
                reason: "period must be nonempty".into(),
            });
        }
        let mut pre = preperiod.0;
        let mut per = primitive_root(&period.0).to_vec();
        while let (Some(&a), Some(&b)) = (pre.last(), per.last()) {
            if a != b {
                break;
            }
            pre.pop();
            per.rotate_right(1);
        }
        Ok(EventuallyPeriodic { preperiod: DigitWord(pre), period: DigitWord(per) })
    }

    /// The constant or purely periodic sequence `(period)^ω`.
    pub fn periodic(period: DigitWord) -> Result<Self> {
        Self::new(DigitWord::empty(), period)
    }

    pub fn preperiod(&self) -> &DigitWord {
        &self.preperiod
    }

    pub fn period(&self) -> &DigitWord {
        &self.period
    }

    /// The digit at 0-based position `i`.
    pub fn digit(&self, i: usize) -> Digit {
        let pre = self.preperiod.len();
        if i < pre {
            self.preperiod.0[i]
        } else {
            self.period.0[(i - pre) % self.period.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> DigitWord {
        DigitWord((0..n).map(|i| self.digit(i)).collect())
    }

    /// `σᵏ(s)`, already canonical.
    pub fn shift(&self, k: usize) -> EventuallyPeriodic {
        let pre = self.preperiod.len();
        if k <= pre {
            return EventuallyPeriodic {
                preperiod: DigitWord(self.preperiod.0[k..].to_vec()),
                period: self.period.clone(),
            };
        }
        let mut period = self.period.0.clone();
        let turn = (k - pre) % period.len();
        period.rotate_left(turn);
        EventuallyPeriodic { preperiod: DigitWord::empty(), period: DigitWord(period) }
    }

    /// Size of the orbit `{σᵏ(s) : k ≥ 0}`.
    pub fn distinct_shift_count(&self) -> usize {
        self.preperiod.len() + self.period.len()
    }
}

/// Shortest word whose repetition gives `word`.
fn primitive_root(word: &[Digit]) -> &[Digit] {
    let n = word.len();
    (1..=n)
        .filter(|d| n % d == 0)
        .find(|&d| (d..n).all(|i| word[i] == word[i - d]))
        .map_or(word, |d| &word[..d])
}

impl fmt::Display for EventuallyPeriodic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.preperiod, self.period)
    }
}

impl FromStr for EventuallyPeriodic {
    type Err = Error;

    /// Parses `101(01)`: preperiod `101`, then `01` repeated forever.
    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::Parse {
            what: "eventually periodic sequence",
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let text = s.trim();
        let (pre, rest) = text.split_once('(').ok_or_else(|| fail("missing '(' before the period"))?;
        let period = rest.strip_suffix(')').ok_or_else(|| fail("missing closing ')'"))?;
        let preperiod: DigitWord = pre.parse().map_err(|_| fail("preperiod must be binary"))?;
        let period: DigitWord = period.parse().map_err(|_| fail("period must be binary"))?;
        EventuallyPeriodic::new(preperiod, period)
    }
}
