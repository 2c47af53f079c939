use std::cmp::Ordering;
use std::fmt;

use super::Scalar;
use crate::error::{Error, Result};

/// A real interval with rational endpoints and explicit endpoint openness.
///
/// Construction normalizes: anything that contains no point becomes
/// [`Interval::Empty`], so `Span` always satisfies `lo < hi`, or `lo == hi`
/// with both ends closed.
#[derive(Clone, Debug, PartialEq)]
pub enum Interval<T> {
    Empty,
    Span {
        lo: T,
        hi: T,
        lo_closed: bool,
        hi_closed: bool,
    },
}

impl<T: Scalar> Interval<T> {
    pub fn new(lo: T, hi: T, lo_closed: bool, hi_closed: bool) -> Self {
        match lo.partial_cmp(&hi) {
            Some(Ordering::Less) => Interval::Span { lo, hi, lo_closed, hi_closed },
            Some(Ordering::Equal) if lo_closed && hi_closed => {
                Interval::Span { lo, hi, lo_closed, hi_closed }
            }
            _ => Interval::Empty,
        }
    }

    pub fn closed(lo: T, hi: T) -> Self {
        Self::new(lo, hi, true, true)
    }

    pub fn open(lo: T, hi: T) -> Self {
        Self::new(lo, hi, false, false)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Interval::Empty)
    }

    pub fn lo(&self) -> Option<&T> {
        match self {
            Interval::Span { lo, .. } => Some(lo),
            Interval::Empty => None,
        }
    }

    pub fn hi(&self) -> Option<&T> {
        match self {
            Interval::Span { hi, .. } => Some(hi),
            Interval::Empty => None,
        }
    }

    /// Length of the interval; zero when empty.
    pub fn width(&self) -> T {
        match self {
            Interval::Span { lo, hi, .. } => hi.clone() - lo.clone(),
            Interval::Empty => T::zero(),
        }
    }

    pub fn contains(&self, x: &T) -> bool {
        match self {
            Interval::Empty => false,
            Interval::Span { lo, hi, lo_closed, hi_closed } => {
                let above = if *lo_closed { x >= lo } else { x > lo };
                let below = if *hi_closed { x <= hi } else { x < hi };
                above && below
            }
        }
    }

    /// True when the interiors share a point.
    pub fn interiors_overlap(&self, other: &Self) -> bool {
        match (self, other) {
            (Interval::Span { lo: a, hi: b, .. }, Interval::Span { lo: c, hi: d, .. }) => {
                a < d && c < b
            }
            _ => false,
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let (
            Interval::Span { lo: alo, hi: ahi, lo_closed: alc, hi_closed: ahc },
            Interval::Span { lo: blo, hi: bhi, lo_closed: blc, hi_closed: bhc },
        ) = (self, other)
        else {
            return Interval::Empty;
        };
        let (lo, lo_closed) = match alo.partial_cmp(blo) {
            Some(Ordering::Greater) => (alo.clone(), *alc),
            Some(Ordering::Less) => (blo.clone(), *blc),
            _ => (alo.clone(), *alc && *blc),
        };
        let (hi, hi_closed) = match ahi.partial_cmp(bhi) {
            Some(Ordering::Less) => (ahi.clone(), *ahc),
            Some(Ordering::Greater) => (bhi.clone(), *bhc),
            _ => (ahi.clone(), *ahc && *bhc),
        };
        Self::new(lo, hi, lo_closed, hi_closed)
    }

    /// Union of two intervals that together form a single interval.
    ///
    /// Fails with [`Error::Disconnected`] when a gap (possibly a single
    /// excluded point) separates them.
    pub fn union_connected(&self, other: &Self) -> Result<Self> {
        let (first, second) = match (self, other) {
            (Interval::Empty, _) => return Ok(other.clone()),
            (_, Interval::Empty) => return Ok(self.clone()),
            (a, b) if starts_before(a, b) => (a, b),
            (a, b) => (b, a),
        };
        let (
            Interval::Span { lo, hi: fhi, lo_closed, hi_closed: fhc },
            Interval::Span { lo: slo, hi: shi, lo_closed: slc, hi_closed: shc },
        ) = (first, second)
        else {
            unreachable!("empty cases handled above")
        };
        let joined = match fhi.partial_cmp(slo) {
            Some(Ordering::Greater) => true,
            Some(Ordering::Equal) => *fhc || *slc,
            _ => false,
        };
        if !joined {
            return Err(Error::Disconnected {
                left: first.to_string(),
                right: second.to_string(),
            });
        }
        let lo_closed = *lo_closed || (lo == slo && *slc);
        let (hi, hi_closed) = match fhi.partial_cmp(shi) {
            Some(Ordering::Greater) => (fhi.clone(), *fhc),
            Some(Ordering::Less) => (shi.clone(), *shc),
            _ => (fhi.clone(), *fhc || *shc),
        };
        Ok(Self::new(lo.clone(), hi, lo_closed, hi_closed))
    }

    /// Image under `x ↦ scale·x + offset` for `scale > 0`.
    pub fn map_affine(&self, scale: &T, offset: &T) -> Self {
        debug_assert!(*scale > T::zero());
        match self {
            Interval::Empty => Interval::Empty,
            Interval::Span { lo, hi, lo_closed, hi_closed } => Interval::Span {
                lo: scale.clone() * lo.clone() + offset.clone(),
                hi: scale.clone() * hi.clone() + offset.clone(),
                lo_closed: *lo_closed,
                hi_closed: *hi_closed,
            },
        }
    }
}

/// Orders spans by left endpoint, closed before open on ties.
fn starts_before<T: Scalar>(a: &Interval<T>, b: &Interval<T>) -> bool {
    match (a, b) {
        (
            Interval::Span { lo: alo, lo_closed: alc, .. },
            Interval::Span { lo: blo, lo_closed: blc, .. },
        ) => alo < blo || (alo == blo && (*alc || !*blc)),
        _ => true,
    }
}

impl<T: Scalar> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Interval::Empty => f.write_str("empty"),
            Interval::Span { lo, hi, lo_closed, hi_closed } => write!(
                f,
                "{}{}, {}{}",
                if *lo_closed { '[' } else { '(' },
                lo.render(),
                hi.render(),
                if *hi_closed { ']' } else { ')' },
            ),
        }
    }
}
