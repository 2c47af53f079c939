use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

use super::render_rational;

/// Ordered field elements the expansion machinery can run on.
///
/// `BigRational` is the exact instantiation every correctness claim is made
/// for. `f64` and `f32` are fast approximate instantiations; comparisons at
/// interval boundaries are not reliable for them.
pub trait Scalar: Num + Signed + Clone + PartialOrd + Debug + Send + Sync + 'static {
    /// True when arithmetic never rounds.
    const EXACT: bool;

    fn from_rational(value: &BigRational) -> Self;

    fn to_f64(&self) -> f64;

    /// Text form: `p/q` for exact scalars, shortest round-trip decimal otherwise.
    fn render(&self) -> String;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    fn max_of(a: Self, b: Self) -> Self {
        if a >= b {
            a
        } else {
            b
        }
    }

    fn min_of(a: Self, b: Self) -> Self {
        if a <= b {
            a
        } else {
            b
        }
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_rational(value: &BigRational) -> Self {
        value.clone()
    }

    fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn render(&self) -> String {
        render_rational(self)
    }

    fn pow(&self, exp: u32) -> Self {
        num_traits::pow(self.clone(), exp as usize)
    }
}

macro_rules! float_scalar {
    ($($ty:ty),*) => {
        $(
            impl Scalar for $ty {
                const EXACT: bool = false;

                fn from_rational(value: &BigRational) -> Self {
                    ToPrimitive::to_f64(value).unwrap_or(f64::NAN) as $ty
                }

                fn to_f64(&self) -> f64 {
                    *self as f64
                }

                fn render(&self) -> String {
                    format!("{}", self)
                }

                fn pow(&self, exp: u32) -> Self {
                    self.powi(exp as i32)
                }
            }
        )*
    };
}

float_scalar!(f32, f64);
