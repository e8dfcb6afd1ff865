//! Floating-point scalar abstraction shared by the metric code.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, MulAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar used for walk counts, centrality scores and correlations.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + Sum
    + AddAssign
    + MulAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Smallest positive integer value that is no longer guaranteed to be
    /// represented exactly together with its successor.
    fn exact_integer_limit() -> Self;

    fn of_count(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("usize fits in a float")
    }

    fn from_f64_lossy(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 converts to scalar")
    }

    fn to_f64_lossy(self) -> f64 {
        <Self as ToPrimitive>::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn exact_integer_limit() -> Self {
        16_777_216.0 // 2^24
    }
}

impl Scalar for f64 {
    fn exact_integer_limit() -> Self {
        9_007_199_254_740_992.0 // 2^53
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_are_first_inexact_successor() {
        let l32 = f32::exact_integer_limit();
        assert_eq!(l32 + 1.0, l32);
        let l64 = f64::exact_integer_limit();
        assert_eq!(l64 + 1.0, l64);
        assert_ne!(l64 - 1.0, l64);
    }
}
