//! Scalar field abstraction shared by the exact and floating paths.

use core::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{Num, Signed, ToPrimitive};

/// Arbitrary-precision rational, the default scalar for every algebraic identity.
pub type Rational = num_rational::BigRational;

/// Relative tolerance used for consistency checks when running on `f64`.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// A field the kit can compute over.
///
/// Implemented for [`Rational`] (exact) and `f64` (used for cone sweeps, where
/// transcendental samples make exactness impossible).
pub trait Scalar: Clone + Debug + PartialEq + Num + Signed {
    /// `true` when arithmetic is exact and comparisons need no tolerance.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn ratio(num: i64, den: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Equality up to the field's comparison rule: exact for rationals,
    /// [`FLOAT_TOLERANCE`]-relative for floats.
    fn approx_eq(&self, other: &Self) -> bool;

    /// `true` when this value, read as a squared norm, exceeds `eps²`.
    /// With `eps == 0` in exact mode this is simply "nonzero".
    fn sq_exceeds(&self, eps: f64) -> bool {
        if Self::EXACT && eps == 0.0 {
            !self.is_zero()
        } else {
            self.to_f64() > eps * eps
        }
    }

    fn is_near_zero(&self) -> bool {
        self.approx_eq(&Self::zero())
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn approx_eq(&self, other: &Self) -> bool {
        let scale = 1.0f64.max(self.abs()).max(other.abs());
        (self - other).abs() <= FLOAT_TOLERANCE * scale
    }
}

/// Shorthand for `p/q` as a [`Rational`].
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::ratio(num, den)
}

/// Sum of an iterator of scalars.
pub fn sum<T: Scalar, I: IntoIterator<Item = T>>(it: I) -> T {
    it.into_iter().fold(T::zero(), |acc, x| acc + x)
}

/// Euclidean dot product of two equal-length slices.
pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    sum(a.iter().zip(b).map(|(x, y)| x.clone() * y.clone()))
}

pub fn norm_sq<T: Scalar>(a: &[T]) -> T {
    dot(a, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn exact_equality_has_no_tolerance() {
        assert!(rat(1, 3).approx_eq(&rat(2, 6)));
        assert!(!rat(1, 3).approx_eq(&(rat(1, 3) + rat(1, 1_000_000_000_000))));
    }

    #[test]
    fn float_equality_is_relative() {
        assert!(1.0e6f64.approx_eq(&(1.0e6 + 1.0e-4)));
        assert!(!1.0f64.approx_eq(&1.001));
    }

    #[test]
    fn sq_exceeds_in_exact_mode_means_nonzero() {
        assert!(rat(1, 1_000_000_000).sq_exceeds(0.0));
        assert!(!Rational::zero().sq_exceeds(0.0));
        assert!(!1e-20f64.sq_exceeds(1e-9));
    }
}
