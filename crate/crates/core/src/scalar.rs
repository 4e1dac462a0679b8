//! Scalar abstractions shared by every method.
//!
//! Two tiers: [`Scalar`] is the ordered-field bound that the rank-based
//! machinery (criterion ranks, FUCA, tie handling) needs, and it is satisfied
//! by exact rationals as well as floats. [`Real`] adds floating-point
//! operations (roots, logs, powers) required by the normalization schemes and
//! the eigenvalue kernel.

use std::fmt::Debug;
use std::iter::Sum;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Float, FromPrimitive, Num, Signed, ToPrimitive};

/// Ordered field-like scalar: floats, or exact rationals where a method only
/// needs arithmetic and comparisons.
pub trait Scalar: Num + Signed + FromPrimitive + ToPrimitive + PartialOrd + Clone + Debug {
    /// False only for non-finite floating-point values; exact types are
    /// always finite.
    fn is_finite_scalar(&self) -> bool;
}

impl Scalar for f64 {
    fn is_finite_scalar(&self) -> bool {
        self.is_finite()
    }
}

impl Scalar for f32 {
    fn is_finite_scalar(&self) -> bool {
        self.is_finite()
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Debug,
    Ratio<T>: Num + Signed + FromPrimitive + ToPrimitive + PartialOrd,
{
    fn is_finite_scalar(&self) -> bool {
        true
    }
}

/// Floating-point scalar for the continuous pipelines.
pub trait Real: Scalar + Float + Sum {}

impl<T: Scalar + Float + Sum> Real for T {}

/// Convert an f64 constant into the working scalar type.
pub(crate) fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}

/// Lossy view of a scalar for error reporting.
pub(crate) fn lossy<T: Scalar>(x: &T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
