//! Coefficient domains for series arithmetic.
//!
//! Every series type in the crate is generic over [`Scalar`]. Exact
//! computations use [`BigRational`](num_rational::BigRational); `f64` and
//! `f32` work too and are handy for quick numerical looks at a series.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// A commutative field-like coefficient type.
///
/// Division is only ever performed by small positive integers (series square
/// roots) or by units, so integer-like rationals and floats both qualify.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in the scalar type")
    }

    /// `true` when the value is `+1` or `-1`.
    fn is_unit_sign(&self) -> bool {
        self.is_one() || (-self.clone()).is_one()
    }
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Display + Num + Neg<Output = T> + FromPrimitive + Send + Sync + 'static
{
}
