//! Scalar abstraction: every model and operator is generic over a floating-point type.

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the whole crate is generic over.
///
/// Implemented for `f32` and `f64`. The verification tolerances quoted in the
/// test suites assume `f64`; `f32` carries the same algebra at reduced precision.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + core::iter::Sum<Self>
    + core::fmt::Debug
    + core::fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` literal into the working scalar type.
#[inline]
pub(crate) fn lit<T: Real>(value: f64) -> T {
    T::from_f64(value).expect("f64 literal must convert into the scalar type")
}

/// Lossy view of a scalar as `f64`, for error messages and diagnostics.
#[inline]
pub(crate) fn approx_f64<T: Real>(value: T) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_convert_in_both_widths() {
        assert_eq!(lit::<f64>(2.5), 2.5);
        assert_eq!(lit::<f32>(2.5), 2.5_f32);
    }

    #[test]
    fn pi_is_available_through_the_trait() {
        fn tau<T: Real>() -> T {
            T::PI() + T::PI()
        }
        assert!((tau::<f64>() - core::f64::consts::TAU).abs() < 1e-15);
    }
}
