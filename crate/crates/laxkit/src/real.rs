//! Scalar abstraction for the numeric kernels.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};
use std::fmt::{Debug, Display};

/// Real scalar type the series and linear-algebra kernels are generic over.
///
/// Implemented for `f32` and `f64`. The bound set is what the kernels
/// actually use: IEEE float ops, named constants, and conversion from
/// `f64` literals for tolerances.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Lossless-enough conversion from an `f64` literal.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal conversion")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex literal from `f64` parts.
#[inline]
pub fn cplx<R: Real>(re: f64, im: f64) -> Complex<R> {
    Complex::new(R::of(re), R::of(im))
}

/// `i` times a complex number.
#[inline]
pub fn mul_i<R: Real>(z: Complex<R>) -> Complex<R> {
    Complex::new(-z.im, z.re)
}

/// `pi * i` as a complex constant.
#[inline]
pub fn pi_i<R: Real>() -> Complex<R> {
    Complex::new(R::zero(), R::PI())
}
