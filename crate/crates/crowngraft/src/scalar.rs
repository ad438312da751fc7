//! Scalar abstraction for the floating-point modules.

use std::fmt::{Debug, Display};

use num_traits::float::{Float, FloatConst};
use num_traits::FromPrimitive;

/// Floating-point scalar usable throughout the geometric and analytic modules.
///
/// This is a convenience super-trait; `f32` and `f64` implement it. Algorithms
/// obtain constants through [`FromPrimitive`] and [`FloatConst`], so they run
/// unchanged at either precision (tolerances scale accordingly).
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Shorthand for lossy conversion from `f64`, for tolerance constants.
    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts to any Real")
    }
}

impl Real for f32 {}
impl Real for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_precisions_satisfy_the_bound() {
        fn midpoint<R: Real>(a: R, b: R) -> R {
            (a + b) / R::from_f64_lossy(2.0)
        }
        assert_eq!(midpoint(1.0f64, 3.0f64), 2.0);
        assert_eq!(midpoint(1.0f32, 3.0f32), 2.0);
    }
}
