use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar for all plane and sphere geometry: `f32` or `f64`.
///
/// Everything in this crate that touches coordinates is generic over `Real`;
/// the crate root exports `f64` aliases for the common types. Tolerances are
/// stated as `f64` constants and converted with [`Real::c`], so `f32`
/// instantiations run with the same nominal thresholds (clamped to what the
/// narrower type can represent).
pub trait Real:
    Float + FloatConst + FromPrimitive + core::fmt::Debug + core::fmt::Display + 'static
{
    /// Convert an `f64` constant (tolerance, table value) into `Self`.
    #[inline]
    fn c(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("finite scalar")
    }
}

impl Real for f32 {}
impl Real for f64 {}
