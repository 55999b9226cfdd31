//! Scalar abstraction: every closed-form quantity is generic over a
//! floating-point type. `f64` is what the CLI and sweep machinery use;
//! `f32` is available through the aliases at the crate root.

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar: f32 or f64.
pub trait Real: Float + FromPrimitive + ToPrimitive + std::fmt::Debug + Send + Sync + 'static {
    /// Lift an `f64` literal into the scalar type.
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("literal representable in scalar type")
    }

    /// Lossy view as f64, used for diagnostics.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }
}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + std::fmt::Debug + Send + Sync + 'static
{
}
