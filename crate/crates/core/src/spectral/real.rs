use num_traits::{Float, FromPrimitive};
use std::fmt::{Debug, Display};

/// Scalar type for the dense spectral routines.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}
