//! Scalar abstraction for the simulation's floating-point type.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};
use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

/// Floating-point scalar the whole simulation is generic over.
///
/// The sampling hooks live on the trait so that generic code never has to
/// thread `rand_distr` bounds through every signature.
pub trait Scalar:
    Float + NumAssign + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// One draw from the standard normal distribution.
    fn sample_standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One draw from the Gamma distribution with the given shape and scale.
    ///
    /// Callers validate `shape > 0` and `scale > 0` first.
    fn sample_gamma<R: Rng + ?Sized>(shape: Self, scale: Self, rng: &mut R) -> Self;

    /// Conversion from `f64` for constants and config-boundary values.
    fn from_config(value: f64) -> Self {
        Self::from_f64(value).expect("config value representable in scalar type")
    }
}

impl Scalar for f64 {
    fn sample_standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn sample_gamma<R: Rng + ?Sized>(shape: Self, scale: Self, rng: &mut R) -> Self {
        Gamma::new(shape, scale)
            .expect("gamma parameters validated by caller")
            .sample(rng)
    }
}

impl Scalar for f32 {
    fn sample_standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn sample_gamma<R: Rng + ?Sized>(shape: Self, scale: Self, rng: &mut R) -> Self {
        Gamma::new(shape, scale)
            .expect("gamma parameters validated by caller")
            .sample(rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::substream;

    #[test]
    fn normal_draws_have_zero_mean() {
        let mut rng = substream(7, 0, 0);
        let n = 100_000;
        let mean = (0..n).map(|_| f64::sample_standard_normal(&mut rng)).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.02, "mean {mean}");
    }

    #[test]
    fn f32_instantiation_compiles_and_samples() {
        let mut rng = substream(7, 0, 1);
        let x = f32::sample_gamma(2.0, 200.0, &mut rng);
        assert!(x > 0.0);
    }
}
