//! Computing framework: task intensity draws with estimation error, the CPU
//! power/frequency law, and per-device total delays.

use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Milliwatts per watt; the CPU constant `tau` is specified in SI units while
/// powers are carried in mW internally.
const MW_PER_W: f64 = 1e3;

/// Lower clamp for computation intensities in cycles/bit.
///
/// Gaussian estimation error can push a sampled intensity to zero or below;
/// the clamp keeps every delay finite and positive.
pub fn omega_floor<T: Scalar>() -> T {
    T::one()
}

/// Per-device task description for one network draw.
///
/// `omega_est = omega_true - error` (both clamped to [`omega_floor`]), so the
/// ground truth decomposes as estimate plus error whenever no clamp binds.
#[derive(Clone, Debug)]
pub struct TaskProfile<T> {
    /// Ground-truth computation intensity, cycles/bit.
    pub omega_true: Vec<T>,
    /// Estimated computation intensity, cycles/bit.
    pub omega_est: Vec<T>,
    /// Task input sizes, bits.
    pub d_in: Vec<T>,
    /// Task output sizes, bits.
    pub d_out: Vec<T>,
    pub sigma_w_sq: T,
}

impl<T: Scalar> TaskProfile<T> {
    /// Number of sampled intensities that hit the floor clamp (either side).
    pub fn clamped_count(&self) -> usize {
        let floor = omega_floor::<T>();
        self.omega_true
            .iter()
            .chain(self.omega_est.iter())
            .filter(|w| **w <= floor)
            .count()
    }
}

/// CPU power model `p = tau * (cycles/s)^mu` with capacity `f_max`.
#[derive(Clone, Debug)]
pub struct CpuModel<T> {
    /// Power coefficient in SI units (watts at 1 cycle/s).
    pub tau: T,
    /// Power exponent, > 1.
    pub mu: T,
    /// Maximum computation capacity, cycles/s.
    pub f_max: T,
}

impl<T: Scalar> CpuModel<T> {
    pub fn new(tau: T, mu: T, f_max: T) -> Result<Self> {
        if !(tau > T::zero()) {
            return Err(Error::invalid("tau", "must be positive"));
        }
        if !(mu > T::one()) {
            return Err(Error::invalid("mu", "must exceed 1"));
        }
        if !(f_max > T::zero()) {
            return Err(Error::invalid("f_max", "must be positive"));
        }
        Ok(Self { tau, mu, f_max })
    }
}

/// Draw a task profile: Gamma-distributed ground-truth intensities, Gaussian
/// estimation error, constant input/output sizes across devices.
pub fn sample_task_profile<T: Scalar, R: Rng + ?Sized>(
    num_devices: usize,
    gamma_shape: T,
    gamma_scale: T,
    sigma_w_sq: T,
    d_in_bits: T,
    d_out_bits: T,
    rng: &mut R,
) -> Result<TaskProfile<T>> {
    if !(gamma_shape > T::zero() && gamma_shape.is_finite()) {
        return Err(Error::invalid("gamma_shape", "must be positive and finite"));
    }
    if !(gamma_scale > T::zero() && gamma_scale.is_finite()) {
        return Err(Error::invalid("gamma_scale", "must be positive and finite"));
    }
    if !(sigma_w_sq >= T::zero()) {
        return Err(Error::invalid("sigma_w_sq", "must be non-negative"));
    }
    if !(d_in_bits > T::zero() && d_out_bits > T::zero()) {
        return Err(Error::invalid("task sizes", "d_in and d_out must be positive"));
    }
    let floor = omega_floor::<T>();
    let err_std = sigma_w_sq.sqrt();
    let mut omega_true = Vec::with_capacity(num_devices);
    let mut omega_est = Vec::with_capacity(num_devices);
    for _ in 0..num_devices {
        let w = T::sample_gamma(gamma_shape, gamma_scale, rng).max(floor);
        let err = T::sample_standard_normal(rng) * err_std;
        omega_true.push(w);
        omega_est.push((w - err).max(floor));
    }
    Ok(TaskProfile {
        omega_true,
        omega_est,
        d_in: vec![d_in_bits; num_devices],
        d_out: vec![d_out_bits; num_devices],
        sigma_w_sq,
    })
}

/// Power drawn when the CPU runs `total_cycles` cycles/s, in mW.
pub fn compute_power_from_cycles<T: Scalar>(total_cycles: T, cpu: &CpuModel<T>) -> T {
    cpu.tau * total_cycles.powf(cpu.mu) * T::from_config(MW_PER_W)
}

/// Cycle budget sustainable with `p_co_mw` of computing power; exact inverse
/// of [`compute_power_from_cycles`].
pub fn cycles_from_compute_power<T: Scalar>(p_co_mw: T, cpu: &CpuModel<T>) -> T {
    (p_co_mw / T::from_config(MW_PER_W) / cpu.tau).powf(cpu.mu.recip())
}

/// Total delay of every device in seconds:
/// computation (`omega * d_in / f`) plus communication (`d_out / r`).
///
/// A zero frequency or rate yields `+inf` for that device only.
pub fn total_delays<T: Scalar>(
    omega_true: &[T],
    d_in: &[T],
    d_out: &[T],
    f_co: &[T],
    rates: &[T],
) -> Vec<T> {
    debug_assert_eq!(omega_true.len(), f_co.len());
    debug_assert_eq!(omega_true.len(), rates.len());
    omega_true
        .iter()
        .zip(d_in)
        .zip(d_out)
        .zip(f_co)
        .zip(rates)
        .map(|((((w, din), dout), f), r)| {
            let comp = if *f > T::zero() { *w * *din / *f } else { T::infinity() };
            let comm = if *r > T::zero() { *dout / *r } else { T::infinity() };
            comp + comm
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::substream;
    use approx::assert_relative_eq;

    fn table_cpu() -> CpuModel<f64> {
        CpuModel::new(1e-28, 3.0, 4.6e9).unwrap()
    }

    #[test]
    fn zero_error_variance_means_exact_estimates() {
        let mut rng = substream(10, 0, 0);
        let p = sample_task_profile::<f64, _>(6, 2.0, 200.0, 0.0, 5e4, 7.5e4, &mut rng).unwrap();
        assert_eq!(p.omega_true, p.omega_est);
    }

    #[test]
    fn invalid_distribution_parameters_rejected() {
        let mut rng = substream(10, 0, 1);
        assert!(sample_task_profile::<f64, _>(2, 0.0, 200.0, 0.0, 5e4, 7.5e4, &mut rng).is_err());
        assert!(sample_task_profile::<f64, _>(2, 2.0, -1.0, 0.0, 5e4, 7.5e4, &mut rng).is_err());
        assert!(sample_task_profile::<f64, _>(2, 2.0, 200.0, -1.0, 5e4, 7.5e4, &mut rng).is_err());
    }

    #[test]
    fn gamma_moments_match_shape_scale_convention() {
        // Gamma(2, 200): mean = 400, variance = 80000.
        let mut rng = substream(11, 0, 0);
        let n = 1_000_000usize;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in 0..n {
            let w = f64::sample_gamma(2.0, 200.0, &mut rng);
            sum += w;
            sumsq += w * w;
        }
        let mean = sum / n as f64;
        let var = sumsq / n as f64 - mean * mean;
        assert!((mean - 400.0).abs() < 2.0, "mean {mean}");
        assert!((var - 80_000.0).abs() < 0.01 * 80_000.0, "var {var}");
    }

    #[test]
    fn error_std_matches_variance() {
        // sigma_w_sq = 6400: std of (omega_true - omega_est) is 80 on
        // unclamped samples.
        let mut rng = substream(12, 0, 0);
        let mut diffs = Vec::new();
        let floor = omega_floor::<f64>();
        for _ in 0..20_000 {
            let p = sample_task_profile::<f64, _>(6, 2.0, 200.0, 6400.0, 5e4, 7.5e4, &mut rng).unwrap();
            for k in 0..6 {
                if p.omega_true[k] > floor && p.omega_est[k] > floor {
                    diffs.push(p.omega_true[k] - p.omega_est[k]);
                }
            }
        }
        let n = diffs.len() as f64;
        let mean = diffs.iter().sum::<f64>() / n;
        let std = (diffs.iter().map(|d| (d - mean) * (d - mean)).sum::<f64>() / n).sqrt();
        assert!((std - 80.0).abs() < 1.0, "std {std}");
    }

    #[test]
    fn clamping_is_rare_at_reference_parameters() {
        let mut rng = substream(13, 0, 0);
        let mut clamped = 0usize;
        let mut total = 0usize;
        for _ in 0..10_000 {
            let p = sample_task_profile::<f64, _>(6, 2.0, 200.0, 6400.0, 5e4, 7.5e4, &mut rng).unwrap();
            clamped += p.clamped_count();
            total += 12;
        }
        // Gamma(2, 200) mass below 1 cycle/bit is ~1.2e-5; the estimate side
        // clamps when error exceeds omega, also rare.
        assert!(
            (clamped as f64) < 1e-4 * total as f64 + 9.0,
            "clamped {clamped} of {total}"
        );
    }

    #[test]
    fn power_law_reference_points() {
        let cpu = table_cpu();
        assert_eq!(compute_power_from_cycles(0.0, &cpu), 0.0);
        // 1e-28 * (1e9)^3 = 0.1 W = 100 mW.
        assert_relative_eq!(compute_power_from_cycles(1e9, &cpu), 100.0, max_relative = 1e-12);
        // Saturating the capacity costs 1e-28 * (4.6e9)^3 = 9.7336 W.
        assert_relative_eq!(
            compute_power_from_cycles(4.6e9, &cpu),
            9733.6e0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn inverse_law_reference_points() {
        let cpu = table_cpu();
        assert_eq!(cycles_from_compute_power(0.0, &cpu), 0.0);
        // 1 W: (1e28)^(1/3) = 10^(28/3).
        assert_relative_eq!(
            cycles_from_compute_power(1000.0, &cpu),
            10f64.powf(28.0 / 3.0),
            max_relative = 1e-12
        );
    }

    #[test]
    fn power_law_round_trip() {
        let cpu = table_cpu();
        for f in [1e6, 1e9, 4.6e9] {
            let back = cycles_from_compute_power(compute_power_from_cycles(f, &cpu), &cpu);
            assert_relative_eq!(back, f, max_relative = 1e-12);
        }
    }

    #[test]
    fn delay_reference_point() {
        let t = total_delays(&[400.0], &[5e4], &[7.5e4], &[1e9], &[1e7]);
        assert_relative_eq!(t[0], 0.0275, max_relative = 1e-12);
    }

    #[test]
    fn delay_limits_and_homogeneity() {
        // f -> inf leaves only the communication term.
        let t = total_delays(&[400.0], &[5e4], &[7.5e4], &[f64::INFINITY], &[1e7]);
        assert_relative_eq!(t[0], 7.5e4 / 1e7, max_relative = 1e-12);
        // Doubling f and r halves the delay exactly.
        let t1 = total_delays(&[400.0], &[5e4], &[7.5e4], &[1e9], &[1e7]);
        let t2 = total_delays(&[400.0], &[5e4], &[7.5e4], &[2e9], &[2e7]);
        assert_relative_eq!(t2[0], t1[0] / 2.0, max_relative = 1e-12);
    }

    #[test]
    fn zero_frequency_or_rate_is_infinite_for_that_device_only() {
        let t = total_delays(
            &[400.0, 400.0, 400.0],
            &[5e4; 3],
            &[7.5e4; 3],
            &[0.0, 1e9, 1e9],
            &[1e7, 0.0, 1e7],
        );
        assert!(t[0].is_infinite());
        assert!(t[1].is_infinite());
        assert!(t[2].is_finite());
    }

    #[test]
    fn delay_monotonicity_signs() {
        let base = total_delays(&[400.0], &[5e4], &[7.5e4], &[1e9], &[1e7])[0];
        let more_f = total_delays(&[400.0], &[5e4], &[7.5e4], &[1.1e9], &[1e7])[0];
        let more_r = total_delays(&[400.0], &[5e4], &[7.5e4], &[1e9], &[1.1e7])[0];
        let more_w = total_delays(&[440.0], &[5e4], &[7.5e4], &[1e9], &[1e7])[0];
        assert!(more_f < base);
        assert!(more_r < base);
        assert!(more_w > base);
    }

    #[test]
    fn cpu_model_validation() {
        assert!(CpuModel::new(0.0, 3.0, 4.6e9).is_err());
        assert!(CpuModel::new(1e-28, 1.0, 4.6e9).is_err());
        assert!(CpuModel::new(1e-28, 3.0, 0.0).is_err());
    }
}
