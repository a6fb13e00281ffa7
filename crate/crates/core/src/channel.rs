//! Channel model: Rayleigh fading with estimation error, regularized
//! zero-forcing beamformers, and per-device achievable rates.
//!
//! Channels are unit-variance Rayleigh. The station sees an MMSE estimate:
//! estimate and error are drawn independently with variances `1 - sigma_h_sq`
//! and `sigma_h_sq`, and the ground truth is their sum, so the orthogonality
//! principle holds and the marginal channel keeps unit variance.

use num_complex::Complex;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{cholesky_solve, hermitian_dot, scaled_identity, ComplexMatrix};
use crate::scalar::Scalar;

/// Ground-truth and estimated channels for one network draw.
///
/// Both matrices are `K x L`: row `k` is device `k`'s channel vector across
/// the `L` station antennas.
#[derive(Clone, Debug)]
pub struct ChannelPair<T> {
    pub h_true: ComplexMatrix<T>,
    pub h_est: ComplexMatrix<T>,
    pub sigma_h_sq: T,
}

/// Unit-norm beamforming columns, one per device (`L x K`), plus the ridge
/// factor that produced them.
#[derive(Clone, Debug)]
pub struct BeamformingMatrix<T> {
    pub v: ComplexMatrix<T>,
    pub alpha: T,
}

/// Bandwidth, total noise power, and transmit powers entering the rate law.
#[derive(Clone, Debug)]
pub struct RateInputs<T> {
    pub bandwidth_hz: T,
    pub noise_power_mw: T,
    pub p_tx_mw: Vec<T>,
}

impl<T: Scalar> RateInputs<T> {
    pub fn new(bandwidth_hz: T, noise_power_mw: T, p_tx_mw: Vec<T>) -> Result<Self> {
        if !(bandwidth_hz > T::zero()) {
            return Err(Error::invalid("bandwidth_hz", "must be positive"));
        }
        if !(noise_power_mw > T::zero()) {
            return Err(Error::invalid("noise_power_mw", "must be positive"));
        }
        if p_tx_mw.iter().any(|p| *p < T::zero()) {
            return Err(Error::invalid("p_tx_mw", "entries must be non-negative"));
        }
        Ok(Self { bandwidth_hz, noise_power_mw, p_tx_mw })
    }
}

/// One circularly-symmetric complex Gaussian draw with total variance `var`.
pub(crate) fn complex_gaussian<T: Scalar, R: Rng + ?Sized>(var: T, rng: &mut R) -> Complex<T> {
    let half = (var / T::from_config(2.0)).sqrt();
    let re = T::sample_standard_normal(rng) * half;
    let im = T::sample_standard_normal(rng) * half;
    Complex::new(re, im)
}

/// Draw an estimated/true channel pair.
///
/// Estimate entries have variance `1 - sigma_h_sq`, error entries variance
/// `sigma_h_sq`, ground truth is their sum.
pub fn sample_channel_pair<T: Scalar, R: Rng + ?Sized>(
    num_antennas: usize,
    num_devices: usize,
    sigma_h_sq: T,
    rng: &mut R,
) -> Result<ChannelPair<T>> {
    if num_antennas == 0 || num_devices == 0 {
        return Err(Error::invalid("dimensions", "need at least one antenna and one device"));
    }
    if !(sigma_h_sq >= T::zero() && sigma_h_sq <= T::one()) {
        return Err(Error::invalid("sigma_h_sq", format!("{sigma_h_sq} outside [0, 1]")));
    }
    let est_var = T::one() - sigma_h_sq;
    let mut h_est = ComplexMatrix::zeros(num_devices, num_antennas);
    let mut h_true = ComplexMatrix::zeros(num_devices, num_antennas);
    for k in 0..num_devices {
        for l in 0..num_antennas {
            let est = complex_gaussian(est_var, rng);
            let err = complex_gaussian(sigma_h_sq, rng);
            h_est[(k, l)] = est;
            h_true[(k, l)] = est + err;
        }
    }
    Ok(ChannelPair { h_true, h_est, sigma_h_sq })
}

/// Regularized zero-forcing beamformers from estimated channels.
///
/// With `E` the `L x K` matrix of estimated channel columns, computes
/// `E (E^H E + alpha I)^(-1)` and normalizes each column to unit norm.
pub fn rzf_beamformers<T: Scalar>(h_est: &ComplexMatrix<T>, alpha: T) -> Result<BeamformingMatrix<T>> {
    if !(alpha > T::zero()) {
        return Err(Error::invalid("alpha", "ridge factor must be positive"));
    }
    let k = h_est.rows();
    let l = h_est.cols();

    // Column k of E is device k's estimated channel vector.
    let e = ComplexMatrix::from_fn(l, k, |r, c| h_est[(c, r)]);
    let mut gram = e.hermitian_transpose().matmul(&e)?;
    for i in 0..k {
        gram[(i, i)] = gram[(i, i)] + Complex::new(alpha, T::zero());
    }
    let inv = cholesky_solve(&gram, &scaled_identity(k, T::one()))?;
    let mut v = e.matmul(&inv)?;

    for c in 0..k {
        let norm = v.col_norm(c);
        if !(norm > T::zero()) {
            return Err(Error::invalid("h_est", format!("estimated channel {c} is zero")));
        }
        for r in 0..l {
            v[(r, c)] = v[(r, c)] / norm;
        }
    }
    Ok(BeamformingMatrix { v, alpha })
}

/// Complex effective-channel matrix: entry `(i, j)` is `h_i^H v_j`.
pub fn effective_products<T: Scalar>(
    channels: &ComplexMatrix<T>,
    v: &BeamformingMatrix<T>,
) -> ComplexMatrix<T> {
    let k = channels.rows();
    let nb = v.v.cols();
    ComplexMatrix::from_fn(k, nb, |i, j| {
        let mut acc = Complex::new(T::zero(), T::zero());
        for l in 0..channels.cols() {
            acc = acc + channels[(i, l)].conj() * v.v[(l, j)];
        }
        acc
    })
}

/// Row-major `K x K` effective link gains `|h_i^H v_j|^2`.
pub fn effective_gains<T: Scalar>(channels: &ComplexMatrix<T>, v: &BeamformingMatrix<T>) -> Vec<T> {
    effective_products(channels, v)
        .as_slice()
        .iter()
        .map(|e| e.norm_sqr())
        .collect()
}

/// Rates from precomputed link gains (row-major `K x K`).
pub fn rates_from_gains<T: Scalar>(gains: &[T], num_devices: usize, inputs: &RateInputs<T>) -> Vec<T> {
    debug_assert_eq!(gains.len(), num_devices * num_devices);
    debug_assert_eq!(inputs.p_tx_mw.len(), num_devices);
    let mut rates = Vec::with_capacity(num_devices);
    for k in 0..num_devices {
        let row = &gains[k * num_devices..(k + 1) * num_devices];
        let mut interference = T::zero();
        for (j, g) in row.iter().enumerate() {
            if j != k {
                interference = interference + *g * inputs.p_tx_mw[j];
            }
        }
        let sinr = row[k] * inputs.p_tx_mw[k] / (interference + inputs.noise_power_mw);
        rates.push(inputs.bandwidth_hz * (T::one() + sinr).log2());
    }
    rates
}

/// Achievable rate of every device in bit/s.
///
/// `r_k = W log2(1 + |h_k^H v_k|^2 p_k / (sum_{j != k} |h_k^H v_j|^2 p_j + noise))`
pub fn achievable_rates<T: Scalar>(
    channels: &ComplexMatrix<T>,
    v: &BeamformingMatrix<T>,
    inputs: &RateInputs<T>,
) -> Vec<T> {
    let gains = effective_gains(channels, v);
    rates_from_gains(&gains, channels.rows(), inputs)
}
