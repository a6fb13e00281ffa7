//! Robust joint communication/computation resource allocation for a
//! multi-antenna edge base station.
//!
//! A base station with `L` antennas and an embedded compute unit serves `K`
//! single-antenna devices by spatial multiplexing. Each device uploads a task
//! and waits for the result, so its delay has a communication part (output
//! size over achievable rate) and a computation part (required cycles over
//! allocated CPU frequency). The station knows only *estimates* of the
//! channels and of the per-task computation intensities.
//!
//! The crate provides:
//!
//! * [`channel`] — Rayleigh channel draws with MMSE-consistent estimation
//!   error, regularized zero-forcing beamformers, and achievable rates.
//! * [`compute`] — computation-intensity draws, the CPU power/frequency law,
//!   and per-device total delays.
//! * [`allocator`] — the feed-forward allocator network with softmax output
//!   heads that produce a jointly feasible power/cycle allocation, plus exact
//!   reverse-mode gradients through the whole map.
//! * [`robust`] — uncertainty injection: sample error realizations around the
//!   estimates, evaluate worst-case delays, and extract the empirical
//!   quantile with a well-defined gradient path.
//! * [`trainer`] — unsupervised minibatch training of the allocator on the
//!   robust delay objective, with validation-based model selection.
//!
//! All numeric code is generic over the scalar type via [`scalar::Scalar`]
//! (implemented for `f32` and `f64`); the aliases at the crate root pin the
//! `f64` instantiations used by the CLI harness.

pub mod allocator;
pub mod channel;
pub mod compute;
pub mod error;
pub mod linalg;
pub mod rng;
pub mod robust;
pub mod scalar;
pub mod scenario;
pub mod trainer;
pub mod units;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// `f64` instantiations used throughout the CLI harness.
pub type SystemParamsF64 = scenario::SystemParams<f64>;
pub type NetworkRealizationF64 = scenario::NetworkRealization<f64>;
pub type AllocatorModelF64 = allocator::AllocatorModel<f64>;
pub type ResourceAllocationF64 = allocator::ResourceAllocation<f64>;
pub type UncertaintyBatchF64 = robust::UncertaintyBatch<f64>;
pub type TrainingConfigF64 = trainer::TrainingConfig<f64>;
pub type TrainingReportF64 = trainer::TrainingReport<f64>;
