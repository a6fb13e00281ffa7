//! Unit conversions at the config boundary.
//!
//! All powers are carried in milliwatts internally; dBm shows up only in
//! configuration files and report labels.

use crate::scalar::Scalar;

/// dBm to milliwatts: `p = 10^(dbm/10)`.
pub fn dbm_to_mw<T: Scalar>(dbm: T) -> T {
    let ten = T::from_config(10.0);
    ten.powf(dbm / ten)
}

/// Milliwatts to dBm.
pub fn mw_to_dbm<T: Scalar>(mw: T) -> T {
    let ten = T::from_config(10.0);
    ten * mw.log10()
}

/// Total noise power in mW for a noise PSD in dBm/Hz over a bandwidth in Hz.
pub fn noise_power_mw<T: Scalar>(psd_dbm_per_hz: T, bandwidth_hz: T) -> T {
    dbm_to_mw(psd_dbm_per_hz) * bandwidth_hz
}
