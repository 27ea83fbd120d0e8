//! Excess-power detection of spectral information signatures against a
//! modeled or measured noise floor.
//!
//! The averaged periodogram at each bin is chi-square distributed; its
//! standard deviation is floor / sqrt(n_segments), which sets the SNR
//! scale for thresholding. Integrated excess power above the floor is
//! converted back to an information estimate through the energy mapping.

use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

use super::{invert_information, noise_psd, NoiseModel, PsdEstimate, RATE_SCALE};

/// Noise floor reference for detection.
#[derive(Debug, Clone)]
pub enum NoiseFloor {
    /// A previously measured PSD on the same frequency grid.
    Measured(PsdEstimate),
    /// The analytic heat-current floor `M X(w)`.
    Analytic { model: NoiseModel, m_amp: f64 },
}

/// A single flagged spectral bin.
#[derive(Debug, Clone, Serialize)]
pub struct Detection {
    pub freq_hz: f64,
    /// Measured PSD at the bin.
    pub power: f64,
    /// Noise floor PSD at the bin.
    pub floor: f64,
    pub snr: f64,
    /// Energy estimate from integrated excess power.
    pub energy_est: f64,
    /// Information estimate `Z = E / (k_B T)`.
    pub z_est: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DetectionReport {
    pub threshold_sigma: f64,
    pub n_segments: usize,
    pub detections: Vec<Detection>,
}

/// Flags bins whose measured PSD exceeds the floor by at least
/// `threshold_sigma` floor standard deviations. The DC bin is skipped.
pub fn detect_excess_power(
    psd: &PsdEstimate,
    floor: &NoiseFloor,
    threshold_sigma: f64,
    temperature: f64,
    constants: &PhysicalConstants,
) -> Result<DetectionReport> {
    if !(threshold_sigma > 0.0) {
        return Err(Error::Validation(format!(
            "threshold must be positive, got {threshold_sigma}"
        )));
    }
    let floor_values: Vec<f64> = match floor {
        NoiseFloor::Measured(reference) => {
            if reference.frequencies.len() != psd.frequencies.len() {
                return Err(Error::Shape(format!(
                    "floor grid has {} bins, measurement has {}",
                    reference.frequencies.len(),
                    psd.frequencies.len()
                )));
            }
            for (a, b) in reference.frequencies.iter().zip(psd.frequencies.iter()) {
                if (a - b).abs() > 1e-9 * b.abs().max(1.0) {
                    return Err(Error::Shape(format!(
                        "floor frequency {a} does not match measurement bin {b}"
                    )));
                }
            }
            reference.densities.clone()
        }
        NoiseFloor::Analytic { model, m_amp } => psd
            .frequencies
            .iter()
            .map(|&f| {
                if f <= 0.0 {
                    Ok(0.0)
                } else {
                    Ok(m_amp * noise_psd(std::f64::consts::TAU * f, model)?)
                }
            })
            .collect::<Result<_>>()?,
    };

    let sqrt_n = (psd.n_segments as f64).sqrt();
    let bin_width = psd.bin_width();
    let mut detections = Vec::new();
    for j in 1..psd.frequencies.len() {
        let floor_j = floor_values[j];
        if floor_j <= 0.0 {
            continue;
        }
        let std = floor_j / sqrt_n;
        let snr = (psd.densities[j] - floor_j) / std;
        if snr >= threshold_sigma {
            let excess = (psd.densities[j] - floor_j) * bin_width;
            let energy_est = excess / RATE_SCALE;
            let z_est = invert_information(energy_est, temperature, constants)?;
            detections.push(Detection {
                freq_hz: psd.frequencies[j],
                power: psd.densities[j],
                floor: floor_j,
                snr,
                energy_est,
                z_est,
            });
        }
    }
    Ok(DetectionReport {
        threshold_sigma,
        n_segments: psd.n_segments,
        detections,
    })
}
