//! Welch power spectral density estimation.
//!
//! One-sided estimate with window-power (density) normalization: a
//! unit-variance white input integrates to 1 across [0, fs/2].

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TimeSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Window {
    #[default]
    Hann,
    Rectangular,
}

impl Window {
    fn values(self, len: usize) -> Vec<f64> {
        match self {
            Window::Rectangular => vec![1.0; len],
            Window::Hann => (0..len)
                .map(|i| {
                    let x = std::f64::consts::TAU * i as f64 / len as f64;
                    0.5 * (1.0 - x.cos())
                })
                .collect(),
        }
    }
}

/// Averaged one-sided periodogram.
#[derive(Debug, Clone, PartialEq)]
pub struct PsdEstimate {
    /// Bin frequencies in Hz, ascending from 0 to fs/2.
    pub frequencies: Vec<f64>,
    /// Power per Hz.
    pub densities: Vec<f64>,
    pub segment_length: usize,
    pub overlap: f64,
    pub window: Window,
    pub n_segments: usize,
    pub sample_rate: f64,
}

impl PsdEstimate {
    pub fn bin_width(&self) -> f64 {
        self.sample_rate / self.segment_length as f64
    }

    /// Integral of the PSD over frequency (total power).
    pub fn total_power(&self) -> f64 {
        self.densities.iter().sum::<f64>() * self.bin_width()
    }

    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("freq_hz,psd\n");
        for (f, p) in self.frequencies.iter().zip(self.densities.iter()) {
            out.push_str(&format!("{f:.16e},{p:.16e}\n"));
        }
        out
    }

    pub fn write_csv(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_csv_string())?;
        Ok(())
    }
}

/// Welch PSD of a series: overlapping windowed segments, averaged
/// one-sided periodograms. `segment_length` must be a power of two no
/// longer than the series; `overlap` is a fraction in [0, 0.9].
pub fn welch_psd(
    series: &TimeSeries,
    segment_length: usize,
    overlap: f64,
    window: Window,
) -> Result<PsdEstimate> {
    if !segment_length.is_power_of_two() || segment_length < 2 {
        return Err(Error::Validation(format!(
            "segment length must be a power of two >= 2, got {segment_length}"
        )));
    }
    if segment_length > series.len() {
        return Err(Error::Validation(format!(
            "segment length {segment_length} exceeds series length {}",
            series.len()
        )));
    }
    if !(0.0..=0.9).contains(&overlap) {
        return Err(Error::Validation(format!(
            "overlap must lie in [0, 0.9], got {overlap}"
        )));
    }
    let hop = ((segment_length as f64 * (1.0 - overlap)).round() as usize).max(1);
    let n_segments = (series.len() - segment_length) / hop + 1;

    let w = window.values(segment_length);
    let window_power: f64 = w.iter().map(|x| x * x).sum();
    let scale = 1.0 / (series.sample_rate * window_power);

    let fft = FftPlanner::new().plan_fft_forward(segment_length);
    let half = segment_length / 2;
    let mut acc = vec![0.0f64; half + 1];
    let mut buf = vec![Complex64::new(0.0, 0.0); segment_length];
    for s in 0..n_segments {
        let start = s * hop;
        for i in 0..segment_length {
            buf[i] = Complex64::new(series.samples[start + i] * w[i], 0.0);
        }
        fft.process(&mut buf);
        for j in 0..=half {
            let mut p = buf[j].norm_sqr() * scale;
            if j != 0 && j != half {
                p *= 2.0; // one-sided doubling of interior bins
            }
            acc[j] += p;
        }
    }
    let densities: Vec<f64> = acc.iter().map(|p| p / n_segments as f64).collect();
    let frequencies: Vec<f64> = (0..=half)
        .map(|j| j as f64 * series.sample_rate / segment_length as f64)
        .collect();
    Ok(PsdEstimate {
        frequencies,
        densities,
        segment_length,
        overlap,
        window,
        n_segments,
        sample_rate: series.sample_rate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stochastic::RandomSource;

    #[test]
    fn white_noise_is_flat_and_normalized() {
        let mut src = RandomSource::new(12);
        let n = 1 << 14;
        let samples: Vec<f64> = (0..n).map(|_| src.standard_normal()).collect();
        let ts = TimeSeries::new(256.0, samples, 0.0).unwrap();
        let psd = welch_psd(&ts, 256, 0.5, Window::Hann).unwrap();
        assert!(psd.n_segments >= 32);
        // unit-variance input integrates to ~1
        let total = psd.total_power();
        assert!((total - 1.0).abs() < 0.1, "total power {total}");
        // flatness: exclude edge bins, max/median bounded
        let mut interior: Vec<f64> = psd.densities[1..psd.densities.len() - 1].to_vec();
        interior.sort_by(f64::total_cmp);
        let median = interior[interior.len() / 2];
        let max = interior[interior.len() - 1];
        assert!(max / median <= 3.0, "max/median = {}", max / median);
    }

    #[test]
    fn sinusoid_at_exact_bin_concentrates_power() {
        // rectangular window has zero leakage at an exact bin frequency
        let fs = 1024.0;
        let n = 8192;
        let f0 = 128.0;
        let a = 2.0;
        let samples: Vec<f64> = (0..n)
            .map(|i| a * (std::f64::consts::TAU * f0 * i as f64 / fs).sin())
            .collect();
        let ts = TimeSeries::new(fs, samples, 0.0).unwrap();
        let psd = welch_psd(&ts, 256, 0.0, Window::Rectangular).unwrap();
        let peak = psd
            .frequencies
            .iter()
            .position(|&f| (f - f0).abs() < 1e-9)
            .unwrap();
        let peak_power = psd.densities[peak] * psd.bin_width();
        let total: f64 = psd.total_power();
        assert!(peak_power / total >= 0.9, "peak fraction {}", peak_power / total);
        // sinusoid power a^2/2
        assert!((total - a * a / 2.0).abs() / (a * a / 2.0) < 1e-6);
    }

    #[test]
    fn zero_input_gives_zero_psd() {
        let ts = TimeSeries::new(64.0, vec![0.0; 512], 0.0).unwrap();
        let psd = welch_psd(&ts, 128, 0.5, Window::Hann).unwrap();
        assert!(psd.densities.iter().all(|&p| p == 0.0));
    }

    #[test]
    fn validates_segmentation() {
        let ts = TimeSeries::new(64.0, vec![0.0; 100], 0.0).unwrap();
        assert!(welch_psd(&ts, 100, 0.5, Window::Hann).is_err()); // not pow2
        assert!(welch_psd(&ts, 128, 0.5, Window::Hann).is_err()); // too long
        assert!(welch_psd(&ts, 64, 0.95, Window::Hann).is_err()); // overlap
        let psd = welch_psd(&ts, 64, 0.5, Window::Hann).unwrap();
        assert_eq!(psd.frequencies.len(), 33);
        assert!((psd.bin_width() - 1.0).abs() < 1e-12);
    }
}
