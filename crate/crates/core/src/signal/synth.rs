//! Synthetic detector time series: spectrally shaped Gaussian noise plus
//! injected information tones.
//!
//! Noise is produced by frequency-domain shaping: each positive-frequency
//! bin gets an independent complex Gaussian with variance matched to the
//! target one-sided PSD, and the inverse FFT of the Hermitian spectrum
//! yields the real series.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::series::TimeSeries;
use crate::stochastic::RandomSource;

use super::{noise_psd, NoiseModel, SignalModel};

/// Conversion factor between tone energy and mean-square signal power:
/// a tone of energy E is injected with amplitude `sqrt(2 E RATE_SCALE)`,
/// so its time-domain power (variance) is `E * RATE_SCALE`. The factor is
/// an artifact convention; keeping it 1 makes the energy readback from
/// integrated excess power a plain identity.
pub const RATE_SCALE: f64 = 1.0;

/// Tone amplitude for information content `z` at temperature `T`:
/// `a = sqrt(2 Z k_B T RATE_SCALE)`.
pub fn tone_amplitude(z: f64, temperature: f64, constants: &PhysicalConstants) -> f64 {
    (2.0 * z * constants.k_b * temperature * RATE_SCALE).sqrt()
}

/// Shapes white Gaussian noise to an arbitrary one-sided target PSD
/// (power per Hz as a function of frequency in Hz).
pub fn synthesize_from_psd(
    target: impl Fn(f64) -> f64,
    n_samples: usize,
    sample_rate: f64,
    source: &mut RandomSource,
) -> Result<TimeSeries> {
    if n_samples < 64 {
        return Err(Error::Validation(format!(
            "need at least 64 samples, got {n_samples}"
        )));
    }
    if !(sample_rate > 0.0) {
        return Err(Error::Validation(format!(
            "sample rate must be positive, got {sample_rate}"
        )));
    }
    let n = n_samples;
    let nf = n as f64;
    let mut spectrum = vec![Complex64::new(0.0, 0.0); n];
    let half = n / 2;
    for j in 1..half {
        let f = j as f64 * sample_rate / nf;
        let s = target(f);
        if s < 0.0 {
            return Err(Error::Validation(format!(
                "target PSD must be non-negative, got {s} at {f} Hz"
            )));
        }
        // E|X_j|^2 = S fs n / 2 for a mirrored interior bin
        let scale = (s * sample_rate * nf / 4.0).sqrt();
        let x = Complex64::new(
            scale * source.standard_normal(),
            scale * source.standard_normal(),
        );
        spectrum[j] = x;
        spectrum[n - j] = x.conj();
    }
    if n % 2 == 0 {
        let f = half as f64 * sample_rate / nf;
        let s = target(f).max(0.0);
        spectrum[half] = Complex64::new((s * sample_rate * nf).sqrt() * source.standard_normal(), 0.0);
    }

    let mut buf = spectrum;
    FftPlanner::new()
        .plan_fft_inverse(n)
        .process(&mut buf);
    let samples: Vec<f64> = buf.iter().map(|z| z.re / nf).collect();
    TimeSeries::new(sample_rate, samples, 0.0)
}

/// Gaussian noise realization whose one-sided PSD follows `M X(w)` from
/// the heat-current noise model. `M = 0` produces the all-zero series.
pub fn synthesize_noise(
    model: &NoiseModel,
    m_amp: f64,
    duration: f64,
    sample_rate: f64,
    source: &mut RandomSource,
) -> Result<TimeSeries> {
    if m_amp < 0.0 {
        return Err(Error::Domain(format!(
            "noise amplitude must be non-negative, got {m_amp}"
        )));
    }
    let n = (duration * sample_rate).round() as usize;
    if n < 64 {
        return Err(Error::Validation(format!(
            "duration x sample_rate must give at least 64 samples, got {n}"
        )));
    }
    if m_amp == 0.0 {
        return TimeSeries::new(sample_rate, vec![0.0; n], 0.0);
    }
    let target = |f: f64| {
        if f <= 0.0 {
            0.0
        } else {
            m_amp * noise_psd(std::f64::consts::TAU * f, model).unwrap_or(0.0)
        }
    };
    synthesize_from_psd(target, n, sample_rate, source)
}

/// Adds the model's tones to a series: each tone contributes
/// `a_k sin(w_k t + phi_k)` with its amplitude derived from the tone's
/// information energy and a deterministic phase drawn from `source`.
pub fn inject_tones(
    series: &TimeSeries,
    model: &SignalModel,
    source: &mut RandomSource,
) -> Result<TimeSeries> {
    let nyquist = series.sample_rate / 2.0;
    for tone in &model.tones {
        let f = tone.omega / std::f64::consts::TAU;
        if f >= nyquist {
            return Err(Error::Domain(format!(
                "tone at {f} Hz is at or above the Nyquist frequency {nyquist} Hz"
            )));
        }
    }
    let mut samples = series.samples.clone();
    for tone in &model.tones {
        let amp = tone_amplitude(tone.z, model.temperature(), &model.noise.constants);
        let phase = std::f64::consts::TAU * source.uniform();
        for (i, s) in samples.iter_mut().enumerate() {
            let t = series.time_at(i);
            *s += amp * (tone.omega * t + phase).sin();
        }
    }
    TimeSeries::new(series.sample_rate, samples, series.start_time)
}
