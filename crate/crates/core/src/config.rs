//! JSON run configuration for the CLI.
//!
//! Unknown keys are rejected everywhere so a typo cannot silently fall
//! back to a default. Every output JSON embeds the fully resolved config
//! (defaults applied, CLI overrides folded in) so a run is reproducible
//! from its outputs alone. Validating example configs live under
//! `configs/`.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

use crate::constants::UnitsMode;
use crate::error::{Error, Result};
use crate::signal::{Damping, Window};

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub units: UnitsMode,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<WordConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entropy: Option<EntropyConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trajectory: Option<TrajectoryConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generate: Option<GenerateConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detect: Option<DetectConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power: Option<PowerConfig>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }
}

/// `word` block: probability weights keyed by word index.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordConfig {
    pub weights: BTreeMap<u32, f64>,
}

/// `spectrum` block: Hamiltonian parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumConfig {
    pub omega: f64,
    pub zeta: f64,
    /// Mode-word coupling; the model leaves it free.
    #[serde(default = "default_lambda")]
    pub lambda: f64,
    /// Fock truncation.
    #[serde(default = "default_dim")]
    pub dim: usize,
}

fn default_lambda() -> f64 {
    0.1
}

fn default_dim() -> usize {
    64
}

/// Complex number on the wire: `[re, im]`.
pub type ComplexPair = [f64; 2];

/// `entropy` block: any combination of a joint distribution, a density
/// matrix, and a bipartite pure state.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct EntropyConfig {
    /// Joint distribution rows (word index major).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub joint: Option<Vec<Vec<f64>>>,
    /// Density matrix rows of `[re, im]` pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density: Option<Vec<Vec<ComplexPair>>>,
    /// Bipartite pure state for entanglement entropy.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub state: Option<StateConfig>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateConfig {
    /// Amplitudes in the row-major composite basis (subsystem A slow).
    pub amplitudes: Vec<ComplexPair>,
    /// Subsystem dimensions `[dim_a, dim_b]`.
    pub dims: [usize; 2],
}

/// `trajectory` block: Markov chain plus pure states per chain state.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrajectoryConfig {
    /// Row-stochastic transition matrix.
    pub transition: Vec<Vec<f64>>,
    /// Word index per chain state; defaults to 0..n.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word_indices: Option<Vec<u32>>,
    /// One normalized state vector per chain state.
    pub states: Vec<Vec<ComplexPair>>,
    pub t_max: f64,
    pub steps: usize,
    /// Trailing occupation window.
    pub window: usize,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoiseConfig {
    pub k_const: f64,
    pub temperature: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToneConfig {
    pub freq_hz: f64,
    /// Information content Z_k carried by the tone.
    pub z: f64,
}

fn default_m_amp() -> f64 {
    1.0
}

fn default_damping() -> Damping {
    Damping::Constant { gamma0: 0.0 }
}

/// `generate` block: synthetic detector series.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerateConfig {
    pub noise: NoiseConfig,
    #[serde(default = "default_m_amp")]
    pub m_amp: f64,
    #[serde(default)]
    pub tones: Vec<ToneConfig>,
    #[serde(default = "default_damping")]
    pub damping: Damping,
    pub duration: f64,
    pub sample_rate: f64,
}

fn default_overlap() -> f64 {
    0.5
}

fn default_threshold() -> f64 {
    5.0
}

/// `detect` block: Welch estimation and thresholding parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DetectConfig {
    pub segment_length: usize,
    #[serde(default = "default_overlap")]
    pub overlap: f64,
    #[serde(default)]
    pub window: Window,
    #[serde(default = "default_threshold")]
    pub threshold_sigma: f64,
    /// Analytic noise-floor model for the excess-power comparison.
    pub noise: NoiseConfig,
    #[serde(default = "default_m_amp")]
    pub m_amp: f64,
}

/// `power` block: measured signal power over a window.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PowerConfig {
    /// Information content Z.
    pub z: f64,
    /// Mode angular frequency.
    pub omega: f64,
    pub t_start: f64,
    pub t_end: f64,
    pub points: usize,
    #[serde(default)]
    pub m_amp: f64,
    #[serde(default = "default_damping")]
    pub damping: Damping,
    pub noise: NoiseConfig,
}
