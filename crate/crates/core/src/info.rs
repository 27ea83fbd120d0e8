//! Information quanta, probability-weighted information words, and the
//! information/energy mapping.
//!
//! The quantum of information carried by word index `n` is
//! `zeta(n) = 2^n ln2 / (2pi)`; a word is a probability-weighted sum of
//! quanta. Energy follows from the word value as `E = Z k_B T`, and a
//! photon of that energy can pair-produce once `E >= 2 m c^2`.

use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::TAU;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

/// Largest representable word index: 2^n overflows f64 usefulness beyond this.
pub const MAX_WORD_INDEX: u32 = 1023;

/// Absolute tolerance on probability normalization.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Quantum of information for word index `n`: `2^n ln2 / (2pi)`.
pub fn zeta(n: u32) -> Result<f64> {
    if n > MAX_WORD_INDEX {
        return Err(Error::Domain(format!(
            "word index {n} exceeds maximum {MAX_WORD_INDEX}"
        )));
    }
    Ok((n as f64).exp2() * std::f64::consts::LN_2 / TAU)
}

/// The elementary quantum `zeta(0) = ln2 / (2pi)`.
pub fn zeta_0() -> f64 {
    std::f64::consts::LN_2 / TAU
}

/// Normalized probability weights over word indices. Only constructible
/// through the validating constructors.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct ProbabilityWeights {
    weights: BTreeMap<u32, f64>,
}

impl ProbabilityWeights {
    pub fn new(weights: BTreeMap<u32, f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Validation("weights map is empty".into()));
        }
        let mut sum = 0.0;
        for (&n, &p) in &weights {
            if !(0.0..=1.0).contains(&p) || !p.is_finite() {
                return Err(Error::Validation(format!(
                    "weight for index {n} must lie in [0, 1], got {p}"
                )));
            }
            sum += p;
        }
        if (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::Validation(format!(
                "weights must sum to 1 within {NORMALIZATION_TOL:e}, got {sum}"
            )));
        }
        Ok(ProbabilityWeights { weights })
    }

    /// Builds from an index-aligned slice of probabilities.
    pub fn from_slice(probs: &[f64]) -> Result<Self> {
        Self::new(
            probs
                .iter()
                .enumerate()
                .map(|(i, &p)| (i as u32, p))
                .collect(),
        )
    }

    pub fn get(&self, n: u32) -> f64 {
        self.weights.get(&n).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.weights.iter().map(|(&n, &p)| (n, p))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// A validated information word: weights plus the scalar value
/// `Z = sum_n Pi(n) zeta(n)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InformationWord {
    pub weights: ProbabilityWeights,
    pub value: f64,
}

/// Computes the information word value from its weights.
pub fn word_information(weights: &ProbabilityWeights) -> Result<InformationWord> {
    let mut value = 0.0;
    for (n, p) in weights.iter() {
        value += p * zeta(n)?;
    }
    Ok(InformationWord {
        weights: weights.clone(),
        value,
    })
}

/// Energy quantum of a field mode at angular frequency `omega`:
/// `(1/2pi) h omega = hbar omega` in the model's convention.
pub fn mode_energy_quantum(omega: f64, constants: &PhysicalConstants) -> Result<f64> {
    mode_energy_quantum_with(omega, constants, false)
}

/// Same as [`mode_energy_quantum`] but with `zero_point_half` selecting the
/// conventional `hbar omega / 2` zero-point value instead.
pub fn mode_energy_quantum_with(
    omega: f64,
    constants: &PhysicalConstants,
    zero_point_half: bool,
) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::Domain(format!(
            "angular frequency must be positive, got {omega}"
        )));
    }
    let e = constants.h * omega / TAU;
    Ok(if zero_point_half { e / 2.0 } else { e })
}

/// Energy carried by information content `Z` at temperature `T`:
/// `E = Z k_B T` (k_B = 1 in natural units).
pub fn information_energy(z: f64, temperature: f64, constants: &PhysicalConstants) -> Result<f64> {
    if temperature < 0.0 {
        return Err(Error::Domain(format!(
            "temperature must be non-negative, got {temperature}"
        )));
    }
    Ok(z * constants.k_b * temperature)
}

/// Kinematic pair-production threshold: `E >= 2 m0 c^2`.
pub fn pair_production_allowed(
    energy: f64,
    m0: f64,
    constants: &PhysicalConstants,
) -> Result<bool> {
    if energy < 0.0 {
        return Err(Error::Domain(format!(
            "energy must be non-negative, got {energy}"
        )));
    }
    if !(m0 > 0.0) {
        return Err(Error::Domain(format!("mass must be positive, got {m0}")));
    }
    Ok(energy >= 2.0 * m0 * constants.c * constants.c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn zeta_elementary_values() {
        assert_relative_eq!(zeta(0).unwrap(), 0.110_317_82, epsilon = 1e-7);
        assert_relative_eq!(zeta(1).unwrap(), 0.220_635_65, epsilon = 1e-7);
        // hand arithmetic: 1024 * ln2 / 2pi
        assert_relative_eq!(
            zeta(10).unwrap(),
            1024.0 * 0.110_317_800_076_325_8,
            max_relative = 1e-12
        );
    }

    #[test]
    fn zeta_doubles_exactly() {
        for n in 0..60 {
            let lo = zeta(n).unwrap();
            let hi = zeta(n + 1).unwrap();
            assert_relative_eq!(hi / lo, 2.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn zeta_rejects_overflow_index() {
        assert!(zeta(MAX_WORD_INDEX).is_ok());
        assert!(zeta(MAX_WORD_INDEX + 1).is_err());
    }

    #[test]
    fn word_single_term() {
        let w = ProbabilityWeights::new([(0, 1.0)].into()).unwrap();
        let word = word_information(&w).unwrap();
        assert_relative_eq!(word.value, zeta_0(), max_relative = 1e-12);
    }

    #[test]
    fn word_hand_sum() {
        // 0.5 * zeta_0 + 0.5 * zeta_1
        let w = ProbabilityWeights::new([(0, 0.5), (1, 0.5)].into()).unwrap();
        let word = word_information(&w).unwrap();
        assert_relative_eq!(word.value, 0.165_476_7, max_relative = 1e-6);

        let w5 = ProbabilityWeights::new([(5, 1.0)].into()).unwrap();
        assert_relative_eq!(
            word_information(&w5).unwrap().value,
            32.0 * std::f64::consts::LN_2 / TAU,
            max_relative = 1e-12
        );
    }

    #[test]
    fn word_linearity_under_convex_combination() {
        let a = ProbabilityWeights::new([(0, 0.25), (2, 0.75)].into()).unwrap();
        let b = ProbabilityWeights::new([(1, 0.6), (3, 0.4)].into()).unwrap();
        let za = word_information(&a).unwrap().value;
        let zb = word_information(&b).unwrap().value;
        let t = 0.3;
        let mut mixed = BTreeMap::new();
        for (n, p) in a.iter() {
            *mixed.entry(n).or_insert(0.0) += t * p;
        }
        for (n, p) in b.iter() {
            *mixed.entry(n).or_insert(0.0) += (1.0 - t) * p;
        }
        let zm = word_information(&ProbabilityWeights::new(mixed).unwrap())
            .unwrap()
            .value;
        assert_relative_eq!(zm, t * za + (1.0 - t) * zb, max_relative = 1e-12);
    }

    #[test]
    fn rejects_unnormalized_weights() {
        assert!(ProbabilityWeights::new([(0, 0.5), (1, 0.4)].into()).is_err());
        assert!(ProbabilityWeights::new([(0, 1.5), (1, -0.5)].into()).is_err());
    }

    #[test]
    fn mode_energy_is_hbar_omega() {
        let c = PhysicalConstants::natural();
        assert_relative_eq!(mode_energy_quantum(1.0, &c).unwrap(), 1.0);
        assert_relative_eq!(mode_energy_quantum(2.5, &c).unwrap(), 2.5);
        let si = PhysicalConstants::si();
        assert_relative_eq!(
            mode_energy_quantum(1e9, &si).unwrap(),
            1.054_571_8e-25,
            max_relative = 1e-7
        );
        // ratio to omega is hbar, independent of omega
        for omega in [1e-3, 1.0, 1e3] {
            assert_relative_eq!(
                mode_energy_quantum(omega, &c).unwrap() / omega,
                c.hbar,
                max_relative = 1e-12
            );
        }
        assert!(mode_energy_quantum(0.0, &c).is_err());
        assert_relative_eq!(mode_energy_quantum_with(1.0, &c, true).unwrap(), 0.5);
    }

    #[test]
    fn information_energy_bilinear() {
        let c = PhysicalConstants::natural();
        assert_relative_eq!(information_energy(1.0, 1.0, &c).unwrap(), 1.0);
        assert_relative_eq!(information_energy(0.0, 7.0, &c).unwrap(), 0.0);
        assert_relative_eq!(
            information_energy(zeta_0(), 2.0, &c).unwrap(),
            0.220_635_6,
            max_relative = 1e-6
        );
        let base = information_energy(0.3, 1.7, &c).unwrap();
        assert_relative_eq!(
            information_energy(0.6, 1.7, &c).unwrap(),
            2.0 * base,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            information_energy(0.3, 3.4, &c).unwrap(),
            2.0 * base,
            max_relative = 1e-12
        );
        assert!(information_energy(1.0, -1.0, &c).is_err());
    }

    #[test]
    fn pair_production_threshold_boundary() {
        let c = PhysicalConstants::si();
        let threshold = 2.0 * c.m_e * c.c * c.c;
        assert!(pair_production_allowed(threshold, c.m_e, &c).unwrap());
        assert!(!pair_production_allowed(threshold * (1.0 - 1e-9), c.m_e, &c).unwrap());
        assert!(!pair_production_allowed(0.0, c.m_e, &c).unwrap());
        assert!(pair_production_allowed(-1.0, c.m_e, &c).is_err());
    }
}
