//! The information matrix Z(w), heat-current noise floor, signal power,
//! synthetic detector time series, Welch spectral estimation, and
//! excess-power detection.

mod detect;
mod synth;
mod welch;

pub use detect::{detect_excess_power, Detection, DetectionReport, NoiseFloor};
pub use synth::{inject_tones, synthesize_from_psd, synthesize_noise, tone_amplitude, RATE_SCALE};
pub use welch::{welch_psd, PsdEstimate, Window};

use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

/// Every symbol entering the generalized information matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InformationMatrixInputs {
    /// Mode angular frequency w_k.
    pub omega_k: f64,
    /// Temperature T.
    pub temperature: f64,
    /// Joint / entanglement entropy value S(k, n).
    pub entropy: f64,
    /// Mode-word coupling lambda_{k,n}.
    pub lambda: f64,
    /// Probability Pi(n) of the word.
    pub pi: f64,
    /// Information quantum zeta_n.
    pub zeta: f64,
    pub constants: PhysicalConstants,
}

impl InformationMatrixInputs {
    pub fn validate(&self) -> Result<()> {
        if !(self.omega_k > 0.0) {
            return Err(Error::Domain(format!(
                "omega_k must be positive, got {}",
                self.omega_k
            )));
        }
        if self.temperature == 0.0 {
            return Err(Error::Domain(
                "information matrix divides by temperature; T must be non-zero".into(),
            ));
        }
        if !(self.temperature > 0.0) {
            return Err(Error::Domain(format!(
                "temperature must be positive, got {}",
                self.temperature
            )));
        }
        if !(0.0..=1.0).contains(&self.pi) {
            return Err(Error::Domain(format!(
                "probability must lie in [0, 1], got {}",
                self.pi
            )));
        }
        if self.entropy < 0.0 {
            return Err(Error::Domain(format!(
                "entropy must be non-negative, got {}",
                self.entropy
            )));
        }
        Ok(())
    }
}

/// Generalized information matrix value
/// `Z(w) = h T^-1 S lambda w_k Pi zeta`, evaluated verbatim.
///
/// The product only comes out dimensionless in natural units; SI callers
/// get the literal product with SI h.
pub fn information_matrix_z(inputs: &InformationMatrixInputs) -> Result<f64> {
    inputs.validate()?;
    Ok(inputs.constants.h / inputs.temperature
        * inputs.entropy
        * inputs.lambda
        * inputs.omega_k
        * inputs.pi
        * inputs.zeta)
}

/// Heat-current noise parameters: channel constant K and temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseModel {
    /// Channel material constant K.
    pub k_const: f64,
    /// Bath temperature T (kelvin); T = 0 keeps only the zero-point term.
    pub temperature: f64,
    pub constants: PhysicalConstants,
}

impl NoiseModel {
    pub fn new(k_const: f64, temperature: f64, constants: PhysicalConstants) -> Result<Self> {
        if !(k_const > 0.0) {
            return Err(Error::Domain(format!(
                "channel constant K must be positive, got {k_const}"
            )));
        }
        if temperature < 0.0 {
            return Err(Error::Domain(format!(
                "temperature must be non-negative, got {temperature}"
            )));
        }
        Ok(NoiseModel {
            k_const,
            temperature,
            constants,
        })
    }
}

/// One-sided heat-current noise PSD
/// `X(w) = (K/pi) [hbar w / 2 + hbar w / (exp(hbar w / k_B T) - 1)]`.
/// At T = 0 the Bose term is 0 and the zero-point floor remains.
pub fn noise_psd(omega: f64, model: &NoiseModel) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::Domain(format!(
            "angular frequency must be positive, got {omega}"
        )));
    }
    let hw = model.constants.hbar * omega;
    let bose = if model.temperature == 0.0 {
        0.0
    } else {
        let x = hw / (model.constants.k_b * model.temperature);
        if x > 700.0 {
            0.0 // exp would overflow; occupation is numerically zero
        } else {
            hw / (x.exp() - 1.0)
        }
    };
    Ok(model.k_const / std::f64::consts::PI * (hw / 2.0 + bose))
}

/// Damping / back-action term Gamma(t).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Damping {
    Constant { gamma0: f64 },
    Exponential { gamma0: f64, tau: f64 },
}

impl Damping {
    pub fn at(&self, t: f64) -> f64 {
        match *self {
            Damping::Constant { gamma0 } => gamma0,
            Damping::Exponential { gamma0, tau } => gamma0 * (-t / tau).exp(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let g0 = match *self {
            Damping::Constant { gamma0 } => gamma0,
            Damping::Exponential { gamma0, tau } => {
                if !(tau > 0.0) {
                    return Err(Error::Domain(format!(
                        "damping time constant must be positive, got {tau}"
                    )));
                }
                gamma0
            }
        };
        if g0 < 0.0 {
            return Err(Error::Domain(format!(
                "damping amplitude must be non-negative, got {g0}"
            )));
        }
        Ok(())
    }
}

/// A spectral information tone: mode frequency plus its information
/// content Z_k.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tone {
    /// Angular frequency w_k.
    pub omega: f64,
    /// Information word value Z_k carried by the mode.
    pub z: f64,
}

/// Signal model for measured-power expressions and tone injection.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalModel {
    pub tones: Vec<Tone>,
    /// Dimensionless multiplier M on the noise PSD.
    pub m_amp: f64,
    pub damping: Damping,
    pub noise: NoiseModel,
}

impl SignalModel {
    pub fn new(tones: Vec<Tone>, m_amp: f64, damping: Damping, noise: NoiseModel) -> Result<Self> {
        if m_amp < 0.0 {
            return Err(Error::Domain(format!(
                "noise amplitude M must be non-negative, got {m_amp}"
            )));
        }
        damping.validate()?;
        for (i, t) in tones.iter().enumerate() {
            if !(t.omega > 0.0) {
                return Err(Error::Domain(format!(
                    "tone {i} frequency must be positive, got {}",
                    t.omega
                )));
            }
            if t.z < 0.0 {
                return Err(Error::Domain(format!(
                    "tone {i} information content must be non-negative, got {}",
                    t.z
                )));
            }
        }
        for i in 1..tones.len() {
            if tones[..i].iter().any(|t| t.omega == tones[i].omega) {
                return Err(Error::Domain(format!(
                    "tone frequencies must be distinct (duplicate {})",
                    tones[i].omega
                )));
            }
        }
        Ok(SignalModel {
            tones,
            m_amp,
            damping,
            noise,
        })
    }

    pub fn temperature(&self) -> f64 {
        self.noise.temperature
    }
}

/// Time-evolving signal power `H(t) = Zdot T + M X(w) - Gamma(t)`.
pub fn signal_power_rate(z_dot: f64, model: &SignalModel, omega: f64, t: f64) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::Domain(format!("time must be non-negative, got {t}")));
    }
    let x = if model.m_amp == 0.0 {
        0.0
    } else {
        model.m_amp * noise_psd(omega, &model.noise)?
    };
    Ok(z_dot * model.temperature() + x - model.damping.at(t))
}

/// Measured signal power over a window ending at `t`:
/// `H(t) = Z T / t + M X(w) - Gamma(t)`. Undefined at t <= 0.
/// Negative results are reported as-is.
pub fn measured_power(z: f64, model: &SignalModel, omega: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!(
            "measurement window must end at t > 0, got {t}"
        )));
    }
    let x = if model.m_amp == 0.0 {
        0.0
    } else {
        model.m_amp * noise_psd(omega, &model.noise)?
    };
    Ok(z * model.temperature() / t + x - model.damping.at(t))
}

/// Inverse of the information/energy mapping: `Z = E / (k_B T)`.
pub fn invert_information(energy: f64, temperature: f64, constants: &PhysicalConstants) -> Result<f64> {
    if !(temperature > 0.0) {
        return Err(Error::Domain(format!(
            "temperature must be positive to invert, got {temperature}"
        )));
    }
    Ok(energy / (constants.k_b * temperature))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::info::{information_energy, zeta_0};
    use crate::stochastic::RandomSource;
    use approx::assert_relative_eq;

    fn natural() -> PhysicalConstants {
        PhysicalConstants::natural()
    }

    fn unit_inputs() -> InformationMatrixInputs {
        InformationMatrixInputs {
            omega_k: 1.0,
            temperature: 1.0,
            entropy: 1.0,
            lambda: 1.0,
            pi: 1.0,
            zeta: zeta_0(),
            constants: natural(),
        }
    }

    #[test]
    fn information_matrix_unit_case() {
        // h zeta_0 = 2pi * ln2 / 2pi = ln 2
        assert_relative_eq!(
            information_matrix_z(&unit_inputs()).unwrap(),
            std::f64::consts::LN_2,
            max_relative = 1e-12
        );
    }

    #[test]
    fn information_matrix_scalings() {
        let mut inputs = unit_inputs();
        inputs.pi = 0.0;
        assert_eq!(information_matrix_z(&inputs).unwrap(), 0.0);

        let base = information_matrix_z(&unit_inputs()).unwrap();
        let mut hot = unit_inputs();
        hot.temperature = 2.0;
        assert_relative_eq!(
            information_matrix_z(&hot).unwrap(),
            base / 2.0,
            max_relative = 1e-12
        );

        let mut cold = unit_inputs();
        cold.temperature = 0.0;
        assert!(information_matrix_z(&cold).is_err());
    }

    #[test]
    fn noise_psd_zero_temperature_floor() {
        let c = natural();
        let m = NoiseModel::new(1.0, 0.0, c).unwrap();
        for omega in [0.5, 1.0, 10.0] {
            // K hbar w / 2pi exactly
            assert_eq!(
                noise_psd(omega, &m).unwrap(),
                1.0 * c.hbar * omega / (2.0 * std::f64::consts::PI)
            );
        }
    }

    #[test]
    fn noise_psd_resonant_point() {
        // hbar w = k_B T, K = pi: X = 0.5 + 1/(e - 1)
        let m = NoiseModel::new(std::f64::consts::PI, 1.0, natural()).unwrap();
        let expect = 0.5 + 1.0 / (std::f64::consts::E - 1.0);
        assert_relative_eq!(noise_psd(1.0, &m).unwrap(), expect, max_relative = 1e-12);
        assert_relative_eq!(noise_psd(1.0, &m).unwrap(), 1.081_976_7, max_relative = 1e-7);
    }

    #[test]
    fn noise_psd_high_temperature_limit() {
        // hbar w / k_B T = 0.01, K = pi: X -> k_B T with relative error
        // bounded by x^2 / 12
        let m = NoiseModel::new(std::f64::consts::PI, 100.0, natural()).unwrap();
        let x = noise_psd(1.0, &m).unwrap();
        let kt = 100.0;
        assert!((x - kt).abs() / kt < 1e-5);
        for ratio in [0.1, 0.05, 0.01] {
            let t = 1.0 / ratio;
            let m = NoiseModel::new(std::f64::consts::PI, t, natural()).unwrap();
            let x = noise_psd(1.0, &m).unwrap();
            assert!((x - t).abs() / t <= ratio * ratio / 12.0 + 1e-12);
        }
    }

    #[test]
    fn noise_psd_monotone_in_temperature() {
        let mut last = 0.0;
        for i in 0..20 {
            let t = 0.1 + i as f64 * 0.35;
            let m = NoiseModel::new(2.0, t, natural()).unwrap();
            let x = noise_psd(1.3, &m).unwrap();
            assert!(x > last, "PSD not increasing at T = {t}");
            last = x;
        }
    }

    fn model(m_amp: f64, gamma0: f64, temperature: f64) -> SignalModel {
        SignalModel::new(
            vec![],
            m_amp,
            Damping::Constant { gamma0 },
            NoiseModel::new(std::f64::consts::PI, temperature, natural()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn signal_power_rate_cases() {
        assert_eq!(signal_power_rate(0.0, &model(0.0, 0.0, 1.0), 1.0, 0.0).unwrap(), 0.0);
        // Zdot T - Gamma = 2*3 - 1
        assert_relative_eq!(
            signal_power_rate(2.0, &model(0.0, 1.0, 3.0), 1.0, 0.5).unwrap(),
            5.0
        );
        let m = model(1.0, 0.0, 1.0);
        assert_relative_eq!(
            signal_power_rate(0.0, &m, 1.0, 0.0).unwrap(),
            noise_psd(1.0, &m.noise).unwrap(),
            max_relative = 1e-12
        );
        assert!(signal_power_rate(0.0, &m, 1.0, -1.0).is_err());
    }

    #[test]
    fn measured_power_cases() {
        // Z T / t = 1 / 2
        assert_relative_eq!(
            measured_power(1.0, &model(0.0, 0.0, 1.0), 1.0, 2.0).unwrap(),
            0.5
        );
        assert!(measured_power(1.0, &model(0.0, 0.0, 1.0), 1.0, 0.0).is_err());

        // monotone decreasing in t for constant M X and Gamma
        let m = model(1.0, 0.3, 1.0);
        let mut prev = f64::INFINITY;
        for t in [1.0, 2.0, 4.0, 8.0] {
            let p = measured_power(2.0, &m, 1.0, t).unwrap();
            assert!(p < prev);
            prev = p;
        }

        // derived sum: zeta_0 + (0.5 + 1/(e-1)) - 0.01
        let m = model(1.0, 0.01, 1.0);
        assert_relative_eq!(
            measured_power(zeta_0(), &m, 1.0, 1.0).unwrap(),
            1.182_294_5,
            max_relative = 1e-7
        );

        // large damping may push the result negative; reported as-is
        let m = model(0.0, 10.0, 1.0);
        assert!(measured_power(0.1, &m, 1.0, 1.0).unwrap() < 0.0);
    }

    #[test]
    fn invert_information_round_trip() {
        let c = natural();
        assert_relative_eq!(invert_information(1.0, 1.0, &c).unwrap(), 1.0);
        let e = information_energy(zeta_0(), 3.0, &c).unwrap();
        assert_relative_eq!(invert_information(e, 3.0, &c).unwrap(), zeta_0(), max_relative = 1e-12);
        assert!(invert_information(1.0, 0.0, &c).is_err());

        let mut src = RandomSource::new(17);
        for _ in 0..100 {
            let z = src.uniform() * 10.0;
            let t = src.uniform() * 100.0 + 0.01;
            let e = information_energy(z, t, &c).unwrap();
            assert_relative_eq!(invert_information(e, t, &c).unwrap(), z, max_relative = 1e-12);
        }
    }

    #[test]
    fn signal_model_rejects_duplicates() {
        let noise = NoiseModel::new(1.0, 1.0, natural()).unwrap();
        let dup = vec![Tone { omega: 3.0, z: 1.0 }, Tone { omega: 3.0, z: 2.0 }];
        assert!(SignalModel::new(dup, 1.0, Damping::Constant { gamma0: 0.0 }, noise).is_err());
    }
}
