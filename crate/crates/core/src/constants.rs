//! Physical constants in either natural units (ħ = k_B = c = 1) or SI
//! (CODATA 2018 values).
//!
//! Natural units are the default throughout the crate: the model equations
//! mix temperature and energy dimensions, and with ħ = k_B = c = 1 they can
//! be evaluated verbatim.

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Unit system selector, mirrored in the CLI config.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum UnitsMode {
    #[default]
    Natural,
    Si,
}

/// The constants every formula in the crate pulls from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// Planck constant h.
    pub h: f64,
    /// Reduced Planck constant ħ = h / 2π.
    pub hbar: f64,
    /// Boltzmann constant k_B.
    pub k_b: f64,
    /// Speed of light c.
    pub c: f64,
    /// Electron rest mass.
    pub m_e: f64,
}

impl PhysicalConstants {
    /// Natural units: ħ = k_B = c = 1, hence h = 2π. The electron mass is
    /// taken as the mass unit.
    pub fn natural() -> Self {
        PhysicalConstants {
            h: TAU,
            hbar: 1.0,
            k_b: 1.0,
            c: 1.0,
            m_e: 1.0,
        }
    }

    /// CODATA 2018 SI values.
    pub fn si() -> Self {
        PhysicalConstants {
            h: 6.626_070_15e-34,
            hbar: 6.626_070_15e-34 / TAU,
            k_b: 1.380_649e-23,
            c: 2.997_924_58e8,
            m_e: 9.109_383_701_5e-31,
        }
    }

    pub fn for_mode(mode: UnitsMode) -> Self {
        match mode {
            UnitsMode::Natural => Self::natural(),
            UnitsMode::Si => Self::si(),
        }
    }

    /// Checks positivity of every field and the ħ = h/2π relation.
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("h", self.h),
            ("hbar", self.hbar),
            ("k_b", self.k_b),
            ("c", self.c),
            ("m_e", self.m_e),
        ];
        for (name, v) in fields {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Validation(format!(
                    "constant {name} must be strictly positive, got {v}"
                )));
            }
        }
        let rel = (self.hbar - self.h / TAU).abs() / self.hbar;
        if rel > 1e-15 {
            return Err(Error::Validation(format!(
                "hbar must equal h/2pi (relative deviation {rel:.3e})"
            )));
        }
        Ok(())
    }
}
