//! Numerical model of information quanta coupled to a single
//! electromagnetic field mode.
//!
//! The crate covers the full pipeline:
//!
//! - [`info`]: information quanta `zeta(n)`, probability-weighted words,
//!   and the information/energy mapping `E = Z k_B T`.
//! - [`entropy`]: joint Shannon entropy, density matrices, partial trace,
//!   and Von Neumann / entanglement entropy.
//! - [`dynamics`]: the truncated-Fock-space field-information Hamiltonian,
//!   its spectrum (checked against the displaced-oscillator oracle), and
//!   unitary time evolution.
//! - [`stochastic`]: seeded Wiener paths, Markov chains over words, and
//!   stochastic mixed-state entropy trajectories.
//! - [`signal`]: heat-current noise floor, signal power, synthetic
//!   detector time series, Welch PSD estimation, and excess-power
//!   detection with information readback.
//! - [`cli`]: the `infofield` command-line surface with JSON config and
//!   CSV/JSON outputs.
//!
//! Natural units (hbar = k_B = c = 1) are the default; see
//! [`constants::PhysicalConstants`].
//!
//! Every stochastic entry point takes an explicit
//! [`stochastic::RandomSource`], so identical seeds reproduce identical
//! results bit-for-bit on the same build. Runnable demonstrations live in
//! the crate's `examples/` directory.

pub mod cli;
pub mod config;
pub mod constants;
pub mod dynamics;
pub mod entropy;
pub mod error;
pub mod info;
pub mod series;
pub mod signal;
pub mod stochastic;

pub use constants::{PhysicalConstants, UnitsMode};
pub use error::{Error, Result};
