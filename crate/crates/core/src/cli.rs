//! Command-line surface: `word`, `spectrum`, `entropy`, `trajectory`,
//! `generate`, `detect`, `power`.
//!
//! Every command reads a JSON config (see [`crate::config`]), writes its
//! primary outputs into `--out`, and prints the result JSON to stdout.
//! All outputs embed the resolved config, and identical config + seed
//! produce byte-identical files. Exit codes: 0 ok, 2 validation/parse
//! error, 3 numerical non-convergence.

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::config::{ComplexPair, RunConfig};
use crate::constants::{PhysicalConstants, UnitsMode};
use crate::dynamics::{build_hamiltonian, eigen_spectrum, ground_energy_analytic, FockSpace};
use crate::entropy::{
    entanglement_entropy, joint_shannon_entropy, mutual_information, nats_to_bits,
    von_neumann_entropy, DensityMatrix, JointDistribution, PureState,
};
use crate::error::{Error, Result};
use crate::info::{word_information, zeta, ProbabilityWeights};
use crate::series::TimeSeries;
use crate::signal::{
    detect_excess_power, inject_tones, measured_power, synthesize_noise, welch_psd, NoiseFloor,
    NoiseModel, SignalModel, Tone,
};
use crate::stochastic::{entropy_trajectory, MarkovChain, RandomSource};

#[derive(Debug, Parser)]
#[command(name = "infofield", version, about = "Information-quanta field simulations")]
pub struct Cli {
    /// JSON run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Overrides the config seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Output directory for CSV/JSON artifacts.
    #[arg(long, global = true, default_value = ".")]
    pub out: PathBuf,
    /// Overrides the config unit system.
    #[arg(long, global = true, value_enum)]
    pub units: Option<UnitsMode>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Information word value Z from probability weights.
    Word,
    /// Hamiltonian eigenvalues plus the analytic ground-energy check.
    Spectrum,
    /// Shannon / mutual / Von Neumann / entanglement entropies.
    Entropy,
    /// Stochastic mixed-state entropy trajectory.
    Trajectory,
    /// Synthesize detector noise with injected information tones.
    Generate,
    /// Welch PSD and excess-power detection on a series CSV.
    Detect {
        /// Input time-series CSV (`t,value`).
        input: PathBuf,
    },
    /// Measured signal power over a time window.
    Power,
}

/// Runs the CLI and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli) -> Result<()> {
    let mut config = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if let Some(units) = cli.units {
        config.units = units;
    }
    std::fs::create_dir_all(&cli.out)?;
    let constants = PhysicalConstants::for_mode(config.units);
    constants.validate()?;

    match &cli.command {
        Command::Word => cmd_word(&config, &cli.out),
        Command::Spectrum => cmd_spectrum(&config, &constants, &cli.out),
        Command::Entropy => cmd_entropy(&config, &cli.out),
        Command::Trajectory => cmd_trajectory(&config, &cli.out),
        Command::Generate => cmd_generate(&config, &constants, &cli.out),
        Command::Detect { input } => cmd_detect(&config, &constants, input, &cli.out),
        Command::Power => cmd_power(&config, &constants, &cli.out),
    }
}

fn missing(block: &str) -> Error {
    Error::Config(format!("config is missing the '{block}' block"))
}

fn emit(out_dir: &Path, name: &str, value: &impl Serialize) -> Result<()> {
    let text = format!("{}\n", serde_json::to_string_pretty(value).map_err(io_err)?);
    std::fs::write(out_dir.join(name), &text)?;
    print!("{text}");
    Ok(())
}

fn io_err(e: serde_json::Error) -> Error {
    Error::Numerical(format!("serialization failed: {e}"))
}

fn cmd_word(config: &RunConfig, out_dir: &Path) -> Result<()> {
    let block = config.word.as_ref().ok_or_else(|| missing("word"))?;
    let weights = ProbabilityWeights::new(block.weights.clone())?;
    let word = word_information(&weights)?;
    let contributions: BTreeMap<u32, serde_json::Value> = weights
        .iter()
        .map(|(n, p)| {
            let zn = zeta(n)?;
            Ok((n, json!({ "zeta": zn, "weight": p, "contribution": p * zn })))
        })
        .collect::<Result<_>>()?;
    emit(
        out_dir,
        "word.json",
        &json!({
            "z": word.value,
            "terms": contributions,
            "config": config,
        }),
    )
}

fn cmd_spectrum(config: &RunConfig, constants: &PhysicalConstants, out_dir: &Path) -> Result<()> {
    let block = config.spectrum.as_ref().ok_or_else(|| missing("spectrum"))?;
    let space = FockSpace::new(block.dim, block.omega)?;
    let model = build_hamiltonian(space, block.zeta, block.lambda, constants)?;
    let spectrum = eigen_spectrum(&model)?;
    let analytic = ground_energy_analytic(block.omega, block.zeta, block.lambda, constants);

    let mut csv = String::from("index,energy\n");
    for (i, e) in spectrum.iter().enumerate() {
        csv.push_str(&format!("{i},{e:.16e}\n"));
    }
    std::fs::write(out_dir.join("spectrum.csv"), csv)?;

    emit(
        out_dir,
        "spectrum.json",
        &json!({
            "ground_energy": spectrum[0],
            "ground_energy_analytic": analytic,
            "discrepancy": spectrum[0] - analytic,
            "levels": spectrum.len(),
            "config": config,
        }),
    )
}

fn parse_complex_vec(raw: &[ComplexPair]) -> DVector<Complex64> {
    DVector::from_iterator(raw.len(), raw.iter().map(|&[re, im]| Complex64::new(re, im)))
}

fn parse_complex_matrix(rows: &[Vec<ComplexPair>]) -> Result<DMatrix<Complex64>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("matrix rows must all have the same length".into()));
    }
    Ok(DMatrix::from_fn(n, n, |i, j| {
        Complex64::new(rows[i][j][0], rows[i][j][1])
    }))
}

fn cmd_entropy(config: &RunConfig, out_dir: &Path) -> Result<()> {
    let block = config.entropy.as_ref().ok_or_else(|| missing("entropy"))?;
    if block.joint.is_none() && block.density.is_none() && block.state.is_none() {
        return Err(Error::Config(
            "entropy block needs at least one of 'joint', 'density', 'state'".into(),
        ));
    }
    let mut result = serde_json::Map::new();
    if let Some(joint) = &block.joint {
        let dist = JointDistribution::from_rows(joint)?;
        let shannon = joint_shannon_entropy(&dist);
        let mi = mutual_information(&dist)?;
        result.insert("shannon_nats".into(), json!(shannon));
        result.insert("shannon_bits".into(), json!(nats_to_bits(shannon)));
        result.insert("mutual_information_nats".into(), json!(mi));
        result.insert("mutual_information_bits".into(), json!(nats_to_bits(mi)));
    }
    if let Some(density) = &block.density {
        let rho = DensityMatrix::new(parse_complex_matrix(density)?)?;
        let s = von_neumann_entropy(&rho)?;
        result.insert("von_neumann_nats".into(), json!(s));
        result.insert("von_neumann_bits".into(), json!(nats_to_bits(s)));
    }
    if let Some(state) = &block.state {
        let psi = PureState::new(parse_complex_vec(&state.amplitudes))?;
        let s = entanglement_entropy(&psi, state.dims[0], state.dims[1])?;
        result.insert("entanglement_nats".into(), json!(s));
        result.insert("entanglement_bits".into(), json!(nats_to_bits(s)));
    }
    result.insert("config".into(), serde_json::to_value(config).map_err(io_err)?);
    emit(out_dir, "entropy.json", &result)
}

fn cmd_trajectory(config: &RunConfig, out_dir: &Path) -> Result<()> {
    let block = config
        .trajectory
        .as_ref()
        .ok_or_else(|| missing("trajectory"))?;
    let n = block.transition.len();
    let word_indices = block
        .word_indices
        .clone()
        .unwrap_or_else(|| (0..n as u32).collect());
    let chain = MarkovChain::from_rows(word_indices, &block.transition)?;
    let states: Vec<PureState> = block
        .states
        .iter()
        .map(|raw| PureState::new(parse_complex_vec(raw)))
        .collect::<Result<_>>()?;
    if block.steps < 2 {
        return Err(Error::Validation("trajectory needs at least 2 steps".into()));
    }
    if !(block.t_max > 0.0) {
        return Err(Error::Validation(format!(
            "t_max must be positive, got {}",
            block.t_max
        )));
    }
    let dt = block.t_max / (block.steps - 1) as f64;
    let grid: Vec<f64> = (0..block.steps).map(|j| j as f64 * dt).collect();
    let mut source = RandomSource::new(config.seed);
    let traj = entropy_trajectory(&chain, &states, &grid, &mut source, block.window)?;

    let mut csv = String::from("t,value\n");
    for (t, s) in traj.times.iter().zip(traj.values.iter()) {
        csv.push_str(&format!("{t:.16e},{s:.16e}\n"));
    }
    std::fs::write(out_dir.join("trajectory.csv"), csv)?;

    emit(
        out_dir,
        "trajectory.json",
        &json!({
            "mean_entropy_nats": traj.mean,
            "max_entropy_nats": traj.max_entropy,
            "histogram": traj.histogram,
            "histogram_bins": traj.histogram_bins,
            "config": config,
        }),
    )
}

fn noise_model(cfg: &crate::config::NoiseConfig, constants: &PhysicalConstants) -> Result<NoiseModel> {
    NoiseModel::new(cfg.k_const, cfg.temperature, *constants)
}

fn cmd_generate(config: &RunConfig, constants: &PhysicalConstants, out_dir: &Path) -> Result<()> {
    let block = config.generate.as_ref().ok_or_else(|| missing("generate"))?;
    let noise = noise_model(&block.noise, constants)?;
    let tones: Vec<Tone> = block
        .tones
        .iter()
        .map(|t| Tone {
            omega: std::f64::consts::TAU * t.freq_hz,
            z: t.z,
        })
        .collect();
    let model = SignalModel::new(tones, block.m_amp, block.damping, noise)?;
    let mut source = RandomSource::new(config.seed);
    let base = synthesize_noise(&noise, block.m_amp, block.duration, block.sample_rate, &mut source)?;
    let series = inject_tones(&base, &model, &mut source)?;
    series.write_csv(&out_dir.join("series.csv"))?;

    emit(
        out_dir,
        "generate_meta.json",
        &json!({
            "samples": series.len(),
            "sample_rate": series.sample_rate,
            "duration": series.duration(),
            "variance": series.variance(),
            "config": config,
        }),
    )
}

fn cmd_detect(
    config: &RunConfig,
    constants: &PhysicalConstants,
    input: &Path,
    out_dir: &Path,
) -> Result<()> {
    let block = config.detect.as_ref().ok_or_else(|| missing("detect"))?;
    let series = TimeSeries::read_csv(input)?;
    let psd = welch_psd(&series, block.segment_length, block.overlap, block.window)?;
    psd.write_csv(&out_dir.join("psd.csv"))?;

    let noise = noise_model(&block.noise, constants)?;
    let floor = NoiseFloor::Analytic {
        model: noise,
        m_amp: block.m_amp,
    };
    let report = detect_excess_power(
        &psd,
        &floor,
        block.threshold_sigma,
        block.noise.temperature,
        constants,
    )?;
    emit(
        out_dir,
        "detection.json",
        &json!({
            "threshold_sigma": report.threshold_sigma,
            "n_segments": report.n_segments,
            "detections": report.detections,
            "config": config,
        }),
    )
}

fn cmd_power(config: &RunConfig, constants: &PhysicalConstants, out_dir: &Path) -> Result<()> {
    let block = config.power.as_ref().ok_or_else(|| missing("power"))?;
    if !(block.t_start > 0.0) {
        return Err(Error::Domain(format!(
            "t_start must be positive, got {}",
            block.t_start
        )));
    }
    if block.t_end < block.t_start || block.points == 0 {
        return Err(Error::Validation(
            "power window needs t_end >= t_start and at least one point".into(),
        ));
    }
    let noise = noise_model(&block.noise, constants)?;
    let model = SignalModel::new(vec![], block.m_amp, block.damping, noise)?;
    let mut samples = Vec::with_capacity(block.points);
    for j in 0..block.points {
        let t = if block.points == 1 {
            block.t_start
        } else {
            block.t_start + (block.t_end - block.t_start) * j as f64 / (block.points - 1) as f64
        };
        let h = measured_power(block.z, &model, block.omega, t)?;
        samples.push(json!({ "t": t, "power": h }));
    }
    emit(
        out_dir,
        "power.json",
        &json!({
            "samples": samples,
            "config": config,
        }),
    )
}

/// Binding for the thin `infofield` binary.
pub fn main_entry() -> i32 {
    run(Cli::parse())
}
