//! Seeded random sources, Wiener paths, Markov chains over word indices,
//! and stochastic mixed-state entropy trajectories.
//!
//! Determinism contract: a [`RandomSource`] is ChaCha12 seeded from a u64,
//! Gaussians are drawn by Box-Muller, and derived sources use a fixed
//! splitting rule, so identical seeds reproduce identical streams on the
//! same build.

use nalgebra::DMatrix;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::entropy::{density_from_mixture, von_neumann_entropy, PureState};
use crate::error::{Error, Result};
use crate::info::ProbabilityWeights;

/// Deterministic random source: ChaCha12 keyed by a u64 seed.
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha12Rng,
    spare_normal: Option<f64>,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource {
            seed,
            rng: ChaCha12Rng::seed_from_u64(seed),
            spare_normal: None,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Derives an independent child source for parallel task `index`.
    /// Splitting rule: child seed = seed XOR (index + 1) * 0x9E3779B97F4A7C15.
    pub fn derive(&self, index: u64) -> Self {
        RandomSource::new(self.seed ^ (index + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform draw in the open interval (0, 1).
    pub fn uniform(&mut self) -> f64 {
        loop {
            let u = (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if u > 0.0 {
                return u;
            }
        }
    }

    /// Standard normal via Box-Muller, with the second draw cached.
    pub fn standard_normal(&mut self) -> f64 {
        if let Some(z) = self.spare_normal.take() {
            return z;
        }
        let u1 = self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = std::f64::consts::TAU * u2;
        self.spare_normal = Some(r * theta.sin());
        r * theta.cos()
    }
}

/// A sampled Wiener path W(t) with W(0) = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct WienerPath {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
}

/// Samples a Wiener path on the given grid: independent Gaussian increments
/// with variance equal to the time step.
pub fn simulate_wiener(t_grid: &[f64], source: &mut RandomSource) -> Result<WienerPath> {
    if t_grid.is_empty() || t_grid[0] != 0.0 {
        return Err(Error::Validation("time grid must start at 0".into()));
    }
    if t_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Validation("time grid must be strictly increasing".into()));
    }
    let mut values = Vec::with_capacity(t_grid.len());
    values.push(0.0);
    for w in t_grid.windows(2) {
        let dt = w[1] - w[0];
        let prev = *values.last().unwrap();
        values.push(prev + dt.sqrt() * source.standard_normal());
    }
    Ok(WienerPath {
        times: t_grid.to_vec(),
        values,
    })
}

/// Finite-state Markov chain over word indices.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkovChain {
    /// Word index labelling each chain state.
    pub states: Vec<u32>,
    /// Row-stochastic transition matrix.
    pub transition: DMatrix<f64>,
}

impl MarkovChain {
    pub fn new(states: Vec<u32>, transition: DMatrix<f64>) -> Result<Self> {
        let n = states.len();
        if n == 0 {
            return Err(Error::Validation("chain needs at least one state".into()));
        }
        if transition.nrows() != n || transition.ncols() != n {
            return Err(Error::Shape(format!(
                "transition matrix is {}x{}, expected {n}x{n}",
                transition.nrows(),
                transition.ncols()
            )));
        }
        for i in 0..n {
            let mut row_sum = 0.0;
            for j in 0..n {
                let p = transition[(i, j)];
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::Validation(format!(
                        "transition probability ({i},{j}) = {p} outside [0, 1]"
                    )));
                }
                row_sum += p;
            }
            if (row_sum - 1.0).abs() > 1e-12 {
                return Err(Error::Validation(format!(
                    "transition row {i} sums to {row_sum}, expected 1 within 1e-12"
                )));
            }
        }
        Ok(MarkovChain { states, transition })
    }

    pub fn from_rows(states: Vec<u32>, rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("transition matrix must be square".into()));
        }
        Self::new(states, DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

const STATIONARY_TOL: f64 = 1e-12;
const STATIONARY_MAX_ITERS: usize = 1_000_000;

/// Stationary distribution by power iteration: pi <- pi P until the
/// sup-norm residual drops below 1e-12 (capped at 1e6 iterations).
/// The result is keyed by the chain's word indices.
pub fn stationary_distribution(chain: &MarkovChain) -> Result<ProbabilityWeights> {
    let n = chain.len();
    let mut pi = vec![1.0 / n as f64; n];
    for _ in 0..STATIONARY_MAX_ITERS {
        let mut next = vec![0.0; n];
        for i in 0..n {
            let p = pi[i];
            if p == 0.0 {
                continue;
            }
            for j in 0..n {
                next[j] += p * chain.transition[(i, j)];
            }
        }
        let sum: f64 = next.iter().sum();
        for x in &mut next {
            *x /= sum;
        }
        let resid = pi
            .iter()
            .zip(next.iter())
            .fold(0.0f64, |a, (x, y)| a.max((x - y).abs()));
        pi = next;
        if resid < STATIONARY_TOL {
            let weights = ProbabilityWeights::new(
                chain
                    .states
                    .iter()
                    .zip(pi.iter())
                    .map(|(&s, &p)| (s, p))
                    .collect(),
            )?;
            // defining residual, asserted exactly as specified
            let resid = stationary_residual(chain, &pi);
            if resid > 1e-10 {
                return Err(Error::Convergence(format!(
                    "fixed-point residual {resid:.3e} exceeds 1e-10"
                )));
            }
            return Ok(weights);
        }
    }
    Err(Error::Convergence(
        "power iteration did not converge; chain may be reducible or periodic".into(),
    ))
}

fn stationary_residual(chain: &MarkovChain, pi: &[f64]) -> f64 {
    let n = chain.len();
    (0..n)
        .map(|j| {
            let pj: f64 = (0..n).map(|i| pi[i] * chain.transition[(i, j)]).sum();
            (pj - pi[j]).abs()
        })
        .fold(0.0, f64::max)
}

/// Samples a state-index trajectory of the chain starting from state
/// `start` (an index into `chain.states`). Returns word indices.
pub fn sample_word_sequence(
    chain: &MarkovChain,
    start: usize,
    steps: usize,
    source: &mut RandomSource,
) -> Result<Vec<u32>> {
    if start >= chain.len() {
        return Err(Error::Shape(format!(
            "start state {start} out of range for {}-state chain",
            chain.len()
        )));
    }
    if steps == 0 {
        return Err(Error::Validation("need at least one step".into()));
    }
    let n = chain.len();
    let mut seq = Vec::with_capacity(steps);
    let mut current = start;
    for _ in 0..steps {
        seq.push(chain.states[current]);
        let u = source.uniform();
        let mut acc = 0.0;
        let mut next = n - 1;
        for j in 0..n {
            acc += chain.transition[(current, j)];
            if u <= acc {
                next = j;
                break;
            }
        }
        current = next;
    }
    Ok(seq)
}

/// Entropy time series of a stochastically mixed state, with summary
/// statistics.
#[derive(Debug, Clone)]
pub struct EntropyTrajectory {
    pub times: Vec<f64>,
    /// Von Neumann entropy S(t) in nats.
    pub values: Vec<f64>,
    pub mean: f64,
    /// Histogram of entropy values over `histogram_bins` uniform bins
    /// spanning [0, ln d].
    pub histogram: Vec<usize>,
    pub histogram_bins: usize,
    /// Upper edge of the histogram range, ln d.
    pub max_entropy: f64,
}

/// Drives the chain one step per grid point (starting from state 0) and at
/// each time builds the empirical-occupation mixture of the trailing
/// `window` visits, `rho(t) = sum_i f_i(t) |psi_i><psi_i|`, reporting its
/// Von Neumann entropy.
pub fn entropy_trajectory(
    chain: &MarkovChain,
    states: &[PureState],
    t_grid: &[f64],
    source: &mut RandomSource,
    window: usize,
) -> Result<EntropyTrajectory> {
    if states.len() != chain.len() {
        return Err(Error::Shape(format!(
            "{} pure states supplied for a {}-state chain",
            states.len(),
            chain.len()
        )));
    }
    if window == 0 {
        return Err(Error::Validation("window must be at least 1".into()));
    }
    if t_grid.is_empty() {
        return Err(Error::Validation("time grid is empty".into()));
    }
    let dim = states[0].dim();
    if states.iter().any(|s| s.dim() != dim) {
        return Err(Error::Shape("pure states have mismatched dimensions".into()));
    }

    // chain runs over state indices 0..n; map to occupation counts
    let n = chain.len();
    let mut visits: Vec<usize> = Vec::with_capacity(t_grid.len());
    let mut current = 0usize;
    let mut values = Vec::with_capacity(t_grid.len());
    for _ in t_grid {
        visits.push(current);
        let lo = visits.len().saturating_sub(window);
        let recent = &visits[lo..];
        let mut counts = vec![0usize; n];
        for &v in recent {
            counts[v] += 1;
        }
        let freqs: Vec<f64> = counts
            .iter()
            .map(|&c| c as f64 / recent.len() as f64)
            .collect();
        let probs = ProbabilityWeights::from_slice(&freqs)?;
        let rho = density_from_mixture(states, &probs)?;
        let s = von_neumann_entropy(&rho)?;
        values.push(s.clamp(0.0, (dim as f64).ln() + 1e-12));

        // advance the chain
        let u = source.uniform();
        let mut acc = 0.0;
        let mut next = n - 1;
        for j in 0..n {
            acc += chain.transition[(current, j)];
            if u <= acc {
                next = j;
                break;
            }
        }
        current = next;
    }

    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let bins = 20usize;
    let max_entropy = (dim as f64).ln();
    let mut histogram = vec![0usize; bins];
    for &v in &values {
        let idx = if max_entropy > 0.0 {
            (((v / max_entropy) * bins as f64) as usize).min(bins - 1)
        } else {
            0
        };
        histogram[idx] += 1;
    }
    Ok(EntropyTrajectory {
        times: t_grid.to_vec(),
        values,
        mean,
        histogram,
        histogram_bins: bins,
        max_entropy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn source_is_reproducible_and_splittable() {
        let mut a = RandomSource::new(42);
        let mut b = RandomSource::new(42);
        let xs: Vec<u64> = (0..16).map(|_| a.next_u64()).collect();
        let ys: Vec<u64> = (0..16).map(|_| b.next_u64()).collect();
        assert_eq!(xs, ys);

        let mut child0 = RandomSource::new(42).derive(0);
        let mut child1 = RandomSource::new(42).derive(1);
        assert_ne!(child0.next_u64(), child1.next_u64());
    }

    #[test]
    fn wiener_starts_at_zero_and_validates_grid() {
        let mut src = RandomSource::new(1);
        let p = simulate_wiener(&[0.0, 0.5, 1.0], &mut src).unwrap();
        assert_eq!(p.values[0], 0.0);
        assert_eq!(p.values.len(), 3);
        assert!(simulate_wiener(&[0.5, 1.0], &mut src).is_err());
        assert!(simulate_wiener(&[0.0, 1.0, 1.0], &mut src).is_err());
    }

    #[test]
    fn wiener_moments_match_clt_bounds() {
        let n = 100_000;
        let mut src = RandomSource::new(7);
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in 0..n {
            let p = simulate_wiener(&[0.0, 0.5, 1.0], &mut src).unwrap();
            let w1 = p.values[2];
            sum += w1;
            sumsq += w1 * w1;
        }
        let mean = sum / n as f64;
        let var = sumsq / n as f64 - mean * mean;
        assert!(mean.abs() <= 0.0127, "mean {mean}");
        assert!((0.98..=1.02).contains(&var), "variance {var}");
    }

    #[test]
    fn wiener_variance_grows_linearly() {
        let n = 20_000;
        let grid = [0.0, 0.25, 0.5, 1.0, 2.0];
        let mut src = RandomSource::new(5);
        let mut sumsq = [0.0f64; 4];
        for _ in 0..n {
            let p = simulate_wiener(&grid, &mut src).unwrap();
            for k in 0..4 {
                sumsq[k] += p.values[k + 1] * p.values[k + 1];
            }
        }
        // least squares slope of variance vs t through the origin
        let ts = [0.25, 0.5, 1.0, 2.0];
        let mut num = 0.0;
        let mut den = 0.0;
        for k in 0..4 {
            let var = sumsq[k] / n as f64;
            num += ts[k] * var;
            den += ts[k] * ts[k];
        }
        let slope = num / den;
        assert!((slope - 1.0).abs() < 0.05, "slope {slope}");
    }

    #[test]
    fn wiener_disjoint_increments_uncorrelated() {
        let n = 100_000;
        let mut src = RandomSource::new(9);
        let mut sx = 0.0;
        let mut sy = 0.0;
        let mut sxx = 0.0;
        let mut syy = 0.0;
        let mut sxy = 0.0;
        for _ in 0..n {
            let p = simulate_wiener(&[0.0, 1.0, 2.0], &mut src).unwrap();
            let dx = p.values[1] - p.values[0];
            let dy = p.values[2] - p.values[1];
            sx += dx;
            sy += dy;
            sxx += dx * dx;
            syy += dy * dy;
            sxy += dx * dy;
        }
        let nf = n as f64;
        let cov = sxy / nf - (sx / nf) * (sy / nf);
        let vx = sxx / nf - (sx / nf).powi(2);
        let vy = syy / nf - (sy / nf).powi(2);
        let corr = cov / (vx * vy).sqrt();
        assert!(corr.abs() <= 0.02, "correlation {corr}");
    }

    #[test]
    fn stationary_symmetric_two_state() {
        let chain = MarkovChain::from_rows(vec![0, 1], &[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let pi = stationary_distribution(&chain).unwrap();
        assert_relative_eq!(pi.get(0), 0.5, max_relative = 1e-10);
        assert_relative_eq!(pi.get(1), 0.5, max_relative = 1e-10);
    }

    #[test]
    fn stationary_hand_solved_two_state() {
        // pi P = pi gives pi0 = 0.5 / 0.6 = 5/6
        let chain = MarkovChain::from_rows(vec![0, 1], &[vec![0.9, 0.1], vec![0.5, 0.5]]).unwrap();
        let pi = stationary_distribution(&chain).unwrap();
        assert_relative_eq!(pi.get(0), 5.0 / 6.0, max_relative = 1e-9);
        assert_relative_eq!(pi.get(1), 1.0 / 6.0, max_relative = 1e-9);
    }

    #[test]
    fn stationary_residual_bound_random_chains() {
        let mut src = RandomSource::new(21);
        for _ in 0..100 {
            let mut rows = Vec::new();
            for _ in 0..4 {
                let raw: Vec<f64> = (0..4).map(|_| src.uniform()).collect();
                let s: f64 = raw.iter().sum();
                rows.push(raw.into_iter().map(|x| x / s).collect::<Vec<_>>());
            }
            let chain = MarkovChain::from_rows(vec![0, 1, 2, 3], &rows).unwrap();
            let pi = stationary_distribution(&chain).unwrap();
            let piv: Vec<f64> = (0..4).map(|i| pi.get(i as u32)).collect();
            assert!(stationary_residual(&chain, &piv) <= 1e-10);
        }
    }

    #[test]
    fn stationary_detects_periodic_chain() {
        // period-2 chain {0} <-> {1, 2}: the uniform start oscillates and
        // power iteration must report non-convergence
        let chain = MarkovChain::from_rows(
            vec![0, 1, 2],
            &[vec![0.0, 0.7, 0.3], vec![1.0, 0.0, 0.0], vec![1.0, 0.0, 0.0]],
        )
        .unwrap();
        match stationary_distribution(&chain) {
            Err(Error::Convergence(_)) => {}
            other => panic!("expected convergence error, got {other:?}"),
        }
    }

    #[test]
    fn sequence_absorbing_and_deterministic() {
        let chain = MarkovChain::from_rows(
            vec![7, 3],
            &[vec![1.0, 0.0], vec![0.0, 1.0]],
        )
        .unwrap();
        let mut src = RandomSource::new(2);
        let seq = sample_word_sequence(&chain, 1, 10, &mut src).unwrap();
        assert!(seq.iter().all(|&s| s == 3));

        let sym = MarkovChain::from_rows(vec![0, 1], &[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let a = sample_word_sequence(&sym, 0, 100, &mut RandomSource::new(99)).unwrap();
        let b = sample_word_sequence(&sym, 0, 100, &mut RandomSource::new(99)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sequence_frequencies_approach_stationary() {
        let sym = MarkovChain::from_rows(vec![0, 1], &[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let mut src = RandomSource::new(4);
        let seq = sample_word_sequence(&sym, 0, 100_000, &mut src).unwrap();
        let f0 = seq.iter().filter(|&&s| s == 0).count() as f64 / seq.len() as f64;
        assert!((0.49..=0.51).contains(&f0), "frequency {f0}");
    }

    #[test]
    fn entropy_trajectory_pure_and_mixed_limits() {
        let mut src = RandomSource::new(10);
        let grid: Vec<f64> = (0..500).map(|i| i as f64 * 0.1).collect();

        // single-state chain: always the same projector
        let single = MarkovChain::from_rows(vec![0], &[vec![1.0]]).unwrap();
        let s0 = PureState::basis(2, 0).unwrap();
        let traj = entropy_trajectory(&single, &[s0.clone()], &grid, &mut src, 50).unwrap();
        assert!(traj.values.iter().all(|&v| v < 1e-10));

        // two identical states: mixture stays pure
        let sym = MarkovChain::from_rows(vec![0, 1], &[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let traj =
            entropy_trajectory(&sym, &[s0.clone(), s0.clone()], &grid, &mut src, 50).unwrap();
        assert!(traj.values.iter().all(|&v| v < 1e-10));

        // orthogonal states, long window: entropy approaches ln 2
        let s1 = PureState::basis(2, 1).unwrap();
        let grid_long: Vec<f64> = (0..4000).map(|i| i as f64 * 0.1).collect();
        let traj = entropy_trajectory(&sym, &[s0, s1], &grid_long, &mut src, 2000).unwrap();
        let tail = traj.values.last().unwrap();
        assert!(
            (tail - std::f64::consts::LN_2).abs() < 0.01,
            "tail entropy {tail}"
        );
        assert!(traj
            .values
            .iter()
            .all(|&v| (0.0..=std::f64::consts::LN_2 + 1e-9).contains(&v)));
    }
}
