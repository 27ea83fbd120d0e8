//! Entropy of a stochastically mixed quantum state: a Markov chain hops
//! between pure states and the trailing-window mixture's Von Neumann
//! entropy is tracked over time.

use infofield::entropy::PureState;
use infofield::stochastic::{entropy_trajectory, MarkovChain, RandomSource};

fn main() -> infofield::Result<()> {
    let chain = MarkovChain::from_rows(vec![0, 1], &[vec![0.5, 0.5], vec![0.5, 0.5]])?;
    let states = vec![PureState::basis(2, 0)?, PureState::basis(2, 1)?];
    let grid: Vec<f64> = (0..2000).map(|i| i as f64 * 0.05).collect();
    let mut src = RandomSource::new(7);

    let traj = entropy_trajectory(&chain, &states, &grid, &mut src, 400)?;
    println!(
        "mean entropy {:.6} nats (max possible {:.6})",
        traj.mean, traj.max_entropy
    );
    println!("histogram over [0, ln 2], {} bins:", traj.histogram_bins);
    for (i, count) in traj.histogram.iter().enumerate() {
        let lo = traj.max_entropy * i as f64 / traj.histogram_bins as f64;
        println!("  [{lo:.3}..) {}", "#".repeat(count / 20));
    }
    Ok(())
}
