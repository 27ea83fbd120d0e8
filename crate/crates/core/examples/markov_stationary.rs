//! Stationary distribution of a word-valued Markov chain, compared with
//! the empirical occupation of a long sampled trajectory.

use infofield::stochastic::{sample_word_sequence, stationary_distribution, MarkovChain, RandomSource};

fn main() -> infofield::Result<()> {
    let chain = MarkovChain::from_rows(
        vec![0, 1, 2],
        &[
            vec![0.5, 0.4, 0.1],
            vec![0.2, 0.6, 0.2],
            vec![0.1, 0.3, 0.6],
        ],
    )?;

    let pi = stationary_distribution(&chain)?;
    println!("stationary distribution:");
    for (state, p) in pi.iter() {
        println!("  word {state}: {p:.6}");
    }

    let mut src = RandomSource::new(99);
    let steps = 200_000;
    let seq = sample_word_sequence(&chain, 0, steps, &mut src)?;
    println!("\nempirical occupation over {steps} steps:");
    for state in [0u32, 1, 2] {
        let count = seq.iter().filter(|&&s| s == state).count();
        println!("  word {state}: {:.6}", count as f64 / steps as f64);
    }
    Ok(())
}
