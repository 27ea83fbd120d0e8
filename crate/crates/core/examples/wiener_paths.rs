//! Monte Carlo Wiener paths: sample statistics of W(1) against the exact
//! N(0, 1) law.

use infofield::stochastic::{simulate_wiener, RandomSource};

fn main() -> infofield::Result<()> {
    let grid: Vec<f64> = (0..=100).map(|i| i as f64 / 100.0).collect();
    let n_paths = 20_000;
    let mut src = RandomSource::new(11);

    let mut sum = 0.0;
    let mut sumsq = 0.0;
    let mut max_excursion = 0.0f64;
    for _ in 0..n_paths {
        let path = simulate_wiener(&grid, &mut src)?;
        let w1 = *path.values.last().unwrap();
        sum += w1;
        sumsq += w1 * w1;
        max_excursion = max_excursion.max(path.values.iter().fold(0.0f64, |a, &x| a.max(x.abs())));
    }
    let mean = sum / n_paths as f64;
    let var = sumsq / n_paths as f64 - mean * mean;
    println!("{n_paths} paths on [0, 1], 100 steps:");
    println!("  mean W(1)     = {mean:+.5} (exact 0)");
    println!("  var  W(1)     = {var:.5} (exact 1)");
    println!("  max |W| seen  = {max_excursion:.3}");
    Ok(())
}
