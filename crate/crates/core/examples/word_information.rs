//! Builds a probability-weighted information word, converts it to energy
//! at a few temperatures, and checks the pair-production threshold.

use infofield::constants::PhysicalConstants;
use infofield::info::{
    information_energy, pair_production_allowed, word_information, zeta, ProbabilityWeights,
};

fn main() -> infofield::Result<()> {
    let natural = PhysicalConstants::natural();
    let si = PhysicalConstants::si();

    println!("first information quanta:");
    for n in 0..6 {
        println!("  zeta({n}) = {:.10}", zeta(n)?);
    }

    let weights = ProbabilityWeights::from_slice(&[0.5, 0.25, 0.125, 0.125])?;
    let word = word_information(&weights)?;
    println!("\nword Z = {:.10} (weights 0.5, 0.25, 0.125, 0.125)", word.value);

    for t in [1.0, 10.0, 300.0] {
        let e = information_energy(word.value, t, &natural)?;
        println!("E(T = {t}) = {e:.10} (natural units)");
    }

    // an electron-mass photon budget in SI
    let e_threshold = 2.0 * si.m_e * si.c * si.c;
    let t_hot = e_threshold / (word.value * si.k_b);
    let e_hot = information_energy(word.value, t_hot, &si)?;
    println!(
        "\npair production at T = {t_hot:.4e} K: E = {e_hot:.6e} J, allowed = {}",
        pair_production_allowed(e_hot, si.m_e, &si)?
    );
    Ok(())
}
