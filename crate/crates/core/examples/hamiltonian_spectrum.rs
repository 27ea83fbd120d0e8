//! Diagonalizes the field-information Hamiltonian on a truncated Fock
//! space and compares the ground energy with the closed-form value.

use infofield::constants::PhysicalConstants;
use infofield::dynamics::{
    build_hamiltonian, eigen_spectrum, ground_energy_analytic, FockSpace,
};

fn main() -> infofield::Result<()> {
    let constants = PhysicalConstants::natural();
    let (omega, zeta, lambda) = (1.0, 1.0, 0.4);

    for dim in [16, 32, 64] {
        let model = build_hamiltonian(FockSpace::new(dim, omega)?, zeta, lambda, &constants)?;
        let levels = eigen_spectrum(&model)?;
        println!(
            "D = {dim:3}: ground = {:.12}, first gaps = {:.6}, {:.6}",
            levels[0],
            levels[1] - levels[0],
            levels[2] - levels[1]
        );
    }

    let exact = ground_energy_analytic(omega, zeta, lambda, &constants);
    println!("analytic ground = {exact:.12}");
    Ok(())
}
