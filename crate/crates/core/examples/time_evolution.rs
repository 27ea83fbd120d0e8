//! Unitary evolution of a superposition state under the field-information
//! Hamiltonian, with conserved norm and energy.

use nalgebra::DVector;
use num_complex::Complex64;

use infofield::constants::PhysicalConstants;
use infofield::dynamics::{build_hamiltonian, evolve, FockSpace};
use infofield::entropy::PureState;

fn main() -> infofield::Result<()> {
    let constants = PhysicalConstants::natural();
    let dim = 32;
    let model = build_hamiltonian(FockSpace::new(dim, 1.0)?, 1.0, 0.4, &constants)?;

    // equal superposition of |0> and |3>
    let mut amps = DVector::from_element(dim, Complex64::new(0.0, 0.0));
    amps[0] = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    amps[3] = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let psi = PureState::new(amps)?;

    let res = evolve(&psi, &model, 10.0, 200)?;
    println!("t, <n>, <H>, norm:");
    for i in (0..res.times.len()).step_by(40) {
        println!(
            "  {:5.2}  {:.6}  {:.10}  {:.12}",
            res.times[i],
            res.occupation[i],
            res.energy[i],
            res.states[i].amplitudes().norm()
        );
    }
    Ok(())
}
