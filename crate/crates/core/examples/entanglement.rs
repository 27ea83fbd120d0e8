//! Entropy toolkit tour: Shannon entropy of a joint distribution, mutual
//! information, and entanglement entropy of a two-qubit pure state.

use nalgebra::DVector;
use num_complex::Complex64;

use infofield::entropy::{
    entanglement_entropy, joint_shannon_entropy, marginals, mutual_information, nats_to_bits,
    partial_trace, von_neumann_entropy, JointDistribution, PureState, Subsystem,
};

fn main() -> infofield::Result<()> {
    // correlated classical pair
    let joint = JointDistribution::from_rows(&[vec![0.4, 0.1], vec![0.1, 0.4]])?;
    let (px, _) = marginals(&joint)?;
    println!("joint entropy  = {:.6} nats", joint_shannon_entropy(&joint));
    println!("marginal p(x)  = {:.2}, {:.2}", px.get(0), px.get(1));
    println!("mutual info    = {:.6} nats", mutual_information(&joint)?);

    // partially entangled two-qubit state cos(a)|00> + sin(a)|11>
    for deg in [0.0_f64, 15.0, 30.0, 45.0] {
        let a = deg.to_radians();
        let psi = PureState::new(DVector::from_vec(vec![
            Complex64::new(a.cos(), 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(a.sin(), 0.0),
        ]))?;
        let s = entanglement_entropy(&psi, 2, 2)?;
        let rho_a = partial_trace(&psi.projector(), 2, 2, Subsystem::A)?;
        println!(
            "angle {deg:4.0} deg: S = {s:.6} nats = {:.6} bits, tr(rho_A^2) check S_A = {:.6}",
            nats_to_bits(s),
            von_neumann_entropy(&rho_a)?
        );
    }
    Ok(())
}
