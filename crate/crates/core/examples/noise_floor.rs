//! Heat-current noise floor: quantum zero-point plateau at T = 0 and the
//! classical flat limit at high temperature, emitted as CSV.

use infofield::constants::PhysicalConstants;
use infofield::signal::{noise_psd, NoiseModel};

fn main() -> infofield::Result<()> {
    let constants = PhysicalConstants::natural();
    let k = 1.0;
    let temps = [0.0, 0.5, 1.0, 5.0];
    let models: Vec<NoiseModel> = temps
        .iter()
        .map(|&t| NoiseModel::new(k, t, constants))
        .collect::<infofield::Result<_>>()?;

    println!(
        "omega,{}",
        temps
            .iter()
            .map(|t| format!("psd_T{t}"))
            .collect::<Vec<_>>()
            .join(",")
    );
    let mut omega = 0.01;
    while omega <= 100.0 {
        let row: Vec<String> = models
            .iter()
            .map(|m| Ok(format!("{:.8e}", noise_psd(omega, m)?)))
            .collect::<infofield::Result<_>>()?;
        println!("{omega:.6},{}", row.join(","));
        omega *= 1.5;
    }
    Ok(())
}
