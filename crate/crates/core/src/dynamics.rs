//! Truncated Fock space, ladder operators, the field-information
//! Hamiltonian, its spectrum, and unitary time evolution.
//!
//! The Hamiltonian couples a single field mode to an information quantum:
//!
//! `H = hbar w (a'a) + hbar w zeta I + (1/2) lambda zeta hbar w (a' + a)`
//!
//! with one frequency `w` shared by all three terms. Since the interaction
//! is linear in `(a' + a)`, completing the square gives the exact spectrum
//! `E_m = hbar w (m + zeta - (lambda zeta / 2)^2)`, which serves as the
//! independent oracle for the numerical diagonalization.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::constants::PhysicalConstants;
use crate::entropy::PureState;
use crate::error::{Error, Result};

/// A single electromagnetic mode truncated to `dim` Fock levels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockSpace {
    pub dim: usize,
    pub omega: f64,
}

impl FockSpace {
    pub fn new(dim: usize, omega: f64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Domain(format!(
                "Fock truncation must be at least 2, got {dim}"
            )));
        }
        if !(omega > 0.0) {
            return Err(Error::Domain(format!(
                "mode frequency must be positive, got {omega}"
            )));
        }
        Ok(FockSpace { dim, omega })
    }
}

/// Truncated annihilation / creation operators.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderOperators {
    pub lower: DMatrix<f64>,
    pub raise: DMatrix<f64>,
}

/// Builds `a` and `a'` on a `dim`-level truncation: `a` has `sqrt(m)` at
/// `(m-1, m)` and `a'` is its transpose. The truncated commutator
/// `[a, a']` is the identity except for `1 - dim` in the last diagonal
/// entry.
pub fn build_ladder(dim: usize) -> Result<LadderOperators> {
    if dim < 2 {
        return Err(Error::Domain(format!(
            "ladder operators need dimension >= 2, got {dim}"
        )));
    }
    let mut lower = DMatrix::zeros(dim, dim);
    for m in 1..dim {
        lower[(m - 1, m)] = (m as f64).sqrt();
    }
    let raise = lower.transpose();
    Ok(LadderOperators { lower, raise })
}

/// Number operator `a'a` (diagonal 0..dim-1).
pub fn number_operator(dim: usize) -> DMatrix<f64> {
    DMatrix::from_diagonal(&DVector::from_fn(dim, |m, _| m as f64))
}

/// Matrix realization of the field-information Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianModel {
    pub space: FockSpace,
    pub zeta: f64,
    pub lambda: f64,
    pub constants: PhysicalConstants,
    pub matrix: DMatrix<f64>,
}

pub fn build_hamiltonian(
    space: FockSpace,
    zeta: f64,
    lambda: f64,
    constants: &PhysicalConstants,
) -> Result<HamiltonianModel> {
    if zeta < 0.0 {
        return Err(Error::Domain(format!(
            "information quantum must be non-negative, got {zeta}"
        )));
    }
    let d = space.dim;
    let hw = constants.hbar * space.omega;
    let ladder = build_ladder(d)?;
    let mut matrix = number_operator(d) * hw;
    for m in 0..d {
        matrix[(m, m)] += hw * zeta;
    }
    matrix += (&ladder.raise + &ladder.lower) * (0.5 * lambda * zeta * hw);
    Ok(HamiltonianModel {
        space,
        zeta,
        lambda,
        constants: *constants,
        matrix,
    })
}

/// Ascending eigenvalues of the Hamiltonian, checked against matrix
/// reconstruction.
pub fn eigen_spectrum(model: &HamiltonianModel) -> Result<Vec<f64>> {
    let (values, _) = eigen_decomposition(model)?;
    Ok(values)
}

/// Full symmetric eigendecomposition, eigenvalues ascending with matching
/// eigenvector columns.
pub fn eigen_decomposition(model: &HamiltonianModel) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let eig = nalgebra::SymmetricEigen::new(model.matrix.clone());
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let d = model.space.dim;
    let vectors = DMatrix::from_fn(d, d, |r, c| eig.eigenvectors[(r, order[c])]);

    // reconstruction residual guards against a silently bad decomposition
    let recon = &vectors
        * DMatrix::from_diagonal(&DVector::from_vec(values.clone()))
        * vectors.transpose();
    let scale = model.matrix.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
    let resid = (&model.matrix - recon)
        .iter()
        .fold(0.0f64, |a, &x| a.max(x.abs()));
    if resid > 1e-9 * scale.max(1.0) {
        return Err(Error::Numerical(format!(
            "eigendecomposition residual {resid:.3e} exceeds tolerance"
        )));
    }
    Ok((values, vectors))
}

/// Exact ground energy of the linearly-displaced oscillator:
/// `hbar w (zeta - (lambda zeta / 2)^2)`.
pub fn ground_energy_analytic(
    omega: f64,
    zeta: f64,
    lambda: f64,
    constants: &PhysicalConstants,
) -> f64 {
    let g = lambda * zeta / 2.0;
    constants.hbar * omega * (zeta - g * g)
}

/// Time-evolved states and observables on a uniform grid over `[0, t]`.
#[derive(Debug, Clone)]
pub struct EvolutionResult {
    pub times: Vec<f64>,
    pub states: Vec<PureState>,
    /// Photon-number expectation <a'a> per time point.
    pub occupation: Vec<f64>,
    /// Energy expectation <H> per time point.
    pub energy: Vec<f64>,
}

/// Unitary evolution `psi(t) = exp(-i H t / hbar) psi(0)` via the exact
/// eigendecomposition, sampled at `steps + 1` points including t = 0.
pub fn evolve(
    state: &PureState,
    model: &HamiltonianModel,
    t: f64,
    steps: usize,
) -> Result<EvolutionResult> {
    let d = model.space.dim;
    if state.dim() != d {
        return Err(Error::Shape(format!(
            "state dimension {} does not match Hamiltonian dimension {d}",
            state.dim()
        )));
    }
    if t < 0.0 {
        return Err(Error::Domain(format!("evolution time must be >= 0, got {t}")));
    }
    if steps == 0 {
        return Err(Error::Domain("evolution needs at least one step".into()));
    }
    let (values, vectors) = eigen_decomposition(model)?;
    let hbar = model.constants.hbar;
    // coefficients in the energy eigenbasis
    let coeffs = DVector::from_fn(d, |k, _| {
        (0..d)
            .map(|j| Complex64::new(vectors[(j, k)], 0.0) * state.amplitudes()[j])
            .sum::<Complex64>()
    });
    let num_op = number_operator(d);
    let h_c = model.matrix.map(|x| Complex64::new(x, 0.0));
    let n_c = num_op.map(|x| Complex64::new(x, 0.0));

    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    let mut occupation = Vec::with_capacity(steps + 1);
    let mut energy = Vec::with_capacity(steps + 1);
    for j in 0..=steps {
        let tj = t * j as f64 / steps as f64;
        let evolved = DVector::from_fn(d, |r, _| {
            (0..d)
                .map(|k| {
                    let phase = Complex64::from_polar(1.0, -values[k] * tj / hbar);
                    Complex64::new(vectors[(r, k)], 0.0) * phase * coeffs[k]
                })
                .sum::<Complex64>()
        });
        let psi = PureState::new(evolved)?;
        occupation.push(expectation(&psi, &n_c)?);
        energy.push(expectation(&psi, &h_c)?);
        times.push(tj);
        states.push(psi);
    }
    Ok(EvolutionResult {
        times,
        states,
        occupation,
        energy,
    })
}

/// Expectation `<psi|O|psi>` of a Hermitian operator; the imaginary part
/// must vanish to 1e-10 and is discarded.
pub fn expectation(state: &PureState, operator: &DMatrix<Complex64>) -> Result<f64> {
    let d = state.dim();
    if operator.nrows() != d || operator.ncols() != d {
        return Err(Error::Shape(format!(
            "operator is {}x{}, state has dimension {d}",
            operator.nrows(),
            operator.ncols()
        )));
    }
    let herm_dev = (operator - operator.adjoint())
        .iter()
        .fold(0.0f64, |a, z| a.max(z.norm()));
    if herm_dev > 1e-12 {
        return Err(Error::Validation(format!(
            "operator not Hermitian (max deviation {herm_dev:.3e})"
        )));
    }
    let v = state.amplitudes();
    let val = (v.adjoint() * operator * v)[(0, 0)];
    if val.im.abs() > 1e-10 {
        return Err(Error::Numerical(format!(
            "expectation value has imaginary part {:.3e}",
            val.im
        )));
    }
    Ok(val.re)
}
