//! Joint Shannon entropy, density matrices, partial trace, and Von
//! Neumann / entanglement entropy.
//!
//! All entropies are in nats (natural logarithm); [`nats_to_bits`] converts
//! for reporting. Composite bipartite indices are row-major: the state
//! `|a, b>` of an `dA x dB` system sits at flat index `a * dB + b`
//! (subsystem A is the slow index).

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::info::ProbabilityWeights;

/// Hermiticity / normalization tolerance on constructed matrices.
const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-10;
/// Eigenvalues in [-EIG_CLAMP, 0] are treated as exact zeros.
const EIG_CLAMP: f64 = 1e-10;

pub fn nats_to_bits(nats: f64) -> f64 {
    nats / std::f64::consts::LN_2
}

/// Which subsystem a partial trace keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Joint distribution Pi(x, y) over word indices (rows) and mode indices
/// (columns).
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    matrix: DMatrix<f64>,
}

impl JointDistribution {
    pub fn new(matrix: DMatrix<f64>) -> Result<Self> {
        if matrix.nrows() == 0 || matrix.ncols() == 0 {
            return Err(Error::Validation("joint distribution is empty".into()));
        }
        let mut sum = 0.0;
        for &p in matrix.iter() {
            if p < 0.0 || !p.is_finite() {
                return Err(Error::Validation(format!(
                    "joint distribution entries must be non-negative, got {p}"
                )));
            }
            sum += p;
        }
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::Validation(format!(
                "joint distribution must sum to 1 within 1e-12, got {sum}"
            )));
        }
        Ok(JointDistribution { matrix })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged joint distribution rows".into()));
        }
        Ok(Self::new(DMatrix::from_fn(nrows, ncols, |i, j| rows[i][j]))?)
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }
}

fn plogp(p: f64) -> f64 {
    if p > 0.0 {
        p * p.ln()
    } else {
        0.0
    }
}

/// Shannon entropy of a plain probability vector, in nats.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    -probs.iter().copied().map(plogp).sum::<f64>()
}

/// Joint (bi-dimensional) Shannon entropy
/// `S(x, y) = -sum_x sum_y Pi(x,y) ln Pi(x,y)`.
pub fn joint_shannon_entropy(dist: &JointDistribution) -> f64 {
    -dist.matrix.iter().copied().map(plogp).sum::<f64>()
}

/// Row and column marginals of a joint distribution.
pub fn marginals(dist: &JointDistribution) -> Result<(ProbabilityWeights, ProbabilityWeights)> {
    let m = &dist.matrix;
    let rows: Vec<f64> = (0..m.nrows()).map(|i| m.row(i).sum()).collect();
    let cols: Vec<f64> = (0..m.ncols()).map(|j| m.column(j).sum()).collect();
    Ok((
        ProbabilityWeights::from_slice(&rows)?,
        ProbabilityWeights::from_slice(&cols)?,
    ))
}

/// Mutual information `I(x; y) = S(x) + S(y) - S(x, y)` in nats.
pub fn mutual_information(dist: &JointDistribution) -> Result<f64> {
    let (rx, cy) = marginals(dist)?;
    let sx = shannon_entropy(&rx.iter().map(|(_, p)| p).collect::<Vec<_>>());
    let sy = shannon_entropy(&cy.iter().map(|(_, p)| p).collect::<Vec<_>>());
    Ok(sx + sy - joint_shannon_entropy(dist))
}

/// Normalized pure state on a d-dimensional Hilbert space.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: DVector<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: DVector<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Validation("state vector is empty".into()));
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::Validation(format!(
                "state vector norm must be 1 within 1e-12, got {norm}"
            )));
        }
        Ok(PureState { amplitudes })
    }

    /// Normalizes an arbitrary non-zero vector.
    pub fn normalized(raw: DVector<Complex64>) -> Result<Self> {
        let norm = raw.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::Validation(
                "cannot normalize a zero or non-finite vector".into(),
            ));
        }
        Self::new(raw / Complex64::new(norm, 0.0))
    }

    /// Basis state |k> in dimension d.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::Shape(format!(
                "basis index {k} out of range for dimension {dim}"
            )));
        }
        let mut v = DVector::from_element(dim, Complex64::new(0.0, 0.0));
        v[k] = Complex64::new(1.0, 0.0);
        Self::new(v)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    /// Projector |psi><psi| as a density matrix.
    pub fn projector(&self) -> DensityMatrix {
        let m = &self.amplitudes * self.amplitudes.adjoint();
        // construction guarantees the invariants; skip the eigencheck
        DensityMatrix { matrix: m }
    }
}

/// Hermitian, unit-trace, positive-semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: DMatrix<Complex64>,
}

impl DensityMatrix {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        if matrix.nrows() == 0 || matrix.nrows() != matrix.ncols() {
            return Err(Error::Shape(format!(
                "density matrix must be square and non-empty, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let herm_dev = (&matrix - matrix.adjoint()).iter().fold(0.0f64, |acc, z| {
            acc.max(z.re.abs()).max(z.im.abs())
        });
        if herm_dev > HERMITIAN_TOL {
            return Err(Error::Validation(format!(
                "density matrix not Hermitian (max deviation {herm_dev:.3e})"
            )));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > 1e-12 {
            return Err(Error::Validation(format!(
                "density matrix trace must be 1, got {tr}"
            )));
        }
        let rho = DensityMatrix { matrix };
        let min = rho.eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        if min < -EIG_CLAMP {
            return Err(Error::Validation(format!(
                "density matrix not positive semidefinite (min eigenvalue {min:.3e})"
            )));
        }
        Ok(rho)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// Real eigenvalues of the Hermitian matrix, unsorted.
    pub fn eigenvalues(&self) -> Vec<f64> {
        nalgebra::SymmetricEigen::new(self.matrix.clone())
            .eigenvalues
            .iter()
            .copied()
            .collect()
    }
}

/// Von Neumann entropy `S = -tr(rho ln rho)` in nats, via the eigenvalue
/// spectrum. Eigenvalues in [-1e-10, 0] are clamped to zero.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let mut s = 0.0;
    for lambda in rho.eigenvalues() {
        if lambda < -EIG_CLAMP {
            return Err(Error::Validation(format!(
                "density matrix eigenvalue {lambda:.3e} below positivity tolerance"
            )));
        }
        let p = lambda.max(0.0);
        s -= plogp(p);
    }
    Ok(s.max(0.0))
}

/// Binary entropy `-p ln p - (1-p) ln(1-p)` in nats.
pub fn binary_entropy(p: f64) -> f64 {
    -plogp(p) - plogp(1.0 - p)
}

/// Partial trace of a bipartite density matrix with composite index
/// `i = a * dim_b + b`.
pub fn partial_trace(
    rho: &DensityMatrix,
    dim_a: usize,
    dim_b: usize,
    keep: Subsystem,
) -> Result<DensityMatrix> {
    if dim_a * dim_b != rho.dim() {
        return Err(Error::Shape(format!(
            "subsystem dimensions {dim_a}x{dim_b} do not factor density matrix dimension {}",
            rho.dim()
        )));
    }
    let m = rho.matrix();
    let reduced = match keep {
        Subsystem::A => DMatrix::from_fn(dim_a, dim_a, |a, a2| {
            (0..dim_b).map(|b| m[(a * dim_b + b, a2 * dim_b + b)]).sum()
        }),
        Subsystem::B => DMatrix::from_fn(dim_b, dim_b, |b, b2| {
            (0..dim_a).map(|a| m[(a * dim_b + b, a * dim_b + b2)]).sum()
        }),
    };
    DensityMatrix::new(reduced)
}

/// Entanglement entropy of a bipartite pure state: Von Neumann entropy of
/// the reduced state on subsystem A.
pub fn entanglement_entropy(psi: &PureState, dim_a: usize, dim_b: usize) -> Result<f64> {
    if dim_a * dim_b != psi.dim() {
        return Err(Error::Shape(format!(
            "subsystem dimensions {dim_a}x{dim_b} do not factor state dimension {}",
            psi.dim()
        )));
    }
    let reduced = partial_trace(&psi.projector(), dim_a, dim_b, Subsystem::A)?;
    von_neumann_entropy(&reduced)
}

/// Mixed state `rho = sum_i p_i |psi_i><psi_i|`. The weight keyed by index
/// `i` applies to `states[i]`.
pub fn density_from_mixture(
    states: &[PureState],
    probs: &ProbabilityWeights,
) -> Result<DensityMatrix> {
    let dim = states
        .first()
        .ok_or_else(|| Error::Validation("mixture needs at least one state".into()))?
        .dim();
    if states.iter().any(|s| s.dim() != dim) {
        return Err(Error::Shape("mixture states have mismatched dimensions".into()));
    }
    let mut m = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    for (i, p) in probs.iter() {
        let psi = states.get(i as usize).ok_or_else(|| {
            Error::Shape(format!("weight index {i} has no matching state"))
        })?;
        m += psi.projector().matrix() * Complex64::new(p, 0.0);
    }
    DensityMatrix::new(m)
}
