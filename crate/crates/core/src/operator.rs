//! Hermitian operators on finite-dimensional spaces and their spectra.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::matrix::ComplexMatrix;

/// Entrywise tolerance on `|H − H†|` accepted for a Hermitian operator.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Residual contract on returned eigenpairs: `‖Hv − λv‖ ≤ RESIDUAL_TOL·‖H‖`.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// Implicit QR steps allowed per matrix dimension.
pub const SWEEPS_PER_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    matrix: ComplexMatrix,
}

impl HermitianOperator {
    /// Wraps a matrix that must already be Hermitian within [`HERMITIAN_TOL`].
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let defect = matrix.hermiticity_defect();
        if defect.is_nan() || defect > HERMITIAN_TOL {
            return domain(format!(
                "matrix is not Hermitian: max |H - H^dagger| = {defect:e}"
            ));
        }
        Ok(Self { matrix })
    }

    /// Replaces `M` by `(M + M†)/2`, discarding rounding-level asymmetry.
    pub fn symmetrized(matrix: ComplexMatrix) -> Self {
        let adj = matrix.adjoint();
        Self {
            matrix: (&matrix + &adj).scale_real(0.5),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }
}

/// Eigenvalues in ascending order with matching unit eigenvectors.
#[derive(Debug, Clone)]
pub struct Eigenpairs {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<Complex64>>,
}

fn decompose(op: &HermitianOperator) -> Result<(Vec<f64>, DMatrix<Complex64>, Vec<usize>)> {
    let n = op.dim();
    let m = DMatrix::from_row_slice(n, n, op.matrix().as_slice());
    let cap = SWEEPS_PER_DIM * n;
    let eig = nalgebra::SymmetricEigen::try_new(m, f64::EPSILON, cap).ok_or_else(|| {
        Error::NoConvergence {
            what: format!("Hermitian eigensolver on a {n}x{n} matrix"),
            iterations: cap,
        }
    })?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    Ok((values, eig.eigenvectors, order))
}

/// All eigenvalues of `op`, ascending.
pub fn spectrum(op: &HermitianOperator) -> Result<Vec<f64>> {
    decompose(op).map(|(values, _, _)| values)
}

/// Eigenvalues and eigenvectors; every pair is checked against the residual
/// contract before being returned.
pub fn eigenpairs(op: &HermitianOperator) -> Result<Eigenpairs> {
    let (values, vecs, order) = decompose(op)?;
    let vectors: Vec<Vec<Complex64>> = order
        .iter()
        .map(|&i| vecs.column(i).iter().copied().collect())
        .collect();
    let scale = op.matrix().norm();
    for (lambda, v) in values.iter().zip(&vectors) {
        let r = residual(op, *lambda, v)?;
        if r > RESIDUAL_TOL * scale.max(f64::MIN_POSITIVE) {
            return Err(Error::NoConvergence {
                what: format!("eigenpair residual {r:e} exceeds contract for lambda = {lambda}"),
                iterations: SWEEPS_PER_DIM * op.dim(),
            });
        }
    }
    Ok(Eigenpairs { values, vectors })
}

/// `‖Hv − λv‖₂`
pub fn residual(op: &HermitianOperator, lambda: f64, v: &[Complex64]) -> Result<f64> {
    let hv = op.matrix().mul_vec(v)?;
    Ok(hv
        .iter()
        .zip(v)
        .map(|(a, b)| (a - b * lambda).norm_sqr())
        .sum::<f64>()
        .sqrt())
}
