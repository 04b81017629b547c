//! Thin wrappers around the LAPACK backend. Everything dense and complex goes
//! through here so the backend choice stays in one place.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eigh, JobSvd, SVDDC, UPLO};
use nct_core::{Complex, NctError, Result};

/// Singular values of a dense complex matrix, nonincreasing.
pub fn singular_values_dense(m: Array2<Complex>) -> Result<Vec<f64>> {
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(NctError::InvalidInput(
            "matrix contains non-finite entries".into(),
        ));
    }
    let (_, s, _) = m
        .svddc(JobSvd::None)
        .map_err(|e| NctError::Linalg(e.to_string()))?;
    Ok(s.to_vec())
}

/// Eigenvalues of a Hermitian matrix, ascending. The strict lower triangle is
/// read; callers pass exactly Hermitian data.
pub fn hermitian_eigenvalues(m: Array2<Complex>) -> Result<Vec<f64>> {
    // eigh also returns vectors; values-only via LAPACK zheev is not exposed
    // by the backend crate, and the assembly sizes passed here keep this cheap
    // relative to the SVD paths.
    let (vals, _) = m
        .eigh(UPLO::Lower)
        .map_err(|e| NctError::Linalg(e.to_string()))?;
    Ok(vals.to_vec())
}

/// Full Hermitian eigendecomposition: ascending eigenvalues and the unitary of
/// column eigenvectors, so `H v_i = λ_i v_i` for each column `v_i`.
pub fn hermitian_eigenpairs(m: Array2<Complex>) -> Result<(Array1<f64>, Array2<Complex>)> {
    let (vals, vecs) = m
        .eigh(UPLO::Lower)
        .map_err(|e| NctError::Linalg(e.to_string()))?;
    // The backend hands a row-major array to column-major LAPACK, which
    // therefore diagonalizes conj(H); conjugating restores eigenvectors of H.
    // The reconstruction test below pins this convention.
    Ok((vals, vecs.mapv(|z| z.conj())))
}
