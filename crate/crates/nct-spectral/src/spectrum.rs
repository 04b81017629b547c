use nct_core::{NctError, OperatorMatrix, Result};

use crate::linalg;

/// Nonincreasing singular-value sequence `μ(k)` of a finite operator section,
/// together with a descriptor of where it came from.
#[derive(Debug, Clone)]
pub struct SingularSpectrum {
    values: Vec<f64>,
    source: String,
}

impl SingularSpectrum {
    /// Sorts the input nonincreasing and clamps roundoff negatives to zero.
    pub fn from_values(mut values: Vec<f64>, source: impl Into<String>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(NctError::InvalidInput(
                "singular values must be finite".into(),
            ));
        }
        for v in values.iter_mut() {
            if *v < 0.0 {
                if *v < -1e-10 {
                    return Err(NctError::InvalidInput(format!(
                        "negative singular value {v:e}"
                    )));
                }
                *v = 0.0;
            }
        }
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Ok(Self {
            values,
            source: source.into(),
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// `μ(k)`, zero past the end of the computed window.
    pub fn value(&self, k: usize) -> f64 {
        self.values.get(k).copied().unwrap_or(0.0)
    }

    /// Entrywise power `μ(k)^p`; preserves ordering for `p > 0`.
    pub fn powered(&self, p: f64) -> Self {
        Self {
            values: self.values.iter().map(|v| v.powf(p)).collect(),
            source: format!("{}^{p}", self.source),
        }
    }

    /// Merges two spectra (direct sum of operators), resorting.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut values = self.values.clone();
        values.extend_from_slice(&other.values);
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Self {
            values,
            source: format!("{} ⊕ {}", self.source, other.source),
        }
    }
}

/// Singular values of a finite section, via dense SVD. Invariant under left
/// and right unitary factors; for Hermitian input it returns sorted absolute
/// eigenvalues.
pub fn singular_values(m: &OperatorMatrix) -> Result<SingularSpectrum> {
    let source = format!(
        "section(dim={}, radius={}, spin={})",
        m.dim(),
        m.truncation().radius(),
        m.spin_dim()
    );
    let vals = linalg::singular_values_dense(m.entries().clone())?;
    SingularSpectrum::from_values(vals, source)
}

/// `‖μ‖_{ℓ_p} = (Σ μ(k)^p)^{1/p}` over the computed window.
pub fn schatten_norm(s: &SingularSpectrum, p: f64) -> f64 {
    assert!(p > 0.0, "Schatten exponent must be positive");
    s.values()
        .iter()
        .map(|v| v.powf(p))
        .sum::<f64>()
        .powf(1.0 / p)
}

/// Weak quasi-norm `sup_k (k+1)^{1/p} μ(k)` over the computed window.
pub fn weak_quasi_norm(s: &SingularSpectrum, p: f64) -> f64 {
    assert!(p > 0.0, "weak Schatten exponent must be positive");
    s.values()
        .iter()
        .enumerate()
        .map(|(k, v)| ((k + 1) as f64).powf(1.0 / p) * v)
        .fold(0.0, f64::max)
}

/// Dixmier log average `Λ_n = (1/ln n) Σ_{k<n} μ(k)`; takes the value 1 on the
/// harmonic sequence in the limit.
pub fn dixmier_log_average(s: &SingularSpectrum, n: usize) -> Result<f64> {
    if n < 2 || n > s.len() {
        return Err(NctError::InvalidInput(format!(
            "log-average order {n} outside [2, {}]",
            s.len()
        )));
    }
    let sum: f64 = s.values()[..n].iter().sum();
    Ok(sum / (n as f64).ln())
}

/// Default evaluation grid `{L/8, L/4, L/2, L}` for a spectrum of length `L`.
pub fn default_dixmier_grid(len: usize) -> Vec<usize> {
    [len / 8, len / 4, len / 2, len]
        .into_iter()
        .filter(|&n| n >= 2)
        .collect()
}

/// Head-weighted grid `{L/16, L/8, L/4, L/2}`, for spectra obtained from
/// finite sections whose tail underestimates the true operator.
pub fn head_dixmier_grid(len: usize) -> Vec<usize> {
    [len / 16, len / 8, len / 4, len / 2]
        .into_iter()
        .filter(|&n| n >= 2)
        .collect()
}
