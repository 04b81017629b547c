use nct_core::{NctError, Result};

use crate::spectrum::{dixmier_log_average, SingularSpectrum};

/// Result of the affine fit of `Λ_n` against `1/ln n`.
#[derive(Debug, Clone, Copy)]
pub struct DixmierFit {
    /// Extrapolated value at `1/ln n -> 0`; the reported trace approximant.
    pub intercept: f64,
    /// Coefficient of `1/ln n`.
    pub slope: f64,
    /// Max absolute fit residual over the grid.
    pub residual: f64,
}

/// Least-squares affine fit of the log averages `Λ_n` over a grid of orders
/// `n`, in the variable `1/ln n`. The intercept removes the `O(1/ln n)` term
/// that makes raw log averages converge too slowly to be useful.
pub fn extrapolate_dixmier(s: &SingularSpectrum, grid: &[usize]) -> Result<DixmierFit> {
    if grid.len() < 3 {
        return Err(NctError::InvalidInput(format!(
            "extrapolation grid needs >= 3 points, got {}",
            grid.len()
        )));
    }
    let mut xs = Vec::with_capacity(grid.len());
    let mut ys = Vec::with_capacity(grid.len());
    for &n in grid {
        xs.push(1.0 / (n as f64).ln());
        ys.push(dixmier_log_average(s, n)?);
    }
    let (slope, intercept) = least_squares_line(&xs, &ys)?;
    let residual = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - (slope * x + intercept)).abs())
        .fold(0.0, f64::max);
    Ok(DixmierFit {
        intercept,
        slope,
        residual,
    })
}

/// Least-squares slope of `ln μ(k)` against `ln(k+1)` over `k in [k_min, k_max]`.
/// Zero values inside the window are skipped (they signal finite rank, not decay).
pub fn decay_exponent(s: &SingularSpectrum, k_min: usize, k_max: usize) -> Result<f64> {
    if k_min == 0 || k_min >= k_max || k_max > s.len() {
        return Err(NctError::InvalidInput(format!(
            "decay window [{k_min}, {k_max}] invalid for spectrum of length {}",
            s.len()
        )));
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for k in k_min..k_max {
        let v = s.value(k);
        if v > 0.0 {
            xs.push(((k + 1) as f64).ln());
            ys.push(v.ln());
        }
    }
    if xs.len() < 8 {
        return Err(NctError::InvalidInput(format!(
            "decay window keeps only {} positive values",
            xs.len()
        )));
    }
    let (slope, _) = least_squares_line(&xs, &ys)?;
    Ok(slope)
}

fn least_squares_line(xs: &[f64], ys: &[f64]) -> Result<(f64, f64)> {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    let det = n * sxx - sx * sx;
    if det.abs() < 1e-14 * n * sxx.max(1.0) {
        return Err(NctError::InvalidInput(
            "degenerate abscissa grid in least-squares fit".into(),
        ));
    }
    let slope = (n * sxy - sx * sy) / det;
    let intercept = (sy - slope * sx) / n;
    Ok((slope, intercept))
}
