use crate::{NctError, Result};

/// Antisymmetry is enforced up to this tolerance on construction.
const ANTISYMMETRY_TOL: f64 = 1e-12;

/// The `d×d` antisymmetric real deformation parameter of a quantum torus.
///
/// `θ = 0` is the commutative torus; rational entries admit finite-dimensional
/// representations (see [`crate::clock_shift_rep`]).
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaMatrix {
    d: usize,
    entries: Vec<f64>, // row-major d×d
}

impl ThetaMatrix {
    /// Builds a deformation matrix, checking `d >= 2` and antisymmetry.
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let d = rows.len();
        if d < 2 {
            return Err(NctError::InvalidDimension(d));
        }
        let mut entries = vec![0.0; d * d];
        for (j, row) in rows.iter().enumerate() {
            if row.len() != d {
                return Err(NctError::DimensionMismatch {
                    expected: d,
                    found: row.len(),
                });
            }
            entries[j * d..(j + 1) * d].copy_from_slice(row);
        }
        for j in 0..d {
            for k in 0..d {
                let defect = (entries[j * d + k] + entries[k * d + j]).abs();
                if defect > ANTISYMMETRY_TOL {
                    return Err(NctError::NotAntisymmetric { j, k, defect });
                }
            }
        }
        Ok(Self { d, entries })
    }

    /// The commutative torus, `θ = 0`.
    pub fn zero(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(NctError::InvalidDimension(d));
        }
        Ok(Self {
            d,
            entries: vec![0.0; d * d],
        })
    }

    /// Irrational exemplar: `θ_{12} = (√5 − 1)/2`, all other off-diagonal pairs zero.
    pub fn golden(d: usize) -> Result<Self> {
        let mut t = Self::zero(d)?;
        let g = (5.0_f64.sqrt() - 1.0) / 2.0;
        t.entries[1] = g; // θ_{12}
        t.entries[d] = -g; // θ_{21}
        Ok(t)
    }

    /// Rational two-dimensional deformation `θ_{12} = p/q`.
    pub fn rational(p: i64, q: i64) -> Result<Self> {
        if q <= 0 {
            return Err(NctError::InvalidInput(format!(
                "rational deformation needs q >= 1, got {q}"
            )));
        }
        let mut t = Self::zero(2)?;
        let v = p as f64 / q as f64;
        t.entries[1] = v;
        t.entries[2] = -v;
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// Entry `θ_{jk}` (0-based indices).
    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.entries[j * self.d + k]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0.0)
    }

    /// Rows as nested vectors, for serialization.
    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.d)
            .map(|j| self.entries[j * self.d..(j + 1) * self.d].to_vec())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisymmetry_enforced() {
        assert!(ThetaMatrix::new(vec![vec![0.0, 0.3], vec![-0.3, 0.0]]).is_ok());
        let err = ThetaMatrix::new(vec![vec![0.0, 0.3], vec![0.3, 0.0]]);
        assert!(matches!(err, Err(NctError::NotAntisymmetric { .. })));
        // nonzero diagonal is a special case of antisymmetry failure
        let err = ThetaMatrix::new(vec![vec![0.1, 0.0], vec![0.0, 0.0]]);
        assert!(matches!(err, Err(NctError::NotAntisymmetric { .. })));
    }

    #[test]
    fn dimension_must_be_at_least_two() {
        assert!(matches!(
            ThetaMatrix::new(vec![vec![0.0]]),
            Err(NctError::InvalidDimension(1))
        ));
        assert!(matches!(
            ThetaMatrix::zero(0),
            Err(NctError::InvalidDimension(0))
        ));
    }

    #[test]
    fn golden_preset() {
        let t = ThetaMatrix::golden(2).unwrap();
        let g = (5.0_f64.sqrt() - 1.0) / 2.0;
        assert_eq!(t.get(0, 1), g);
        assert_eq!(t.get(1, 0), -g);
        let t3 = ThetaMatrix::golden(3).unwrap();
        assert_eq!(t3.get(0, 1), g);
        assert_eq!(t3.get(2, 1), 0.0);
    }
}
