use ndarray::Array2;

use crate::{AlgebraElement, Complex, LatticeTruncation, NctError, Result};

/// Dense finite section of an operator on `C^N ⊗ L₂(T_θ^d)`, restricted to the
/// spin space tensored with a cube of Fourier modes.
///
/// Flat index convention: `mode_position * spin_dim + spin`, i.e. the spin
/// index varies fastest, so each mode owns a contiguous `N×N` block.
/// Entries are exact values of the infinite matrix — only the window is
/// truncated, truncated factors are never multiplied together to produce an
/// entry.
#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    truncation: LatticeTruncation,
    spin_dim: usize,
    entries: Array2<Complex>,
}

impl OperatorMatrix {
    pub fn zeros(truncation: LatticeTruncation, spin_dim: usize) -> Self {
        let n = truncation.len() * spin_dim;
        Self {
            truncation,
            spin_dim,
            entries: Array2::zeros((n, n)),
        }
    }

    pub fn from_entries(
        truncation: LatticeTruncation,
        spin_dim: usize,
        entries: Array2<Complex>,
    ) -> Result<Self> {
        let n = truncation.len() * spin_dim;
        if entries.nrows() != n || entries.ncols() != n {
            return Err(NctError::InvalidInput(format!(
                "entry matrix is {}x{}, basis needs {n}x{n}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        Ok(Self {
            truncation,
            spin_dim,
            entries,
        })
    }

    pub fn truncation(&self) -> &LatticeTruncation {
        &self.truncation
    }

    pub fn spin_dim(&self) -> usize {
        self.spin_dim
    }

    /// Total dimension `spin_dim * |cube|`.
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &Array2<Complex> {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut Array2<Complex> {
        &mut self.entries
    }

    pub fn into_entries(self) -> Array2<Complex> {
        self.entries
    }

    /// Flat basis index of `(mode position, spin)`.
    pub fn flat_index(&self, mode_position: usize, spin: usize) -> usize {
        mode_position * self.spin_dim + spin
    }

    /// Entry addressed by `(spin', mode') x (spin, mode)` positions.
    pub fn entry(&self, row: (usize, usize), col: (usize, usize)) -> Complex {
        self.entries[(self.flat_index(row.0, row.1), self.flat_index(col.0, col.1))]
    }

    /// Max modulus of `M - M*`.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                let d = (self.entries[(i, j)] - self.entries[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Plain matrix product; both sections must share basis and spin dimension.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() || self.spin_dim != other.spin_dim {
            return Err(NctError::InvalidInput(
                "operator sections have different bases".into(),
            ));
        }
        Ok(Self {
            truncation: self.truncation.clone(),
            spin_dim: self.spin_dim,
            entries: matmul_dense(&self.entries, &other.entries),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() || self.spin_dim != other.spin_dim {
            return Err(NctError::InvalidInput(
                "operator sections have different bases".into(),
            ));
        }
        Ok(Self {
            truncation: self.truncation.clone(),
            spin_dim: self.spin_dim,
            entries: &self.entries - &other.entries,
        })
    }

    /// Max modulus over all entries.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Dense row-major product without a BLAS dependency; this crate never links
/// a linear-algebra backend, and the sections multiplied here stay small.
pub fn matmul_dense(a: &Array2<Complex>, b: &Array2<Complex>) -> Array2<Complex> {
    let (n, k) = (a.nrows(), a.ncols());
    let m = b.ncols();
    assert_eq!(k, b.nrows(), "inner dimensions must agree");
    let mut c = Array2::<Complex>::zeros((n, m));
    for i in 0..n {
        for l in 0..k {
            let ail = a[(i, l)];
            if ail.norm_sqr() == 0.0 {
                continue;
            }
            for j in 0..m {
                c[(i, j)] += ail * b[(l, j)];
            }
        }
    }
    c
}

impl AlgebraElement {
    /// GNS finite section of left multiplication by `self` on the scalar
    /// (spin-free) mode basis: entry `(n', n) = x̂(n'-n) e^{2πi σ(n'-n, n)}`,
    /// the coefficient of `x · U^n` at `U^{n'}`.
    pub fn left_mult_matrix(&self, truncation: &LatticeTruncation) -> Result<OperatorMatrix> {
        if truncation.dim() != self.dim() {
            return Err(NctError::DimensionMismatch {
                expected: self.dim(),
                found: truncation.dim(),
            });
        }
        let mut op = OperatorMatrix::zeros(truncation.clone(), 1);
        let entries = op.entries_mut();
        for (col, n) in truncation.modes().iter().enumerate() {
            for (m, c) in self.coeffs() {
                let target = n.add(m);
                if let Some(row) = truncation.position(&target) {
                    let phase = crate::weyl_phase(m, n, self.theta())?;
                    entries[(row, col)] += c * phase;
                }
            }
        }
        Ok(op)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{LatticeIndex, ThetaMatrix};

    fn idx(coords: &[i64]) -> LatticeIndex {
        LatticeIndex::new(coords.to_vec())
    }

    #[test]
    fn identity_element_gives_identity_matrix() {
        let t = ThetaMatrix::golden(2).unwrap();
        let one = AlgebraElement::one(t);
        let tr = LatticeTruncation::new(2, 2).unwrap();
        let m = one.left_mult_matrix(&tr).unwrap();
        for i in 0..m.dim() {
            for j in 0..m.dim() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((m.entries()[(i, j)] - Complex::new(expected, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn commutative_generator_is_a_shift() {
        let t = ThetaMatrix::zero(2).unwrap();
        let u1 = AlgebraElement::generator(t, 0).unwrap();
        let tr = LatticeTruncation::new(2, 2).unwrap();
        let m = u1.left_mult_matrix(&tr).unwrap();
        for (col, n) in tr.modes().iter().enumerate() {
            let shifted = n.add(&idx(&[1, 0]));
            for (row, np) in tr.modes().iter().enumerate() {
                let expected = if *np == shifted { 1.0 } else { 0.0 };
                let got = m.entries()[(row, col)];
                assert!(
                    (got - Complex::new(expected, 0.0)).norm() < 1e-15,
                    "entry ({row},{col}) = {got}"
                );
            }
        }
    }

    #[test]
    fn self_adjoint_element_gives_hermitian_section() {
        let t = ThetaMatrix::golden(2).unwrap();
        let x = AlgebraElement::from_coeffs(
            t,
            [
                (idx(&[1, 1]), Complex::new(0.4, 0.9)),
                (idx(&[2, -1]), Complex::new(-0.3, 0.25)),
            ],
        )
        .unwrap()
        .self_adjoint_part();
        let tr = LatticeTruncation::new(2, 3).unwrap();
        let m = x.left_mult_matrix(&tr).unwrap();
        assert!(m.hermiticity_defect() <= 1e-14);
    }

    #[test]
    fn gns_sections_are_multiplicative_on_contained_supports() {
        // supp(a) + supp(b) + inner cube stays inside the window
        let t = ThetaMatrix::golden(2).unwrap();
        let a = AlgebraElement::from_coeffs(
            t.clone(),
            [
                (idx(&[1, 0]), Complex::new(0.7, -0.1)),
                (idx(&[0, 1]), Complex::new(0.2, 0.5)),
            ],
        )
        .unwrap();
        let b = AlgebraElement::from_coeffs(
            t.clone(),
            [
                (idx(&[-1, 0]), Complex::new(1.3, 0.0)),
                (idx(&[1, 1]), Complex::new(0.0, -0.8)),
            ],
        )
        .unwrap();
        let tr = LatticeTruncation::new(2, 6).unwrap();
        let ma = a.left_mult_matrix(&tr).unwrap();
        let mb = b.left_mult_matrix(&tr).unwrap();
        let mab = a.mul(&b).unwrap().left_mult_matrix(&tr).unwrap();
        let prod = ma.matmul(&mb).unwrap();
        // compare on columns whose product support cannot leave the window
        let inner = LatticeTruncation::new(2, 2).unwrap();
        for n in inner.modes() {
            let col = tr.position(n).unwrap();
            for row in 0..tr.len() {
                let d = (mab.entries()[(row, col)] - prod.entries()[(row, col)]).norm();
                assert!(d <= 1e-13, "mismatch at ({row},{col}): {d:e}");
            }
        }
    }
}
