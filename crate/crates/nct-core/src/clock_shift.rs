use std::f64::consts::PI;

use ndarray::Array2;

use crate::{Complex, LatticeIndex, NctError, Result};

/// Finite-dimensional clock-and-shift representation of the rational torus
/// `θ_{12} = p/q` in dimension two.
///
/// `U_1 ↦ C = diag(1, ω, ..., ω^{q-1})` with `ω = e^{2πi p/q}`, `U_2 ↦ S` the
/// cyclic shift `e_j ↦ e_{j+1 mod q}`, and `U^n ↦ C^{n_1} S^{n_2}` in the
/// ordered monomial convention. The pair satisfies `C S = ω S C`, matching
/// `U_1 U_2 = e^{2πi θ_{12}} U_2 U_1`, which makes the representation an exact
/// multiplicative oracle for the twisted product. Its normalized matrix trace
/// `(1/q) Tr` sees the torus trace only modulo `q`-folding:
/// `(1/q) Tr(rep(U^n)) = δ_{n ≡ 0 (mod q)}` for `gcd(p,q) = 1`, not
/// `δ_{n,0}`, so trace comparisons are valid on modes that do not alias.
pub fn clock_shift_rep(p: i64, q: i64, n: &LatticeIndex) -> Result<Array2<Complex>> {
    if n.dim() != 2 {
        return Err(NctError::Unsupported(format!(
            "clock-shift representation exists only for d = 2, got d = {}",
            n.dim()
        )));
    }
    if q < 1 {
        return Err(NctError::InvalidInput(format!("need q >= 1, got {q}")));
    }
    let qu = q as usize;
    let omega_exp = |k: i64| Complex::cis(2.0 * PI * (p as f64) * (k as f64) / (q as f64));
    let n1 = n.get(0);
    let n2 = n.get(1);
    let mut m = Array2::<Complex>::zeros((qu, qu));
    // C^{n1} S^{n2}: column j goes to row j + n2 (mod q) with phase ω^{(j+n2) n1}
    for j in 0..qu {
        let row = (((j as i64 + n2) % q) + q) % q;
        m[(row as usize, j)] = omega_exp(row * n1);
    }
    Ok(m)
}
