//! Differential calculus and function spaces on the quantum torus.
//!
//! All of the analysis lives on the Fourier side: the partial derivations act
//! as `∂_j(U^n) = 2πi n_j U^n`, and every other operator here is a Fourier
//! multiplier `T_g x = Σ g(n) x̂(n) U^n` for a scalar symbol `g` on `Z^d` —
//! the Bessel potential `J^α = (1-Δ)^{α/2}` with symbol `(1+|2πn|²)^{α/2}`,
//! the Laplacian, the torus action, and the square Fejér weights.
//!
//! `L_p` norms are evaluated spectrally through the GNS vector state:
//! `τ(f(y)) = ⟨f(M_y) δ₀, δ₀⟩` for the finite section `M_y` of left
//! multiplication, which is exact for polynomial `f` once the truncation
//! window contains the relevant supports.

mod fejer;
mod multiplier;
mod norms;

pub use fejer::fejer_mean;
pub use multiplier::{apply_multiplier, bessel_potential, partial_derivative, MultiplierSymbol};
pub use norms::{
    homogeneous_sobolev_norm, lp_norm, poincare_gap, sobolev_square_function_norm, SobolevConfig,
};
