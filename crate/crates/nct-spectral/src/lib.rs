//! Singular-value analysis for finite operator sections.
//!
//! The objects of interest are compact operators whose singular values
//! `μ(0) >= μ(1) >= ...` decay like a power `k^{-1/p}`. This crate computes
//! finite-section spectra and the derived functionals used throughout the
//! workspace:
//!
//! - Schatten norms `‖T‖_p = (Σ μ(k)^p)^{1/p}` and weak quasi-norms
//!   `‖T‖_{p,∞} = sup_k (k+1)^{1/p} μ(k)`;
//! - Dixmier-type log averages `Λ_n = (1/ln n) Σ_{k<n} μ(k)`, normalized to 1
//!   on the harmonic sequence `{1/(k+1)}`, with affine extrapolation in
//!   `1/ln n` to remove the slowly vanishing part;
//! - least-squares decay exponents of `ln μ(k)` against `ln k`.

pub mod linalg;

mod fits;
mod spectrum;

pub use fits::{decay_exponent, extrapolate_dixmier, DixmierFit};
pub use spectrum::{
    default_dixmier_grid, dixmier_log_average, head_dixmier_grid, schatten_norm, singular_values,
    weak_quasi_norm, SingularSpectrum,
};
