//! The twisted Fourier algebra of a quantum torus.
//!
//! A `d`-dimensional quantum torus is generated by unitaries `U_1, ..., U_d`
//! subject to `U_j U_k = e^{2πi θ_{jk}} U_k U_j` for an antisymmetric real
//! matrix `θ`. Elements are represented here as finitely supported Fourier
//! series `x = Σ x̂(n) U^n` over `Z^d`, with the ordered monomial convention
//! `U^n = U_1^{n_1} ··· U_d^{n_d}`.
//!
//! The crate provides:
//!
//! - [`ThetaMatrix`], [`LatticeIndex`], [`AlgebraElement`]: the algebra itself,
//!   with twisted product, involution, trace state `τ(x) = x̂(0)` and the
//!   Plancherel `L₂` norm.
//! - [`LatticeTruncation`] and [`OperatorMatrix`]: finite sections of left
//!   multiplication operators on the GNS space `L₂(T_θ^d)`, the basic objects
//!   of every spectral computation downstream.
//! - [`clock_shift_rep`]: the finite-dimensional clock-and-shift representation
//!   for rational `θ = p/q` in dimension two, used as an independent oracle for
//!   the phase conventions.

mod clock_shift;
mod element;
mod error;
mod lattice;
mod matrix;
mod serialize;
mod theta;

pub use clock_shift::clock_shift_rep;
pub use element::{weyl_exponent, weyl_phase, AlgebraElement, PRUNE_TOLERANCE};
pub use error::NctError;
pub use lattice::{LatticeIndex, LatticeTruncation};
pub use matrix::{matmul_dense, OperatorMatrix};
pub use theta::ThetaMatrix;

/// Convenience alias used across the workspace.
pub type Result<T> = std::result::Result<T, NctError>;

/// Complex scalar used throughout.
pub type Complex = num_complex::Complex64;
