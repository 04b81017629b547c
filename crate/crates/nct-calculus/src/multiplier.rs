use std::f64::consts::PI;
use std::sync::Arc;

use nct_core::{AlgebraElement, Complex, LatticeIndex, NctError, Result};

/// A scalar Fourier multiplier symbol `g : Z^d -> C`, applied coefficientwise
/// as `T_g x = Σ g(n) x̂(n) U^n`. Symbols are deterministic functions; two
/// applications of the same symbol give identical results.
#[derive(Clone)]
pub struct MultiplierSymbol {
    name: String,
    eval: Arc<dyn Fn(&LatticeIndex) -> Complex + Send + Sync>,
}

impl std::fmt::Debug for MultiplierSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultiplierSymbol({})", self.name)
    }
}

impl MultiplierSymbol {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(&LatticeIndex) -> Complex + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn value(&self, n: &LatticeIndex) -> Complex {
        (self.eval)(n)
    }

    /// The constant symbol `g ≡ 1`.
    pub fn identity() -> Self {
        Self::new("1", |_| Complex::new(1.0, 0.0))
    }

    /// Symbol of the derivation `∂_j`: `2πi n_j` (0-based axis).
    pub fn derivative(axis: usize) -> Self {
        Self::new(format!("2πi n_{axis}"), move |n| {
            Complex::new(0.0, 2.0 * PI * n.get(axis) as f64)
        })
    }

    /// Symbol of the self-adjoint `D_j = -i ∂_j`: `2π n_j`.
    pub fn momentum(axis: usize) -> Self {
        Self::new(format!("2π n_{axis}"), move |n| {
            Complex::new(2.0 * PI * n.get(axis) as f64, 0.0)
        })
    }

    /// Symbol of the Laplacian `Δ`: `-|2πn|²`.
    pub fn laplacian() -> Self {
        Self::new("-|2πn|²", |n| {
            Complex::new(-4.0 * PI * PI * n.norm_sq(), 0.0)
        })
    }

    /// Symbol of the Bessel potential `J^α = (1-Δ)^{α/2}`: `(1+|2πn|²)^{α/2}`.
    pub fn bessel(alpha: f64) -> Self {
        Self::new(format!("(1+|2πn|²)^{}", alpha / 2.0), move |n| {
            Complex::new((1.0 + 4.0 * PI * PI * n.norm_sq()).powf(alpha / 2.0), 0.0)
        })
    }

    /// Symbol `(2πn_j)(2πn_k)/(1+|2πn|²)` of `D_j D_k (1-Δ)^{-1}`.
    pub fn momentum_pair_over_bessel(j: usize, k: usize) -> Self {
        Self::new(format!("2πn_{j}·2πn_{k}/(1+|2πn|²)"), move |n| {
            let nj = 2.0 * PI * n.get(j) as f64;
            let nk = 2.0 * PI * n.get(k) as f64;
            Complex::new(nj * nk / (1.0 + 4.0 * PI * PI * n.norm_sq()), 0.0)
        })
    }

    /// Symbol `z^n = Π z_j^{n_j}` of the torus action `α_z`, for unimodular
    /// `z_j = e^{2πi φ_j}` given by their phases.
    pub fn torus_action(phases: Vec<f64>) -> Self {
        Self::new("z^n", move |n| {
            let s: f64 = phases
                .iter()
                .zip(n.as_slice())
                .map(|(p, &nj)| p * nj as f64)
                .sum();
            Complex::cis(2.0 * PI * s)
        })
    }
}

/// `T_g x`: coefficientwise multiplication by the symbol. Linear in `x`, and
/// `T_g T_h = T_{gh}` since both act diagonally on monomials.
pub fn apply_multiplier(g: &MultiplierSymbol, x: &AlgebraElement) -> AlgebraElement {
    AlgebraElement::from_coeffs(
        x.theta().clone(),
        x.coeffs().map(|(n, c)| (n.clone(), g.value(n) * c)),
    )
    .expect("same dimension")
}

/// The derivation `∂_j x`: coefficientwise multiplication by `2πi n_j`.
/// Satisfies the Leibniz rule and commutes with the involution.
pub fn partial_derivative(x: &AlgebraElement, axis: usize) -> Result<AlgebraElement> {
    let d = x.dim();
    if axis >= d {
        return Err(NctError::AxisOutOfRange { axis, d });
    }
    Ok(apply_multiplier(&MultiplierSymbol::derivative(axis), x))
}

/// The Bessel potential `J^α x = (1-Δ)^{α/2} x`. `J^0` is the identity and
/// `J^α J^β = J^{α+β}`.
pub fn bessel_potential(alpha: f64, x: &AlgebraElement) -> AlgebraElement {
    apply_multiplier(&MultiplierSymbol::bessel(alpha), x)
}
