use nct_core::{AlgebraElement, Complex};

/// Square Fejér mean `F_N(x) = Σ_{|m|_∞<=N} Π_j (1 - |m_j|/(N+1)) x̂(m) U^m`.
///
/// A positive summation method: the kernel has `‖F_N‖₁ = 1`, so finite
/// sections of `M_{F_N(x)}` never exceed those of `M_x` in operator norm, and
/// `F_N(x) -> x` in `‖·‖₂`. For a trigonometric polynomial the mean is exact
/// reweighting once `N` reaches the support radius.
pub fn fejer_mean(x: &AlgebraElement, n: i64) -> AlgebraElement {
    let cutoff = n;
    let scale = (n + 1) as f64;
    AlgebraElement::from_coeffs(
        x.theta().clone(),
        x.coeffs().filter_map(|(m, c)| {
            if m.linf_norm() > cutoff {
                return None;
            }
            let weight: f64 = m
                .as_slice()
                .iter()
                .map(|&mj| 1.0 - (mj.abs() as f64) / scale)
                .product();
            Some((m.clone(), c * Complex::new(weight, 0.0)))
        }),
    )
    .expect("same dimension")
}
