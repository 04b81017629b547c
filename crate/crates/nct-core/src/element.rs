use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::{Complex, LatticeIndex, NctError, Result, ThetaMatrix};

/// Coefficients below this modulus are dropped to keep elements canonical.
pub const PRUNE_TOLERANCE: f64 = 1e-15;

/// Phase exponent `σ(m, n) = Σ_{k>j} θ_{kj} m_k n_j` of the twisted product,
/// so that `U^m U^n = e^{2πi σ(m,n)} U^{m+n}` in the ordered monomial
/// convention `U^n = U_1^{n_1} ··· U_d^{n_d}`.
///
/// The closed form is obtained by commuting every `U_k^{m_k}` of the left
/// factor past every `U_j^{n_j}` of the right factor with `j < k`, one
/// application of `U_k U_j = e^{2πi θ_{kj}} U_j U_k` per swap. It is validated
/// against the clock-and-shift representation in the test suite.
pub fn weyl_exponent(m: &LatticeIndex, n: &LatticeIndex, theta: &ThetaMatrix) -> Result<f64> {
    let d = theta.dim();
    if m.dim() != d {
        return Err(NctError::DimensionMismatch {
            expected: d,
            found: m.dim(),
        });
    }
    if n.dim() != d {
        return Err(NctError::DimensionMismatch {
            expected: d,
            found: n.dim(),
        });
    }
    let mut s = 0.0;
    for k in 1..d {
        let mk = m.get(k) as f64;
        if mk == 0.0 {
            continue;
        }
        for j in 0..k {
            let nj = n.get(j) as f64;
            if nj != 0.0 {
                s += theta.get(k, j) * mk * nj;
            }
        }
    }
    Ok(s)
}

/// The unimodular factor `e^{2πi σ(m,n)}` with `U^m U^n = e^{2πi σ(m,n)} U^{m+n}`.
pub fn weyl_phase(m: &LatticeIndex, n: &LatticeIndex, theta: &ThetaMatrix) -> Result<Complex> {
    Ok(Complex::cis(2.0 * PI * weyl_exponent(m, n, theta)?))
}

/// A finitely supported element `x = Σ_n x̂(n) U^n` of the quantum torus.
///
/// Canonical form: no stored coefficient has modulus below
/// [`PRUNE_TOLERANCE`]. The coefficient map iterates in a fixed (lexicographic)
/// order, so all derived quantities are deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    theta: ThetaMatrix,
    coeffs: BTreeMap<LatticeIndex, Complex>,
}

impl AlgebraElement {
    /// The zero element.
    pub fn zero(theta: ThetaMatrix) -> Self {
        Self {
            theta,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit `1 = U^0`.
    pub fn one(theta: ThetaMatrix) -> Self {
        let d = theta.dim();
        let mut x = Self::zero(theta);
        x.insert(LatticeIndex::zero(d), Complex::new(1.0, 0.0));
        x
    }

    /// A single monomial `c · U^n`.
    pub fn monomial(theta: ThetaMatrix, n: LatticeIndex, c: Complex) -> Result<Self> {
        if n.dim() != theta.dim() {
            return Err(NctError::DimensionMismatch {
                expected: theta.dim(),
                found: n.dim(),
            });
        }
        let mut x = Self::zero(theta);
        x.insert(n, c);
        Ok(x)
    }

    /// The generator `U_j` (0-based axis).
    pub fn generator(theta: ThetaMatrix, axis: usize) -> Result<Self> {
        let d = theta.dim();
        if axis >= d {
            return Err(NctError::AxisOutOfRange { axis, d });
        }
        Self::monomial(theta, LatticeIndex::unit(d, axis), Complex::new(1.0, 0.0))
    }

    /// Builds an element from `(mode, coefficient)` pairs; repeated modes accumulate.
    pub fn from_coeffs<I>(theta: ThetaMatrix, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LatticeIndex, Complex)>,
    {
        let d = theta.dim();
        let mut x = Self::zero(theta);
        for (n, c) in coeffs {
            if n.dim() != d {
                return Err(NctError::DimensionMismatch {
                    expected: d,
                    found: n.dim(),
                });
            }
            let entry = x.coeffs.entry(n).or_insert(Complex::new(0.0, 0.0));
            *entry += c;
        }
        x.prune();
        Ok(x)
    }

    fn insert(&mut self, n: LatticeIndex, c: Complex) {
        if c.norm() >= PRUNE_TOLERANCE {
            self.coeffs.insert(n, c);
        }
    }

    fn prune(&mut self) {
        self.coeffs.retain(|_, c| c.norm() >= PRUNE_TOLERANCE);
    }

    pub fn theta(&self) -> &ThetaMatrix {
        &self.theta
    }

    pub fn dim(&self) -> usize {
        self.theta.dim()
    }

    /// The Fourier coefficient `x̂(n) = τ(x (U^n)*)`.
    pub fn coeff(&self, n: &LatticeIndex) -> Complex {
        self.coeffs
            .get(n)
            .copied()
            .unwrap_or(Complex::new(0.0, 0.0))
    }

    /// Support iteration in lexicographic mode order.
    pub fn coeffs(&self) -> impl Iterator<Item = (&LatticeIndex, &Complex)> {
        self.coeffs.iter()
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    /// `max |n|_∞` over the support (0 for the zero element).
    pub fn support_radius(&self) -> i64 {
        self.coeffs
            .keys()
            .map(LatticeIndex::linf_norm)
            .max()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The canonical trace state `τ(x) = x̂(0)`.
    pub fn trace(&self) -> Complex {
        self.coeff(&LatticeIndex::zero(self.dim()))
    }

    /// Plancherel norm `‖x‖₂ = (Σ |x̂(n)|²)^{1/2}`.
    pub fn l2_norm(&self) -> f64 {
        self.coeffs
            .values()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Twisted product: `(xy)^(p) = Σ_{m+n=p} x̂(m) ŷ(n) e^{2πi σ(m,n)}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.theta != other.theta {
            return Err(NctError::ThetaMismatch);
        }
        let mut out = Self::zero(self.theta.clone());
        for (m, a) in &self.coeffs {
            for (n, b) in &other.coeffs {
                let phase = weyl_phase(m, n, &self.theta)?;
                let p = m.add(n);
                let entry = out.coeffs.entry(p).or_insert(Complex::new(0.0, 0.0));
                *entry += a * b * phase;
            }
        }
        out.prune();
        Ok(out)
    }

    /// Involution. From `U^n (U^n)* = 1` and the product phase,
    /// `(U^n)* = e^{-2πi σ(n,-n)} U^{-n}`, hence
    /// `(x*)^(m) = conj(x̂(-m)) e^{-2πi σ(-m,m)}`.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.theta.clone());
        for (n, c) in &self.coeffs {
            let mn = n.neg();
            let s = weyl_exponent(n, &mn, &self.theta).expect("same dimension");
            let phase = Complex::cis(-2.0 * PI * s);
            out.insert(mn, c.conj() * phase);
        }
        out
    }

    /// `x + y`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.theta != other.theta {
            return Err(NctError::ThetaMismatch);
        }
        let mut out = self.clone();
        for (n, c) in &other.coeffs {
            let entry = out.coeffs.entry(n.clone()).or_insert(Complex::new(0.0, 0.0));
            *entry += c;
        }
        out.prune();
        Ok(out)
    }

    /// `x - y`.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(Complex::new(-1.0, 0.0)))
    }

    /// `c · x`.
    pub fn scale(&self, c: Complex) -> Self {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v *= c;
        }
        out.prune();
        out
    }

    /// Same Fourier coefficients over a different deformation matrix.
    /// Used by θ-sweeps; spectral quantities of monomials are θ-invariant,
    /// everything else genuinely changes.
    pub fn with_theta(&self, theta: ThetaMatrix) -> Result<Self> {
        Self::from_coeffs(theta, self.coeffs().map(|(n, c)| (n.clone(), *c)))
    }

    /// The self-adjoint part `(x + x*)/2`.
    pub fn self_adjoint_part(&self) -> Self {
        self.add(&self.adjoint())
            .expect("same theta")
            .scale(Complex::new(0.5, 0.0))
    }

    /// `‖x - x*‖₂ <= tol`.
    pub fn is_self_adjoint(&self, tol: f64) -> bool {
        self.sub(&self.adjoint()).map(|d| d.l2_norm() <= tol).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn theta2(v: f64) -> ThetaMatrix {
        ThetaMatrix::new(vec![vec![0.0, v], vec![-v, 0.0]]).unwrap()
    }

    fn idx(coords: &[i64]) -> LatticeIndex {
        LatticeIndex::new(coords.to_vec())
    }

    #[test]
    fn weyl_phase_examples() {
        let t = theta2(0.25);
        // U1 U2 already in canonical order: no phase
        let p = weyl_phase(&idx(&[1, 0]), &idx(&[0, 1]), &t).unwrap();
        assert_abs_diff_eq!(p.re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.im, 0.0, epsilon = 1e-15);
        // one swap: U2 U1 = e^{2πi θ_{21}} U1 U2, θ_{21} = -1/4 gives -i
        let p = weyl_phase(&idx(&[0, 1]), &idx(&[1, 0]), &t).unwrap();
        assert_abs_diff_eq!(p.re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.im, -1.0, epsilon = 1e-15);
        // n = 0: empty product
        let p = weyl_phase(&idx(&[3, -2]), &idx(&[0, 0]), &t).unwrap();
        assert_abs_diff_eq!(p.re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn weyl_exponent_is_bilinear() {
        let t = theta2(0.37);
        let m1 = idx(&[2, -1]);
        let m2 = idx(&[-3, 4]);
        let n = idx(&[1, 5]);
        let lhs = weyl_exponent(&m1.add(&m2), &n, &t).unwrap();
        let rhs = weyl_exponent(&m1, &n, &t).unwrap() + weyl_exponent(&m2, &n, &t).unwrap();
        assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-12);
    }

    #[test]
    fn weyl_phase_dimension_mismatch() {
        let t = theta2(0.1);
        assert!(weyl_phase(&idx(&[1, 0, 0]), &idx(&[0, 1]), &t).is_err());
    }

    #[test]
    fn monomial_times_its_adjoint_is_one() {
        let t = theta2(0.3777);
        let u = AlgebraElement::monomial(t.clone(), idx(&[3, -2]), Complex::new(1.0, 0.0)).unwrap();
        let prod = u.mul(&u.adjoint()).unwrap();
        let one = AlgebraElement::one(t);
        let diff = prod.sub(&one).unwrap();
        assert!(diff.l2_norm() <= 1e-15, "U^n (U^n)* = 1 exactly");
    }

    #[test]
    fn square_of_generator_sum() {
        // (U1 + U2)^2 = U^(2,0) + (1 + e^{-2πiθ}) U^(1,1) + U^(0,2)
        let th = 0.3;
        let t = theta2(th);
        let x = AlgebraElement::from_coeffs(
            t.clone(),
            [
                (idx(&[1, 0]), Complex::new(1.0, 0.0)),
                (idx(&[0, 1]), Complex::new(1.0, 0.0)),
            ],
        )
        .unwrap();
        let sq = x.mul(&x).unwrap();
        let expected_mid = Complex::new(1.0, 0.0) + Complex::cis(-2.0 * PI * th);
        assert_abs_diff_eq!(sq.coeff(&idx(&[2, 0])).re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(sq.coeff(&idx(&[1, 1])).re, expected_mid.re, epsilon = 1e-14);
        assert_abs_diff_eq!(sq.coeff(&idx(&[1, 1])).im, expected_mid.im, epsilon = 1e-14);
        assert_abs_diff_eq!(sq.coeff(&idx(&[0, 2])).re, 1.0, epsilon = 1e-14);
        assert_eq!(sq.support_size(), 3);
    }

    #[test]
    fn adjoint_of_ordered_monomial_carries_phase() {
        // (U^(1,1))* = e^{-2πiθ} U^(-1,-1)
        let th = 0.2173;
        let t = theta2(th);
        let u = AlgebraElement::monomial(t, idx(&[1, 1]), Complex::new(1.0, 0.0)).unwrap();
        let a = u.adjoint();
        let c = a.coeff(&idx(&[-1, -1]));
        let expected = Complex::cis(-2.0 * PI * th);
        assert_abs_diff_eq!(c.re, expected.re, epsilon = 1e-14);
        assert_abs_diff_eq!(c.im, expected.im, epsilon = 1e-14);
    }

    #[test]
    fn adjoint_examples() {
        let t = theta2(0.5);
        let u1 = AlgebraElement::generator(t.clone(), 0).unwrap();
        let a = u1.adjoint();
        assert_abs_diff_eq!(a.coeff(&idx(&[-1, 0])).re, 1.0, epsilon = 1e-15);
        // a = U1 + U1* is self-adjoint
        let x = u1.add(&u1.adjoint()).unwrap();
        assert!(x.is_self_adjoint(1e-15));
    }

    #[test]
    fn trace_examples() {
        let t = theta2(0.123);
        let u = AlgebraElement::monomial(t.clone(), idx(&[2, 1]), Complex::new(1.0, 0.0)).unwrap();
        assert_eq!(u.trace(), Complex::new(0.0, 0.0));
        assert_eq!(AlgebraElement::one(t.clone()).trace(), Complex::new(1.0, 0.0));
        // τ(x x*) = Σ |x̂(n)|²
        let x = AlgebraElement::from_coeffs(
            t,
            [
                (idx(&[1, 0]), Complex::new(0.3, -0.7)),
                (idx(&[-2, 1]), Complex::new(1.1, 0.2)),
                (idx(&[0, 0]), Complex::new(-0.5, 0.0)),
            ],
        )
        .unwrap();
        let sum_sq: f64 = x.coeffs().map(|(_, c)| c.norm_sqr()).sum();
        let tr = x.mul(&x.adjoint()).unwrap().trace();
        assert_abs_diff_eq!(tr.re, sum_sq, epsilon = 1e-14);
        assert_abs_diff_eq!(tr.im, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn l2_norm_examples() {
        let t = theta2(0.9);
        let u1 = AlgebraElement::generator(t.clone(), 0).unwrap();
        let x = u1.add(&u1.adjoint()).unwrap();
        assert_abs_diff_eq!(x.l2_norm(), 2.0_f64.sqrt(), epsilon = 1e-15);
        assert_eq!(AlgebraElement::zero(t).l2_norm(), 0.0);
    }

    #[test]
    fn theta_mismatch_is_an_error() {
        let a = AlgebraElement::one(theta2(0.1));
        let b = AlgebraElement::one(theta2(0.2));
        assert!(matches!(a.mul(&b), Err(NctError::ThetaMismatch)));
    }
}
