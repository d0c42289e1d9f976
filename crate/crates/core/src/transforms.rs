//! Spectral analysis and synthesis against {𝒫_n^{(α,β)}} and the three
//! spectral operators: the Poisson semigroup, the Jacobi–Riesz transform, and
//! the auxiliary operator 𝒯_M.

use crate::error::{config, domain};
use crate::kernels::{KernelEvaluator, RhoKind};
use crate::num::{exp, fabs, sin, sqrt};
use crate::quadrature::trig_rule;
use crate::special::{jacobi_poly_sequence, normalizer, JacobiParams};
use crate::Result;
use alloc::format;
use alloc::vec::Vec;

/// Coefficient vector of a function against the orthonormal trigonometric
/// Jacobi system: f = Σ_n coeffs[n] 𝒫_n^{(α,β)}.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub params: JacobiParams,
    pub coeffs: Vec<f64>,
}

impl Spectrum {
    pub fn new(params: JacobiParams, coeffs: Vec<f64>) -> Self {
        Self { params, coeffs }
    }

    /// Truncation order N (largest represented degree).
    pub fn truncation(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// ℓ² norm of the coefficients; equals ‖f‖_{L²(dμ)} by Parseval.
    pub fn l2_norm(&self) -> f64 {
        sqrt(self.coeffs.iter().map(|c| c * c).sum())
    }
}

/// The five rank-one compact symmetric spaces, reduced to their radial Jacobi data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ManifoldKind {
    Sphere { d: u32 },
    RealProjective { d: u32 },
    ComplexProjective { l: u32 },
    QuaternionicProjective { l: u32 },
    CayleyPlane,
}

/// Radial parameters of a rank-one compact symmetric space: the Jacobi pair
/// (α, β), the spectral shift constant λ_M, and the polar factor ρ_M.
#[derive(Debug, Clone, Copy)]
pub struct ManifoldParams {
    pub kind: ManifoldKind,
    /// Cross-section dimension parameter: the cross-section sphere is S^{d−1}
    /// for S^d and S^d for the projective spaces over ℂ, ℍ, Cay.
    pub d: u32,
    pub m: u32,
    pub lambda: f64,
    pub jacobi: JacobiParams,
    pub rho: RhoKind,
}

impl ManifoldParams {
    pub fn new(kind: ManifoldKind) -> Result<Self> {
        match kind {
            ManifoldKind::Sphere { d } => {
                if d < 2 {
                    return Err(domain("sphere requires d >= 2"));
                }
                let a = 0.5 * (d as f64 - 2.0);
                Ok(Self {
                    kind,
                    d,
                    m: 0,
                    lambda: 0.25 * (d as f64 - 1.0) * (d as f64 - 1.0),
                    jacobi: JacobiParams::new(a, a)?,
                    rho: RhoKind::InvSinSq,
                })
            }
            ManifoldKind::RealProjective { d } => {
                if d < 2 {
                    return Err(domain("real projective space requires d >= 2"));
                }
                let a = 0.5 * (d as f64 - 2.0);
                Ok(Self {
                    kind,
                    d,
                    m: 0,
                    lambda: 0.25 * (d as f64 - 1.0) * (d as f64 - 1.0),
                    jacobi: JacobiParams::new(a, a)?,
                    rho: RhoKind::InvSinHalfSq,
                })
            }
            ManifoldKind::ComplexProjective { l } => Self::projective(kind, l, 2, l.checked_sub(2)),
            ManifoldKind::QuaternionicProjective { l } => {
                Self::projective(kind, l, 4, (2 * l).checked_sub(3))
            }
            ManifoldKind::CayleyPlane => Self::projective(kind, 2, 8, Some(3)),
        }
    }

    fn projective(kind: ManifoldKind, l: u32, d: u32, m: Option<u32>) -> Result<Self> {
        if l < 2 {
            return Err(domain("projective spaces require l >= 2"));
        }
        let m = m.ok_or_else(|| crate::error::domain("invalid multiplicity"))?;
        let lam = 0.5 * (m as f64 + d as f64);
        Ok(Self {
            kind,
            d,
            m,
            lambda: lam * lam,
            jacobi: JacobiParams::new(d as f64 - 1.0, m as f64)?,
            rho: RhoKind::InvSinHalfSq,
        })
    }

    /// Dimension of the degree-j spherical harmonic space on the cross-section
    /// sphere (S^{d−1} for S^d, S^d for the projective spaces).
    pub fn harmonic_multiplicity(&self, j: u32) -> u64 {
        match self.kind {
            ManifoldKind::Sphere { d } | ManifoldKind::RealProjective { d } => {
                sphere_multiplicity(d, j)
            }
            _ => sphere_multiplicity(self.d + 1, j),
        }
    }
}

/// d(j) for the sphere S^{dim−1} cross-section: (2j+dim−2)(j+dim−3)!/(j!(dim−2)!).
fn sphere_multiplicity(dim: u32, j: u32) -> u64 {
    if j == 0 {
        return 1;
    }
    match dim {
        2 => 2,
        3 => 2 * j as u64 + 1,
        _ => {
            // (2j+dim−2)/j · C(j+dim−3, dim−2) computed in integers
            let d = dim as u64;
            let j = j as u64;
            let mut binom = 1u64;
            for i in 1..=(d - 2) {
                binom = binom * (j + i) / i;
            }
            // binom = C(j+d−2, d−2); d(j) = (2j+d−2)/(j+d−2) · ... use exact formula
            // d(j) = (2j+d-2) (j+d-3)! / (j! (d-2)!) = (2j+d-2)/(j+d-2) · C(j+d-2, j)
            binom * (2 * j + d - 2) / (j + d - 2)
        }
    }
}

/// Coefficients ⟨f, 𝒫_n⟩_{L²(dμ_{α,β})} for n ≤ n_max by Gauss–Jacobi
/// quadrature after x = cos θ. The rule order must be at least 2·n_max so
/// band-limited inputs of degree ≤ n_max are analyzed exactly.
pub fn analyze(
    f: &dyn Fn(f64) -> f64,
    p: JacobiParams,
    n_max: u32,
    order: usize,
) -> Result<Spectrum> {
    if order < 2 * n_max as usize {
        return Err(config(format!(
            "quadrature order {order} insufficient for truncation {n_max} (need >= {})",
            2 * n_max
        )));
    }
    let rule = trig_rule(order, p)?;
    let mut coeffs = alloc::vec![0.0; n_max as usize + 1];
    for (&theta, &w) in rule.nodes.iter().zip(&rule.weights) {
        let fv = f(theta);
        if fv == 0.0 {
            continue;
        }
        let polys = jacobi_poly_sequence(n_max, p, libm::cos(theta));
        for (n, &pn) in polys.iter().enumerate() {
            coeffs[n] += w * fv * pn;
        }
    }
    for (n, c) in coeffs.iter_mut().enumerate() {
        *c *= normalizer(n as u32, p);
    }
    Ok(Spectrum::new(p, coeffs))
}

/// Σ_n c_n 𝒫_n^{(α,β)}(θ).
pub fn synthesize(s: &Spectrum, theta: f64) -> f64 {
    if s.coeffs.is_empty() {
        return 0.0;
    }
    let n = s.truncation() as u32;
    let polys = jacobi_poly_sequence(n, s.params, libm::cos(theta));
    s.coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| c * normalizer(k as u32, s.params) * polys[k])
        .sum()
}

/// The Jacobi–Riesz transform of a spectrum at θ:
/// ℛf(θ) = −½ Σ_{n≥1} √(n(n+α+β+1))/(n+(α+β+1)/2) c_n sin θ 𝒫_{n−1}^{(α+1,β+1)}(θ).
pub fn riesz_transform(s: &Spectrum, theta: f64) -> Result<f64> {
    if s.coeffs.len() <= 1 {
        return Ok(0.0);
    }
    let p = s.params;
    let shifted = JacobiParams::new(p.alpha() + 1.0, p.beta() + 1.0)?;
    let n_top = s.truncation() as u32;
    let polys = jacobi_poly_sequence(n_top - 1, shifted, libm::cos(theta));
    let shift = p.spectral_shift();
    let apb1 = p.alpha() + p.beta() + 1.0;
    let mut acc = 0.0;
    for n in 1..=n_top {
        let c = s.coeffs[n as usize];
        if c == 0.0 {
            continue;
        }
        let nf = n as f64;
        let mult = sqrt(nf * (nf + apb1)) / (nf + shift);
        acc += mult * c * normalizer(n - 1, shifted) * polys[(n - 1) as usize];
    }
    Ok(-0.5 * sin(theta) * acc)
}

/// The auxiliary operator 𝒯_M applied to a spectrum at θ:
/// √ρ_M(θ) Σ_n c_n/(n+(α+β+1)/2) 𝒫_n^{(α,β)}(θ).
pub fn t_operator(s: &Spectrum, rho: RhoKind, theta: f64) -> f64 {
    if s.coeffs.is_empty() {
        return 0.0;
    }
    let p = s.params;
    let n_top = s.truncation() as u32;
    let polys = jacobi_poly_sequence(n_top, p, libm::cos(theta));
    let shift = p.spectral_shift();
    let sum: f64 = s
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, &c)| c / (n as f64 + shift) * normalizer(n as u32, p) * polys[n])
        .sum();
    rho.sqrt_rho(theta) * sum
}

/// Truncated Poisson kernel series value with a heuristic geometric tail bound.
#[derive(Debug, Clone, Copy)]
pub struct PoissonSeriesValue {
    pub value: f64,
    /// e^{−t(N+1+(α+β+1)/2)}/(1−e^{−t}) scaled by the size of the last
    /// computed terms; a diagnostic, not a certified bound.
    pub tail_bound: f64,
}

/// 𝒫_t(θ,φ) = Σ_{n≤N} e^{−t(n+(α+β+1)/2)} 𝒫_n(θ) 𝒫_n(φ).
pub fn poisson_series(
    t: f64,
    theta: f64,
    varphi: f64,
    p: JacobiParams,
    n_terms: u32,
) -> Result<PoissonSeriesValue> {
    if !(t > 0.0) {
        return Err(domain(format!("Poisson series requires t > 0 (got {t})")));
    }
    let pt = jacobi_poly_sequence(n_terms, p, libm::cos(theta));
    let pp = jacobi_poly_sequence(n_terms, p, libm::cos(varphi));
    let shift = p.spectral_shift();
    let mut value = 0.0;
    let mut last_mag: f64 = 0.0;
    for n in 0..=n_terms {
        let d = normalizer(n, p);
        let term = d * d * pt[n as usize] * pp[n as usize];
        value += exp(-t * (n as f64 + shift)) * term;
        if n + 2 > n_terms {
            last_mag = last_mag.max(fabs(term));
        }
    }
    let tail_bound =
        last_mag.max(1.0) * exp(-t * (n_terms as f64 + 1.0 + shift)) / (1.0 - exp(-t));
    Ok(PoissonSeriesValue { value, tail_bound })
}

/// 𝒫_t(θ,φ) by the closed double-integral representation (α, β > −1/2).
pub fn poisson_integral(t: f64, theta: f64, varphi: f64, p: JacobiParams) -> Result<f64> {
    KernelEvaluator::new(p)?.poisson(t, theta, varphi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifold_tables() {
        let s3 = ManifoldParams::new(ManifoldKind::Sphere { d: 3 }).unwrap();
        assert_eq!(s3.jacobi.alpha(), 0.5);
        assert_eq!(s3.lambda, 1.0);
        assert_eq!(s3.harmonic_multiplicity(0), 1);
        assert_eq!(s3.harmonic_multiplicity(4), 9);

        let pc = ManifoldParams::new(ManifoldKind::ComplexProjective { l: 2 }).unwrap();
        assert_eq!(pc.jacobi.alpha(), 1.0);
        assert_eq!(pc.jacobi.beta(), 0.0);
        assert_eq!(pc.lambda, 1.0); // (n + (m+d)/2)² = (n+1)² at n = 0

        let ph = ManifoldParams::new(ManifoldKind::QuaternionicProjective { l: 3 }).unwrap();
        assert_eq!(ph.m, 3);
        assert_eq!(ph.jacobi.alpha(), 3.0);

        let cay = ManifoldParams::new(ManifoldKind::CayleyPlane).unwrap();
        assert_eq!((cay.d, cay.m), (8, 3));
        assert_eq!(cay.lambda, 30.25);

        assert!(ManifoldParams::new(ManifoldKind::ComplexProjective { l: 1 }).is_err());
    }

    #[test]
    fn zero_spectrum_synthesizes_to_zero() {
        let p = JacobiParams::new(0.0, 0.0).unwrap();
        let s = Spectrum::new(p, alloc::vec![0.0; 8]);
        assert_eq!(synthesize(&s, 1.1), 0.0);
        assert_eq!(riesz_transform(&s, 1.1).unwrap(), 0.0);
        assert_eq!(t_operator(&s, RhoKind::InvSinHalfSq, 1.1), 0.0);
    }
}
