//! Geodesic-polar analysis on S^d at desk scale (d = 2, 3): mixed norms,
//! projections onto spherical harmonics, the radial ψ basis, the inverse
//! square root of the shifted Laplacian, the sphere Riesz transform, the even
//! projection modeling P_d(ℝ), and the radial pipeline for the projective
//! spaces.
//!
//! A field F(θ, x′) on (0,π) × S^{d−1} is stored through its radial profiles
//! F_{j,k}(θ) = ∫ F(θ,·) Y_{j,k} dx′ sampled on a Gauss quadrature grid for
//! (sin θ)^{d−1} dθ. The radial basis is
//! ψ_{n,j}(θ) = 2^{−(j+(d−1)/2)} (sin θ)^j 𝒫_{n−j}^{(α+j,α+j)}(θ), α = (d−2)/2,
//! which has unit norm and realizes the ultraspherical form of the paper basis.

use crate::error::{config, domain, Error};
use crate::kernels::RhoKind;
use crate::num::{acos_clamped, cos, exp, fabs, pow, sin, sqrt, PI};
use crate::quadrature::{gauss_jacobi_rule, trig_rule};
use crate::special::{
    gamma_ln, jacobi_poly_unchecked, normalizer, trig_poly, trig_poly_derivative, JacobiParams,
};
use crate::transforms::{riesz_transform, t_operator, ManifoldKind, ManifoldParams, Spectrum};
use crate::Result;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// Quadrature grid on the cross-section sphere S^{d−1}, exact for polynomial
/// harmonics up to `exact_degree`.
#[derive(Debug, Clone)]
pub struct CrossGrid {
    pub d: u32,
    /// (ϑ, ϕ) for S²; (0, ϕ) for S¹.
    pub points: Vec<(f64, f64)>,
    pub weights: Vec<f64>,
    pub exact_degree: u32,
}

impl CrossGrid {
    /// Builds a grid exact through harmonic degree `exact_degree` on S^{d−1}.
    pub fn new(d: u32, exact_degree: u32) -> Result<Self> {
        match d {
            2 => {
                let n = (exact_degree as usize) + 2;
                let w = 2.0 * PI / n as f64;
                let points = (0..n).map(|k| (0.0, 2.0 * PI * k as f64 / n as f64)).collect();
                Ok(Self { d, points, weights: vec![w; n], exact_degree })
            }
            3 => {
                let n_t = (exact_degree as usize) / 2 + 2;
                let n_p = (exact_degree as usize) + 2;
                let gl = gauss_jacobi_rule(n_t, 0.0, 0.0)?;
                let wp = 2.0 * PI / n_p as f64;
                let mut points = Vec::with_capacity(n_t * n_p);
                let mut weights = Vec::with_capacity(n_t * n_p);
                for (&x, &wx) in gl.nodes.iter().zip(&gl.weights) {
                    let vt = acos_clamped(x);
                    for k in 0..n_p {
                        points.push((vt, 2.0 * PI * k as f64 / n_p as f64));
                        weights.push(wx * wp);
                    }
                }
                Ok(Self { d, points, weights, exact_degree })
            }
            _ => Err(config(format!("cross-section implemented for d = 2, 3 only (got {d})"))),
        }
    }
}

/// Real orthonormal spherical harmonic Y_{j,k} on S^{d−1} at a grid point,
/// k ∈ 1..=d(j).
pub fn cross_harmonic(d: u32, j: u32, k: u32, point: (f64, f64)) -> Result<f64> {
    let phi = point.1;
    match d {
        2 => match (j, k) {
            (0, 1) => Ok(1.0 / sqrt(2.0 * PI)),
            (_, 1) => Ok(cos(j as f64 * phi) / sqrt(PI)),
            (_, 2) => Ok(sin(j as f64 * phi) / sqrt(PI)),
            _ => Err(domain(format!("harmonic index k={k} out of range for S^1 degree {j}"))),
        },
        3 => {
            if k == 0 || k > 2 * j + 1 {
                return Err(domain(format!("harmonic index k={k} out of range for S^2 degree {j}")));
            }
            let m = k as i64 - 1 - j as i64;
            let ma = m.unsigned_abs() as u32;
            let theta_part = sphere2_theta_part(j, ma, point.0)?;
            let az = match m.signum() {
                0 => 1.0 / sqrt(2.0 * PI),
                1 => cos(m as f64 * phi) / sqrt(PI),
                _ => sin(ma as f64 * phi) / sqrt(PI),
            };
            Ok(theta_part * az)
        }
        _ => Err(config("cross-section harmonics implemented for d = 2, 3 only")),
    }
}

/// (sin ϑ)^m P_{j−m}^{(m,m)}(cos ϑ) normalized to unit L²((0,π), sin ϑ dϑ).
fn sphere2_theta_part(j: u32, m: u32, vartheta: f64) -> Result<f64> {
    if m > j {
        return Err(domain("order m exceeds degree j"));
    }
    let pm = JacobiParams::new(m as f64, m as f64)?;
    let norm = normalizer(j - m, pm) * pow(2.0, -(m as f64 + 0.5));
    Ok(norm * pow(sin(vartheta), m as f64) * jacobi_poly_unchecked(j - m, pm, cos(vartheta)))
}

/// ψ_{n,j}(θ), the radial factor of the (n,j,k) basis on S^d; requires n ≥ j.
pub fn psi_value(d: u32, n: u32, j: u32, theta: f64) -> Result<f64> {
    if n < j {
        return Err(domain("psi requires n >= j"));
    }
    let alpha = 0.5 * (d as f64 - 2.0);
    let p = JacobiParams::new(alpha + j as f64, alpha + j as f64)?;
    let scale = pow(2.0, -(j as f64 + 0.5 * (d as f64 - 1.0)));
    Ok(scale * pow(sin(theta), j as f64) * trig_poly(n - j, p, theta)?)
}

/// dψ_{n,j}/dθ by the product rule: j cot θ · ψ + (sin θ)^j δ𝒫 (scaled).
pub fn psi_derivative(d: u32, n: u32, j: u32, theta: f64) -> Result<f64> {
    if n < j {
        return Err(domain("psi requires n >= j"));
    }
    let alpha = 0.5 * (d as f64 - 2.0);
    let p = JacobiParams::new(alpha + j as f64, alpha + j as f64)?;
    let scale = pow(2.0, -(j as f64 + 0.5 * (d as f64 - 1.0)));
    let jf = j as f64;
    let sin_j = pow(sin(theta), jf);
    let first = if j == 0 {
        0.0
    } else {
        jf * cos(theta) / sin(theta) * sin_j * trig_poly(n - j, p, theta)?
    };
    Ok(scale * (first + sin_j * trig_poly_derivative(n - j, p, theta)?))
}

/// A function on S^d in geodesic polar coordinates, stored as radial profiles
/// per harmonic index (j, k) on a shared θ quadrature grid.
#[derive(Debug, Clone)]
pub struct MixedNormField {
    pub manifold: ManifoldParams,
    pub theta_nodes: Vec<f64>,
    /// weights for ∫_0^π g(θ)(sin θ)^{d−1} dθ
    pub theta_weights: Vec<f64>,
    pub profiles: BTreeMap<(u32, u32), Vec<f64>>,
    pub max_degree: u32,
    pub radial_band: u32,
}

impl MixedNormField {
    /// Empty field with the quadrature grid sized for the given band limits.
    pub fn new(manifold: ManifoldParams, max_degree: u32, radial_band: u32) -> Result<Self> {
        let d = match manifold.kind {
            ManifoldKind::Sphere { d } | ManifoldKind::RealProjective { d } => d,
            _ => return Err(config("mixed-norm fields are polar sphere objects; use the projective pipeline for the other spaces")),
        };
        if d != 2 && d != 3 {
            return Err(config(format!("sphere fields implemented for d = 2, 3 (got {d})")));
        }
        if max_degree > radial_band {
            return Err(config("cross-section degree cap cannot exceed the radial band"));
        }
        let alpha = 0.5 * (d as f64 - 2.0);
        let order = radial_band as usize + max_degree as usize + 8;
        // ∫ g(θ)(sin θ)^{d−1}dθ = ∫ g(arccos x)(1−x²)^{(d−2)/2} dx
        let rule = gauss_jacobi_rule(order, alpha, alpha)?;
        let mut pairs: Vec<(f64, f64)> = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&x, &w)| (acos_clamped(x), w))
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(Self {
            manifold,
            theta_nodes: pairs.iter().map(|p| p.0).collect(),
            theta_weights: pairs.iter().map(|p| p.1).collect(),
            profiles: BTreeMap::new(),
            max_degree,
            radial_band,
        })
    }

    pub fn d(&self) -> u32 {
        match self.manifold.kind {
            ManifoldKind::Sphere { d } | ManifoldKind::RealProjective { d } => d,
            _ => unreachable!("constructor restricts to sphere kinds"),
        }
    }

    pub fn set_profile(&mut self, j: u32, k: u32, values: Vec<f64>) -> Result<()> {
        if values.len() != self.theta_nodes.len() {
            return Err(Error::Shape("profile length does not match the θ grid".into()));
        }
        if j > self.max_degree {
            return Err(config(format!("degree j={j} exceeds the field's cap {}", self.max_degree)));
        }
        let dj = self.manifold.harmonic_multiplicity(j);
        if k == 0 || k as u64 > dj {
            return Err(domain(format!("harmonic index k={k} out of 1..={dj} at degree {j}")));
        }
        self.profiles.insert((j, k), values);
        Ok(())
    }

    /// ℓ²(j,k) aggregation at each θ node.
    pub fn pointwise_l2(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.theta_nodes.len()];
        for values in self.profiles.values() {
            for (o, &v) in out.iter_mut().zip(values) {
                *o += v * v;
            }
        }
        out.iter().map(|&s| sqrt(s)).collect()
    }
}

/// Samples of a field on the product grid (θ nodes) × (cross-section grid).
#[derive(Debug, Clone)]
pub struct FieldSamples {
    pub theta_nodes: Vec<f64>,
    pub cross: CrossGrid,
    /// values[θ index][cross index]
    pub values: Vec<Vec<f64>>,
}

/// Projects product-grid samples onto spherical harmonics:
/// F_{j,k}(θ) = ∫ F(θ, x′) Y_{j,k}(x′) dx′ per grid θ.
pub fn harmonic_analyze(
    samples: &FieldSamples,
    manifold: ManifoldParams,
    max_degree: u32,
    radial_band: u32,
) -> Result<MixedNormField> {
    let mut field = MixedNormField::new(manifold, max_degree, radial_band)?;
    let d = field.d();
    if samples.cross.d != d {
        return Err(Error::Shape("cross-section dimension mismatch".into()));
    }
    if samples.cross.exact_degree < 2 * max_degree {
        return Err(config(format!(
            "cross-section grid exact through degree {} cannot resolve products of degree {} harmonics (aliasing)",
            samples.cross.exact_degree, max_degree
        )));
    }
    if samples.theta_nodes.len() != field.theta_nodes.len() {
        return Err(Error::Shape("θ grid mismatch; sample on the field's quadrature nodes".into()));
    }
    let nt = field.theta_nodes.len();
    for j in 0..=max_degree {
        let dj = manifold.harmonic_multiplicity(j) as u32;
        for k in 1..=dj {
            let y: Vec<f64> = samples
                .cross
                .points
                .iter()
                .map(|&pt| cross_harmonic(d, j, k, pt))
                .collect::<Result<_>>()?;
            let mut profile = vec![0.0; nt];
            for (i, row) in samples.values.iter().enumerate() {
                let mut acc = 0.0;
                for ((&v, &w), &yy) in row.iter().zip(&samples.cross.weights).zip(&y) {
                    acc += v * w * yy;
                }
                profile[i] = acc;
            }
            field.set_profile(j, k, profile)?;
        }
    }
    Ok(field)
}

/// Evaluates the field back on the product grid (the synthesis inverse of
/// [`harmonic_analyze`]).
pub fn synthesize_samples(field: &MixedNormField, cross: &CrossGrid) -> Result<FieldSamples> {
    let d = field.d();
    if cross.d != d {
        return Err(Error::Shape("cross-section dimension mismatch".into()));
    }
    let nt = field.theta_nodes.len();
    let mut values = vec![vec![0.0; cross.points.len()]; nt];
    for (&(j, k), profile) in &field.profiles {
        let y: Vec<f64> = cross
            .points
            .iter()
            .map(|&pt| cross_harmonic(d, j, k, pt))
            .collect::<Result<_>>()?;
        for i in 0..nt {
            let f = profile[i];
            if f == 0.0 {
                continue;
            }
            for (c, &yy) in y.iter().enumerate() {
                values[i][c] += f * yy;
            }
        }
    }
    Ok(FieldSamples { theta_nodes: field.theta_nodes.clone(), cross: cross.clone(), values })
}

/// Mixed norm ‖f‖_{L^p(L²)} = (∫ (Σ_{j,k} |F_{j,k}|²)^{p/2} (sin θ)^{d−1} dθ)^{1/p}.
pub fn mixed_norm(field: &MixedNormField, p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(domain(format!("mixed norm requires p >= 1 (got {p})")));
    }
    let agg = field.pointwise_l2();
    let sum: f64 = field
        .theta_weights
        .iter()
        .zip(&agg)
        .map(|(&w, &a)| w * pow(a, p))
        .sum();
    Ok(pow(sum, 1.0 / p))
}

/// Expansion of a field over the full (n, j, k) system; keys are
/// (n_excess, j, k) with absolute harmonic degree n = n_excess + j.
#[derive(Debug, Clone)]
pub struct FieldCoefficients {
    pub manifold: ManifoldParams,
    pub coeffs: BTreeMap<(u32, u32, u32), f64>,
    pub max_degree: u32,
    pub radial_band: u32,
}

impl FieldCoefficients {
    pub fn l2_norm_sq(&self) -> f64 {
        self.coeffs.values().map(|c| c * c).sum()
    }
}

/// Radial analysis: c_{n,j,k} = ⟨F_{j,k}, ψ_{n+j,j}⟩_{L²((0,π),(sinθ)^{d−1}dθ)}.
pub fn analyze_radial(field: &MixedNormField) -> Result<FieldCoefficients> {
    let d = field.d();
    let mut coeffs = BTreeMap::new();
    for (&(j, k), profile) in &field.profiles {
        for n_excess in 0..=(field.radial_band - j) {
            let mut acc = 0.0;
            for ((&th, &w), &f) in field.theta_nodes.iter().zip(&field.theta_weights).zip(profile) {
                acc += w * f * psi_value(d, n_excess + j, j, th)?;
            }
            coeffs.insert((n_excess, j, k), acc);
        }
    }
    Ok(FieldCoefficients {
        manifold: field.manifold,
        coeffs,
        max_degree: field.max_degree,
        radial_band: field.radial_band,
    })
}

/// Synthesis inverse of [`analyze_radial`].
pub fn synthesize_radial(coeffs: &FieldCoefficients) -> Result<MixedNormField> {
    let mut field = MixedNormField::new(coeffs.manifold, coeffs.max_degree, coeffs.radial_band)?;
    let d = field.d();
    let nt = field.theta_nodes.len();
    let mut profiles: BTreeMap<(u32, u32), Vec<f64>> = BTreeMap::new();
    for (&(n_excess, j, k), &c) in &coeffs.coeffs {
        if c == 0.0 {
            continue;
        }
        let entry = profiles.entry((j, k)).or_insert_with(|| vec![0.0; nt]);
        for (i, &th) in field.theta_nodes.iter().enumerate() {
            entry[i] += c * psi_value(d, n_excess + j, j, th)?;
        }
    }
    for ((j, k), values) in profiles {
        field.set_profile(j, k, values)?;
    }
    Ok(field)
}

fn analyze_radial_checked(field: &MixedNormField) -> Result<FieldCoefficients> {
    let coeffs = analyze_radial(field)?;
    let norm2 = {
        let n = mixed_norm(field, 2.0)?;
        n * n
    };
    let defect = fabs(norm2 - coeffs.l2_norm_sq()) / norm2.max(1e-300);
    if defect > 1e-6 {
        return Err(config(format!(
            "field is not band-limited within the declared caps (Parseval defect {defect:.3e})"
        )));
    }
    Ok(coeffs)
}

/// (−Δ_{S^d})^{−1/2}: divides each (n,j,k) coefficient by n + (2j+d−1)/2.
pub fn inverse_sqrt_laplacian(field: &MixedNormField) -> Result<MixedNormField> {
    let d = field.d();
    let mut coeffs = analyze_radial_checked(field)?;
    let scaled: BTreeMap<(u32, u32, u32), f64> = coeffs
        .coeffs
        .iter()
        .map(|(&(n, j, k), &c)| {
            ((n, j, k), c / (n as f64 + 0.5 * (2.0 * j as f64 + d as f64 - 1.0)))
        })
        .collect();
    coeffs.coeffs = scaled;
    synthesize_radial(&coeffs)
}

/// Output of the sphere Riesz transform on a band-limited field.
#[derive(Debug, Clone)]
pub struct RieszSphereReport {
    /// per θ node: the cross-section L² magnitude of |R_{S^d} f|
    pub magnitude: Vec<f64>,
    pub input_norm: f64,
    pub output_norm: f64,
    pub ratio: f64,
}

/// |R f|² = |δ(−Δ)^{−1/2}F|² + ρ(θ)|∇′(−Δ)^{−1/2}F|², aggregated over the
/// cross-section by orthonormality: the θ term uses the analytic ψ′ and the
/// tangential term the harmonic eigenvalue j(j+d−2).
pub fn riesz_sphere(field: &MixedNormField, p: f64) -> Result<RieszSphereReport> {
    if !(p >= 1.0) {
        return Err(domain(format!("mixed norm requires p >= 1 (got {p})")));
    }
    let d = field.d();
    let coeffs = analyze_radial_checked(field)?;
    let nt = field.theta_nodes.len();
    let mut mag_sq = vec![0.0; nt];
    // group by (j,k): radial-derivative channel and tangential channel
    let mut grouped: BTreeMap<(u32, u32), Vec<(u32, f64)>> = BTreeMap::new();
    for (&(n, j, k), &c) in &coeffs.coeffs {
        grouped.entry((j, k)).or_default().push((n, c));
    }
    for ((j, k), terms) in grouped {
        let _ = k;
        let jf = j as f64;
        let tangent_eig = jf * (jf + d as f64 - 2.0);
        for (i, &th) in field.theta_nodes.iter().enumerate() {
            let mut dg = 0.0;
            let mut g = 0.0;
            for &(n, c) in &terms {
                let lam = n as f64 + 0.5 * (2.0 * jf + d as f64 - 1.0);
                dg += c / lam * psi_derivative(d, n + j, j, th)?;
                if tangent_eig > 0.0 {
                    g += c / lam * psi_value(d, n + j, j, th)?;
                }
            }
            let rho = {
                let s = sin(th);
                1.0 / (s * s)
            };
            mag_sq[i] += dg * dg + rho * tangent_eig * g * g;
        }
    }
    let magnitude: Vec<f64> = mag_sq.iter().map(|&m| sqrt(m)).collect();
    let out_sum: f64 = field
        .theta_weights
        .iter()
        .zip(&magnitude)
        .map(|(&w, &m)| w * pow(m, p))
        .sum();
    let output_norm = pow(out_sum, 1.0 / p);
    let input_norm = mixed_norm(field, p)?;
    Ok(RieszSphereReport {
        magnitude,
        input_norm,
        output_norm,
        ratio: output_norm / input_norm,
    })
}

/// Restriction to even total degree; models functions on P_d(ℝ).
pub fn even_projection(field: &MixedNormField) -> Result<MixedNormField> {
    let mut coeffs = analyze_radial_checked(field)?;
    coeffs.coeffs = coeffs
        .coeffs
        .iter()
        .filter(|(&(n, j, _), _)| (n + j) % 2 == 0)
        .map(|(&key, &c)| (key, c))
        .collect();
    synthesize_radial(&coeffs)
}

/// Radial profiles of a function on a projective space, sampled on a
/// dμ_{α,β} quadrature grid (α = d−1, β = m).
#[derive(Debug, Clone)]
pub struct ProjectiveField {
    pub mp: ManifoldParams,
    pub theta_nodes: Vec<f64>,
    pub theta_weights: Vec<f64>,
    pub profiles: BTreeMap<(u32, u32), Vec<f64>>,
    pub radial_band: u32,
    pub max_degree: u32,
}

impl ProjectiveField {
    pub fn new(mp: ManifoldParams, max_degree: u32, radial_band: u32) -> Result<Self> {
        if matches!(mp.kind, ManifoldKind::Sphere { .. } | ManifoldKind::RealProjective { .. }) {
            return Err(config("projective pipeline expects a complex/quaternionic/Cayley manifold"));
        }
        let order = 2 * radial_band as usize + 4 * max_degree as usize + 8;
        let rule = trig_rule(order, mp.jacobi)?;
        Ok(Self {
            mp,
            theta_nodes: rule.nodes,
            theta_weights: rule.weights,
            profiles: BTreeMap::new(),
            radial_band,
            max_degree,
        })
    }

    /// Normalizing constant c_ω = Γ(m+d+1)/(Γ(d)Γ(m+1)) of the polar measure.
    pub fn c_omega(&self) -> f64 {
        let d = self.mp.d as f64;
        let m = self.mp.m as f64;
        let lg = |x: f64| gamma_ln(x).expect("positive gamma argument");
        exp(lg(m + d + 1.0) - lg(d) - lg(m + 1.0))
    }

    pub fn set_profile(&mut self, j: u32, k: u32, values: Vec<f64>) -> Result<()> {
        if values.len() != self.theta_nodes.len() {
            return Err(Error::Shape("profile length does not match the θ grid".into()));
        }
        if j > self.max_degree {
            return Err(config(format!("degree j={j} exceeds the field's cap {}", self.max_degree)));
        }
        self.profiles.insert((j, k), values);
        Ok(())
    }

    /// ‖·‖_{L^p(L²)}: θ-quadrature of the ℓ²-aggregated profiles against c_ω dμ_{α,β}.
    pub fn mixed_norm(&self, p: f64, profiles: &BTreeMap<(u32, u32), Vec<f64>>) -> Result<f64> {
        if !(p >= 1.0) {
            return Err(domain(format!("mixed norm requires p >= 1 (got {p})")));
        }
        let nt = self.theta_nodes.len();
        let mut agg = vec![0.0; nt];
        for values in profiles.values() {
            for (a, &v) in agg.iter_mut().zip(values) {
                *a += v * v;
            }
        }
        let cw = self.c_omega();
        let sum: f64 = self
            .theta_weights
            .iter()
            .zip(&agg)
            .map(|(&w, &s)| cw * w * pow(sqrt(s), p))
            .sum();
        Ok(pow(sum, 1.0 / p))
    }
}

/// Per-(j,k) outputs of the projective reduction: the shifted-parameter
/// operators u_j ℛ^{(α+2j,β)}(u_j^{−1}·) and j u_j 𝒯_M^{(α+2j,β)}(u_j^{−1}·)
/// applied to each radial profile (offset scheme a = 2, b = 0,
/// u_j = (sin θ/2)^{2j}).
#[derive(Debug, Clone)]
pub struct ProjectivePipelineOutput {
    pub riesz_profiles: BTreeMap<(u32, u32), Vec<f64>>,
    pub t_profiles: BTreeMap<(u32, u32), Vec<f64>>,
    pub input_norm: f64,
    pub riesz_norm: f64,
    pub t_norm: f64,
}

pub fn projective_radial_pipeline(field: &ProjectiveField, p: f64) -> Result<ProjectivePipelineOutput> {
    let base = field.mp.jacobi;
    let nt = field.theta_nodes.len();
    let mut riesz_profiles = BTreeMap::new();
    let mut t_profiles = BTreeMap::new();
    for (&(j, k), profile) in &field.profiles {
        let jf = j as f64;
        let shifted = JacobiParams::new(base.alpha() + 2.0 * jf, base.beta())?;
        // u_j^{-1} F, analyzed against 𝒫^{(α+2j,β)} using the base rule:
        // dμ_{α+2j,β} = (sin θ/2)^{4j} dμ_{α,β}
        let mut coeffs = vec![0.0; field.radial_band as usize + 1];
        for ((&th, &w), &f) in field.theta_nodes.iter().zip(&field.theta_weights).zip(profile) {
            let uj = pow(sin(0.5 * th), 2.0 * jf);
            let g = f / uj;
            let polys = crate::special::jacobi_poly_sequence(field.radial_band, shifted, cos(th));
            let scale = w * g * uj * uj; // g (sinθ/2)^{4j} dμ_{α,β} = g dμ_{α+2j,β}
            for (n, &pn) in polys.iter().enumerate() {
                coeffs[n] += scale * pn;
            }
        }
        for (n, c) in coeffs.iter_mut().enumerate() {
            *c *= normalizer(n as u32, shifted);
        }
        let spectrum = Spectrum::new(shifted, coeffs);
        let mut r_out = vec![0.0; nt];
        let mut t_out = vec![0.0; nt];
        for (i, &th) in field.theta_nodes.iter().enumerate() {
            let uj = pow(sin(0.5 * th), 2.0 * jf);
            r_out[i] = uj * riesz_transform(&spectrum, th)?;
            t_out[i] = jf * uj * t_operator(&spectrum, RhoKind::InvSinHalfSq, th);
        }
        riesz_profiles.insert((j, k), r_out);
        t_profiles.insert((j, k), t_out);
    }
    let input_norm = field.mixed_norm(p, &field.profiles)?;
    let riesz_norm = field.mixed_norm(p, &riesz_profiles)?;
    let t_norm = field.mixed_norm(p, &t_profiles)?;
    Ok(ProjectivePipelineOutput { riesz_profiles, t_profiles, input_norm, riesz_norm, t_norm })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_grid_circle_weights_sum_to_length() {
        let g = CrossGrid::new(2, 8).unwrap();
        let total: f64 = g.weights.iter().sum();
        assert!(fabs(total - 2.0 * PI) < 1e-12);
    }

    #[test]
    fn cross_grid_sphere_weights_sum_to_area() {
        let g = CrossGrid::new(3, 8).unwrap();
        let total: f64 = g.weights.iter().sum();
        assert!(fabs(total - 4.0 * PI) < 1e-12);
    }

    #[test]
    fn unsupported_dimension_rejected() {
        assert!(CrossGrid::new(4, 4).is_err());
    }
}
