//! Jacobi polynomials, trigonometric Jacobi polynomials, normalizers,
//! eigenvalues, the measure density of dμ_{α,β}, and log-gamma.
//!
//! Conventions. `P_n^{(α,β)}` is the standard Jacobi polynomial on (−1,1),
//! orthogonal against (1−x)^α(1+x)^β dx. The trigonometric polynomials
//! `𝒫_n^{(α,β)}(θ) = d_n^{α,β} P_n^{(α,β)}(cos θ)` form an orthonormal basis of
//! L²((0,π), dμ_{α,β}) with dμ_{α,β}(θ) = (sin θ/2)^{2α+1}(cos θ/2)^{2β+1} dθ,
//! and are eigenfunctions of the Jacobi differential operator with eigenvalue
//! (n + (α+β+1)/2)².

use crate::error::{domain, Error};
use crate::num::{cos, exp, fabs, log, pow, sin, sqrt, tan, PI};
use crate::Result;
use alloc::format;
use alloc::vec::Vec;

/// The type pair (α, β) of a Jacobi expansion. Both entries must exceed −1;
/// the kernel operations additionally require both to exceed −1/2 and check
/// this through [`JacobiParams::require_kernel_range`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    alpha: f64,
    beta: f64,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0) || !(beta > -1.0) || !alpha.is_finite() || !beta.is_finite() {
            return Err(domain(format!(
                "Jacobi parameters must satisfy alpha, beta > -1 (got alpha={alpha}, beta={beta})"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// (α+β+1)/2, the shift entering every eigenvalue and spectral multiplier.
    pub fn spectral_shift(&self) -> f64 {
        0.5 * (self.alpha + self.beta + 1.0)
    }

    /// The closed-form kernels and the Poisson integral representation need
    /// α, β > −1/2. Parameters in (−1, −1/2] stay constructible for the
    /// polynomial and quadrature machinery but are rejected here.
    pub fn require_kernel_range(&self) -> Result<()> {
        if self.alpha > -0.5 && self.beta > -0.5 {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "operation requires alpha, beta > -1/2 (got alpha={}, beta={})",
                self.alpha, self.beta
            )))
        }
    }

    /// Parameters shifted by a [`OffsetScheme`] at level j: (α+aj, β+bj).
    pub fn shifted(&self, scheme: &OffsetScheme) -> Result<JacobiParams> {
        let j = scheme.j as f64;
        JacobiParams::new(self.alpha + scheme.a * j, self.beta + scheme.b * j)
    }
}

/// Parameter shift scheme (a, b) at level j, with the associated weight
/// u_j(θ) = (sin θ/2)^{aj}(cos θ/2)^{bj}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OffsetScheme {
    pub a: f64,
    pub b: f64,
    pub j: u32,
}

impl OffsetScheme {
    pub fn new(a: f64, b: f64, j: u32) -> Result<Self> {
        if !(a >= 1.0) {
            return Err(domain(format!("offset scheme requires a >= 1 (got {a})")));
        }
        if !(b == 0.0 || b >= 1.0) {
            return Err(domain(format!("offset scheme requires b = 0 or b >= 1 (got {b})")));
        }
        Ok(Self { a, b, j })
    }

    /// u_j(θ); lies in [0,1] on (0,π).
    pub fn u_weight(&self, theta: f64) -> f64 {
        let j = self.j as f64;
        exp(self.a * j * log(sin(0.5 * theta)) + self.b * j * log(cos(0.5 * theta)))
    }

    /// Logarithmic derivative u_j'(θ)/u_j(θ) = (aj/2)cot(θ/2) − (bj/2)tan(θ/2).
    pub fn u_log_derivative(&self, theta: f64) -> f64 {
        let j = self.j as f64;
        0.5 * (self.a * j / tan(0.5 * theta) - self.b * j * tan(0.5 * theta))
    }
}

// Lanczos approximation, g = 7, 9 terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// log Γ(x) for x > 0.
pub fn gamma_ln(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("gamma_ln requires x > 0 (got {x})")));
    }
    if x < 0.5 {
        // shift into the asymptotic regime: ln Γ(x) = ln Γ(x+1) − ln x
        return Ok(lanczos_ln(x + 1.0) - log(x));
    }
    Ok(lanczos_ln(x))
}

fn lanczos_ln(x: f64) -> f64 {
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * log(2.0 * PI) + (z + 0.5) * log(t) - t + log(acc)
}

/// Γ(z+r)/Γ(z+t) divided by z^{r−t}; the comparability quantity behind the
/// gamma-ratio asymptotics. All three gamma arguments must be positive.
pub fn gamma_ratio(z: f64, r: f64, t: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(domain(format!("gamma_ratio requires z > 0 (got {z})")));
    }
    let num = gamma_ln(z + r)?;
    let den = gamma_ln(z + t)?;
    Ok(exp(num - den - (r - t) * log(z)))
}

/// P_n^{(α,β)}(x) for x ∈ [−1,1] by the forward three-term recurrence.
pub fn jacobi_poly(n: u32, p: JacobiParams, x: f64) -> Result<f64> {
    if fabs(x) > 1.0 {
        return Err(domain(format!("jacobi_poly requires |x| <= 1 (got {x})")));
    }
    Ok(jacobi_poly_unchecked(n, p, x))
}

pub(crate) fn jacobi_poly_unchecked(n: u32, p: JacobiParams, x: f64) -> f64 {
    let (a, b) = (p.alpha, p.beta);
    if n == 0 {
        return 1.0;
    }
    let mut pm1 = 1.0;
    let mut pn = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    for k in 2..=n {
        let k = k as f64;
        let c = 2.0 * k + a + b;
        let a1 = 2.0 * k * (k + a + b) * (c - 2.0);
        let a2 = (c - 1.0) * (a * a - b * b);
        let a3 = (c - 2.0) * (c - 1.0) * c;
        let a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
        let next = ((a2 + a3 * x) * pn - a4 * pm1) / a1;
        pm1 = pn;
        pn = next;
    }
    pn
}

/// All of P_0 … P_n at one point; one shared recurrence pass.
pub fn jacobi_poly_sequence(n: u32, p: JacobiParams, x: f64) -> Vec<f64> {
    let (a, b) = (p.alpha, p.beta);
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(1.0);
    if n == 0 {
        return out;
    }
    out.push((a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0));
    for k in 2..=n {
        let kf = k as f64;
        let c = 2.0 * kf + a + b;
        let a1 = 2.0 * kf * (kf + a + b) * (c - 2.0);
        let a2 = (c - 1.0) * (a * a - b * b);
        let a3 = (c - 2.0) * (c - 1.0) * c;
        let a4 = 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * c;
        let next = ((a2 + a3 * x) * out[k as usize - 1] - a4 * out[k as usize - 2]) / a1;
        out.push(next);
    }
    out
}

/// The normalizing factor d_n^{α,β} making 𝒫_n = d_n P_n(cos θ) a unit vector
/// in L²(dμ_{α,β}). Evaluated in log space; the n = 0 case folds
/// (α+β+1)Γ(α+β+1) into Γ(α+β+2) so parameters with α+β+1 < 0 stay valid.
pub fn normalizer(n: u32, p: JacobiParams) -> f64 {
    let (a, b) = (p.alpha, p.beta);
    let lg = |x: f64| gamma_ln(x).expect("gamma argument positive for valid params");
    if n == 0 {
        return exp(0.5 * (lg(a + b + 2.0) - lg(a + 1.0) - lg(b + 1.0)));
    }
    let nf = n as f64;
    sqrt(2.0 * nf + a + b + 1.0)
        * exp(0.5 * (lg(nf + 1.0) + lg(nf + a + b + 1.0) - lg(nf + a + 1.0) - lg(nf + b + 1.0)))
}

fn check_open_arc(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < PI {
        Ok(())
    } else {
        Err(domain(format!("theta must lie in (0, pi) (got {theta})")))
    }
}

/// 𝒫_n^{(α,β)}(θ) = d_n^{α,β} P_n^{(α,β)}(cos θ).
pub fn trig_poly(n: u32, p: JacobiParams, theta: f64) -> Result<f64> {
    check_open_arc(theta)?;
    Ok(normalizer(n, p) * jacobi_poly_unchecked(n, p, cos(theta)))
}

/// d/dθ 𝒫_n^{(α,β)}(θ) through the shifted-parameter identity
/// δ𝒫_n = −½ √(n(n+α+β+1)) sin θ · 𝒫_{n−1}^{(α+1,β+1)}(θ); zero for n = 0.
pub fn trig_poly_derivative(n: u32, p: JacobiParams, theta: f64) -> Result<f64> {
    check_open_arc(theta)?;
    if n == 0 {
        return Ok(0.0);
    }
    let nf = n as f64;
    let shifted = JacobiParams::new(p.alpha + 1.0, p.beta + 1.0)?;
    let factor = -0.5 * sqrt(nf * (nf + p.alpha + p.beta + 1.0)) * sin(theta);
    Ok(factor * trig_poly(n - 1, shifted, theta)?)
}

/// d²/dθ² 𝒫_n^{(α,β)}(θ), by differentiating the first-derivative identity once more.
pub fn trig_poly_second_derivative(n: u32, p: JacobiParams, theta: f64) -> Result<f64> {
    check_open_arc(theta)?;
    if n == 0 {
        return Ok(0.0);
    }
    let nf = n as f64;
    let shifted = JacobiParams::new(p.alpha + 1.0, p.beta + 1.0)?;
    let factor = -0.5 * sqrt(nf * (nf + p.alpha + p.beta + 1.0));
    let term = cos(theta) * trig_poly(n - 1, shifted, theta)?
        + sin(theta) * trig_poly_derivative(n - 1, shifted, theta)?;
    Ok(factor * term)
}

/// Eigenvalue λ_n^{α,β} = (n + (α+β+1)/2)² of the Jacobi operator.
pub fn eigenvalue(n: u32, p: JacobiParams) -> f64 {
    let v = n as f64 + p.spectral_shift();
    v * v
}

/// Density of dμ_{α,β}: (sin θ/2)^{2α+1}(cos θ/2)^{2β+1}.
///
/// Endpoints are accepted only as limits: the value is 0 when the local
/// exponent is positive, 1·(other factor) when it vanishes, and a domain
/// error when it is negative (the density blows up).
pub fn measure_density(p: JacobiParams, theta: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&theta) {
        return Err(domain(format!("theta must lie in [0, pi] (got {theta})")));
    }
    let ea = 2.0 * p.alpha + 1.0;
    let eb = 2.0 * p.beta + 1.0;
    if theta == 0.0 {
        return match ea {
            e if e > 0.0 => Ok(0.0),
            0.0 => Ok(pow(cos(0.5 * theta), eb)),
            _ => Err(domain("measure density diverges at theta = 0 for alpha < -1/2")),
        };
    }
    if theta == PI {
        return match eb {
            e if e > 0.0 => Ok(0.0),
            0.0 => Ok(pow(sin(0.5 * theta), ea)),
            _ => Err(domain("measure density diverges at theta = pi for beta < -1/2")),
        };
    }
    Ok(pow(sin(0.5 * theta), ea) * pow(cos(0.5 * theta), eb))
}

/// The Jacobi differential operator applied through the analytic derivative
/// identities: 𝒥 f = −f'' − q(θ) f' + ((α+β+1)/2)² f with
/// q(θ) = (α−β+(α+β+1)cos θ)/sin θ. Used by the eigen-relation checks.
pub fn jacobi_operator_apply(n: u32, p: JacobiParams, theta: f64) -> Result<f64> {
    check_open_arc(theta)?;
    let f = trig_poly(n, p, theta)?;
    let f1 = trig_poly_derivative(n, p, theta)?;
    let f2 = trig_poly_second_derivative(n, p, theta)?;
    let q = (p.alpha - p.beta + (p.alpha + p.beta + 1.0) * cos(theta)) / sin(theta);
    let shift = p.spectral_shift();
    Ok(-f2 - q * f1 + shift * shift * f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_reject_out_of_range() {
        assert!(JacobiParams::new(-1.0, 0.0).is_err());
        assert!(JacobiParams::new(0.0, -1.2).is_err());
        assert!(JacobiParams::new(-0.9, 3.0).is_ok());
        assert!(JacobiParams::new(-0.9, 3.0).unwrap().require_kernel_range().is_err());
    }

    #[test]
    fn offset_scheme_validation() {
        assert!(OffsetScheme::new(0.5, 0.0, 1).is_err());
        assert!(OffsetScheme::new(1.0, 0.5, 1).is_err());
        assert!(OffsetScheme::new(2.0, 0.0, 3).is_ok());
    }

    #[test]
    fn u_weight_in_unit_interval() {
        let s = OffsetScheme::new(1.0, 1.0, 7).unwrap();
        for i in 1..32 {
            let th = PI * i as f64 / 32.0;
            let u = s.u_weight(th);
            assert!((0.0..=1.0).contains(&u), "u_j out of range at {th}: {u}");
        }
    }
}
