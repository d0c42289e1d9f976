//! Explicit off-diagonal kernels of the Jacobi–Riesz transform and of the
//! auxiliary operator 𝒯_M, their gradients, ball measures, and the auxiliary
//! inequalities behind the sharp kernel estimates.
//!
//! Both kernels are double integrals over (u,v) ∈ [−1,1]² against
//! (1−u²)^{α−1/2}(1−v²)^{β−1/2} du dv with a denominator (1−z)^{power}, where
//! z = u sin(θ/2)sin(φ/2) + v cos(θ/2)cos(φ/2). In the shifted coordinates
//! s = 1−u, w = 1−v the denominator base is exactly linear,
//!
//! 1 − z = q₀ + ss·s + cc·w,   q₀ = 2 sin²((θ−φ)/4),
//!
//! with ss = sin(θ/2)sin(φ/2), cc = cos(θ/2)cos(φ/2). Evaluation uses an
//! absorbed-weight tensor Gauss–Jacobi fast path, escalating to geometric
//! panels graded on the scales q₀/ss and q₀/cc when the integrand peak at
//! s = w = 0 is too sharp for plain order growth (which happens at large
//! parameter shifts near the diagonal). Gradients are always computed by
//! differentiating under the integral sign.

use crate::error::{domain, Error};
use crate::num::{cos, cosh, exp, fabs, log, pow, sin, sinh, sqrt, PI};
use crate::quadrature::{gauss_jacobi_rule, graded_integral, measure_interval_mass, QuadratureRule};
use crate::special::{gamma_ln, jacobi_poly, normalizer, JacobiParams};
use crate::Result;
use alloc::format;
use alloc::vec::Vec;

/// The radial factor ρ_M(θ) distinguishing the sphere from the projective spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoKind {
    /// ρ(θ) = 1/sin²θ (the sphere S^d).
    InvSinSq,
    /// ρ(θ) = 1/sin²(θ/2) (all projective spaces).
    InvSinHalfSq,
}

impl RhoKind {
    pub fn rho(&self, theta: f64) -> f64 {
        let s = self.sqrt_rho(theta);
        s * s
    }

    pub fn sqrt_rho(&self, theta: f64) -> f64 {
        match self {
            RhoKind::InvSinSq => 1.0 / sin(theta),
            RhoKind::InvSinHalfSq => 1.0 / sin(0.5 * theta),
        }
    }

    /// d/dθ of √ρ_M(θ).
    pub fn sqrt_rho_derivative(&self, theta: f64) -> f64 {
        match self {
            RhoKind::InvSinSq => -cos(theta) / (sin(theta) * sin(theta)),
            RhoKind::InvSinHalfSq => {
                let s = sin(0.5 * theta);
                -0.5 * cos(0.5 * theta) / (s * s)
            }
        }
    }
}

/// A point of the (u,v,θ,φ) integration geometry.
#[derive(Debug, Clone, Copy)]
pub struct IntegrandGeometry {
    pub u: f64,
    pub v: f64,
    pub theta: f64,
    pub varphi: f64,
}

impl IntegrandGeometry {
    pub fn new(u: f64, v: f64, theta: f64, varphi: f64) -> Result<Self> {
        if fabs(u) > 1.0 || fabs(v) > 1.0 {
            return Err(domain("integrand geometry requires u, v in [-1, 1]"));
        }
        if !(theta > 0.0 && theta < PI && varphi > 0.0 && varphi < PI) {
            return Err(domain("integrand geometry requires theta, varphi in (0, pi)"));
        }
        Ok(Self { u, v, theta, varphi })
    }

    pub fn z(&self) -> f64 {
        self.u * sin(0.5 * self.theta) * sin(0.5 * self.varphi)
            + self.v * cos(0.5 * self.theta) * cos(0.5 * self.varphi)
    }

    pub fn one_minus_z(&self) -> f64 {
        let q0 = {
            let t = sin(0.25 * (self.theta - self.varphi));
            2.0 * t * t
        };
        q0 + (1.0 - self.u) * sin(0.5 * self.theta) * sin(0.5 * self.varphi)
            + (1.0 - self.v) * cos(0.5 * self.theta) * cos(0.5 * self.varphi)
    }
}

/// ∂_θ(1−z) = ½ sin((θ−φ)/2) + ((1−u)/2) cos(θ/2) sin(φ/2) − ((1−v)/2) sin(θ/2) cos(φ/2).
pub fn dz_dtheta(g: &IntegrandGeometry) -> f64 {
    0.5 * sin(0.5 * (g.theta - g.varphi))
        + 0.5 * (1.0 - g.u) * cos(0.5 * g.theta) * sin(0.5 * g.varphi)
        - 0.5 * (1.0 - g.v) * sin(0.5 * g.theta) * cos(0.5 * g.varphi)
}

/// ∂_φ(1−z) = −½ sin((θ−φ)/2) + ((1−u)/2) sin(θ/2) cos(φ/2) − ((1−v)/2) cos(θ/2) sin(φ/2).
pub fn dz_dvarphi(g: &IntegrandGeometry) -> f64 {
    -0.5 * sin(0.5 * (g.theta - g.varphi))
        + 0.5 * (1.0 - g.u) * sin(0.5 * g.theta) * cos(0.5 * g.varphi)
        - 0.5 * (1.0 - g.v) * cos(0.5 * g.theta) * sin(0.5 * g.varphi)
}

/// Kernel values and gradients at one off-diagonal point, all prefactored.
#[derive(Debug, Clone, Copy)]
pub struct KernelIntegrals {
    /// 𝒦^{α,β}(θ,φ).
    pub riesz: f64,
    /// (∂_θ 𝒦, ∂_φ 𝒦).
    pub riesz_grad: (f64, f64),
    /// ∫_0^∞ 𝒫_t(θ,φ) dt (no ρ factor).
    pub time_integrated: f64,
    /// Gradient of the time-integrated kernel.
    pub time_integrated_grad: (f64, f64),
    /// Tensor quadrature points spent across refinement levels.
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy, Default)]
struct RawSums {
    k: f64,
    k_dth: f64,
    k_dph: f64,
    i1: f64,
    i1_dth: f64,
    i1_dph: f64,
    i2: f64,
}

struct Geometry {
    ss: f64,
    cc: f64,
    q0: f64,
    sh: f64,
    ch: f64,
    sp: f64,
    cp: f64,
    sd: f64,
}

impl Geometry {
    fn new(theta: f64, varphi: f64) -> Self {
        let sh = sin(0.5 * theta);
        let ch = cos(0.5 * theta);
        let sp = sin(0.5 * varphi);
        let cp = cos(0.5 * varphi);
        let quarter = sin(0.25 * (theta - varphi));
        Geometry {
            ss: sh * sp,
            cc: ch * cp,
            q0: 2.0 * quarter * quarter,
            sh,
            ch,
            sp,
            cp,
            sd: sin(0.5 * (theta - varphi)),
        }
    }
}

/// One pass over a tensor grid in (s, w) = (1−u, 1−v). Axis weights already
/// carry the full algebraic factors (s(2−s))^{α−1/2}, (w(2−w))^{β−1/2}.
fn accumulate(
    su: &[f64],
    wu: &[f64],
    sv: &[f64],
    wv: &[f64],
    g: &Geometry,
    q_extra: f64,
    p_pow: f64,
) -> RawSums {
    let mut out = RawSums::default();
    let q_base = g.q0 + q_extra;
    for (&s, &ws) in su.iter().zip(wu) {
        let dzt_s = 0.5 * g.sd + 0.5 * s * g.ch * g.sp;
        let dzp_s = -0.5 * g.sd + 0.5 * s * g.sh * g.cp;
        let y_s = q_base + g.ss * s;
        for (&w, &wwt) in sv.iter().zip(wv) {
            let wgt = ws * wwt;
            if wgt == 0.0 {
                continue;
            }
            let y = y_s + g.cc * w;
            let dzt = dzt_s - 0.5 * w * g.sh * g.cp;
            let dzp = dzp_s - 0.5 * w * g.ch * g.sp;
            let z = 1.0 - (y - q_extra);
            let ln_y = log(y);
            let e2 = exp(-p_pow * ln_y); // y^{-P}
            let e3 = e2 / y; // y^{-(P+1)}
            let e1 = e2 * y; // y^{-(P-1)}
            let mixed = -0.25 * ((1.0 - s) * g.cc + (1.0 - w) * g.ss);
            out.k += wgt * e2 * dzt;
            out.k_dth += wgt * (0.25 * e2 * z - p_pow * e3 * dzt * dzt);
            out.k_dph += wgt * (e2 * mixed - p_pow * e3 * dzt * dzp);
            out.i1 += wgt * e1;
            out.i1_dth += wgt * (-(p_pow - 1.0) * e2 * dzt);
            out.i1_dph += wgt * (-(p_pow - 1.0) * e2 * dzp);
            out.i2 += wgt * e2;
        }
    }
    out
}

/// Axis node/weight sets in s = 1−u coordinates with the weight
/// (s(2−s))^{e} folded in. `delta` is the grading scale near s = 0.
fn panel_axis(e: f64, delta: f64, rules: &PanelRules) -> (Vec<f64>, Vec<f64>) {
    let delta = delta.clamp(1e-13, 1.0);
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    // [0, δ] absorbing s^e
    let scale = pow(0.5 * delta, e + 1.0);
    for (&x, &w) in rules.inner.nodes.iter().zip(&rules.inner.weights) {
        let s = 0.5 * delta * (1.0 + x);
        nodes.push(s);
        weights.push(w * scale * pow(2.0 - s, e));
    }
    // geometric ladder up to 1
    let mut lo = delta;
    while lo < 1.0 {
        let hi = (2.0 * lo).min(1.0);
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        for (&x, &w) in rules.legendre.nodes.iter().zip(&rules.legendre.weights) {
            let s = mid + half * x;
            nodes.push(s);
            weights.push(w * half * pow(s * (2.0 - s), e));
        }
        lo = hi;
    }
    // [1, 2] absorbing (2−s)^e
    for (&x, &w) in rules.outer.nodes.iter().zip(&rules.outer.weights) {
        let s = 1.5 + 0.5 * x;
        nodes.push(s);
        weights.push(w * pow(0.5, e + 1.0) * pow(s, e));
    }
    (nodes, weights)
}

struct PanelRules {
    inner: QuadratureRule,    // GJ(0, e) on [-1,1]
    outer: QuadratureRule,    // GJ(e, 0) on [-1,1]
    legendre: QuadratureRule, // GL on [-1,1]
}

impl PanelRules {
    fn new(e: f64, n: usize) -> Result<Self> {
        Ok(PanelRules {
            inner: gauss_jacobi_rule(n, 0.0, e)?,
            outer: gauss_jacobi_rule(n, e, 0.0)?,
            legendre: gauss_jacobi_rule(n, 0.0, 0.0)?,
        })
    }
}

const FAST_ORDERS: [usize; 3] = [32, 64, 128];
const PANEL_ORDERS: [usize; 3] = [16, 22, 30];
const FAST_TOL: f64 = 1e-9;
const PANEL_TOL: f64 = 1e-8;

/// Reusable evaluator for all kernel integrals at fixed (possibly shifted)
/// parameters. Construction precomputes every base quadrature rule, so sweeps
/// can share one evaluator across a whole (θ,φ) grid.
pub struct KernelEvaluator {
    params: JacobiParams,
    exp_u: f64,
    exp_v: f64,
    p_pow: f64,
    pref_k: f64,
    pref_t: f64,
    fast_axes_u: Vec<(Vec<f64>, Vec<f64>)>,
    fast_axes_v: Vec<(Vec<f64>, Vec<f64>)>,
    panels_u: Vec<PanelRules>,
    panels_v: Vec<PanelRules>,
}

/// Gauss–Jacobi rule re-expressed on s = 1−x; the rule weight (1−x²)^e is
/// exactly (s(2−s))^e.
fn shifted_axis(rule: &QuadratureRule) -> (Vec<f64>, Vec<f64>) {
    (rule.nodes.iter().map(|&x| 1.0 - x).collect(), rule.weights.clone())
}

impl KernelEvaluator {
    pub fn new(p: JacobiParams) -> Result<Self> {
        p.require_kernel_range()?;
        let (a, b) = (p.alpha(), p.beta());
        let exp_u = a - 0.5;
        let exp_v = b - 0.5;
        let ln_pi = log(PI);
        let ln2 = log(2.0);
        let pref_k =
            exp(gamma_ln(a + b + 2.0)? - ln_pi - (a + b + 1.0) * ln2 - gamma_ln(a + 0.5)? - gamma_ln(b + 0.5)?);
        let pref_t =
            exp(gamma_ln(a + b + 1.0)? - ln_pi - (a + b) * ln2 - gamma_ln(a + 0.5)? - gamma_ln(b + 0.5)?);
        let mut fast_axes_u = Vec::new();
        let mut fast_axes_v = Vec::new();
        for &n in &FAST_ORDERS {
            fast_axes_u.push(shifted_axis(&gauss_jacobi_rule(n, exp_u, exp_u)?));
            fast_axes_v.push(shifted_axis(&gauss_jacobi_rule(n, exp_v, exp_v)?));
        }
        let mut panels_u = Vec::new();
        let mut panels_v = Vec::new();
        for &n in &PANEL_ORDERS {
            panels_u.push(PanelRules::new(exp_u, n)?);
            panels_v.push(PanelRules::new(exp_v, n)?);
        }
        Ok(Self {
            params: p,
            exp_u,
            exp_v,
            p_pow: a + b + 2.0,
            pref_k,
            pref_t,
            fast_axes_u,
            fast_axes_v,
            panels_u,
            panels_v,
        })
    }

    pub fn params(&self) -> JacobiParams {
        self.params
    }

    fn raw(&self, g: &Geometry, q_extra: f64, level: usize, fast: bool) -> (RawSums, usize) {
        if fast {
            let (su, wu) = &self.fast_axes_u[level];
            let (sv, wv) = &self.fast_axes_v[level];
            (accumulate(su, wu, sv, wv, g, q_extra, self.p_pow), su.len() * sv.len())
        } else {
            let q = g.q0 + q_extra;
            let (su, wu) = panel_axis(self.exp_u, q / g.ss, &self.panels_u[level]);
            let (sv, wv) = panel_axis(self.exp_v, q / g.cc, &self.panels_v[level]);
            let n = su.len() * sv.len();
            (accumulate(&su, &wu, &sv, &wv, g, q_extra, self.p_pow), n)
        }
    }

    fn converged(a: &RawSums, b: &RawSums, tol: f64) -> bool {
        let fields =
            |r: &RawSums| [r.k, r.k_dth, r.k_dph, r.i1, r.i1_dth, r.i1_dph, r.i2];
        let fa = fields(a);
        let fb = fields(b);
        let scale_k = fa[0].abs().max(fa[1].abs()).max(fa[2].abs());
        let scale_i = fa[3].abs().max(fa[4].abs()).max(fa[5].abs()).max(fa[6].abs());
        fa.iter().zip(&fb).enumerate().all(|(i, (&x, &y))| {
            let m = fabs(x).max(fabs(y));
            let family = if i < 3 { scale_k } else { scale_i };
            m == 0.0 || fabs(x - y) <= tol * m || m <= 1e-13 * family
        })
    }

    fn eval_raw(&self, theta: f64, varphi: f64, q_extra: f64) -> Result<(RawSums, usize)> {
        let g = Geometry::new(theta, varphi);
        let (mut prev, mut spent) = self.raw(&g, q_extra, 0, true);
        for level in 1..FAST_ORDERS.len() {
            let (next, n) = self.raw(&g, q_extra, level, true);
            spent += n;
            if Self::converged(&prev, &next, FAST_TOL) {
                return Ok((next, spent));
            }
            prev = next;
        }
        let (mut prev, n) = self.raw(&g, q_extra, 0, false);
        spent += n;
        for level in 1..PANEL_ORDERS.len() {
            let (next, n) = self.raw(&g, q_extra, level, false);
            spent += n;
            if Self::converged(&prev, &next, PANEL_TOL) {
                return Ok((next, spent));
            }
            prev = next;
        }
        Err(Error::Accuracy {
            context: format!(
                "kernel quadrature did not converge at theta={theta}, varphi={varphi}, params=({}, {})",
                self.params.alpha(),
                self.params.beta()
            ),
            last_delta: 0.0,
        })
    }

    /// All kernel integrals at an off-diagonal point.
    pub fn eval(&self, theta: f64, varphi: f64) -> Result<KernelIntegrals> {
        check_offdiagonal(theta, varphi)?;
        let (raw, spent) = self.eval_raw(theta, varphi, 0.0)?;
        Ok(KernelIntegrals {
            riesz: self.pref_k * raw.k,
            riesz_grad: (self.pref_k * raw.k_dth, self.pref_k * raw.k_dph),
            time_integrated: self.pref_t * raw.i1,
            time_integrated_grad: (self.pref_t * raw.i1_dth, self.pref_t * raw.i1_dph),
            evaluations: spent,
        })
    }

    /// Jacobi–Poisson kernel 𝒫_t(θ,φ) by the closed integral form (valid on
    /// the diagonal for t > 0).
    pub fn poisson(&self, t: f64, theta: f64, varphi: f64) -> Result<f64> {
        if !(t > 0.0) {
            return Err(domain(format!("Poisson kernel requires t > 0 (got {t})")));
        }
        check_arc(theta)?;
        check_arc(varphi)?;
        let q_extra = cosh(0.5 * t) - 1.0;
        let (raw, _) = self.eval_raw(theta, varphi, q_extra)?;
        Ok(self.pref_k * sinh(0.5 * t) * raw.i2)
    }
}

fn check_arc(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < PI {
        Ok(())
    } else {
        Err(domain(format!("theta must lie in (0, pi) (got {theta})")))
    }
}

fn check_offdiagonal(theta: f64, varphi: f64) -> Result<()> {
    check_arc(theta)?;
    check_arc(varphi)?;
    if theta == varphi {
        return Err(Error::Diagonal);
    }
    Ok(())
}

/// Jacobi–Riesz kernel 𝒦^{α,β}(θ,φ), α, β > −1/2, θ ≠ φ.
pub fn riesz_kernel(p: JacobiParams, theta: f64, varphi: f64) -> Result<f64> {
    Ok(KernelEvaluator::new(p)?.eval(theta, varphi)?.riesz)
}

/// Gradient (∂_θ𝒦, ∂_φ𝒦), differentiated under the integral sign using
/// ∂²_θ(1−z) = z/4 and ∂²_{φθ}(1−z) = −¼(u cos(θ/2)cos(φ/2) + v sin(θ/2)sin(φ/2)).
pub fn riesz_kernel_gradient(p: JacobiParams, theta: f64, varphi: f64) -> Result<(f64, f64)> {
    Ok(KernelEvaluator::new(p)?.eval(theta, varphi)?.riesz_grad)
}

/// ∫_0^∞ 𝒫_t(θ,φ) dt in closed form (the time-integrated Poisson kernel).
pub fn time_integrated_poisson(p: JacobiParams, theta: f64, varphi: f64) -> Result<f64> {
    Ok(KernelEvaluator::new(p)?.eval(theta, varphi)?.time_integrated)
}

/// Kernel of 𝒯_M: √ρ_M(θ) ∫_0^∞ 𝒫_t(θ,φ) dt.
pub fn t_kernel(p: JacobiParams, rho: RhoKind, theta: f64, varphi: f64) -> Result<f64> {
    let integrals = KernelEvaluator::new(p)?.eval(theta, varphi)?;
    Ok(rho.sqrt_rho(theta) * integrals.time_integrated)
}

/// Gradient of the 𝒯_M kernel in (θ, φ); the θ component carries the
/// derivative of √ρ_M by the product rule.
pub fn t_kernel_gradient(p: JacobiParams, rho: RhoKind, theta: f64, varphi: f64) -> Result<(f64, f64)> {
    let integrals = KernelEvaluator::new(p)?.eval(theta, varphi)?;
    let sr = rho.sqrt_rho(theta);
    let dsr = rho.sqrt_rho_derivative(theta);
    Ok((
        dsr * integrals.time_integrated + sr * integrals.time_integrated_grad.0,
        sr * integrals.time_integrated_grad.1,
    ))
}

/// Exact and surrogate dμ_{α,β}-measures of the ball B(θ, |θ−φ|).
#[derive(Debug, Clone, Copy)]
pub struct BallMeasure {
    pub exact: f64,
    /// |θ−φ| (θ+φ)^{2α+1} (2π−θ−φ)^{2β+1}.
    pub surrogate: f64,
}

pub fn ball_measure(p: JacobiParams, theta: f64, varphi: f64) -> Result<BallMeasure> {
    check_arc(theta)?;
    check_arc(varphi)?;
    let r = fabs(theta - varphi);
    if r == 0.0 {
        return Ok(BallMeasure { exact: 0.0, surrogate: 0.0 });
    }
    let exact = measure_interval_mass(p, theta - r, theta + r)?;
    let surrogate = r
        * pow(theta + varphi, 2.0 * p.alpha() + 1.0)
        * pow(2.0 * PI - theta - varphi, 2.0 * p.beta() + 1.0);
    Ok(BallMeasure { exact, surrogate })
}

/// Result of one (A−Bs) integral check.
#[derive(Debug, Clone, Copy)]
pub struct Lemma0Check {
    pub integral: f64,
    /// C(d)/(A^{c+1/2} B^d (A−B)^λ) with C(d) = Γ(d)Γ(λ)/Γ(d+λ) for d > 0.
    /// For d = 0 the constant is not specified; the returned bound uses C = 1
    /// so integral/bound measures the constant empirically.
    pub bound: f64,
}

/// ∫_0^1 (1−s)^{c+d−1/2} (A−Bs)^{−(c+d+λ+1/2)} ds and its bound.
pub fn lemma0_check(c: f64, d: f64, lambda: f64, big_a: f64, big_b: f64) -> Result<Lemma0Check> {
    if !(c > -0.5) {
        return Err(domain(format!("lemma requires c > -1/2 (got {c})")));
    }
    if !(d >= 0.0) {
        return Err(domain(format!("lemma requires d >= 0 (got {d})")));
    }
    if !(lambda > 0.0) {
        return Err(domain(format!("lemma requires lambda > 0 (got {lambda})")));
    }
    if !(0.0 < big_b && big_b < big_a) {
        return Err(domain(format!("lemma requires 0 < B < A (got A={big_a}, B={big_b})")));
    }
    let e0 = c + d - 0.5;
    let p_pow = c + d + lambda + 0.5;
    let gap = big_a - big_b;
    // substitute w = 1−s: ∫_0^1 w^{e0} (gap + B w)^{−p} dw, graded on gap/B
    let integrand = |w: f64| exp(-p_pow * log(gap + big_b * w));
    let delta = (gap / big_b).min(1.0);
    let coarse = graded_integral(e0, 1.0, delta, 24, integrand)?;
    let fine = graded_integral(e0, 1.0, delta, 32, integrand)?;
    let integral = if fabs(coarse - fine) <= 1e-10 * fabs(fine).max(1e-300) {
        fine
    } else {
        let finer = graded_integral(e0, 1.0, delta, 48, integrand)?;
        if fabs(fine - finer) > 1e-9 * fabs(finer).max(1e-300) {
            return Err(Error::Accuracy {
                context: format!("lemma integral c={c} d={d} lambda={lambda} A={big_a} B={big_b}"),
                last_delta: fabs(fine - finer) / fabs(finer).max(1e-300),
            });
        }
        finer
    };
    let log_c = if d > 0.0 {
        gamma_ln(d)? + gamma_ln(lambda)? - gamma_ln(d + lambda)?
    } else {
        0.0
    };
    let bound = exp(log_c - (c + 0.5) * log(big_a) - d * log(big_b) - lambda * log(gap));
    Ok(Lemma0Check { integral, bound })
}

/// Report of the auxiliary inequality and identity checks.
#[derive(Debug, Clone)]
pub struct AuxReport {
    /// max over the (η,γ,r) grid of (1−r)^η r^{γ−1/2} − (η/(η+γ−1/2))^η; ≤ 0 when the bound holds.
    pub h_max_violation: f64,
    /// max errors of the three trigonometric identities over the (θ,φ) grid.
    pub trig_identity_max_err: [f64; 3],
    /// range of (1−cos(θ/2)cos(φ/2)) / (θ²+φ²).
    pub comp_cos_range: (f64, f64),
    /// range of (1−sin(θ/2)sin(φ/2)) / ((π−θ)²+(π−φ)²).
    pub comp_sin_range: (f64, f64),
    /// range of (1−cos((θ−φ)/2)) / (θ−φ)², off-diagonal.
    pub comp_diff_range: (f64, f64),
}

impl AuxReport {
    pub fn passes(&self) -> bool {
        self.h_max_violation <= 1e-14
            && self.trig_identity_max_err.iter().all(|&e| e <= 1e-14)
            && self.comp_cos_range.0 > 0.0
            && self.comp_sin_range.0 > 0.0
            && self.comp_diff_range.0 > 0.0
            && self.comp_cos_range.1.is_finite()
            && self.comp_sin_range.1.is_finite()
            && self.comp_diff_range.1.is_finite()
    }
}

/// Certifies (1−r)^η r^{γ−1/2} ≤ (η/(η+γ−1/2))^η and the three trigonometric
/// identities with their quadratic comparabilities.
pub fn aux_inequalities_check() -> AuxReport {
    let mut h_max_violation = f64::NEG_INFINITY;
    for &eta in &[0.25, 0.5, 1.0, 2.0, 4.0] {
        for &gamma in &[0.5, 1.0, 2.5, 10.0, 40.5] {
            let rhs = pow(eta / (eta + gamma - 0.5), eta);
            for i in 1..2048 {
                let r = i as f64 / 2048.0;
                let lhs = pow(1.0 - r, eta) * pow(r, gamma - 0.5);
                h_max_violation = h_max_violation.max(lhs - rhs);
            }
        }
    }

    let grid = 120;
    let mut id_err = [0.0f64; 3];
    let mut cos_rng = (f64::INFINITY, f64::NEG_INFINITY);
    let mut sin_rng = (f64::INFINITY, f64::NEG_INFINITY);
    let mut diff_rng = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..grid {
        let th = PI * (i as f64 + 0.5) / grid as f64;
        for jdx in 0..grid {
            let ph = PI * (jdx as f64 + 0.5) / grid as f64;
            let cc = cos(0.5 * th) * cos(0.5 * ph);
            let ss = sin(0.5 * th) * sin(0.5 * ph);
            let sm = sin(0.25 * (th - ph));
            let sp = sin(0.25 * (th + ph));
            let cp = cos(0.25 * (th + ph));
            id_err[0] = id_err[0].max(fabs(1.0 - cc - (sm * sm + sp * sp)));
            id_err[1] = id_err[1].max(fabs(1.0 - ss - (sm * sm + cp * cp)));
            id_err[2] = id_err[2].max(fabs(1.0 - cos(0.5 * (th - ph)) - 2.0 * sm * sm));
            let rc = (1.0 - cc) / (th * th + ph * ph);
            cos_rng = (cos_rng.0.min(rc), cos_rng.1.max(rc));
            let rs = (1.0 - ss) / ((PI - th) * (PI - th) + (PI - ph) * (PI - ph));
            sin_rng = (sin_rng.0.min(rs), sin_rng.1.max(rs));
            if i != jdx {
                let rd = (1.0 - cos(0.5 * (th - ph))) / ((th - ph) * (th - ph));
                diff_rng = (diff_rng.0.min(rd), diff_rng.1.max(rd));
            }
        }
    }
    AuxReport {
        h_max_violation,
        trig_identity_max_err: id_err,
        comp_cos_range: cos_rng,
        comp_sin_range: sin_rng,
        comp_diff_range: diff_rng,
    }
}

/// Relative residuals of the parameter-lowering Jacobi identity
/// αP_n^{(α,β)} = (n+α)P_n^{(α−1,β)} + ((n+β)/2)(1−x)P_{n−1}^{(α+1,β)}
/// and of the normalizer relations d_n^{α−1,β} = A_n d_n^{α,β},
/// d_{n−1}^{α+1,β} = B_n d_n^{α,β}.
#[derive(Debug, Clone, Copy)]
pub struct JacobiIdentityCheck {
    pub identity_residual: f64,
    pub normalizer_a_residual: f64,
    pub normalizer_b_residual: f64,
}

pub fn jacobi_identity_check(n: u32, p: JacobiParams, x: f64) -> Result<JacobiIdentityCheck> {
    if n == 0 {
        return Err(domain("identity check requires n >= 1"));
    }
    if !(p.alpha() > 0.0) {
        return Err(domain("identity check requires alpha > 0 so that alpha - 1 > -1"));
    }
    let (a, b) = (p.alpha(), p.beta());
    let nf = n as f64;
    let lower = JacobiParams::new(a - 1.0, b)?;
    let upper = JacobiParams::new(a + 1.0, b)?;
    let lhs = a * jacobi_poly(n, p, x)?;
    let rhs = (nf + a) * jacobi_poly(n, lower, x)?
        + 0.5 * (nf + b) * (1.0 - x) * jacobi_poly(n - 1, upper, x)?;
    let rel = |u: f64, v: f64| fabs(u - v) / fabs(u).max(fabs(v)).max(1.0);
    let identity_residual = rel(lhs, rhs);

    let c = 2.0 * nf + a + b;
    let a_n = sqrt(c / (c + 1.0) * (nf + a) / (nf + a + b));
    let b_n = sqrt(c / (c + 1.0) * (nf + b) / nf);
    let normalizer_a_residual = rel(normalizer(n, lower), a_n * normalizer(n, p));
    let normalizer_b_residual = rel(normalizer(n - 1, upper), b_n * normalizer(n, p));
    Ok(JacobiIdentityCheck {
        identity_residual,
        normalizer_a_residual,
        normalizer_b_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_rejected() {
        let p = JacobiParams::new(0.0, 0.0).unwrap();
        assert!(matches!(riesz_kernel(p, 1.0, 1.0), Err(Error::Diagonal)));
    }

    #[test]
    fn kernel_range_enforced() {
        let p = JacobiParams::new(-0.7, 0.0).unwrap();
        assert!(matches!(riesz_kernel(p, 1.0, 2.0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn dz_dtheta_reduces_at_corner() {
        // u = v = 1 leaves only the sine term
        let g = IntegrandGeometry::new(1.0, 1.0, 1.2, 0.4).unwrap();
        let expect = 0.5 * sin(0.5 * (1.2 - 0.4));
        assert!(fabs(dz_dtheta(&g) - expect) < 1e-15);
        // θ = φ, u = v is antisymmetric
        let g = IntegrandGeometry::new(0.3, 0.3, 1.0, 1.0).unwrap();
        assert!(fabs(dz_dtheta(&g)) < 1e-15);
    }

    #[test]
    fn aux_report_passes() {
        assert!(aux_inequalities_check().passes());
    }
}
