//! Gauss–Jacobi quadrature (Golub–Welsch) and measure integration on (0,π).

use crate::error::{domain, Error};
use crate::num::{acos_clamped, cos, exp, fabs, log, pow, sin, sqrt, PI};
use crate::special::{gamma_ln, JacobiParams};
use crate::Result;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// What a rule integrates against.
#[derive(Debug, Clone, PartialEq)]
pub enum MeasureKind {
    /// (1−u)^{γL}(1+u)^{γR} du on [−1, 1].
    JacobiInterval { gamma_left: f64, gamma_right: f64 },
    /// dμ_{α,β}(θ) = (sin θ/2)^{2α+1}(cos θ/2)^{2β+1} dθ on (0, π).
    TrigArc { alpha: f64, beta: f64 },
}

/// Nodes and weights of a positive quadrature rule.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub order: usize,
    pub target: MeasureKind,
}

impl QuadratureRule {
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Total mass of the target measure.
    pub fn mass(&self) -> f64 {
        self.weights.iter().sum()
    }
}

/// Symmetric tridiagonal eigenproblem by the implicit QL algorithm with
/// Wilkinson shifts, accumulating only the first component of each
/// eigenvector (all Golub–Welsch needs).
///
/// `diag` has length n, `off` length n−1. Returns (eigenvalues, first components),
/// sorted by eigenvalue.
fn symtri_eigen_first_components(diag: &[f64], off: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    let mut z = vec![0.0; n];
    z[0] = 1.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            // find a negligible off-diagonal element
            let mut m = l;
            while m + 1 < n {
                let dd = fabs(d[m]) + fabs(d[m + 1]);
                if fabs(e[m]) <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::Accuracy {
                    context: "tridiagonal QL failed to converge".into(),
                    last_delta: fabs(e[l]),
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = sqrt(g * g + 1.0);
            let sign_r = if g >= 0.0 { r } else { -r };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let (mut s, mut c) = (1.0, 1.0);
            let mut p = 0.0;
            let mut i = m;
            while i > l {
                i -= 1;
                let mut f = s * e[i];
                let b = c * e[i];
                r = sqrt(f * f + g * g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                // first-row eigenvector component update
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if r == 0.0 && i > l {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let nodes = idx.iter().map(|&i| d[i]).collect();
    let firsts = idx.iter().map(|&i| z[i]).collect();
    Ok((nodes, firsts))
}

/// Gauss–Jacobi rule of the given order for ∫_{−1}^{1} f(u)(1−u)^{γL}(1+u)^{γR} du,
/// exact for polynomials of degree ≤ 2·order − 1.
pub fn gauss_jacobi_rule(order: usize, gamma_left: f64, gamma_right: f64) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(domain("quadrature order must be >= 1"));
    }
    if !(gamma_left > -1.0) || !(gamma_right > -1.0) {
        return Err(domain(format!(
            "Jacobi weight exponents must exceed -1 (got {gamma_left}, {gamma_right})"
        )));
    }
    let (gl, gr) = (gamma_left, gamma_right);
    // recurrence coefficients of the monic Jacobi polynomials; the measure is
    // oriented so the diagonal entries use (gr − gl)
    let mut diag = Vec::with_capacity(order);
    let mut off = Vec::with_capacity(order.saturating_sub(1));
    diag.push((gr - gl) / (gl + gr + 2.0));
    for k in 1..order {
        let k = k as f64;
        let denom = (2.0 * k + gl + gr) * (2.0 * k + gl + gr + 2.0);
        diag.push((gr * gr - gl * gl) / denom);
    }
    for k in 1..order {
        let k = k as f64;
        let b = if k == 1.0 {
            // the (1+gl+gr) factors cancel; written cancelled so gl+gr = −1 is fine
            4.0 * (1.0 + gl) * (1.0 + gr) / ((2.0 + gl + gr) * (2.0 + gl + gr) * (3.0 + gl + gr))
        } else {
            let c = 2.0 * k + gl + gr;
            4.0 * k * (k + gl) * (k + gr) * (k + gl + gr) / (c * c * (c + 1.0) * (c - 1.0))
        };
        off.push(sqrt(b));
    }
    let mass = exp(
        gamma_ln(gl + 1.0)? + gamma_ln(gr + 1.0)? - gamma_ln(gl + gr + 2.0)?
            + (gl + gr + 1.0) * log(2.0),
    );
    let (nodes, firsts) = symtri_eigen_first_components(&diag, &off)?;
    let weights = firsts.iter().map(|&f| mass * f * f).collect();
    Ok(QuadratureRule {
        nodes,
        weights,
        order,
        target: MeasureKind::JacobiInterval { gamma_left, gamma_right },
    })
}

/// Rule for ∫_0^π g(θ) dμ_{α,β}(θ), derived from the Gauss–Jacobi rule through
/// x = cos θ (so ∫ g dμ = 2^{−(α+β+1)} ∫ g(arccos x)(1−x)^α(1+x)^β dx).
pub fn trig_rule(order: usize, p: JacobiParams) -> Result<QuadratureRule> {
    let base = gauss_jacobi_rule(order, p.alpha(), p.beta())?;
    let scale = pow(2.0, -(p.alpha() + p.beta() + 1.0));
    let mut pairs: Vec<(f64, f64)> = base
        .nodes
        .iter()
        .zip(&base.weights)
        .map(|(&x, &w)| (acos_clamped(x), w * scale))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(QuadratureRule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
        order,
        target: MeasureKind::TrigArc { alpha: p.alpha(), beta: p.beta() },
    })
}

/// ∫_0^{upper} w^{e0} f(w) dw with f smooth on (0, upper], by an inner
/// Gauss–Jacobi panel absorbing w^{e0} on [0, δ] plus a geometric ladder of
/// Gauss–Legendre panels up to `upper`. Spectrally accurate for integrands of
/// the form w^{e0}·(analytic beyond scale δ).
pub(crate) fn graded_integral(
    e0: f64,
    upper: f64,
    delta: f64,
    nodes_per_panel: usize,
    mut f: impl FnMut(f64) -> f64,
) -> Result<f64> {
    let delta = delta.max(upper * 1e-14).min(upper);
    let inner = gauss_jacobi_rule(nodes_per_panel, 0.0, e0)?;
    let mut total = 0.0;
    // [0, δ]: w = δ(1+x)/2, weight absorbs w^{e0}
    let scale = pow(0.5 * delta, e0 + 1.0);
    for (&x, &w) in inner.nodes.iter().zip(&inner.weights) {
        let wv = 0.5 * delta * (1.0 + x);
        total += w * scale * f(wv);
    }
    // ladder
    let gl = gauss_jacobi_rule(nodes_per_panel, 0.0, 0.0)?;
    let mut lo = delta;
    while lo < upper {
        let hi = (2.0 * lo).min(upper);
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        for (&x, &w) in gl.nodes.iter().zip(&gl.weights) {
            let wv = mid + half * x;
            total += w * half * pow(wv, e0) * f(wv);
        }
        lo = hi;
    }
    Ok(total)
}

/// μ_{α,β} of [lo, hi] ∩ (0, π), by endpoint-graded quadrature.
///
/// Exact in the sense of converged numerical quadrature (relative accuracy
/// near machine precision); this is the "exact" side of the ball-measure
/// comparability checks.
pub fn measure_interval_mass(p: JacobiParams, lo: f64, hi: f64) -> Result<f64> {
    let lo = lo.max(0.0);
    let hi = hi.min(PI);
    if hi <= lo {
        return Ok(0.0);
    }
    let ea = 2.0 * p.alpha() + 1.0;
    let eb = 2.0 * p.beta() + 1.0;
    let n = 32;
    let mut total = 0.0;
    // left piece in [0, π/2]: density = t^{ea} · h(t), h smooth
    let l_hi = hi.min(0.5 * PI);
    if lo < l_hi {
        let h = |t: f64| {
            let s = if t == 0.0 { 0.5 } else { sin(0.5 * t) / t };
            pow(s, ea) * pow(cos(0.5 * t), eb)
        };
        if lo == 0.0 {
            total += graded_integral(ea, l_hi, l_hi.min(1.0), n, h)?;
        } else {
            // shifted ladder away from the singularity at 0
            total += graded_shifted(ea, lo, l_hi, n, h)?;
        }
    }
    // right piece in [π/2, π]: substitute s = π − t
    let r_lo = lo.max(0.5 * PI);
    if r_lo < hi {
        let h = |s: f64| {
            let c = if s == 0.0 { 0.5 } else { sin(0.5 * s) / s };
            pow(c, eb) * pow(cos(0.5 * s), ea)
        };
        let (slo, shi) = (PI - hi, PI - r_lo);
        if slo == 0.0 {
            total += graded_integral(eb, shi, shi.min(1.0), n, h)?;
        } else {
            total += graded_shifted(eb, slo, shi, n, h)?;
        }
    }
    Ok(total)
}

/// ∫_{lo}^{hi} t^{e0} f(t) dt for 0 < lo, panels graded geometrically from lo.
fn graded_shifted(
    e0: f64,
    lo: f64,
    hi: f64,
    nodes_per_panel: usize,
    mut f: impl FnMut(f64) -> f64,
) -> Result<f64> {
    let gl = gauss_jacobi_rule(nodes_per_panel, 0.0, 0.0)?;
    let mut total = 0.0;
    let mut a = lo;
    while a < hi {
        let b = (2.0 * a).min(hi);
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        for (&x, &w) in gl.nodes.iter().zip(&gl.weights) {
            let t = mid + half * x;
            total += w * half * pow(t, e0) * f(t);
        }
        a = b;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_order_one_is_midpoint() {
        let r = gauss_jacobi_rule(1, 0.0, 0.0).unwrap();
        assert!(fabs(r.nodes[0]) < 1e-14);
        assert!(fabs(r.weights[0] - 2.0) < 1e-14);
    }

    #[test]
    fn legendre_order_five_integrates_x8() {
        let r = gauss_jacobi_rule(5, 0.0, 0.0).unwrap();
        let v = r.integrate(|x| {
            let x2 = x * x;
            x2 * x2 * x2 * x2
        });
        assert!(fabs(v - 2.0 / 9.0) < 1e-14, "got {v}");
    }

    #[test]
    fn chebyshev_like_mass() {
        // ∫ (1-u²)^{1/2} du = π/2
        let r = gauss_jacobi_rule(8, 0.5, 0.5).unwrap();
        assert!(fabs(r.mass() - 0.5 * PI) < 1e-13);
    }

    #[test]
    fn nodes_strictly_increasing_inside_interval() {
        let r = gauss_jacobi_rule(40, -0.4, 2.5).unwrap();
        for w in r.nodes.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert!(r.nodes[0] > -1.0 && *r.nodes.last().unwrap() < 1.0);
        assert!(r.weights.iter().all(|&w| w > 0.0));
    }

    #[test]
    fn trig_rule_total_mass_is_measure_mass() {
        // ∫ dμ_{0,0} = 1
        let p = JacobiParams::new(0.0, 0.0).unwrap();
        let r = trig_rule(24, p).unwrap();
        assert!(fabs(r.mass() - 1.0) < 1e-13, "mass {}", r.mass());
    }
}
