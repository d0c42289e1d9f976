//! Hardy–Littlewood maximal function on the space of homogeneous type
//! ((0,π), dμ_{α,β}, |·|), A_p constants, the Rubio de Francia iteration and
//! the vector-valued inequality harness.
//!
//! Grid semantics: functions are piecewise constant on uniform cells of
//! (0,π); intervals are grid-aligned unions of cells, so every reported
//! supremum is a lower bound for the continuum supremum.

use crate::error::{domain, Error};
use crate::num::{fabs, pow};
use crate::quadrature::measure_interval_mass;
use crate::special::JacobiParams;
use crate::Result;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// A function sampled on a uniform grid of cell centers in (0,π), carrying
/// the dμ_{α,β} masses of its cells.
#[derive(Debug, Clone)]
pub struct GridFunction {
    pub params: JacobiParams,
    pub thetas: Vec<f64>,
    pub values: Vec<f64>,
    cell_masses: Vec<f64>,
}

impl GridFunction {
    /// Uniform grid of n cells; values from the supplied function at cell centers.
    pub fn uniform(params: JacobiParams, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        if n == 0 {
            return Err(domain("grid must be nonempty"));
        }
        let h = crate::num::PI / n as f64;
        let thetas: Vec<f64> = (0..n).map(|i| h * (i as f64 + 0.5)).collect();
        let values = thetas.iter().map(|&t| f(t)).collect();
        let mut cell_masses = Vec::with_capacity(n);
        for i in 0..n {
            cell_masses.push(measure_interval_mass(params, h * i as f64, h * (i + 1) as f64)?);
        }
        Ok(Self { params, thetas, values, cell_masses })
    }

    /// Same grid, new values.
    pub fn with_values(&self, values: Vec<f64>) -> Result<Self> {
        if values.len() != self.values.len() {
            return Err(Error::Shape(format!(
                "value count {} does not match grid size {}",
                values.len(),
                self.values.len()
            )));
        }
        Ok(Self {
            params: self.params,
            thetas: self.thetas.clone(),
            values,
            cell_masses: self.cell_masses.clone(),
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn cell_masses(&self) -> &[f64] {
        &self.cell_masses
    }

    fn same_grid(&self, other: &GridFunction) -> Result<()> {
        if self.len() != other.len() || self.params != other.params {
            return Err(Error::Shape("grid functions live on different grids".into()));
        }
        Ok(())
    }

    /// ‖f‖_{L^p(dμ_{α,β})} on the grid.
    pub fn lp_norm(&self, p: f64) -> f64 {
        let s: f64 = self
            .values
            .iter()
            .zip(&self.cell_masses)
            .map(|(&v, &m)| pow(fabs(v), p) * m)
            .sum();
        pow(s, 1.0 / p)
    }
}

/// ℳf(θ_i) = sup over grid-aligned intervals I ∋ θ_i of (1/μ(I)) ∫_I |f| dμ.
pub fn maximal_function(f: &GridFunction) -> Result<GridFunction> {
    let n = f.len();
    if n == 0 {
        return Err(domain("maximal function of an empty grid"));
    }
    // prefix sums of masses and of |f|·mass
    let mut pm = vec![0.0; n + 1];
    let mut pf = vec![0.0; n + 1];
    for i in 0..n {
        pm[i + 1] = pm[i] + f.cell_masses[i];
        pf[i + 1] = pf[i] + fabs(f.values[i]) * f.cell_masses[i];
    }
    let mut out = vec![0.0; n];
    for (i, o) in out.iter_mut().enumerate() {
        let mut best = f64::NEG_INFINITY;
        for l in 0..=i {
            for r in i..n {
                let mass = pm[r + 1] - pm[l];
                if mass > 0.0 {
                    best = best.max((pf[r + 1] - pf[l]) / mass);
                }
            }
        }
        *o = best;
    }
    f.with_values(out)
}

/// A_p report: the supremum over grid-aligned intervals and where it occurs.
#[derive(Debug, Clone, Copy)]
pub struct ApReport {
    pub p: f64,
    pub constant: f64,
    pub worst_interval: (f64, f64),
}

/// Muckenhoupt constant sup_I (avg_I w)(avg_I w^{−p'/p})^{p/p'} over the grid.
pub fn ap_constant(w: &GridFunction, p: f64) -> Result<ApReport> {
    if !(p > 1.0) {
        return Err(domain(format!("A_p requires p > 1 (got {p})")));
    }
    if w.values.iter().any(|&v| !(v > 0.0)) {
        return Err(domain("A_p weight must be strictly positive"));
    }
    let n = w.len();
    let q = 1.0 / (p - 1.0); // p'/p
    let mut pm = vec![0.0; n + 1];
    let mut pw = vec![0.0; n + 1];
    let mut pd = vec![0.0; n + 1];
    for i in 0..n {
        pm[i + 1] = pm[i] + w.cell_masses[i];
        pw[i + 1] = pw[i] + w.values[i] * w.cell_masses[i];
        pd[i + 1] = pd[i] + pow(w.values[i], -q) * w.cell_masses[i];
    }
    let mut best = f64::NEG_INFINITY;
    let mut worst = (0usize, 0usize);
    for l in 0..n {
        for r in l..n {
            let mass = pm[r + 1] - pm[l];
            if mass <= 0.0 {
                continue;
            }
            let avg_w = (pw[r + 1] - pw[l]) / mass;
            let avg_d = (pd[r + 1] - pd[l]) / mass;
            let c = avg_w * pow(avg_d, p - 1.0);
            if c > best {
                best = c;
                worst = (l, r);
            }
        }
    }
    let h = crate::num::PI / n as f64;
    Ok(ApReport {
        p,
        constant: best,
        worst_interval: (h * worst.0 as f64, h * (worst.1 + 1) as f64),
    })
}

/// Empirical ‖ℳ‖_{L^p(dμ)} on the grid by power iteration over nonnegative
/// functions, run until the Rayleigh-type ratio stabilizes.
pub fn maximal_norm_estimate(template: &GridFunction, p: f64, max_iters: usize) -> Result<f64> {
    let n = template.len();
    // deterministic non-constant seed profile
    let start: Vec<f64> = (0..n).map(|i| 1.0 + 1.0 / (1.0 + i as f64)).collect();
    let mut f = template.with_values(start)?;
    let mut ratio = 1.0;
    for _ in 0..max_iters {
        let g = maximal_function(&f)?;
        let num = g.lp_norm(p);
        let den = f.lp_norm(p);
        let new_ratio = num / den;
        let done = fabs(new_ratio - ratio) < 1e-3 * ratio;
        ratio = new_ratio;
        let scale = 1.0 / num;
        f = g.with_values(g.values.iter().map(|v| v * scale).collect())?;
        if done {
            break;
        }
    }
    Ok(ratio)
}

/// Output of the Rubio de Francia iteration.
#[derive(Debug, Clone)]
pub struct RdfWeight {
    pub weight: GridFunction,
    /// the operator-norm value used in the geometric series (margin included)
    pub norm_used: f64,
    /// pointwise bound on the dropped tail: ‖f‖_∞ / 2^K
    pub tail_bound: f64,
}

/// Rf = Σ_{k=0}^{K} ℳ^k f / (2‖ℳ‖)^k. Since ℳ is an L^∞ contraction, the
/// dropped tail is at most ‖f‖_∞ 2^{−K} pointwise.
pub fn rubio_de_francia_weight(f: &GridFunction, p: f64, k_terms: usize) -> Result<RdfWeight> {
    if k_terms < 1 {
        return Err(domain("Rubio de Francia iteration needs K >= 1"));
    }
    if !(p > 1.0) {
        return Err(domain(format!("Rubio de Francia iteration requires p > 1 (got {p})")));
    }
    let norm = maximal_norm_estimate(f, p, 30)?;
    // small inflation so the empirical estimate acts as an upper bound in the
    // geometric-series inequalities
    let norm_used = norm * 1.1;
    let denom = 2.0 * norm_used;
    let mut total: Vec<f64> = f.values.iter().map(|&v| fabs(v)).collect();
    let mut iter = f.with_values(total.clone())?;
    let mut scale = 1.0;
    for _ in 1..=k_terms {
        iter = maximal_function(&iter)?;
        scale /= denom;
        for (t, &m) in total.iter_mut().zip(&iter.values) {
            *t += scale * m;
        }
    }
    let sup = f.values.iter().fold(0.0f64, |s, &v| s.max(fabs(v)));
    Ok(RdfWeight {
        weight: f.with_values(total)?,
        norm_used,
        tail_bound: sup / pow(2.0, k_terms as f64),
    })
}

/// One row of the vector-valued inequality report.
#[derive(Debug, Clone, Copy)]
pub struct HarnessRow {
    pub p: f64,
    pub weight_id: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
}

/// Both sides of ∫ (Σ|Sf|^r)^{p/r} w dμ ≤ C ∫ (Σ|f|^r)^{p/r} w dμ for a family
/// of pairs (f, Sf) and a list of weights.
pub fn vector_valued_harness(
    pairs: &[(GridFunction, GridFunction)],
    r: f64,
    p: f64,
    weights: &[GridFunction],
) -> Result<Vec<HarnessRow>> {
    if pairs.is_empty() {
        return Err(domain("harness needs at least one (f, Sf) pair"));
    }
    let first = &pairs[0].0;
    for (f, sf) in pairs {
        first.same_grid(f)?;
        first.same_grid(sf)?;
    }
    let n = first.len();
    let mut agg_f = vec![0.0; n];
    let mut agg_sf = vec![0.0; n];
    for (f, sf) in pairs {
        for i in 0..n {
            agg_f[i] += pow(fabs(f.values[i]), r);
            agg_sf[i] += pow(fabs(sf.values[i]), r);
        }
    }
    let mut out = Vec::with_capacity(weights.len());
    for (weight_id, w) in weights.iter().enumerate() {
        first.same_grid(w)?;
        let mut lhs = 0.0;
        let mut rhs = 0.0;
        for i in 0..n {
            let m = w.values[i] * first.cell_masses[i];
            lhs += pow(agg_sf[i], p / r) * m;
            rhs += pow(agg_f[i], p / r) * m;
        }
        out.push(HarnessRow { p, weight_id, lhs, rhs, ratio: lhs / rhs });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> JacobiParams {
        JacobiParams::new(0.0, 0.0).unwrap()
    }

    #[test]
    fn maximal_of_constant_is_constant() {
        let f = GridFunction::uniform(params(), 64, |_| 1.0).unwrap();
        let m = maximal_function(&f).unwrap();
        for &v in &m.values {
            assert!(fabs(v - 1.0) < 1e-12);
        }
    }

    #[test]
    fn maximal_dominates_function() {
        let f = GridFunction::uniform(params(), 64, |t| (3.0 * t).sin().abs() + 0.1).unwrap();
        let m = maximal_function(&f).unwrap();
        for (v, mv) in f.values.iter().zip(&m.values) {
            assert!(*mv >= fabs(*v) - 1e-12);
        }
    }

    #[test]
    fn ap_constant_of_unit_weight_is_one() {
        let w = GridFunction::uniform(params(), 48, |_| 1.0).unwrap();
        let rep = ap_constant(&w, 2.0).unwrap();
        assert!(fabs(rep.constant - 1.0) < 1e-12);
    }

    #[test]
    fn ap_scaling_invariance() {
        let w = GridFunction::uniform(params(), 48, |t| t + 0.2).unwrap();
        let c1 = ap_constant(&w, 1.7).unwrap().constant;
        let w2 = w.with_values(w.values.iter().map(|v| 5.0 * v).collect()).unwrap();
        let c2 = ap_constant(&w2, 1.7).unwrap().constant;
        assert!(fabs(c1 - c2) < 1e-10 * c1);
    }

    #[test]
    fn identity_pairs_have_unit_ratio() {
        let f = GridFunction::uniform(params(), 32, |t| t.cos()).unwrap();
        let w = GridFunction::uniform(params(), 32, |_| 1.0).unwrap();
        let rows = vector_valued_harness(&[(f.clone(), f)], 2.0, 2.5, &[w]).unwrap();
        assert!(fabs(rows[0].ratio - 1.0) < 1e-12);
    }

    #[test]
    fn empty_grid_rejected() {
        assert!(GridFunction::uniform(params(), 0, |_| 1.0).is_err());
    }
}
