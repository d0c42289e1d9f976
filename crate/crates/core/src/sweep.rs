//! Uniform-in-j sweeps of the weighted kernels
//! u_j(θ)u_j(φ)𝒦^{(α+aj,β+bj)}(θ,φ) and j·u_j(θ)u_j(φ)T_M^{(α+aj,β+bj)}(θ,φ)
//! against the Calderón–Zygmund growth and smoothness bounds with the
//! base-parameter ball measure μ_{α,β}(B(θ,|θ−φ|)).

use crate::error::Error;
use crate::kernels::{ball_measure, KernelEvaluator, RhoKind};
use crate::num::{fabs, hypot, median, PI};
use crate::special::{JacobiParams, OffsetScheme};
use crate::Result;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// Which kernel/estimate pair a sweep row refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SweepMode {
    RieszGrowth,
    RieszSmooth,
    TGrowth,
    TSmooth,
}

impl SweepMode {
    pub const ALL: [SweepMode; 4] = [
        SweepMode::RieszGrowth,
        SweepMode::RieszSmooth,
        SweepMode::TGrowth,
        SweepMode::TSmooth,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            SweepMode::RieszGrowth => "riesz_growth",
            SweepMode::RieszSmooth => "riesz_smooth",
            SweepMode::TGrowth => "t_growth",
            SweepMode::TSmooth => "t_smooth",
        }
    }

    pub fn parse(s: &str) -> Option<SweepMode> {
        SweepMode::ALL.iter().copied().find(|m| m.label() == s)
    }

    fn uses_t(&self) -> bool {
        matches!(self, SweepMode::TGrowth | SweepMode::TSmooth)
    }
}

/// Configuration of one sweep run.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub base: JacobiParams,
    pub a: f64,
    pub b: f64,
    pub j_max: u32,
    /// grid points per axis, uniformly interior in (0,π)
    pub grid: usize,
    /// diagonal exclusion band: pairs with |θ−φ| < eps are skipped
    pub eps: f64,
    pub rho: RhoKind,
    pub modes: Vec<SweepMode>,
}

impl SweepConfig {
    pub fn grid_nodes(&self) -> Vec<f64> {
        (1..=self.grid)
            .map(|i| PI * i as f64 / (self.grid as f64 + 1.0))
            .collect()
    }
}

/// One evaluated off-diagonal point of the sweep.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub j: u32,
    pub theta: f64,
    pub varphi: f64,
    pub mode: SweepMode,
    /// the weighted kernel value (growth) or gradient magnitude (smoothness)
    pub kernel: f64,
    pub ball: f64,
    pub ratio: f64,
}

/// A (j, θ, φ) evaluation task; evaluating one task yields a row per mode.
#[derive(Debug, Clone, Copy)]
pub struct SweepTask {
    pub j: u32,
    pub theta: f64,
    pub varphi: f64,
}

/// Enumerates the tasks of a sweep in deterministic order.
pub fn plan_tasks(cfg: &SweepConfig) -> Vec<SweepTask> {
    let nodes = cfg.grid_nodes();
    let mut tasks = Vec::new();
    for j in 0..=cfg.j_max {
        for &theta in &nodes {
            for &varphi in &nodes {
                if fabs(theta - varphi) >= cfg.eps {
                    tasks.push(SweepTask { j, theta, varphi });
                }
            }
        }
    }
    tasks
}

/// Shared per-j state (quadrature rules for the shifted parameters).
pub struct SweepLevel {
    pub scheme: OffsetScheme,
    evaluator: KernelEvaluator,
}

impl SweepLevel {
    pub fn new(cfg: &SweepConfig, j: u32) -> Result<Self> {
        let scheme = OffsetScheme::new(cfg.a, cfg.b, j)?;
        let shifted = cfg.base.shifted(&scheme)?;
        Ok(Self { scheme, evaluator: KernelEvaluator::new(shifted)? })
    }
}

/// Evaluates one task. Kernel accuracy failures are decorated with the
/// (j, θ, φ) context.
pub fn eval_task(cfg: &SweepConfig, level: &SweepLevel, task: &SweepTask) -> Result<Vec<SweepRow>> {
    let SweepTask { j, theta, varphi } = *task;
    let integrals = level.evaluator.eval(theta, varphi).map_err(|e| match e {
        Error::Accuracy { context, last_delta } => Error::Accuracy {
            context: format!("j={j} theta={theta:.6} varphi={varphi:.6}: {context}"),
            last_delta,
        },
        other => other,
    })?;
    let ball = ball_measure(cfg.base, theta, varphi)?.exact;
    let r = fabs(theta - varphi);
    let uu = level.scheme.u_weight(theta) * level.scheme.u_weight(varphi);
    let g_th = level.scheme.u_log_derivative(theta);
    let g_ph = level.scheme.u_log_derivative(varphi);
    let jf = j as f64;

    let mut rows = Vec::with_capacity(cfg.modes.len());
    for &mode in &cfg.modes {
        if mode.uses_t() && j == 0 {
            continue;
        }
        let (kernel, ratio) = match mode {
            SweepMode::RieszGrowth => {
                let k = uu * integrals.riesz;
                (k, fabs(k) * ball)
            }
            SweepMode::RieszSmooth => {
                let d_th = uu * (g_th * integrals.riesz + integrals.riesz_grad.0);
                let d_ph = uu * (g_ph * integrals.riesz + integrals.riesz_grad.1);
                let mag = hypot(d_th, d_ph);
                (mag, mag * r * ball)
            }
            SweepMode::TGrowth => {
                let k = jf * uu * cfg.rho.sqrt_rho(theta) * integrals.time_integrated;
                (k, fabs(k) * ball)
            }
            SweepMode::TSmooth => {
                let sr = cfg.rho.sqrt_rho(theta);
                let dsr = cfg.rho.sqrt_rho_derivative(theta);
                let d_th = jf
                    * uu
                    * (g_th * sr * integrals.time_integrated
                        + dsr * integrals.time_integrated
                        + sr * integrals.time_integrated_grad.0);
                let d_ph = jf
                    * uu
                    * (g_ph * sr * integrals.time_integrated + sr * integrals.time_integrated_grad.1);
                let mag = hypot(d_th, d_ph);
                (mag, mag * r * ball)
            }
        };
        rows.push(SweepRow { j, theta, varphi, mode, kernel, ball, ratio });
    }
    Ok(rows)
}

/// Per-j suprema and boundedness statistics of a finished sweep.
#[derive(Debug, Clone)]
pub struct SweepSummary {
    /// (mode, j) → sup of ratio over the grid
    pub per_j_sup: BTreeMap<(SweepMode, u32), f64>,
}

impl SweepSummary {
    pub fn from_rows(rows: &[SweepRow]) -> Self {
        let mut per_j_sup = BTreeMap::new();
        for row in rows {
            let e = per_j_sup.entry((row.mode, row.j)).or_insert(f64::NEG_INFINITY);
            *e = e.max(row.ratio);
        }
        Self { per_j_sup }
    }

    pub fn suprema_for(&self, mode: SweepMode) -> Vec<(u32, f64)> {
        self.per_j_sup
            .iter()
            .filter(|((m, _), _)| *m == mode)
            .map(|((_, j), &s)| (*j, s))
            .collect()
    }

    /// (max, median, max/median) of the per-j suprema for one mode.
    pub fn boundedness(&self, mode: SweepMode) -> Option<BoundednessStat> {
        let sups: Vec<f64> = self.suprema_for(mode).iter().map(|&(_, s)| s).collect();
        if sups.is_empty() {
            return None;
        }
        let max = crate::num::slice_max(&sups);
        let med = median(&sups);
        let min = sups.iter().copied().fold(f64::INFINITY, f64::min);
        Some(BoundednessStat { max, median: med, min, max_over_median: max / med })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BoundednessStat {
    pub max: f64,
    pub median: f64,
    pub min: f64,
    pub max_over_median: f64,
}

/// Full sweep output.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

/// Runs a sweep serially in deterministic task order. Parallel drivers can
/// reproduce this exactly by mapping [`eval_task`] over [`plan_tasks`] and
/// keeping task order in the collected rows.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut rows = Vec::new();
    for j in 0..=cfg.j_max {
        let level = SweepLevel::new(cfg, j)?;
        let nodes = cfg.grid_nodes();
        for &theta in &nodes {
            for &varphi in &nodes {
                if fabs(theta - varphi) >= cfg.eps {
                    let task = SweepTask { j, theta, varphi };
                    rows.extend(eval_task(cfg, &level, &task)?);
                }
            }
        }
    }
    let summary = SweepSummary::from_rows(&rows);
    Ok(SweepReport { rows, summary })
}

/// CSV description string for a sweep config, used in output headers.
pub fn describe_config(cfg: &SweepConfig) -> String {
    format!(
        "alpha={} beta={} a={} b={} j_max={} grid={} eps={} rho={:?} modes={:?}",
        cfg.base.alpha(),
        cfg.base.beta(),
        cfg.a,
        cfg.b,
        cfg.j_max,
        cfg.grid,
        cfg.eps,
        cfg.rho,
        cfg.modes.iter().map(|m| m.label()).collect::<Vec<_>>()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tasks_exclude_diagonal_band() {
        let cfg = SweepConfig {
            base: JacobiParams::new(0.0, 0.0).unwrap(),
            a: 1.0,
            b: 1.0,
            j_max: 1,
            grid: 8,
            eps: 0.4,
            rho: RhoKind::InvSinHalfSq,
            modes: alloc::vec![SweepMode::RieszGrowth],
        };
        for t in plan_tasks(&cfg) {
            assert!(fabs(t.theta - t.varphi) >= 0.4);
        }
    }

    #[test]
    fn j0_reduces_to_plain_kernel_ratio() {
        let cfg = SweepConfig {
            base: JacobiParams::new(0.0, 0.0).unwrap(),
            a: 1.0,
            b: 1.0,
            j_max: 0,
            grid: 4,
            eps: 0.3,
            rho: RhoKind::InvSinHalfSq,
            modes: alloc::vec![SweepMode::RieszGrowth, SweepMode::TGrowth],
        };
        let level = SweepLevel::new(&cfg, 0).unwrap();
        let task = SweepTask { j: 0, theta: 1.0, varphi: 2.0 };
        let rows = eval_task(&cfg, &level, &task).unwrap();
        // T modes are skipped at j = 0; u_0 ≡ 1 so the Riesz row is the bare kernel
        assert_eq!(rows.len(), 1);
        let k = crate::kernels::riesz_kernel(cfg.base, 1.0, 2.0).unwrap();
        let b = ball_measure(cfg.base, 1.0, 2.0).unwrap().exact;
        assert!(fabs(rows[0].kernel - k) <= 1e-12 * fabs(k));
        assert!(fabs(rows[0].ratio - fabs(k) * b) <= 1e-12 * fabs(k) * b);
    }
}
