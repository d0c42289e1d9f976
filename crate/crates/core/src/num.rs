//! Thin float-math layer over `libm` so the crate stays `no_std`.

pub use libm::{atan2, cos, cosh, exp, fabs, hypot, log, pow, sin, sinh, sqrt, tan};

pub const PI: f64 = core::f64::consts::PI;

/// arccos with the argument clamped to [−1, 1] against roundoff.
pub fn acos_clamped(x: f64) -> f64 {
    libm::acos(x.clamp(-1.0, 1.0))
}

/// x^n for small integer n without going through `pow`.
pub fn powi(x: f64, n: i32) -> f64 {
    let mut r = 1.0;
    let mut base = if n < 0 { 1.0 / x } else { x };
    let mut k = n.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            r *= base;
        }
        base *= base;
        k >>= 1;
    }
    r
}

/// |a − b| / max(1, |a|, |b|).
pub fn rel_diff(a: f64, b: f64) -> f64 {
    fabs(a - b) / fabs(a).max(fabs(b)).max(1.0)
}

/// Maximum over a slice, −∞ for empty input. NaNs propagate.
pub fn slice_max(xs: &[f64]) -> f64 {
    xs.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

/// Median of a slice (average of the middle pair for even lengths).
pub fn median(xs: &[f64]) -> f64 {
    let mut v: alloc::vec::Vec<f64> = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n == 0 {
        return f64::NAN;
    }
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}
