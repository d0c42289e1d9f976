//! Numerical core for Jacobi spectral analysis on (0,π).
//!
//! The crate provides, in dependency order:
//!
//! * [`special`] — Jacobi polynomials, trigonometric Jacobi polynomials and their
//!   analytic derivatives, normalizers, eigenvalues, the measure dμ_{α,β}, log-gamma,
//!   and Gauss–Jacobi quadrature built by Golub–Welsch;
//! * [`transforms`] — spectral analysis/synthesis against the orthonormal system
//!   {𝒫_n^{(α,β)}}, the Jacobi–Riesz transform, the auxiliary operator 𝒯_M, and the
//!   Jacobi–Poisson kernel in both its series and closed integral forms;
//! * [`kernels`] — the explicit off-diagonal Riesz and 𝒯_M kernels, their gradients
//!   (differentiated under the integral sign), ball measures, and the auxiliary
//!   inequalities used by the sharp kernel estimates;
//! * [`sweep`] — uniform-in-j verification sweeps of the weighted kernels
//!   u_j(θ)u_j(φ)𝒦^{(α+aj,β+bj)}(θ,φ) against Calderón–Zygmund bounds;
//! * [`weights`] — the Hardy–Littlewood maximal function on ((0,π), dμ_{α,β}),
//!   A_p constants, the Rubio de Francia iteration, and the vector-valued harness;
//! * [`sphere`] — geodesic-polar mixed norms on S^d (d = 2, 3), the inverse square
//!   root of the shifted Laplacian, the sphere Riesz transform, and the radial
//!   pipeline for the projective spaces.
//!
//! The crate is `no_std` (with `alloc`); all float math goes through `libm`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod kernels;
pub mod num;
pub mod quadrature;
pub mod special;
pub mod sphere;
pub mod sweep;
pub mod transforms;
pub mod weights;

pub use error::Error;
pub use special::{JacobiParams, OffsetScheme};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
