//! Symbolic and numerical toolkit for a four-dimensional phase space whose
//! coordinate sector carries a position-dependent noncommutativity
//! `[x1, x2] = i*theta*e(x)` with structure function `e(x) = 1 + w1*x1 + w2*x2`,
//! together with the constant momentum and cross sectors
//! `[p1, p2] = i*thetabar`, `[xi, pj] = i*hbar_eff*delta_ij`.
//!
//! The crate provides:
//! * an exact sparse representation of phase-space functions closed under the
//!   twisted star product ([`algebra`]),
//! * the coordinate transformation that maps the algebra onto a pair of
//!   constant-coefficient Moyal blocks and factorizes the oscillator
//!   Hamiltonian ([`transform`], [`tilde`]),
//! * symbolic expansion of left star multiplication into differential and
//!   complex-shift operators ([`operator`]),
//! * special functions (modified Bessel K of complex order, Hermite functions,
//!   double-exponential quadrature) ([`specfun`]),
//! * spectral assembly and per-equation residual reports ([`spectrum`]),
//! * deterministic JSON/CSV report emission ([`report`]).

pub mod algebra;
pub mod operator;
pub mod report;
pub mod scalar;
pub mod specfun;
pub mod spectrum;
pub mod tilde;
pub mod transform;

pub use algebra::params::DeformationParams;
pub use algebra::phase::{PhaseFunction, PhasePoint, Var};
pub use algebra::star::{StarConfig, ThetaWeight};
pub use scalar::{Rat, Scalar};
pub use spectrum::{EigenSolution, ResidualReport};
pub use transform::TildePoint;
