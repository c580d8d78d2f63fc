//! Monogenic functions with values in the two-dimensional semisimple
//! commutative algebra over ℂ, applied to the plane-anisotropy
//! stress-function equation
//!
//! ```text
//! u_yyyy + (p²+1) u_xxyy + p² u_xxxx = 0,   p > 0, p ≠ 1.
//! ```
//!
//! Every solution is the first component of a monogenic function
//! `Φ = F₁(z) I₁ + F₂(z_p) I₂`. The [`solver`] fits such a function to the
//! boundary traces of `∂u/∂x` and `∂u/∂y` by least-squares collocation and
//! recovers `u` by a path integral.
//!
//! Algebraic code is generic over [`Scalar`], so identities can be checked
//! exactly with rationals; numerical code runs over [`Real`] (`f32`/`f64`).

pub mod algebra;
pub mod error;
pub mod geometry;
pub mod monogenic;
pub mod pde_ops;
pub mod scalar;
pub mod solver;
pub mod suites;

pub use algebra::{
    char_form, embed_point, from_e_frame, make_basis, standard_basis, to_e_frame, AnisoParam,
    B0Element, BasisPair,
};
pub use error::{Error, Result};
pub use geometry::{BoundaryNode, Domain, DomainKind, PathSpec};
pub use monogenic::{kernel_element, CPoly, KernelParams, MonogenicFunction};
pub use pde_ops::{apply_factor, apply_operator, char_eval, fd_residual, BiPoly, Factor, Grid2};
pub use scalar::{Real, Scalar};
pub use solver::{
    reconstruct_u, solve_bvp, verify_manufactured, BoundaryData, BvpProblem, BvpSolution,
    SolverConfig,
};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;

pub type B0Element64 = B0Element<f64>;
pub type B0Element32 = B0Element<f32>;
pub type B0ElementQ = B0Element<Rational>;
pub type AnisoParam64 = AnisoParam<f64>;
pub type AnisoParamQ = AnisoParam<Rational>;
pub type BiPoly64 = BiPoly<f64>;
pub type BiPolyQ = BiPoly<Rational>;
pub type CPoly64 = CPoly<f64>;
pub type Monogenic64 = MonogenicFunction<f64>;
pub type MonogenicQ = MonogenicFunction<Rational>;
pub type Domain64 = Domain<f64>;
pub type BvpSolution64 = BvpSolution<f64>;

pub use num_complex::Complex;
