//! Idempotent and tropical mathematics.
//!
//! The crate is organized around a small set of carriers:
//!
//! - [`ExtendedScalar`] / [`SemiringSpec`]: semiring values and the choice of
//!   operations (max-plus, min-plus, or the subtropical deformation `⊕_h`).
//! - [`SemiringMatrix`]: dense matrices over a semiring, Kleene closure and
//!   Bellman solvers ([`solve_bellman`], [`jacobi_iterate`],
//!   [`gauss_seidel_iterate`]).
//! - [`GridFunction`]: functions sampled on uniform grids, with the idempotent
//!   integral, sup-convolution, the Legendre transform and kernel operators.
//! - [`GeneralizedPolynomial`]: finite sums of generalized monomials, the
//!   dequantization transform and Newton sets.
//! - [`Polytope`]: convex compact sets in vertex representation under the
//!   Minkowski semiring operations.
//! - [`HJProblem`]: Hopf-Lax evolution of a Hamilton-Jacobi action and its
//!   viscous counterpart.
//! - [`PointCloud`]: box-counting dimension estimation.
//! - [`PlaneCurve`]: amoeba sampling and tropical curves of plane curves.
//!
//! ```
//! use tropical_core::{shortest_paths, ExtendedScalar, SemiringSpec, WeightedDigraph};
//!
//! let mut g = WeightedDigraph::new(3);
//! g.add_edge(0, 1, 2.0)?;
//! g.add_edge(1, 2, 0.5)?;
//! let d = shortest_paths(&g, 0, SemiringSpec::MinPlus)?;
//! assert_eq!(d[2], ExtendedScalar::Finite(2.5));
//! assert_eq!(d, shortest_paths(&g, 0, SemiringSpec::MaxPlus)?); // no branching here
//! # Ok::<(), tropical_core::graph::GraphError>(())
//! ```

pub mod amoeba;
pub mod calculus;
pub mod dequant;
pub mod fractal;
pub mod graph;
pub mod grid;
pub mod hjb;
pub mod io;
pub mod matrix;
pub mod polytope;
pub mod semiring;

pub use amoeba::{
    hausdorff_distance, sample_amoeba, sample_amoeba_detailed, tropical_curve, CurvePiece,
    PlaneCurve, TropicalCurve, Window,
};
pub use calculus::{
    apply_kernel, biconjugate, idempotent_integral, least_concave_majorant, legendre_transform,
    legendre_transform_brute, measure_integral, scalar_product, suggest_slope_grid, sup_convolution,
};
pub use dequant::{
    check_hom_product, check_hom_sum, dequantize_callback_h, GeneralizedPolynomial, TropicalPolynomial,
};
pub use fractal::{ball_volume, box_count, hb_dimension, pointwise_measure_dimension, PointCloud, ScaleSweep};
pub use graph::{shortest_paths, WeightedDigraph};
pub use grid::{GridFunction, GridGeom, Kernel};
pub use hjb::{
    cole_hopf_residual, dequantization_convergence, hopf_lax_step, hopf_lax_step_traced,
    superposition_check, viscous_step, HJProblem,
};
pub use matrix::{gauss_seidel_iterate, jacobi_iterate, solve_bellman, SemiringMatrix};
pub use polytope::{semiring_law_check, Polytope, SublinearFunction};
pub use semiring::{dequantized_add_limit_gap, ExtendedScalar, SemiringSpec};
