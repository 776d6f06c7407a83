//! Modified cubic B-spline differential-quadrature (MCB-DQ) solver for the
//! one-dimensional nonlinear sine-Gordon equation
//! `u_tt = u_xx - sin(u)` with Dirichlet boundary conditions.
//!
//! Space is discretized by differential quadrature: derivatives at the grid
//! nodes are weighted sums of all nodal values, with weights fixed by
//! exactness on a boundary-modified cubic B-spline basis ([`spline`],
//! [`weights`]). The resulting ODE system is advanced with the optimal
//! five-stage fourth-order SSP Runge-Kutta scheme ([`ssprk`]). Problem
//! definitions, the method-of-lines right-hand side and the driver live in
//! [`model`]; error norms and grid-convergence studies in [`metrics`].

pub mod error;
pub mod grid;
pub mod metrics;
pub mod model;
pub mod spline;
pub mod ssprk;
pub mod tridiag;
pub mod weights;

pub use error::{Error, Result};
pub use grid::UniformGrid;
pub use metrics::{convergence_study, error_norms, ConvergenceRow, ErrorReport, RmsMode};
pub use model::{make_example, residual_check, solve, BcRefresh, ProblemSpec, SineGordonSystem, State};
pub use spline::{eval_bspline, eval_modified, NodalValueTable};
pub use ssprk::{integrate, ssprk54_step, OdeSystem, SspRk54Tableau};
pub use tridiag::{thomas_solve, TriDiagMatrix};
pub use weights::{basis_matrix, weights_order1, weights_order2, W2Method, WeightMatrices};
