//! Differential-quadrature weighting coefficients.
//!
//! A spatial derivative at node `x_i` is approximated as a weighted sum of
//! the nodal values, `u^(r)(x_i) ~ sum_j w^(r)_ij u(x_j)`. The weights are
//! fixed by requiring the rule to be exact on every member of the modified
//! cubic B-spline basis, which yields one tridiagonal system per node with
//! the shared collocation matrix `B[p][j] = phi_p(x_j)`.
//!
//! Two constructions of the second-derivative weights are provided: solving
//! the analogous systems with second-derivative data (`SplineSystem`), and
//! the recurrence of Shu that derives `w^(2)` from `w^(1)` (`ShuRecurrence`,
//! the default — it reproduces the reference benchmark tables and its
//! markedly smaller spectral radius keeps the equal-step benchmark inside
//! the explicit scheme's stability region).

use std::fmt;
use std::str::FromStr;

use ndarray::Array2;

use crate::error::Result;
use crate::grid::UniformGrid;
use crate::spline::NodalValueTable;
use crate::tridiag::{thomas_solve, TriDiagMatrix};

/// How the second-derivative weights are built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum W2Method {
    /// `w^(2)_ij = 2 w^(1)_ij (w^(1)_ii - 1/(x_i - x_j))` off the diagonal,
    /// with the diagonal set so each row sums to zero.
    #[default]
    ShuRecurrence,
    /// Solve `B w_i = e_i` with second-derivative nodal data.
    SplineSystem,
}

impl W2Method {
    pub fn name(self) -> &'static str {
        match self {
            W2Method::ShuRecurrence => "shu",
            W2Method::SplineSystem => "spline",
        }
    }
}

impl fmt::Display for W2Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for W2Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "shu" => Ok(W2Method::ShuRecurrence),
            "spline" => Ok(W2Method::SplineSystem),
            other => Err(format!("unknown w2 method `{other}`, expected `shu` or `spline`")),
        }
    }
}

/// Collocation matrix of the modified basis at the nodes,
/// `B[p][j] = phi_p(x_j)`. Its rows are `(6, 1)`, `(0, 4, 1)`,
/// `(1, 4, 1)`, ..., `(1, 4, 0)`, `(1, 6)`: diagonally dominant, so the
/// Thomas algorithm applies without pivoting.
pub fn basis_matrix(grid: &UniformGrid) -> TriDiagMatrix {
    let n = grid.len();
    let table = NodalValueTable::new(grid.spacing());
    let diag: Vec<f64> = (0..n).map(|p| table.modified(n, p, p, 0)).collect();
    let sup: Vec<f64> = (0..n - 1).map(|p| table.modified(n, p, p + 1, 0)).collect();
    let sub: Vec<f64> = (1..n).map(|p| table.modified(n, p, p - 1, 0)).collect();
    TriDiagMatrix::new(sub, diag, sup).expect("diagonal lengths are consistent by construction")
}

/// Rows of derivative data for node `i`: `d[p] = phi_p^(order)(x_i)`,
/// nonzero only for `|p - i| <= 1`.
fn derivative_rhs(table: &NodalValueTable, n: usize, i: usize, order: usize) -> Vec<f64> {
    let mut d = vec![0.0; n];
    let (lo, hi) = (i.saturating_sub(1), (i + 1).min(n - 1));
    for (p, slot) in d.iter_mut().enumerate().take(hi + 1).skip(lo) {
        *slot = table.modified(n, p, i, order);
    }
    d
}

/// The weights decay geometrically away from the diagonal, so large grids
/// produce swaths of entries hundreds of orders of magnitude below the row
/// scale. Those cannot affect any normal-scale accumulation, but keeping
/// them stored as subnormals makes every matrix-vector product pay the
/// subnormal-arithmetic penalty. Anything this far down flushes to zero.
const FLUSH_THRESHOLD: f64 = 1e-280;

fn flush(v: f64) -> f64 {
    if v.abs() < FLUSH_THRESHOLD {
        0.0
    } else {
        v
    }
}

fn solve_weight_rows(grid: &UniformGrid, order: usize) -> Result<Array2<f64>> {
    let n = grid.len();
    let b = basis_matrix(grid);
    let table = NodalValueTable::new(grid.spacing());
    let mut w = Array2::zeros((n, n));
    for i in 0..n {
        let rhs = derivative_rhs(&table, n, i, order);
        let row = thomas_solve(&b, &rhs)?;
        for (j, v) in row.into_iter().enumerate() {
            w[[i, j]] = flush(v);
        }
    }
    Ok(w)
}

/// First-derivative weight matrix `w^(1)`.
pub fn weights_order1(grid: &UniformGrid) -> Result<Array2<f64>> {
    solve_weight_rows(grid, 1)
}

fn shu_recurrence(grid: &UniformGrid, w1: &Array2<f64>) -> Array2<f64> {
    let n = grid.len();
    let x = grid.nodes();
    let mut w2 = Array2::zeros((n, n));
    for i in 0..n {
        let wii = w1[[i, i]];
        let mut row_sum = 0.0;
        for j in 0..n {
            if j != i {
                let v = flush(2.0 * w1[[i, j]] * (wii - 1.0 / (x[i] - x[j])));
                w2[[i, j]] = v;
                row_sum += v;
            }
        }
        w2[[i, i]] = -row_sum;
    }
    w2
}

/// Second-derivative weight matrix `w^(2)` built with the given method.
///
/// For `ShuRecurrence` the first-derivative weights are computed internally;
/// use [`WeightMatrices::build`] when both matrices are wanted.
pub fn weights_order2(grid: &UniformGrid, method: W2Method) -> Result<Array2<f64>> {
    match method {
        W2Method::SplineSystem => solve_weight_rows(grid, 2),
        W2Method::ShuRecurrence => {
            let w1 = weights_order1(grid)?;
            Ok(shu_recurrence(grid, &w1))
        }
    }
}

/// The pair of dense weight matrices for a grid, plus the grid itself and a
/// tag recording how `w^(2)` was built.
#[derive(Debug, Clone)]
pub struct WeightMatrices {
    w1: Array2<f64>,
    w2: Array2<f64>,
    grid: UniformGrid,
    method2: W2Method,
}

impl WeightMatrices {
    pub fn build(grid: &UniformGrid, method: W2Method) -> Result<Self> {
        let w1 = weights_order1(grid)?;
        let w2 = match method {
            W2Method::SplineSystem => solve_weight_rows(grid, 2)?,
            W2Method::ShuRecurrence => shu_recurrence(grid, &w1),
        };
        Ok(Self {
            w1,
            w2,
            grid: grid.clone(),
            method2: method,
        })
    }

    pub fn w1(&self) -> &Array2<f64> {
        &self.w1
    }

    pub fn w2(&self) -> &Array2<f64> {
        &self.w2
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    pub fn w2_method(&self) -> W2Method {
        self.method2
    }
}
