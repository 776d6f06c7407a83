//! Cubic B-spline basis and its boundary-modified variant.
//!
//! The basis is normalized so that the spline takes the value 4 at its own
//! node and 1 at the neighbouring node (a factor 6 larger than the classical
//! `1/(6h^3)` convention). A spline centered at node `j` is supported on
//! `(x_{j-2}, x_{j+2})`.
//!
//! The plain basis over `n` nodes needs two phantom splines centered one
//! spacing outside each end of the domain. The modified basis folds those
//! phantom splines into the first and last two members, which makes the
//! nodal collocation matrix tridiagonal and diagonally dominant so a
//! pivot-free tridiagonal factorization applies.

use crate::error::{Error, Result};
use crate::grid::UniformGrid;

fn check_order(order: usize) -> Result<()> {
    if order > 2 {
        return Err(Error::InvalidOrder(order));
    }
    Ok(())
}

/// Piecewise evaluation of the cubic B-spline centered at `center`.
///
/// Pieces are taken on half-open knot intervals `[x_k, x_{k+1})` with the
/// last piece closed; the basis is C^2, so the convention only decides which
/// of two equal one-sided limits is computed at a knot.
fn plain(center: f64, h: f64, x: f64, order: usize) -> f64 {
    let t = (x - center) / h;
    if !(-2.0..=2.0).contains(&t) {
        return 0.0;
    }
    let h3 = h * h * h;
    if t < -1.0 {
        // (x - x_{j-2})^3 on [x_{j-2}, x_{j-1})
        let s = x - (center - 2.0 * h);
        match order {
            0 => s * s * s / h3,
            1 => 3.0 * s * s / h3,
            _ => 6.0 * s / h3,
        }
    } else if t < 0.0 {
        // (x - x_{j-2})^3 - 4 (x - x_{j-1})^3 on [x_{j-1}, x_j)
        let s = x - (center - 2.0 * h);
        let r = x - (center - h);
        match order {
            0 => (s * s * s - 4.0 * r * r * r) / h3,
            1 => (3.0 * s * s - 12.0 * r * r) / h3,
            _ => (6.0 * s - 24.0 * r) / h3,
        }
    } else if t < 1.0 {
        // (x_{j+2} - x)^3 - 4 (x_{j+1} - x)^3 on [x_j, x_{j+1}), mirror of the above
        let s = (center + 2.0 * h) - x;
        let r = (center + h) - x;
        match order {
            0 => (s * s * s - 4.0 * r * r * r) / h3,
            1 => (12.0 * r * r - 3.0 * s * s) / h3,
            _ => (6.0 * s - 24.0 * r) / h3,
        }
    } else {
        // (x_{j+2} - x)^3 on [x_{j+1}, x_{j+2}]
        let s = (center + 2.0 * h) - x;
        match order {
            0 => s * s * s / h3,
            1 => -3.0 * s * s / h3,
            _ => 6.0 * s / h3,
        }
    }
}

/// Evaluate the plain cubic B-spline centered at signed node index `j`
/// (`-1` and `n` are the phantom splines outside the grid), or its first or
/// second derivative.
pub fn eval_bspline(grid: &UniformGrid, j: isize, x: f64, order: usize) -> Result<f64> {
    check_order(order)?;
    if !x.is_finite() {
        return Err(Error::NonFiniteCoordinate(x));
    }
    let n = grid.len() as isize;
    if j < -1 || j > n {
        return Err(Error::IndexOutOfRange { index: j, lo: -1, hi: n });
    }
    Ok(plain(grid.extended_node(j), grid.spacing(), x, order))
}

/// Evaluate the modified basis function with node index `j in 0..n`.
///
/// The first and last two members absorb the phantom splines:
/// `phi_0 + 2 phi_{-1}`, `phi_1 - phi_{-1}`, `phi_{n-2} - phi_n`,
/// `phi_{n-1} + 2 phi_n`; all other members are the plain splines.
pub fn eval_modified(grid: &UniformGrid, j: usize, x: f64, order: usize) -> Result<f64> {
    check_order(order)?;
    if !x.is_finite() {
        return Err(Error::NonFiniteCoordinate(x));
    }
    let n = grid.len();
    if j >= n {
        return Err(Error::IndexOutOfRange {
            index: j as isize,
            lo: 0,
            hi: n as isize - 1,
        });
    }
    let h = grid.spacing();
    let at = |k: isize| plain(grid.extended_node(k), h, x, order);
    let v = if j == 0 {
        at(0) + 2.0 * at(-1)
    } else if j == 1 {
        at(1) - at(-1)
    } else if j == n - 2 {
        at(n as isize - 2) - at(n as isize)
    } else if j == n - 1 {
        at(n as isize - 1) + 2.0 * at(n as isize)
    } else {
        at(j as isize)
    };
    Ok(v)
}

/// Values of the plain cubic B-spline and its derivatives at the three nodes
/// inside its support, indexed by the offset `i - j` of the node from the
/// spline center.
#[derive(Debug, Clone, Copy)]
pub struct NodalValueTable {
    value: [f64; 3],
    d1: [f64; 3],
    d2: [f64; 3],
}

impl NodalValueTable {
    pub fn new(h: f64) -> Self {
        Self {
            value: [1.0, 4.0, 1.0],
            d1: [3.0 / h, 0.0, -3.0 / h],
            d2: [6.0 / (h * h), -12.0 / (h * h), 6.0 / (h * h)],
        }
    }

    /// `phi_j^(order)(x_i)` for offset `i - j`; zero for `|i - j| > 1`.
    pub fn plain(&self, order: usize, offset: isize) -> f64 {
        if offset.unsigned_abs() > 1 {
            return 0.0;
        }
        let k = (offset + 1) as usize;
        match order {
            0 => self.value[k],
            1 => self.d1[k],
            _ => self.d2[k],
        }
    }

    /// Nodal value of the modified basis function `p` at node `i` on a grid
    /// of `n` nodes; zero for `|i - p| > 1`.
    pub fn modified(&self, n: usize, p: usize, i: usize, order: usize) -> f64 {
        let d = |center: isize| self.plain(order, i as isize - center);
        if p == 0 {
            d(0) + 2.0 * d(-1)
        } else if p == 1 {
            d(1) - d(-1)
        } else if p == n - 2 {
            d(n as isize - 2) - d(n as isize)
        } else if p == n - 1 {
            d(n as isize - 1) + 2.0 * d(n as isize)
        } else {
            d(p as isize)
        }
    }
}
